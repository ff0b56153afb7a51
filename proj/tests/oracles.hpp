#pragma once

#include "hk/series_poly.hpp"

namespace hk::testing {


// Brute-force support inspection: a normal crossing has a support exponent
// below every other one.
inline bool has_minimal_exponent(const MultiSeries<Rational>& d) {
    for (const auto& [e, c] : d.terms()) {
        bool below_all = true;
        for (const auto& [f, c2] : d.terms())
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > f[i]) below_all = false;
        if (below_all) return true;
    }
    return false;
}

// Closed-form discriminants of monic T^2 + bT + c and T^3 + aT^2 + bT + c.
inline MultiSeries<Rational> closed_form_discriminant(const SeriesPoly<Rational>& f) {
    using M = MultiSeries<Rational>;
    const int n = f.nvars();
    auto k = [&](long v) { return M::constant(n, Rational(v)); };
    if (f.degree() == 1) return k(1);
    if (f.degree() == 2) {
        const M b = f.coeff(1), c = f.coeff(0);
        return b * b - k(4) * c;
    }
    const M a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    return a * a * b * b - k(4) * b * b * b - k(4) * a * a * a * c - k(27) * c * c + k(18) * a * b * c;
}

inline long factorial(int s) {
    long f = 1;
    for (int i = 2; i <= s; ++i) f *= i;
    return f;
}

}  // namespace hk::testing
