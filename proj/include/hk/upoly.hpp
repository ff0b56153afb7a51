#pragma once

// Dense univariate polynomials over a field S, stored lowest degree first.
// Used for cyclotomic reduction, edge polynomials and formal extensions.

#include <utility>
#include <vector>

#include "hk/error.hpp"
#include "hk/scalar.hpp"

namespace hk::upoly {

template <class S>
using Poly = std::vector<S>;

template <class S>
void trim(Poly<S>& p) {
    while (!p.empty() && ScalarTraits<S>::is_zero(p.back())) p.pop_back();
}

template <class S>
int degree(const Poly<S>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class S>
Poly<S> add(const Poly<S>& a, const Poly<S>& b) {
    Poly<S> r(std::max(a.size(), b.size()), ScalarTraits<S>::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}

template <class S>
Poly<S> sub(const Poly<S>& a, const Poly<S>& b) {
    Poly<S> r(std::max(a.size(), b.size()), ScalarTraits<S>::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    trim(r);
    return r;
}

template <class S>
Poly<S> mul(const Poly<S>& a, const Poly<S>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<S> r(a.size() + b.size() - 1, ScalarTraits<S>::zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

template <class S>
Poly<S> scale(const Poly<S>& a, const S& c) {
    Poly<S> r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(x * c);
    trim(r);
    return r;
}

/// Quotient and remainder; b must be nonzero.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(Poly<S> a, const Poly<S>& b) {
    trim(a);
    if (b.empty()) raise(ErrorCode::InversionOfZero, "polynomial division by zero");
    const S lead_inv = ScalarTraits<S>::inverse(b.back());
    if (a.size() < b.size()) return {{}, a};
    const int db = degree(b);
    Poly<S> q(a.size() - b.size() + 1, ScalarTraits<S>::zero());
    for (int k = degree(a); k >= db; --k) {
        if (ScalarTraits<S>::is_zero(a[k])) continue;
        S c = a[k] * lead_inv;
        const int shift = k - db;
        q[shift] = c;
        for (int j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

template <class S>
Poly<S> make_monic(const Poly<S>& a) {
    if (a.empty()) return a;
    return scale(a, ScalarTraits<S>::inverse(a.back()));
}

template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class S>
Poly<S> derivative(const Poly<S>& a) {
    Poly<S> r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * ScalarTraits<S>::from_rational(Rational(static_cast<long>(i))));
    trim(r);
    return r;
}

template <class S>
S evaluate(const Poly<S>& a, const S& x) {
    S acc = ScalarTraits<S>::zero();
    for (size_t k = a.size(); k-- > 0;) acc = acc * x + a[k];
    return acc;
}

/// Yun's algorithm: returns (factor, multiplicity) with every factor monic and
/// squarefree, pairwise coprime, product (with multiplicities) = a / lc(a).
template <class S>
std::vector<std::pair<Poly<S>, int>> squarefree(const Poly<S>& input) {
    std::vector<std::pair<Poly<S>, int>> out;
    Poly<S> a = make_monic(input);
    if (degree(a) < 1) return out;
    Poly<S> da = derivative(a);
    Poly<S> g = gcd(a, da);
    Poly<S> b = divmod(a, g).first;
    Poly<S> c = divmod(da, g).first;
    Poly<S> d = sub(c, derivative(b));
    int i = 1;
    while (degree(b) >= 1) {
        Poly<S> f = gcd(b, d);
        if (degree(f) >= 1) out.emplace_back(f, i);
        b = divmod(b, f).first;
        c = divmod(d, f).first;
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

}  // namespace hk::upoly
