#pragma once

// Algebraic power series given by a polynomial and a branch seed.

#include <vector>

#include "hk/hensel.hpp"
#include "hk/series.hpp"

namespace hk::algebraic {

using QPoly = MultiSeries<Rational>;

/// minpoly lives in X_1..X_n, T (T last); seed in X_1..X_n.
struct AlgebraicSeries {
    QPoly minpoly;
    QPoly seed;
    int certified_order = 1;  // minpoly(X, seed) = 0 mod (X)^certified_order

    int nvars() const { return seed.nvars(); }
};

/// The unique phi = seed mod (X)^certified_order with minpoly(X, phi) = 0
/// mod (X)^{order+1}. SeedNotSimple if dp/dT(0, seed(0)) = 0, SeedInconsistent
/// if the seed does not satisfy minpoly to its certified order.
QPoly expand_algebraic(const AlgebraicSeries& a, int order);

struct ArtinMazurReport {
    Rational jacobian;  // d(p_1..p_r)/d(Y_1..Y_r) at 0
    bool jacobian_nonzero = false;
    std::vector<QPoly> residuals;  // p_i(X, phi(X)) mod (X)^{order+1}
    std::vector<bool> residual_zero;
    int order = 0;

    bool holds() const;
};

/// polys in X_1..X_n, Y_1..Y_r; phis in X_1..X_n with phi(0) = 0.
ArtinMazurReport verify_artin_mazur(const std::vector<QPoly>& polys, const std::vector<QPoly>& phis, int order);

/// The root w of minpoly(x, T) on the seed's branch, by Newton's lemma from seed(0).
/// HenselFailureAtPoint when the lemma does not apply at x.
LaurentSeries continuous_eval(const AlgebraicSeries& a, const std::vector<LaurentSeries>& x,
                              int precision = LaurentSeries::kDefaultPrecision);

/// minpoly(X, c + T) for a constant c.
QPoly shift_last(const QPoly& p, const Rational& c);

}  // namespace hk::algebraic
