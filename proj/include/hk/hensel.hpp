#pragma once

// Multivariate Hensel solving over the valuation ring R = Q[[t]] of K = Q((t)).

#include <vector>

#include "hk/laurent.hpp"
#include "hk/matrix.hpp"
#include "hk/series.hpp"

namespace hk::hensel {

/// Exact polynomial in the unknowns with coefficients in K.
using Poly = MultiSeries<LaurentSeries>;
using Point = std::vector<LaurentSeries>;

/// Square system f_1..f_n in n unknowns, all coefficients in R.
class PolySystem {
   public:
    explicit PolySystem(std::vector<Poly> polys);

    int size() const { return static_cast<int>(polys_.size()); }
    const std::vector<Poly>& polys() const { return polys_; }
    const Poly& operator[](int i) const { return polys_[static_cast<size_t>(i)]; }

    Point evaluate(const Point& x) const;
    /// Partial derivatives d f_i / d x_j.
    const std::vector<std::vector<Poly>>& partials() const { return partials_; }

   private:
    std::vector<Poly> polys_;
    std::vector<std::vector<Poly>> partials_;
};

struct JacobianData {
    Matrix<LaurentSeries> jacobian;
    LaurentSeries determinant;
    Matrix<LaurentSeries> adjugate;
    bool adjugate_verified = false;  // N * M == J * Identity
};

JacobianData jacobian_data(const PolySystem& f, const Point& point);

struct HenselResult {
    Point solution;
    int iterations = 0;
    int precision = 0;
    /// A second Newton run started from (t^2, ..., t^2) reached the same truncation.
    bool uniqueness_certified = false;
};

/// The unique a in m^n with f(a) = y, to t-precision `precision`.
/// Requires f(0) - y in m^n (ResidueNotInIdeal) and J(0) a unit (JacobianNotUnit).
HenselResult hensel_solve(const PolySystem& f, const Point& y = {},
                          int precision = LaurentSeries::kDefaultPrecision);

struct InverseResult {
    Point x;
    LaurentSeries e;     // J(0)
    Point scaled_target; // N * y / e^2, the point h^{-1} is applied to
    int precision = 0;   // t-precision to which f(x) = y is certified
};

/// f^{-1}(y) = e h^{-1}(N y / e^2) with h(X) = X + N g(X) and
/// f(eX) = e M(0) X + e^2 g(X). Requires f(0) = 0, e = J(0) != 0
/// (SingularJacobian) and v(y_i) > 2 v(e) (OutsideDomain).
InverseResult inverse_map(const PolySystem& f, const Point& y, int precision = LaurentSeries::kDefaultPrecision);

struct UnivariateRoot {
    LaurentSeries root;
    int derivative_valuation = 0;  // v(P'(start)), the radius of uniqueness
};

/// Root of P = sum coeffs[k] T^k near `start` by Newton's lemma: needs P in R[T],
/// start in R and v(P(start)) > 2 v(P'(start)); otherwise HenselFailureAtPoint.
/// The root is the unique one with v(root - start) > v(P'(start)).
UnivariateRoot newton_univariate(const std::vector<LaurentSeries>& coeffs, const LaurentSeries& start,
                                 int precision = LaurentSeries::kDefaultPrecision);

}  // namespace hk::hensel
