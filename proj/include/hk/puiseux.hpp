#pragma once

// Newton polygons, Newton-Puiseux expansion of univariate roots, the
// conjugate splitting of an irreducible polynomial, discriminants and the
// quasiordinary (normal crossing) test.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hk/algebraic_number.hpp"
#include "hk/laurent.hpp"
#include "hk/lseries.hpp"
#include "hk/series.hpp"
#include "hk/series_poly.hpp"

namespace hk::puiseux {

struct PolygonEdge {
    int i0, o0;  // start vertex (T-degree, X-order)
    int i1, o1;  // end vertex
    Rational slope;
    int length;  // horizontal length i1 - i0
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> points;  // (i, ord a_i) of nonzero coefficients
    std::vector<PolygonEdge> edges;
    /// Number of leading T-degrees whose coefficient is exactly zero (root 0).
    int zero_roots = 0;
    std::vector<std::pair<int, int>> vertices() const;
};

/// Lower convex hull of the points (i, ord a_i); f univariate in X.
template <class S>
NewtonPolygon newton_polygon(const SeriesPoly<S>& f);

/// Root in Y = X^(1/r): value Y^lead_offset * body(Y).
template <class S>
struct PuiseuxSeries {
    int ramification = 1;
    int lead_offset = 0;
    MultiSeries<S> body{1};

    LSeries<S> series() const { return LSeries<S>::from_series(body, lead_offset); }
    /// Least exponent in units of 1/r (kInfiniteValuation for zero).
    int valuation() const { return series().valuation(); }
    /// Precision in X-units: the root is known modulo X^order().
    Rational order() const { return Rational(series().precision(), ramification); }
    std::string to_string(const std::string& var = "X") const { return series().to_string(var, ramification); }
};

template <class S>
struct PuiseuxRoot {
    PuiseuxSeries<S> series;
    int multiplicity = 1;
    // > 1 when the coefficients involve a formal root standing for that many
    // conjugate roots; the series shown is one representative.
    int conjugates = 1;
};

/// Roots of f in X^(1/r) to X-order `order`, counted with multiplicity and
/// conjugates they add up to deg f. Non-monic input gives negative exponents.
template <class S>
std::vector<PuiseuxRoot<S>> puiseux_roots(const SeriesPoly<S>& f, int order, bool allow_non_monic = false,
                                          int tprec = LaurentSeries::kDefaultPrecision);

/// lcm of the ramifications.
template <class S>
int common_ramification(const std::vector<PuiseuxRoot<S>>& roots);

struct ReconstructionReport {
    int ramification = 1;  // R
    bool matches = false;
    int first_mismatch = -1;  // T-degree
    int precision = 0;        // compared to Z-precision, Z = X^(1/R)
};

/// lc(f) * prod (T - phi_i)^m_i against f(Z^R, T), conjugates via norms.
template <class S>
ReconstructionReport reconstruct(const SeriesPoly<S>& f, const std::vector<PuiseuxRoot<S>>& roots);

struct SplitResult {
    int s = 1;
    MultiSeries<AlgebraicNumber> phi{1};  // f(X^s, T) = prod_i (T - phi(eps^i X))
    AlgebraicNumber epsilon;
    std::vector<MultiSeries<AlgebraicNumber>> factors;  // phi(eps^i X)
    bool verified = false;
};

SplitResult split_irreducible(const SeriesPoly<AlgebraicNumber>& f, int order);

/// (-1)^(s(s-1)/2) Res_T(f, f') for monic f.
MultiSeries<Rational> discriminant(const SeriesPoly<Rational>& f);

struct QuasiordinaryReport {
    MultiSeries<Rational> discriminant{1};
    std::vector<int> alpha;
    std::optional<MultiSeries<Rational>> unit;
    bool is_quasiordinary = false;
};

QuasiordinaryReport quasiordinary_check(const SeriesPoly<Rational>& f);

struct RootCheckReport {
    bool pass = false;
    int first_failing = -1;  // T-degree
    int precision = 0;
};

/// f(X^r, T) against prod (T - root_i), roots already written in X.
template <class S>
RootCheckReport verify_fractional_roots(const SeriesPoly<S>& f, const std::vector<MultiSeries<S>>& roots, int r);

SeriesPoly<AlgebraicNumber> to_algebraic(const SeriesPoly<Rational>& f);
SeriesPoly<LaurentSeries> to_laurent(const SeriesPoly<Rational>& f);

namespace detail {

template <class S>
struct EdgeRoot {
    S c;
    int multiplicity = 1;
    int conjugates = 1;
};

/// Nonzero roots c of H(c^b), H[0] and H.back() nonzero.
std::vector<EdgeRoot<AlgebraicNumber>> edge_roots(const std::vector<AlgebraicNumber>& h, int b, int tprec);
std::vector<EdgeRoot<LaurentSeries>> edge_roots(const std::vector<LaurentSeries>& h, int b, int tprec);

/// Rational roots of a nonzero polynomial with nonzero constant term;
/// false when the coefficients are too large to enumerate divisors.
bool rational_roots(const std::vector<Rational>& p, std::vector<Rational>& out);

/// All k-th roots of w; uses a formal root when w has none in the cyclotomic tower.
std::vector<AlgebraicNumber> kth_roots(long k, const Cyclo& w);

}  // namespace detail

}  // namespace hk::puiseux
