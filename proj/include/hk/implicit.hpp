#pragma once

// Implicit-function machinery: smoothness at the origin, formal implicit
// series, evaluation at valued points, and the integrality normal form.

#include <vector>

#include "hk/hensel.hpp"
#include "hk/laurent.hpp"
#include "hk/matrix.hpp"
#include "hk/series.hpp"

namespace hk::implicit {

using QPoly = MultiSeries<Rational>;

struct SmoothnessReport {
    int rank = 0;
    bool is_smooth = false;
    /// Pivot generators first, then the rest.
    std::vector<int> generator_order;
    /// Free variables first (increasing), then the pivot variables.
    std::vector<int> variable_order;
};

/// Rank of the Jacobian matrix at 0 and, when it equals n - r, a renumbering
/// with a nonzero (n-r)-minor in the last variables. Pivots are the
/// lexicographically smallest valid row and column sets.
SmoothnessReport jacobian_smoothness(const std::vector<QPoly>& generators, int r);

/// p_{r+1..n} in X_1..X_n, all vanishing at 0; the unknowns are X_{r+1..n}.
template <class S>
struct ImplicitProblem {
    int n = 0;
    int r = 0;
    std::vector<MultiSeries<S>> polys;

    void validate() const {
        if (r < 0 || r >= n) raise(ErrorCode::InvalidArgument, "need 0 <= r < n");
        if (static_cast<int>(polys.size()) != n - r)
            raise(ErrorCode::InvalidArgument, "need n - r polynomials");
        for (const auto& p : polys) {
            if (p.nvars() != n) raise(ErrorCode::InvalidArgument, "polynomial in the wrong number of variables");
            if (!p.is_exact()) raise(ErrorCode::InvalidArgument, "implicit problems need polynomials");
            if (!ScalarTraits<S>::is_zero(p.constant_term()))
                raise(ErrorCode::NonvanishingAtOrigin, "polynomial does not vanish at the origin");
        }
    }
    int unknowns() const { return n - r; }
};

template <class S>
struct ImplicitSolution {
    std::vector<MultiSeries<S>> phis;  // in X_1..X_r, zero constant term
    S e;                               // J(0)
    int order = 0;                     // exact modulo (X)^{order+1}
};

namespace detail {

template <class S>
Matrix<MultiSeries<S>> unknown_partials(const ImplicitProblem<S>& pb) {
    Matrix<MultiSeries<S>> m;
    for (const auto& p : pb.polys) {
        std::vector<MultiSeries<S>> row;
        for (int j = pb.r; j < pb.n; ++j) row.push_back(p.derivative(j));
        m.push_back(std::move(row));
    }
    return m;
}

template <class S>
S constant_minor(const ImplicitProblem<S>& pb) {
    Matrix<S> m;
    for (const auto& row : unknown_partials(pb)) {
        std::vector<S> out;
        for (const auto& d : row) out.push_back(d.constant_term());
        m.push_back(std::move(out));
    }
    return determinant(m, ScalarTraits<S>::one());
}

// (X_1, ..., X_r, phi_1, ..., phi_m) as series in r variables, cut at prec.
template <class S>
std::vector<MultiSeries<S>> graph_arguments(const ImplicitProblem<S>& pb, const std::vector<MultiSeries<S>>& phis,
                                            int prec) {
    std::vector<MultiSeries<S>> args;
    for (int i = 0; i < pb.r; ++i) args.push_back(MultiSeries<S>::variable(pb.r, i, prec));
    for (const auto& p : phis) args.push_back(p.with_precision(prec));
    return args;
}

}  // namespace detail

/// p_i(X, phi(X)) for each i, to the precision carried by phi.
template <class S>
std::vector<MultiSeries<S>> residuals(const ImplicitProblem<S>& pb, const std::vector<MultiSeries<S>>& phis) {
    int prec = kExactPrecision;
    for (const auto& p : phis) prec = std::min(prec, p.precision());
    const auto args = detail::graph_arguments(pb, phis, prec);
    std::vector<MultiSeries<S>> out;
    for (const auto& p : pb.polys) out.push_back(substitute(p, args));
    return out;
}

/// The unique phi with zero constant term and p(X, phi(X)) = 0 mod (X)^{N+1}.
template <class S>
ImplicitSolution<S> implicit_series(const ImplicitProblem<S>& pb, int order = 12) {
    pb.validate();
    if (order < 0) raise(ErrorCode::InvalidArgument, "order must be nonnegative");
    using Traits = ScalarTraits<S>;
    const int m = pb.unknowns(), r = pb.r;
    ImplicitSolution<S> out;
    out.order = order;
    out.e = detail::constant_minor(pb);
    if (Traits::is_zero(out.e)) raise(ErrorCode::SingularMinor, "the Jacobian minor vanishes at the origin");

    const int target = order + 1;
    const auto partials = detail::unknown_partials(pb);
    const MultiSeries<S> one = MultiSeries<S>::constant(r, Traits::one());
    std::vector<MultiSeries<S>> phis(static_cast<size_t>(m), MultiSeries<S>(r, 1));
    for (int k = 1; k < target;) {
        k = std::min(2 * k, target);
        const auto args = detail::graph_arguments(pb, phis, k);
        std::vector<MultiSeries<S>> f;
        for (const auto& p : pb.polys) f.push_back(substitute(p, args, k));
        Matrix<MultiSeries<S>> jac;
        for (const auto& row : partials) {
            std::vector<MultiSeries<S>> out_row;
            for (const auto& d : row) out_row.push_back(substitute(d, args, k));
            jac.push_back(std::move(out_row));
        }
        const MultiSeries<S> det_inv = determinant(jac, one.with_precision(k)).truncated(k).reciprocal(k);
        const auto delta = apply(adjugate(jac, one.with_precision(k)), f, MultiSeries<S>(r, k));
        for (int i = 0; i < m; ++i) {
            auto& phi = phis[static_cast<size_t>(i)];
            phi = (phi.with_precision(k) - (delta[static_cast<size_t>(i)] * det_inv).truncated(k)).truncated(k);
        }
    }
    for (auto& phi : phis) phi = phi.with_precision(target);
    out.phis = std::move(phis);
    return out;
}

/// phi(u) = e h^{-1}(N (u, 0) / e^2) for u in (e^2 m)^r.
hensel::Point implicit_eval(const ImplicitProblem<LaurentSeries>& pb, const hensel::Point& u,
                            int precision = LaurentSeries::kDefaultPrecision);
hensel::Point implicit_eval(const ImplicitProblem<Rational>& pb, const hensel::Point& u,
                            int precision = LaurentSeries::kDefaultPrecision);

ImplicitProblem<LaurentSeries> to_laurent(const ImplicitProblem<Rational>& pb);

template <class S>
struct IntegralityReport {
    MultiSeries<S> omega;
    bool integral = true;
};

/// omega(X) = phi(e^2 X) / e, coefficientwise c_a e^{2|a|-1}.
template <class S>
IntegralityReport<S> integrality_form(const MultiSeries<S>& phi, const S& e) {
    using Traits = ScalarTraits<S>;
    if (!Traits::is_zero(phi.constant_term()))
        raise(ErrorCode::InvalidArgument, "integrality form needs zero constant term");
    if (Traits::is_zero(e)) raise(ErrorCode::InvalidArgument, "integrality form needs e != 0");
    IntegralityReport<S> out{MultiSeries<S>(phi.nvars(), phi.precision()), true};
    for (const auto& [a, c] : phi.terms()) {
        const S w = c * scalar_pow(e, 2L * total_degree(a) - 1);
        out.omega.add_term(a, w);
        if (!Traits::in_valuation_ring(w)) out.integral = false;
    }
    return out;
}

}  // namespace hk::implicit
