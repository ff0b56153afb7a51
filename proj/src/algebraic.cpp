#include "hk/algebraic.hpp"

#include "hk/implicit.hpp"

namespace hk::algebraic {

namespace {

void check_shape(const AlgebraicSeries& a) {
    if (a.minpoly.nvars() != a.nvars() + 1)
        raise(ErrorCode::InvalidArgument, "minimal polynomial needs the seed's variables plus T");
    if (!a.minpoly.is_exact()) raise(ErrorCode::InvalidArgument, "minimal polynomial must be a polynomial");
    if (a.certified_order < 1) raise(ErrorCode::InvalidArgument, "certified order must be at least 1");
}

QPoly seed_residual(const AlgebraicSeries& a) {
    const int n = a.nvars(), prec = std::min(a.certified_order, a.seed.precision());
    const Rational c0 = a.seed.constant_term();
    std::vector<QPoly> args;
    for (int i = 0; i < n; ++i) args.push_back(QPoly::variable(n, i, prec));
    QPoly tail = a.seed.with_precision(prec);
    tail.add_term(Exponent(static_cast<size_t>(n), 0), -c0);
    args.push_back(tail);
    return substitute(shift_last(a.minpoly, c0), args, prec);
}

}  // namespace

QPoly shift_last(const QPoly& p, const Rational& c) {
    if (c.is_zero()) return p;
    const int n = p.nvars();
    const size_t last = static_cast<size_t>(n - 1);
    QPoly out(n, p.precision());
    for (const auto& [e, coef] : p.terms()) {
        // (c + T)^k = sum binom(k, j) c^{k-j} T^j
        const int k = e[last];
        Rational binom(1);
        for (int j = 0; j <= k; ++j) {
            Exponent f = e;
            f[last] = j;
            out.add_term(f, coef * binom * c.pow(k - j));
            binom = binom * Rational(k - j) / Rational(j + 1);
        }
    }
    return out;
}

QPoly expand_algebraic(const AlgebraicSeries& a, int order) {
    check_shape(a);
    const int n = a.nvars();
    const Rational c0 = a.seed.constant_term();
    const QPoly q = shift_last(a.minpoly, c0);
    if (!q.constant_term().is_zero())
        raise(ErrorCode::SeedInconsistent, "seed constant is not a root of the residue polynomial");
    Exponent dt(static_cast<size_t>(n + 1), 0);
    dt[static_cast<size_t>(n)] = 1;
    if (q.coefficient(dt).is_zero())
        raise(ErrorCode::SeedNotSimple, "dp/dT vanishes at the seed; use a Puiseux expansion instead");
    if (!seed_residual(a).is_zero())
        raise(ErrorCode::SeedInconsistent, "seed does not satisfy the polynomial to its certified order");

    const implicit::ImplicitProblem<Rational> pb{n + 1, n, {q}};
    QPoly phi = implicit::implicit_series(pb, std::max(order, a.certified_order - 1)).phis[0];
    phi.add_term(Exponent(static_cast<size_t>(n), 0), c0);
    const int check = std::min(a.certified_order, a.seed.precision());
    if (!(phi.truncated(check) == a.seed.truncated(check)))
        raise(ErrorCode::SeedInconsistent, "seed is not on a single branch");
    return phi.truncated(order + 1);
}

bool ArtinMazurReport::holds() const {
    if (!jacobian_nonzero) return false;
    for (bool z : residual_zero)
        if (!z) return false;
    return true;
}

ArtinMazurReport verify_artin_mazur(const std::vector<QPoly>& polys, const std::vector<QPoly>& phis, int order) {
    const int r = static_cast<int>(phis.size());
    if (r == 0 || static_cast<int>(polys.size()) != r)
        raise(ErrorCode::InvalidArgument, "need as many polynomials as series");
    const int n = phis.front().nvars();
    for (const auto& phi : phis) {
        if (phi.nvars() != n) raise(ErrorCode::InvalidArgument, "series over different variable counts");
        if (!phi.constant_term().is_zero()) raise(ErrorCode::InvalidArgument, "series must vanish at 0");
    }
    for (const auto& p : polys)
        if (p.nvars() != n + r) raise(ErrorCode::InvalidArgument, "polynomials need n + r variables");

    ArtinMazurReport out;
    out.order = order;
    Matrix<Rational> jac;
    for (const auto& p : polys) {
        std::vector<Rational> row;
        for (int j = 0; j < r; ++j) {
            Exponent e(static_cast<size_t>(n + r), 0);
            e[static_cast<size_t>(n + j)] = 1;
            row.push_back(p.coefficient(e));
        }
        jac.push_back(std::move(row));
    }
    out.jacobian = determinant(jac, Rational(1));
    out.jacobian_nonzero = !out.jacobian.is_zero();

    const int prec = order + 1;
    std::vector<QPoly> args;
    for (int i = 0; i < n; ++i) args.push_back(QPoly::variable(n, i, prec));
    for (const auto& phi : phis) args.push_back(phi.truncated(prec));
    for (const auto& p : polys) {
        QPoly res = substitute(p, args, prec);
        out.residual_zero.push_back(res.is_zero());
        out.residuals.push_back(std::move(res));
    }
    return out;
}

LaurentSeries continuous_eval(const AlgebraicSeries& a, const std::vector<LaurentSeries>& x, int precision) {
    check_shape(a);
    const int n = a.nvars();
    if (static_cast<int>(x.size()) != n) raise(ErrorCode::InvalidArgument, "point dimension mismatch");
    // coefficients of minpoly(x, T) by T-degree
    std::vector<MultiSeries<LaurentSeries>> by_degree;
    for (const auto& [e, c] : a.minpoly.terms()) {
        const size_t k = static_cast<size_t>(e.back());
        while (by_degree.size() <= k) by_degree.emplace_back(n);
        by_degree[k].add_term(Exponent(e.begin(), e.end() - 1), LaurentSeries(c));
    }
    std::vector<LaurentSeries> coeffs;
    for (const auto& p : by_degree) coeffs.push_back(evaluate(p, x));
    return hensel::newton_univariate(coeffs, LaurentSeries(a.seed.constant_term()), precision).root;
}

}  // namespace hk::algebraic
