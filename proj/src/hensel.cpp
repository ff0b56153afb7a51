#include "hk/hensel.hpp"

#include <algorithm>

namespace hk::hensel {

namespace {

Point zeros(int n) { return Point(static_cast<size_t>(n), LaurentSeries()); }

// Like hk::evaluate, but every partial product is cut at t^prec.
LaurentSeries evaluate_truncated(const Poly& poly, const Point& x, int prec) {
    std::vector<std::vector<LaurentSeries>> powers(x.size(), std::vector<LaurentSeries>{LaurentSeries(1)});
    LaurentSeries acc;
    for (const auto& [e, c] : poly.terms()) {
        LaurentSeries term = c.truncated(prec);
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back((pw.back() * x[i]).truncated(prec));
            if (e[i] > 0) term = (term * pw[static_cast<size_t>(e[i])]).truncated(prec);
        }
        acc += term;
    }
    return acc.truncated(prec);
}

Matrix<LaurentSeries> evaluate_partials(const PolySystem& f, const Point& x, int prec) {
    const int n = f.size();
    Matrix<LaurentSeries> m(static_cast<size_t>(n), std::vector<LaurentSeries>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                evaluate_truncated(f.partials()[static_cast<size_t>(i)][static_cast<size_t>(j)], x, prec);
    return m;
}

Matrix<LaurentSeries> evaluate_partials(const PolySystem& f, const Point& x) {
    const int n = f.size();
    Matrix<LaurentSeries> m(static_cast<size_t>(n), std::vector<LaurentSeries>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                evaluate(f.partials()[static_cast<size_t>(i)][static_cast<size_t>(j)], x);
    return m;
}

struct Run {
    Point x;
    int iterations = 0;
};

Run newton(const PolySystem& f, const Point& y, Point x, int target) {
    const int n = f.size();
    const LaurentSeries one(1);
    for (auto& xi : x) xi = xi.truncated(target);
    for (int iter = 0; iter < 64; ++iter) {
        Point residual;
        bool done = true;
        for (int i = 0; i < n; ++i) {
            residual.push_back(evaluate_truncated(f[i], x, target));
            auto& r = residual.back();
            r = (r - y[static_cast<size_t>(i)]).truncated(target);
            if (!r.is_zero()) done = false;
        }
        if (done) return {std::move(x), iter};
        const Matrix<LaurentSeries> m = evaluate_partials(f, x, target);
        const LaurentSeries det = determinant(m, one).truncated(target);
        if (det.effective_valuation() != 0)
            raise(ErrorCode::JacobianNotUnit, "Jacobian stopped being a unit during Newton iteration");
        const LaurentSeries det_inv = det.inverse(target + 2);
        const Point delta = apply(adjugate(m, one), residual, LaurentSeries());
        for (int i = 0; i < n; ++i) {
            auto& xi = x[static_cast<size_t>(i)];
            xi = (xi - delta[static_cast<size_t>(i)] * det_inv).truncated(target);
        }
    }
    raise(ErrorCode::PrecisionInsufficient, "Newton iteration did not stabilize");
}

int min_precision(const Point& x) {
    int p = LaurentSeries::kExact;
    for (const auto& xi : x) p = std::min(p, xi.precision());
    return p;
}

}  // namespace

PolySystem::PolySystem(std::vector<Poly> polys) : polys_(std::move(polys)) {
    const int n = size();
    for (const auto& p : polys_) {
        if (p.nvars() != n)
            raise(ErrorCode::InvalidArgument, "system must have as many polynomials as unknowns");
        if (!p.is_exact()) raise(ErrorCode::InvalidArgument, "system entries must be polynomials");
        for (const auto& [e, c] : p.terms())
            if (c.effective_valuation() < 0)
                raise(ErrorCode::InvalidArgument, "system coefficient " + c.to_string() + " is not in R");
    }
    for (const auto& p : polys_) {
        std::vector<Poly> row;
        for (int j = 0; j < n; ++j) row.push_back(p.derivative(j));
        partials_.push_back(std::move(row));
    }
}

Point PolySystem::evaluate(const Point& x) const {
    if (static_cast<int>(x.size()) != size()) raise(ErrorCode::InvalidArgument, "point dimension mismatch");
    Point out;
    for (const auto& p : polys_) out.push_back(hk::evaluate(p, x));
    return out;
}

JacobianData jacobian_data(const PolySystem& f, const Point& point) {
    const LaurentSeries one(1);
    JacobianData out;
    out.jacobian = evaluate_partials(f, point);
    out.determinant = determinant(out.jacobian, one);
    out.adjugate = adjugate(out.jacobian, one);
    const auto product = multiply(out.adjugate, out.jacobian, LaurentSeries());
    out.adjugate_verified = true;
    for (size_t i = 0; i < product.size(); ++i)
        for (size_t j = 0; j < product.size(); ++j)
            if (!(product[i][j] == (i == j ? out.determinant : LaurentSeries()))) out.adjugate_verified = false;
    return out;
}

HenselResult hensel_solve(const PolySystem& f, const Point& y_in, int precision) {
    const int n = f.size();
    const Point y = y_in.empty() ? zeros(n) : y_in;
    if (static_cast<int>(y.size()) != n) raise(ErrorCode::InvalidArgument, "target dimension mismatch");
    if (precision < 1) raise(ErrorCode::InvalidArgument, "precision must be positive");

    const Point f0 = f.evaluate(zeros(n));
    Point r0;
    for (int i = 0; i < n; ++i) {
        r0.push_back(f0[static_cast<size_t>(i)] - y[static_cast<size_t>(i)]);
        if (r0.back().effective_valuation() <= 0)
            raise(ErrorCode::ResidueNotInIdeal,
                  "f(0) - y has coordinate " + r0.back().to_string() + " outside m");
    }
    const JacobianData jd = jacobian_data(f, zeros(n));
    if (jd.determinant.effective_valuation() > 0)
        raise(ErrorCode::JacobianNotUnit, "J(0) = " + jd.determinant.to_string() + " is not a unit");

    // linear start: x0 = -M(0)^{-1} (f(0) - y)
    const LaurentSeries det_inv = jd.determinant.inverse(precision + 2);
    Point start = apply(jd.adjugate, r0, LaurentSeries());
    for (auto& s : start) s = (-(s * det_inv)).truncated(precision);

    Run first = newton(f, y, start, precision);
    Point perturbed(static_cast<size_t>(n), LaurentSeries::monomial(Rational(1), 2));
    Run second = newton(f, y, perturbed, precision);

    HenselResult out;
    out.iterations = first.iterations;
    out.uniqueness_certified = true;
    for (int i = 0; i < n; ++i) {
        const auto& a = first.x[static_cast<size_t>(i)];
        if (a.effective_valuation() <= 0) out.uniqueness_certified = false;
        if (!(a == second.x[static_cast<size_t>(i)])) out.uniqueness_certified = false;
    }
    out.precision = min_precision(first.x);
    out.solution = std::move(first.x);
    return out;
}

InverseResult inverse_map(const PolySystem& f, const Point& y, int precision) {
    const int n = f.size();
    if (static_cast<int>(y.size()) != n) raise(ErrorCode::InvalidArgument, "target dimension mismatch");
    for (const auto& p : f.polys())
        if (!p.constant_term().is_zero()) raise(ErrorCode::InvalidArgument, "inverse_map needs f(0) = 0");

    const JacobianData jd = jacobian_data(f, zeros(n));
    const LaurentSeries& e = jd.determinant;
    if (e.is_zero()) raise(ErrorCode::SingularJacobian, "J(0) = 0");
    const int ve = e.valuation();
    for (const auto& yi : y)
        if (yi.effective_valuation() <= 2 * ve)
            raise(ErrorCode::OutsideDomain, "target coordinate " + yi.to_string() + " is not in e^2 m");

    // g: the degree >= 2 part of f with X^a scaled by e^{|a|-2}
    std::vector<Poly> g;
    for (const auto& p : f.polys()) {
        Poly gi(n);
        for (const auto& [a, c] : p.terms()) {
            const int d = total_degree(a);
            if (d >= 2) gi.add_term(a, c * e.pow(d - 2));
        }
        g.push_back(std::move(gi));
    }
    std::vector<Poly> h;
    for (int i = 0; i < n; ++i) {
        Poly hi = Poly::variable(n, i);
        for (int j = 0; j < n; ++j)
            hi += jd.adjugate[static_cast<size_t>(i)][static_cast<size_t>(j)] * g[static_cast<size_t>(j)];
        h.push_back(std::move(hi));
    }
    const PolySystem hs(std::move(h));

    InverseResult out;
    out.e = e;
    const LaurentSeries e2_inv = (e * e).inverse(precision + 2 * ve + 2);
    out.scaled_target = apply(jd.adjugate, y, LaurentSeries());
    for (auto& b : out.scaled_target) b = (b * e2_inv).truncated(precision + 1);

    const HenselResult z = hensel_solve(hs, out.scaled_target, precision);
    for (const auto& zi : z.solution) out.x.push_back(e * zi);

    Point check = f.evaluate(out.x);
    out.precision = LaurentSeries::kExact;
    for (int i = 0; i < n; ++i) {
        const LaurentSeries r = check[static_cast<size_t>(i)] - y[static_cast<size_t>(i)];
        if (!r.is_zero()) raise(ErrorCode::PrecisionInsufficient, "f(x) - y = " + r.to_string());
        out.precision = std::min(out.precision, r.precision());
    }
    return out;
}

namespace {

LaurentSeries horner(const std::vector<LaurentSeries>& coeffs, const LaurentSeries& x, int prec) {
    LaurentSeries acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it).truncated(prec);
    return acc;
}

std::vector<LaurentSeries> derivative(const std::vector<LaurentSeries>& coeffs) {
    std::vector<LaurentSeries> out;
    for (size_t k = 1; k < coeffs.size(); ++k) out.push_back(coeffs[k] * LaurentSeries(Rational(static_cast<long>(k))));
    return out;
}

LaurentSeries exact_copy(const LaurentSeries& a) { return LaurentSeries(a.terms(), LaurentSeries::kExact); }

}  // namespace

UnivariateRoot newton_univariate(const std::vector<LaurentSeries>& coeffs, const LaurentSeries& start, int precision) {
    for (const auto& c : coeffs)
        if (c.effective_valuation() < 0)
            raise(ErrorCode::HenselFailureAtPoint, "coefficient " + c.to_string() + " is not in R");
    if (start.effective_valuation() < 0) raise(ErrorCode::HenselFailureAtPoint, "start value is not in R");
    const auto dcoeffs = derivative(coeffs);
    const int probe = precision + 2;
    const LaurentSeries p0 = horner(coeffs, exact_copy(start), LaurentSeries::kExact);
    const LaurentSeries d0 = horner(dcoeffs, exact_copy(start), LaurentSeries::kExact);
    if (d0.is_zero()) raise(ErrorCode::HenselFailureAtPoint, "derivative vanishes at the start value");
    const int d = d0.valuation();
    if (!(p0.effective_valuation() > 2 * d))
        raise(ErrorCode::HenselFailureAtPoint, "Newton's lemma fails: v(P(c)) = " +
                                                   std::to_string(p0.effective_valuation()) +
                                                   ", v(P'(c)) = " + std::to_string(d));
    UnivariateRoot out;
    out.derivative_valuation = d;
    LaurentSeries w = exact_copy(start.truncated(precision));
    const int work = precision + d;
    for (int iter = 0; iter < 64; ++iter) {
        const LaurentSeries pw = horner(coeffs, w, work);
        if (pw.is_zero()) {
            out.root = w.truncated(precision);
            return out;
        }
        const LaurentSeries dw = horner(dcoeffs, w, work + d + probe);
        w = exact_copy((w - pw * dw.inverse(work + probe)).truncated(precision));
    }
    raise(ErrorCode::PrecisionInsufficient, "univariate Newton iteration did not stabilize");
}

}  // namespace hk::hensel
