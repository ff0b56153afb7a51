#include "hk/limits.hpp"

#include <numeric>

#include "hk/error.hpp"
#include "hk/hensel.hpp"

namespace hk::limits {

namespace {

LaurentSeries t_power(int e) { return LaurentSeries::monomial(Rational(1), e); }

// c(t^k) for a univariate coefficient c(X).
LaurentSeries at_power(const MultiSeries<LaurentSeries>& c, int k) {
    LaurentSeries out;
    for (const auto& [e, a] : c.terms()) out += a * t_power(e[0] * k);
    if (!c.is_exact()) out += LaurentSeries::zero_to(precision_mul(c.precision(), k));
    return out;
}

}  // namespace

BranchPartition branch_limits(const SeriesPoly<LaurentSeries>& q, int order, int tprec) {
    if (q.nvars() != 1) raise(ErrorCode::InvalidArgument, "limits need one X variable");
    if (q.degree() < 1) raise(ErrorCode::InvalidArgument, "limits need degree at least 1 in T");
    int zero_roots = 0;
    while (zero_roots <= q.degree() && q.coeff(zero_roots).is_zero() && q.coeff(zero_roots).is_exact()) ++zero_roots;
    BranchPartition out;
    out.q = q;
    for (const auto& root : puiseux::puiseux_roots(q, order, true, tprec)) {
        LimitBranch b;
        b.branch = root.series;
        b.multiplicity = root.multiplicity * root.conjugates;
        const LSeries<LaurentSeries> s = root.series.series();
        if (s.is_zero()) {
            if (zero_roots == 0 || root.multiplicity != zero_roots)
                raise(ErrorCode::PrecisionInsufficient, "branch is zero to the requested order");
            b.vertical = true;
            out.branches.push_back(b);
            continue;
        }
        const Rational gamma(s.valuation(), root.series.ramification);
        b.p = gamma.numerator().get_si();
        b.q = gamma.denominator().get_si();
        const LaurentSeries c0 = s.leading_coefficient();
        b.beta = Rational(c0.valuation());
        if (gamma.sign() > 0)
            b.limit = LaurentSeries();
        else if (gamma.sign() == 0)
            b.limit = c0;
        else
            b.infinite = true;
        out.branches.push_back(b);
    }
    return out;
}

SlopeReport slope_line_check(const SeriesPoly<LaurentSeries>& q, int j, const std::vector<int>& ks, int order,
                             int tprec) {
    const BranchPartition part = branch_limits(q, order, tprec);
    if (j < 0 || j >= static_cast<int>(part.branches.size()))
        raise(ErrorCode::InvalidArgument, "branch index " + std::to_string(j) + " out of range");
    SlopeReport rep;
    rep.branch = part.branches[static_cast<size_t>(j)];
    const LimitBranch& br = rep.branch;
    const int r = br.branch.ramification;
    const LSeries<LaurentSeries> body = br.branch.series();
    bool any = false, all = true;
    for (int k : ks) {
        if (k <= 0) raise(ErrorCode::InvalidArgument, "sample exponents must be positive");
        SlopeSample s;
        s.k = k;
        s.admissible = k % r == 0;
        if (!s.admissible) {
            rep.samples.push_back(s);
            continue;
        }
        any = true;
        if (br.vertical) {
            s.infinite = s.on_line = true;
            rep.samples.push_back(s);
            continue;
        }
        std::vector<LaurentSeries> p;
        for (const auto& c : q.coeffs()) p.push_back(at_power(c, k));
        LaurentSeries seed;
        for (const auto& [e, c] : body.terms()) seed += c * t_power(e * (k / r));
        // T = t^-m U puts the root in R; t^M clears the poles of the coefficients
        const int m = std::max(0, -seed.valuation());
        int M = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) M = std::max(M, m * static_cast<int>(i) - p[i].valuation());
        std::vector<LaurentSeries> coeffs;
        for (size_t i = 0; i < p.size(); ++i) coeffs.push_back(p[i] * t_power(M - m * static_cast<int>(i)));
        const auto u = hensel::newton_univariate(coeffs, seed * t_power(m), tprec + m);
        s.value = u.root * t_power(-m);
        if (s.value.is_zero()) raise(ErrorCode::PrecisionInsufficient, "branch value is zero to precision");
        s.valuation = s.value.valuation();
        s.on_line = Rational(s.valuation) == Rational(br.p, br.q) * Rational(k) + br.beta;
        s.agreement = (s.value - seed).effective_valuation();
        all = all && s.on_line;
        rep.samples.push_back(s);
    }
    rep.pass = any && all;
    return rep;
}

}  // namespace hk::limits
