// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "catalogue.hpp"
#include "cli_support.hpp"
#include "generators.hpp"
#include "hk/cli.hpp"
#include "hk/hensel.hpp"
#include "hk/implicit.hpp"
#include "hk/limits.hpp"
#include "hk/puiseux.hpp"
#include "oracles.hpp"

using namespace hk;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

LaurentSeries tpow(int k) { return LaurentSeries::monomial(Rational(1), k); }

int min_valuation(const hensel::Point& p) {
    int v = LaurentSeries::kInfiniteValuation;
    for (const auto& x : p) v = std::min(v, x.effective_valuation());
    return v;
}

bool residual_zero(const hensel::PolySystem& f, const hensel::Point& x, const hensel::Point& y, int prec) {
    const auto fx = f.evaluate(x);
    for (size_t i = 0; i < y.size(); ++i) {
        const LaurentSeries r = fx[i] - y[i];
        if (!r.is_zero() || r.precision() < prec) return false;
    }
    return true;
}

void hensel_residuals(Outcome& o) {
    std::mt19937 rng(1001);
    const int N = 20;
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3;
        const auto f = testing::random_unit_system(rng, n, 3);
        hensel::Point y;
        for (int i = 0; i < n; ++i) y.push_back(trial % 2 ? testing::random_m_element(rng) : LaurentSeries());
        const auto res = hensel::hensel_solve(f, y, N);
        o.expect(residual_zero(f, res.solution, y, N), "residual, trial " + std::to_string(trial));
        o.expect(min_valuation(res.solution) > 0, "solution outside m^n, trial " + std::to_string(trial));
    }
    const double s = seconds_since(t0);
    o.expect(s < 10.0, "runtime " + fmt_seconds(s));
    o.detail << "100 systems, n <= 3, degree <= 3, " << fmt_seconds(s);
}

void bijection(Outcome& o) {
    std::mt19937 rng(1002);
    const int N = 20;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const auto f = testing::random_unit_system(rng, n, 3);
        hensel::Point b;
        for (int i = 0; i < n; ++i) b.push_back(testing::random_m_element(rng));
        const auto res = hensel::hensel_solve(f, f.evaluate(b), N);
        for (int i = 0; i < n; ++i)
            o.expect(res.solution[static_cast<size_t>(i)] == b[static_cast<size_t>(i)].truncated(N),
                     "b not recovered, trial " + std::to_string(trial));
    }
    o.detail << "50 random b in m^n recovered to t-precision " << N;
}

void inverse_formula(Outcome& o) {
    std::mt19937 rng(1003);
    const int N = 20;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 3, k = 1 + trial % 2;
        const auto f = testing::random_degenerate_system(rng, n, 3, k);
        hensel::Point y;
        for (int i = 0; i < n; ++i) y.push_back(testing::random_m_element(rng) * tpow(2 * k));
        const auto res = hensel::inverse_map(f, y, N);
        const std::string tag = ", trial " + std::to_string(trial);
        o.expect(res.e.valuation() == k, "v(e)" + tag);
        o.expect(residual_zero(f, res.x, y, N), "residual" + tag);
        o.expect(min_valuation(res.x) > res.e.valuation(), "v(x_i) <= v(e)" + tag);
    }
    o.detail << "25 systems with e = t or t^2";
}

template <class S>
bool all_zero(const std::vector<MultiSeries<S>>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class S>
void implicit_case(Outcome& o, const testing::ImplicitCase& c, bool integrality) {
    const auto pb = testing::make_problem<S>(c);
    const auto s12 = implicit::implicit_series(pb, 12), s8 = implicit::implicit_series(pb, 8);
    if (!integrality) {
        o.expect(all_zero(implicit::residuals(pb, s12.phis)), "residual, " + c.label);
        for (size_t i = 0; i < s12.phis.size(); ++i) {
            o.expect(s12.phis[i].precision() == 13, "precision, " + c.label);
            o.expect(s8.phis[i] == s12.phis[i], "order 8/12 disagreement, " + c.label);
        }
    } else {
        for (const auto& p : s12.phis)
            o.expect(implicit::integrality_form(p, s12.e).integral, "not integral, " + c.label);
    }
}

void implicit_identity(Outcome& o) {
    const auto cat = testing::implicit_catalogue();
    for (const auto& c : cat)
        c.laurent ? implicit_case<LaurentSeries>(o, c, false) : implicit_case<Rational>(o, c, false);
    o.expect(cat.size() >= 10, "catalogue too small");
    o.detail << cat.size() << " problems (signed Catalan included), residual 0 mod (X)^13, orders 8 and 12 agree";
}

void integrality(Outcome& o) {
    const auto cat = testing::implicit_catalogue();
    for (const auto& c : cat)
        c.laurent ? implicit_case<LaurentSeries>(o, c, true) : implicit_case<Rational>(o, c, true);
    o.detail << cat.size() << " R-coefficient problems integral";
}

void reconstruction(Outcome& o) {
    std::mt19937 rng(1006);
    const int order = 12;
    const auto t0 = Clock::now();
    int max_r = 1;
    for (int trial = 0; trial < 50; ++trial) {
        const auto [fq, factors] = testing::random_puiseux_product(rng);
        const auto f = puiseux::to_algebraic(fq);
        const std::string tag = ", f = " + fq.to_string({"X"});
        const auto roots = puiseux::puiseux_roots(f, order);
        for (const auto& r : roots)
            o.expect(testing::factorial(f.degree()) % r.series.ramification == 0, "ramification does not divide s!" + tag);
        const auto rep = puiseux::reconstruct(f, roots);
        o.expect(rep.matches, "product differs" + tag);
        o.expect(rep.precision >= rep.ramification * order, "reconstruction precision" + tag);
        max_r = std::max(max_r, rep.ramification);
    }
    const double s = seconds_since(t0);
    o.expect(s < 30.0, "runtime " + fmt_seconds(s));
    o.detail << "50 products, degree <= 5, max R = " << max_r << ", " << fmt_seconds(s);
}

void conjugate_orbit(Outcome& o) {
    const auto cat = testing::orbit_catalogue();
    for (const auto& text : cat) {
        const auto f = puiseux::to_algebraic(testing::rational_tpoly(text));
        const auto split = puiseux::split_irreducible(f, 12);
        o.expect(split.verified, "split not verified, " + text);
        o.expect(static_cast<int>(split.factors.size()) == f.degree(), "factor count, " + text);
    }
    o.detail << cat.size() << " single-orbit polynomials";
}

void quasiordinary(Outcome& o) {
    std::mt19937 rng(1008);
    int qo = 0, not_qo = 0, zero = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int s = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<MultiSeries<Rational>> c;
        std::uniform_int_distribution<int> deg(0, 2), nterms(0, 2);
        for (int i = 0; i < s; ++i) {
            MultiSeries<Rational> a(2);
            for (int k = nterms(rng); k > 0; --k) a.add_term({deg(rng), deg(rng)}, testing::random_nonzero_rational(rng, 3));
            c.push_back(a);
        }
        c.push_back(MultiSeries<Rational>::constant(2, Rational(1)));
        const SeriesPoly<Rational> f(2, c);
        const auto d = testing::closed_form_discriminant(f);
        const std::string tag = ", f = " + f.to_string({"X1", "X2"});
        o.expect(puiseux::discriminant(f) == d, "discriminant" + tag);
        if (d.is_zero()) {
            bool raised = false;
            try {
                (void)puiseux::quasiordinary_check(f);
            } catch (const MathError& e) {
                raised = e.code() == ErrorCode::ZeroDiscriminant;
            }
            o.expect(raised, "zero discriminant accepted" + tag);
            ++zero;
            continue;
        }
        const bool got = puiseux::quasiordinary_check(f).is_quasiordinary;
        o.expect(got == testing::has_minimal_exponent(d), "disagrees with support oracle" + tag);
        (got ? qo : not_qo)++;
    }
    o.detail << "100 polynomials: " << qo << " quasiordinary, " << not_qo << " not, " << zero << " zero discriminant";
}

void slope_lines(Outcome& o) {
    const auto cat = testing::limit_catalogue();
    int samples = 0, branches = 0, non_monic = 0;
    for (const auto& c : cat) {
        const auto q = testing::tpoly(c.q);
        non_monic += q.is_monic() ? 0 : 1;
        const auto part = limits::branch_limits(q, 12);
        for (size_t j = 0; j < part.branches.size(); ++j) {
            const auto& b = part.branches[j];
            if (b.vertical) continue;
            ++branches;
            const std::string tag = ", q = " + c.q + ", branch " + std::to_string(j);
            const Rational lead_valuation(b.branch.series().leading_coefficient().valuation());
            if (b.p > 0) o.expect(!b.infinite && b.limit.is_zero(), "limit not 0" + tag);
            if (b.p == 0) o.expect(!b.infinite && b.limit == b.branch.series().leading_coefficient(), "limit not c0" + tag);
            if (b.p < 0) o.expect(b.infinite, "limit not infinite" + tag);
            o.expect(b.beta == lead_valuation, "beta" + tag);
            const int r = b.branch.ramification;
            std::vector<int> ks;
            for (int i = 1; i <= 6; ++i) ks.push_back(i * r);
            const auto rep = limits::slope_line_check(q, static_cast<int>(j), ks, 12);
            for (const auto& s : rep.samples) {
                o.expect(s.admissible && s.on_line, "off the line at k = " + std::to_string(s.k) + tag);
                const Rational line = Rational(b.p, b.q) * Rational(s.k) + b.beta;
                o.expect(Rational(s.valuation) == line, "valuation != line" + tag);
                ++samples;
            }
        }
    }
    o.expect(cat.size() >= 8 && non_monic > 0, "catalogue too small or all monic");
    o.detail << cat.size() << " polynomials (" << non_monic << " non-monic), " << branches << " branches, " << samples
             << " samples on their lines";
}

json load_schema() {
    std::ifstream in(HK_REPORT_SCHEMA);
    if (!in) throw std::runtime_error("cannot read schema");
    return json::parse(in);
}

void cli_contract(Outcome& o) {
    std::mt19937 rng(1010);
    for (int i = 0; i < 500; ++i) {
        const auto e = testing::random_expr(rng, 4);
        const std::string text = expr::print(e);
        o.expect(expr::parse(text) == e, "round trip of " + text);
    }
    const json schema = load_schema();
    struct Case {
        std::string command, text;
        int code;
    };
    const std::vector<Case> cases = {
        {"hensel", "X1 + X2^2 - t\nX2 - X1^2\n", 0},
        {"hensel", "X1^2 + X2^2\nX1 - X2\n", 2},
        {"inverse", "X1 + X2^2\nX2 + X1*X2\ny: t^3, t^2\n", 0},
        {"implicit", "r: 1\nX2^2 + X2 - X1\n", 0},
        {"implicit", "r: 1\nX1^2 + X2^2\n", 2},
        {"expand", "T^2 - 1 - X\nseed: 1\n", 0},
        {"artin-mazur-check", "r: 1\nX2 - X1 - X2^2\n", 0},
        {"polygon", "T^3 - X^2*T - X^5\n", 0},
        {"puiseux", "T^2 - X\n", 0},
        {"puiseux", "X*T - 1\n", 2},
        {"split", "T^3 - X^2\n", 0},
        {"qordinary", "T^2 - (X1 + X2)\n", 0},
        {"verify-roots", "T^2 - X^2\nr: 1\nroot: X\nroot: -X\n", 0},
        {"limit", "X*T - 1\n", 0},
        {"slope-check", "T^2 - X*(1 + X)\nks: 2, 4\n", 0},
        {"puiseux", "T^2 -\n", 1},
        {"puiseux", "T^2 - Y\n", 1},
        {"limit", "T^2 - t*X\n", 2},
        {"unknown", "T\n", 1},
    };
    for (const auto& c : cases) {
        const auto out = cli::run(c.command, c.text);
        const std::string tag = c.command + " on '" + c.text + "'";
        o.expect(out.exit_code == c.code, "exit code " + std::to_string(out.exit_code) + " for " + tag);
        std::vector<std::string> errors;
        testing::validate(json::parse(out.report.dump()), schema, schema, "$", errors);
        o.expect(errors.empty(), "schema: " + (errors.empty() ? std::string() : errors.front()) + " for " + tag);
    }
    o.detail << "500 round trips, " << cases.size() << " exit-code cases, reports validate";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"hensel residual suite", hensel_residuals},
        {"bijection on m^n", bijection},
        {"inverse-map formula", inverse_formula},
        {"implicit substitution identity", implicit_identity},
        {"integrality normal form", integrality},
        {"puiseux reconstruction", reconstruction},
        {"conjugate orbit", conjugate_orbit},
        {"quasiordinary detection", quasiordinary},
        {"slope-line exactness", slope_lines},
        {"cli contract", cli_contract},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail.str()
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
