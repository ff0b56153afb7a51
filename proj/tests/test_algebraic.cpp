#include <random>

#include "catalogue.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "hk/algebraic.hpp"
#include "hk/implicit.hpp"

using namespace hk;
using namespace hk::algebraic;
using hk::testing::qpoly;

namespace {

LaurentSeries t(int k, const Rational& c = Rational(1)) { return LaurentSeries::monomial(c, k); }

template <class F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

// minpoly over X1..Xn with T spelled X_{n+1}
AlgebraicSeries series(const std::string& p, int n, const std::string& seed = "0", int certified = 1) {
    return {qpoly(p, n + 1), qpoly(seed, n), certified};
}

std::vector<Rational> catalan(int count) {
    std::vector<Rational> c{Rational(1)};
    for (int k = 1; k < count; ++k) {
        Rational s;
        for (int i = 0; i < k; ++i) s += c[static_cast<size_t>(i)] * c[static_cast<size_t>(k - 1 - i)];
        c.push_back(s);
    }
    return c;
}

}  // namespace

TEST_CASE("expand_algebraic examples") {
    {
        const auto phi = expand_algebraic(series("X2^2 - X2 + X1", 1), 5);
        CHECK(phi.identical(qpoly("X1 + X1^2 + 2*X1^3 + 5*X1^4 + 14*X1^5", 1).with_precision(6)));
        const auto cat = catalan(16);
        const auto longer = expand_algebraic(series("X2^2 - X2 + X1", 1), 15);
        for (int k = 1; k <= 15; ++k) CHECK(longer.coefficient({k}) == cat[static_cast<size_t>(k - 1)]);
    }
    CHECK(expand_algebraic(series("X3 - X1 - X2", 2), 6) == qpoly("X1 + X2", 2));
    CHECK(error_of([] { expand_algebraic(series("X2^2 - X1", 1), 5); }) == ErrorCode::SeedNotSimple);
    {
        // the other branch through T(0) = 1
        const auto phi = expand_algebraic(series("X2^2 - X2 + X1", 1, "1"), 5);
        CHECK(phi.identical(qpoly("1 - X1 - X1^2 - 2*X1^3 - 5*X1^4 - 14*X1^5", 1).with_precision(6)));
    }
    CHECK(error_of([] { expand_algebraic(series("X2^2 - X2 + X1", 1, "2"), 5); }) == ErrorCode::SeedInconsistent);
    CHECK(error_of([] { expand_algebraic(series("X2^2 - X2 + X1", 1, "X1 + 3*X1^2", 3), 5); }) ==
          ErrorCode::SeedInconsistent);
    CHECK(expand_algebraic(series("X2^2 - X2 + X1", 1, "X1 + X1^2", 3), 5).coefficient({5}) == Rational(14));
}

TEST_CASE("expansion orders agree") {
    const std::vector<std::pair<std::string, int>> cases{
        {"X2^2 - X2 + X1", 1}, {"X2^3 + 2*X2 - X1 - X1^2", 1}, {"X3^2 + X3 - X1*X2 - X1", 2}};
    for (const auto& [p, n] : cases) {
        const auto a = series(p, n);
        const auto lo = expand_algebraic(a, 6), hi = expand_algebraic(a, 11);
        CHECK(lo == hi);
        CHECK(lo.precision() == 7);
    }
}

TEST_CASE("verify_artin_mazur examples") {
    {
        const auto rep = verify_artin_mazur({qpoly("X2^2 + X2 - X1", 2)}, {qpoly("X1 - X1^2 + 2*X1^3 - 5*X1^4", 1)}, 4);
        CHECK(rep.jacobian == Rational(1));
        CHECK(rep.jacobian_nonzero);
        CHECK(rep.residual_zero[0]);
        CHECK(rep.holds());
    }
    {
        const auto rep = verify_artin_mazur({qpoly("X2 - X1", 2)}, {qpoly("X1", 1)}, 8);
        CHECK(rep.jacobian == Rational(1));
        CHECK(rep.residuals[0].is_zero());
        CHECK(rep.holds());
    }
    {
        const auto rep = verify_artin_mazur({qpoly("X2^2 + X2 - X1", 2)}, {qpoly("X1", 1)}, 4);
        CHECK(rep.jacobian == Rational(1));
        CHECK_FALSE(rep.residual_zero[0]);
        CHECK(rep.residuals[0].order() == 2);
        CHECK(rep.residuals[0].coefficient({2}) == Rational(1));
        CHECK_FALSE(rep.holds());
    }
}

TEST_CASE("implicit solutions pass the Artin-Mazur check") {
    for (const auto& c : testing::implicit_catalogue()) {
        if (c.laurent) continue;
        CAPTURE(c.label);
        const auto pb = testing::make_problem<Rational>(c);
        const auto sol = implicit::implicit_series(pb, 10);
        const auto rep = verify_artin_mazur(pb.polys, sol.phis, 10);
        CHECK(rep.jacobian == sol.e);
        CHECK(rep.holds());
    }
}

TEST_CASE("continuous_eval examples") {
    const auto a = series("X2^2 - X2 + X1", 1);
    {
        const auto w = continuous_eval(a, {t(1)}, 20);
        const auto cat = catalan(20);
        for (int k = 1; k < 20; ++k) CHECK(w.coefficient(k) == cat[static_cast<size_t>(k - 1)]);
        CHECK(w.precision() == 20);
    }
    CHECK(continuous_eval(a, {LaurentSeries()}, 20).is_zero());
    CHECK(error_of([&] { continuous_eval(a, {LaurentSeries(1)}); }) == ErrorCode::HenselFailureAtPoint);
    // x = -1/4 has a double residue root
    CHECK(error_of([&] { continuous_eval(a, {LaurentSeries(Rational(-1, 4))}); }) ==
          ErrorCode::HenselFailureAtPoint);
}

TEST_CASE("continuous_eval matches the expansion") {
    std::mt19937 rng(606);
    const std::vector<std::pair<std::string, int>> cases{
        {"X2^2 - X2 + X1", 1}, {"X2^3 + 2*X2 - X1 - X1^2", 1}, {"X3^2 + X3 - X1*X2 - X1", 2}};
    for (const auto& [p, n] : cases) {
        const auto a = series(p, n);
        const auto phi = expand_algebraic(a, 12);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<LaurentSeries> x;
            for (int i = 0; i < n; ++i) x.push_back(testing::random_m_element(rng, 2));
            const auto w = continuous_eval(a, x, 20);
            CHECK(w.identical(continuous_eval(a, x, 20)));
            int vmin = LaurentSeries::kInfiniteValuation;
            for (const auto& xi : x) vmin = std::min(vmin, xi.valuation());
            const int prec = std::min(20, 13 * vmin);
            LaurentSeries expected = LaurentSeries::zero_to(prec);
            for (const auto& [e, c] : phi.terms()) {
                LaurentSeries term(c);
                for (size_t i = 0; i < e.size(); ++i) term = term * x[i].pow(e[i]);
                expected += term.truncated(prec);
            }
            CHECK(w.truncated(prec) == expected);
        }
    }
}
