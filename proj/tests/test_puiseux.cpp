#include <set>

#include "doctest.h"

#include "catalogue.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "hk/puiseux.hpp"

using namespace hk;
using namespace hk::puiseux;
using A = AlgebraicNumber;
using testing::closed_form_discriminant;
using testing::factorial;
using testing::has_minimal_exponent;

namespace {

SeriesPoly<Rational> rpoly(const std::string& text, int n = 1) {
    return split_last_variable(expr::to_rational_polynomial(expr::parse(text), [&] {
        auto v = default_names(n);
        v.push_back("T");
        return v;
    }()));
}

SeriesPoly<A> apoly(const std::string& text) { return to_algebraic(rpoly(text)); }

SeriesPoly<LaurentSeries> kpoly_t(const std::string& text) {
    return split_last_variable(expr::to_polynomial(expr::parse(text), {"X1", "T"}));
}

template <class S>
LSeries<S> lseries(const std::map<int, S>& t, int prec = LSeries<S>::kExact) {
    return LSeries<S>(t, prec);
}

// f(Z^R, phi(Z)) by Horner's rule.
template <class S>
LSeries<S> residual(const SeriesPoly<S>& f, const PuiseuxSeries<S>& root, int R) {
    const LSeries<S> phi = root.series().power_substituted(R / root.ramification);
    LSeries<S> acc;
    for (int j = f.degree(); j >= 0; --j) acc = acc * phi + LSeries<S>::from_series(f.coeff(j)).power_substituted(R);
    return acc;
}

}  // namespace

TEST_CASE("newton polygon examples") {
    const auto p = newton_polygon(rpoly("T^3 - X^2*T^2 - X*T + X^3"));
    REQUIRE(p.edges.size() == 2);
    CHECK(p.vertices() == std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {3, 0}});
    CHECK(p.edges[0].slope == Rational(-2));
    CHECK(p.edges[0].length == 1);
    CHECK(p.edges[1].slope == Rational(-1, 2));
    CHECK(p.edges[1].length == 2);

    const auto q = newton_polygon(rpoly("T - X"));
    REQUIRE(q.edges.size() == 1);
    CHECK(q.edges[0].slope == Rational(-1));

    const auto r = newton_polygon(rpoly("T^2 - X^3"));
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0].slope == Rational(-3, 2));
    CHECK(r.edges[0].length == 2);

    const auto z = newton_polygon(rpoly("T^3 - X*T^2"));
    CHECK(z.zero_roots == 2);
}

TEST_CASE("newton polygon needs known coefficients") {
    SeriesPoly<Rational> f(1, {MultiSeries<Rational>(1, 3), MultiSeries<Rational>::variable(1, 0),
                               MultiSeries<Rational>::constant(1, Rational(1))});
    // point (0, >=3) lies above the edge from (1,1) to (2,0) extended: fine
    CHECK(newton_polygon(f).edges.size() == 1);
    // (1, >=1) may lie below the segment from (0,4) to (2,0)
    SeriesPoly<Rational> g(1, {MultiSeries<Rational>::monomial(1, {4}, Rational(1)), MultiSeries<Rational>(1, 1),
                               MultiSeries<Rational>::constant(1, Rational(1))});
    try {
        (void)newton_polygon(g);
        FAIL("expected PrecisionInsufficient");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::PrecisionInsufficient);
    }
}

TEST_CASE("puiseux roots examples") {
    SUBCASE("square root") {
        const auto roots = puiseux_roots(apoly("T^2 - X"), 12);
        REQUIRE(roots.size() == 2);
        std::set<std::string> shown;
        for (const auto& r : roots) {
            CHECK(r.series.ramification == 2);
            CHECK(r.multiplicity == 1);
            const LSeries<A> y = r.series.series();
            CHECK((y * y) == lseries<A>({{2, A(1)}}));
            shown.insert(r.series.to_string());
        }
        CHECK(shown == std::set<std::string>{"X^(1/2) + O(X^12)", "-X^(1/2) + O(X^12)"});
    }
    SUBCASE("product of factors") {
        const auto f = apoly("(T - X^2)*(T^2 - X)");
        const auto roots = puiseux_roots(f, 12);
        REQUIRE(roots.size() == 3);
        int unramified = 0;
        for (const auto& r : roots)
            if (r.series.ramification == 1) {
                ++unramified;
                CHECK(r.series.series() == lseries<A>({{2, A(1)}}));
            }
        CHECK(unramified == 1);
        const auto rep = reconstruct(f, roots);
        CHECK(rep.matches);
        CHECK(rep.ramification == 2);
        CHECK(rep.precision >= 24);
    }
    SUBCASE("perfect square") {
        const auto roots = puiseux_roots(apoly("(T - X)^2"), 12);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].multiplicity == 2);
        CHECK(roots[0].series.series() == lseries<A>({{1, A(1)}}));
    }
    SUBCASE("root at zero") {
        const auto roots = puiseux_roots(apoly("T^2 - X*T"), 12);
        REQUIRE(roots.size() == 2);
        CHECK(reconstruct(apoly("T^2 - X*T"), roots).matches);
    }
    SUBCASE("cube roots of unity appear") {
        const auto roots = puiseux_roots(apoly("T^3 - X"), 12);
        REQUIRE(roots.size() == 3);
        for (const auto& r : roots) {
            const LSeries<A> y = r.series.series();
            CHECK((y * y * y) == lseries<A>({{3, A(1)}}));
        }
    }
    SUBCASE("irreducible edge polynomial gives conjugates") {
        const auto f = apoly("T^3 - X^2*T - X^3 - X^4");
        const auto roots = puiseux_roots(f, 8);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].conjugates == 3);
        const auto rep = reconstruct(f, roots);
        CHECK(rep.matches);
        CHECK(rep.precision >= 8);
    }
    SUBCASE("non-monic needs permission") {
        try {
            (void)puiseux_roots(apoly("X*T - 1"), 12);
            FAIL("expected InvalidArgument");
        } catch (const MathError& e) {
            CHECK(e.code() == ErrorCode::InvalidArgument);
        }
        const auto roots = puiseux_roots(apoly("X*T - 1"), 12, true);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].series.valuation() == -1);
        CHECK(roots[0].series.lead_offset == -1);
    }
    SUBCASE("Laurent scalars") {
        const auto f = kpoly_t("T^2 - t^2*X");
        const auto roots = puiseux_roots(f, 12);
        REQUIRE(roots.size() == 2);
        for (const auto& r : roots) {
            CHECK(r.series.ramification == 2);
            const LaurentSeries c = r.series.series().coefficient(1);
            CHECK(c.valuation() == 1);
            CHECK((c * c) == LaurentSeries::monomial(Rational(1), 2));
        }
        CHECK(reconstruct(f, roots).matches);
    }
}

TEST_CASE("split irreducible examples") {
    SUBCASE("square root") {
        const auto s = split_irreducible(apoly("T^2 - X"), 12);
        CHECK(s.s == 2);
        CHECK(s.epsilon == A(-1));
        CHECK(s.phi == MultiSeries<A>::variable(1, 0));
        CHECK(s.verified);
    }
    SUBCASE("cube root") {
        const auto s = split_irreducible(apoly("T^3 - X"), 12);
        CHECK(s.epsilon == A(Cyclo::zeta(3)));
        CHECK(s.phi == MultiSeries<A>::variable(1, 0));
        // (T - X)(T - z X)(T - z^2 X) = T^3 - X^3 over Q(zeta_3)
        SeriesPoly<A> prod(1, {MultiSeries<A>::constant(1, A(1))});
        for (const auto& fac : s.factors) prod = prod * SeriesPoly<A>::linear(fac);
        CHECK(prod.coeff(0) == MultiSeries<A>::monomial(1, {3}, A(-1)));
        CHECK(prod.coeff(1).is_zero());
        CHECK(prod.coeff(2).is_zero());
        CHECK(s.verified);
    }
    SUBCASE("two rational roots") {
        try {
            (void)split_irreducible(apoly("(T - X)*(T - 2*X)"), 12);
            FAIL("expected NotSingleOrbit");
        } catch (const MathError& e) {
            CHECK(e.code() == ErrorCode::NotSingleOrbit);
        }
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(rpoly("T^2 - X1*X2", 2)) == testing::qpoly("4*X1*X2", 2));
    CHECK(discriminant(rpoly("T^2 - X")) == testing::qpoly("4*X1", 1));
    CHECK(discriminant(rpoly("T - X^3 - 1")) == testing::qpoly("1", 1));
    CHECK(discriminant(rpoly("T^3 - X")) == testing::qpoly("-27*X1^2", 1));
}

TEST_CASE("quasiordinary examples") {
    const auto a = quasiordinary_check(rpoly("T^2 - X1*X2", 2));
    CHECK(a.is_quasiordinary);
    CHECK(a.alpha == std::vector<int>{1, 1});
    REQUIRE(a.unit);
    CHECK(*a.unit == testing::qpoly("4", 2));

    const auto b = quasiordinary_check(rpoly("T^2 - (X1 + X2)", 2));
    CHECK_FALSE(b.is_quasiordinary);
    CHECK(b.alpha == std::vector<int>{0, 0});
    CHECK_FALSE(b.unit);

    const auto c = quasiordinary_check(rpoly("T^2 - 1", 2));
    CHECK(c.is_quasiordinary);
    CHECK(c.alpha == std::vector<int>{0, 0});

    try {
        (void)quasiordinary_check(rpoly("(T - X1)^2", 2));
        FAIL("expected ZeroDiscriminant");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::ZeroDiscriminant);
    }
}

TEST_CASE("verify fractional roots examples") {
    const auto f2 = rpoly("T^2 - X1*X2", 2);
    const auto good = verify_fractional_roots(f2, {testing::qpoly("X1*X2", 2), testing::qpoly("-X1*X2", 2)}, 2);
    CHECK(good.pass);
    const auto f1 = rpoly("T^2 - X");
    CHECK(verify_fractional_roots(f1, {testing::qpoly("X1", 1), testing::qpoly("-X1", 1)}, 2).pass);
    const auto bad = verify_fractional_roots(f1, {testing::qpoly("X1", 1), testing::qpoly("X1", 1)}, 2);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_failing == 0);
}

TEST_CASE("random products: reconstruction, residuals, ramification bound") {
    std::mt19937 rng(606);
    const int order = 12;
    for (int trial = 0; trial < 20; ++trial) {
        const auto [fq, factors] = testing::random_puiseux_product(rng);
        const auto f = to_algebraic(fq);
        CAPTURE(fq.to_string({"X"}));
        const auto roots = puiseux_roots(f, order);
        int count = 0;
        for (const auto& r : roots) {
            count += r.multiplicity * r.conjugates;
            CHECK(factorial(f.degree()) % r.series.ramification == 0);
        }
        CHECK(count == f.degree());
        const auto rep = reconstruct(f, roots);
        CHECK(rep.matches);
        CHECK(rep.precision >= rep.ramification * order);
        for (const auto& r : roots) CHECK(residual(f, r.series, rep.ramification).is_zero());
        // every generating factor's ramification is realized
        for (const auto& fa : factors) {
            bool seen = false;
            for (const auto& r : roots) seen = seen || r.series.ramification == fa.d;
            CHECK(seen);
        }
    }
}

TEST_CASE("edge accounting") {
    std::mt19937 rng(607);
    for (int trial = 0; trial < 40; ++trial) {
        const int s = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<MultiSeries<Rational>> c;
        for (int i = 0; i < s; ++i) {
            MultiSeries<Rational> a(1);
            if (std::uniform_int_distribution<int>(0, 3)(rng) > 0)
                a.add_term({std::uniform_int_distribution<int>(0, 4)(rng)}, testing::random_nonzero_rational(rng));
            c.push_back(a);
        }
        c.push_back(MultiSeries<Rational>::constant(1, Rational(1)));
        const SeriesPoly<Rational> f(1, c);
        const auto p = newton_polygon(f);
        int total = p.zero_roots;
        for (size_t e = 0; e < p.edges.size(); ++e) {
            total += p.edges[e].length;
            if (e > 0) CHECK(p.edges[e - 1].slope < p.edges[e].slope);
        }
        CHECK(total == s);
        for (const auto& [i, o] : p.points) {
            // every point lies on or above every edge line
            for (const auto& e : p.edges) CHECK(Rational(o) >= Rational(e.o0) + e.slope * Rational(i - e.i0));
        }
    }
}

TEST_CASE("conjugacy closure on single orbits") {
    for (const std::string text : {"T^2 - X", "T^3 - X", "T^2 - X^3", "T^3 - X^2", "T^2 - X - X^2", "T^3 - X - X^2",
                                   "T^4 - X", "T^5 - X^2 - X^3"}) {
        CAPTURE(text);
        const auto f = apoly(text);
        const int s = f.degree();
        const auto roots = puiseux_roots(f, 10);
        REQUIRE(roots.size() == static_cast<size_t>(s));
        const A z(Cyclo::zeta(s));
        for (const auto& r : roots) {
            const LSeries<A> moved = r.series.series().scaled_variable(z);
            bool found = false;
            for (const auto& q : roots) found = found || q.series.series() == moved;
            CHECK(found);
        }
        const auto split = split_irreducible(f, 10);
        CHECK(split.verified);
    }
}

TEST_CASE("discriminant and quasiordinary against oracles") {
    std::mt19937 rng(608);
    int qo = 0, not_qo = 0;
    for (int trial = 0; trial < 60; ++trial) {
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
        const auto d = closed_form_discriminant(f);
        CHECK(discriminant(f) == d);
        if (d.is_zero()) {
            CHECK_THROWS_AS((void)quasiordinary_check(f), MathError);
            continue;
        }
        const auto rep = quasiordinary_check(f);
        CHECK(rep.is_quasiordinary == has_minimal_exponent(d));
        (rep.is_quasiordinary ? qo : not_qo)++;
    }
    CHECK(qo > 0);
    CHECK(not_qo > 0);
}
