#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hk/hensel.hpp"

using namespace hk;
using namespace hk::hensel;

namespace {

LaurentSeries t(int k, const Rational& c = Rational(1)) { return LaurentSeries::monomial(c, k); }

Poly X(int n, int i) { return Poly::variable(n, i); }
Poly K(int n, const LaurentSeries& c) { return Poly::constant(n, c); }

int min_valuation(const Point& p) {
    int v = LaurentSeries::kInfiniteValuation;
    for (const auto& x : p) v = std::min(v, x.effective_valuation());
    return v;
}

template <class F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

// binom(1/2, k)
Rational half_binomial(int k) {
    Rational c(1);
    for (int i = 0; i < k; ++i) c = c * (Rational(1, 2) - Rational(i)) / Rational(i + 1);
    return c;
}

}  // namespace

TEST_CASE("jacobian data examples") {
    {
        const PolySystem f({X(1, 0)});
        const auto jd = jacobian_data(f, {LaurentSeries()});
        CHECK(jd.jacobian[0][0] == LaurentSeries(1));
        CHECK(jd.determinant == LaurentSeries(1));
        CHECK(jd.adjugate[0][0] == LaurentSeries(1));
        CHECK(jd.adjugate_verified);
    }
    {
        const PolySystem f({K(1, 2) * X(1, 0) + X(1, 0) * X(1, 0)});
        CHECK(jacobian_data(f, {LaurentSeries()}).determinant == LaurentSeries(2));
    }
    {
        const PolySystem f({X(2, 0) + X(2, 1), X(2, 0) - X(2, 1)});
        const auto jd = jacobian_data(f, {LaurentSeries(), LaurentSeries()});
        CHECK(jd.determinant == LaurentSeries(-2));
        CHECK(jd.adjugate_verified);
        CHECK(jd.adjugate[0][0] == LaurentSeries(-1));
        CHECK(jd.adjugate[0][1] == LaurentSeries(-1));
        CHECK(jd.adjugate[1][0] == LaurentSeries(-1));
        CHECK(jd.adjugate[1][1] == LaurentSeries(1));
    }
    {
        // 3x3 determinant against cofactor expansion by hand
        const auto m = testing::rational_matrix({{2, -1, 3}, {0, 4, 1}, {5, 2, -2}});
        CHECK(determinant(m, LaurentSeries(1)) == LaurentSeries(2 * (4 * -2 - 1 * 2) + 1 * (0 * -2 - 1 * 5) + 3 * (0 * 2 - 4 * 5)));
    }
}

TEST_CASE("hensel_solve examples") {
    const int N = 20;
    {
        const Poly one_plus_x = K(1, 1) + X(1, 0);
        const PolySystem f({one_plus_x * one_plus_x - K(1, LaurentSeries(1) + t(1))});
        const auto res = hensel_solve(f, {}, N);
        const auto& x = res.solution[0];
        CHECK(res.uniqueness_certified);
        CHECK(res.precision == N);
        CHECK(x.coefficient(1) == Rational(1, 2));
        CHECK(x.coefficient(2) == Rational(-1, 8));
        CHECK(x.coefficient(3) == Rational(1, 16));
        for (int k = 0; k < N; ++k) CHECK(x.coefficient(k) == (k == 0 ? Rational(0) : half_binomial(k)));
        const LaurentSeries sq = (LaurentSeries(1) + x) * (LaurentSeries(1) + x);
        CHECK(sq == LaurentSeries(1) + t(1));
        CHECK(sq.precision() >= N);
    }
    {
        const PolySystem f({X(1, 0)});
        const auto res = hensel_solve(f, {t(3)}, N);
        CHECK(res.solution[0].identical(t(3).truncated(N)));
    }
    CHECK(error_of([] { hensel_solve(PolySystem({X(1, 0) * X(1, 0) - K(1, t(1))})); }) == ErrorCode::JacobianNotUnit);
    CHECK(error_of([] { hensel_solve(PolySystem({X(1, 0) + K(1, 1)})); }) == ErrorCode::ResidueNotInIdeal);
    CHECK(error_of([] { hensel_solve(PolySystem({X(1, 0)}), {LaurentSeries(1)}); }) == ErrorCode::ResidueNotInIdeal);
}

TEST_CASE("inverse_map examples") {
    const int N = 20;
    {
        const PolySystem f({K(1, 2) * X(1, 0) + X(1, 0) * X(1, 0)});
        const auto res = inverse_map(f, {t(1, 4)}, N);
        const auto& x = res.x[0];
        CHECK(res.e == LaurentSeries(2));
        CHECK(x.coefficient(1) == Rational(2));
        CHECK(x.coefficient(2) == Rational(-2));
        CHECK(x.coefficient(3) == Rational(4));
        // oracle: x = -1 + sqrt(1 + 4t)
        for (int k = 1; k < N; ++k) CHECK(x.coefficient(k) == half_binomial(k) * Rational(4).pow(k));
        CHECK(LaurentSeries(2) * x + x * x == t(1, 4));
    }
    {
        const PolySystem f({X(2, 0), X(2, 1)});
        const auto res = inverse_map(f, {t(1), t(2)}, N);
        CHECK(res.x[0] == t(1));
        CHECK(res.x[1] == t(2));
    }
    {
        const PolySystem f({K(1, t(1)) * X(1, 0)});
        const auto res = inverse_map(f, {t(3)}, N);
        CHECK(res.e == t(1));
        CHECK(res.x[0] == t(2));
        CHECK(res.x[0].terms().size() == 1);
        CHECK(res.x[0].valuation() > res.e.valuation());
    }
    CHECK(error_of([] { inverse_map(PolySystem({X(1, 0) * X(1, 0)}), {t(3)}); }) == ErrorCode::SingularJacobian);
    CHECK(error_of([] { inverse_map(PolySystem({K(1, t(1)) * X(1, 0)}), {t(2)}); }) == ErrorCode::OutsideDomain);
}

TEST_CASE("residual identity and uniqueness on random systems") {
    std::mt19937 rng(101);
    const int N = 20;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3;
        const PolySystem f = testing::random_unit_system(rng, n, 3);
        Point y;
        for (int i = 0; i < n; ++i) y.push_back(trial % 2 ? testing::random_m_element(rng) : LaurentSeries());
        const auto res = hensel_solve(f, y, N);
        CHECK(res.uniqueness_certified);
        CHECK(min_valuation(res.solution) > 0);
        const Point fa = f.evaluate(res.solution);
        for (int i = 0; i < n; ++i) {
            const LaurentSeries r = fa[static_cast<size_t>(i)] - y[static_cast<size_t>(i)];
            CHECK(r.is_zero());
            CHECK(r.precision() >= N);
        }
    }
}

TEST_CASE("bijection on m^n") {
    std::mt19937 rng(202);
    const int N = 20;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const PolySystem f = testing::random_unit_system(rng, n, 3);
        Point b;
        for (int i = 0; i < n; ++i) b.push_back(testing::random_m_element(rng));
        const auto res = hensel_solve(f, f.evaluate(b), N);
        for (int i = 0; i < n; ++i) CHECK(res.solution[static_cast<size_t>(i)] == b[static_cast<size_t>(i)].truncated(N));
    }
}

TEST_CASE("contraction and continuity") {
    std::mt19937 rng(303);
    const int N = 20;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 3;
        const PolySystem f = testing::random_unit_system(rng, n, 3);
        Point a, b;
        for (int i = 0; i < n; ++i) {
            a.push_back(testing::random_m_element(rng));
            b.push_back(testing::random_m_element(rng));
        }
        Point diff_in, diff_out;
        const Point fa = f.evaluate(a), fb = f.evaluate(b);
        for (int i = 0; i < n; ++i) {
            diff_in.push_back(a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]);
            diff_out.push_back(fa[static_cast<size_t>(i)] - fb[static_cast<size_t>(i)]);
        }
        CHECK(min_valuation(diff_out) >= min_valuation(diff_in));

        // perturbing y at order k leaves the solution unchanged below t^k
        const int k = 3 + trial % 5;
        Point y, y2;
        for (int i = 0; i < n; ++i) {
            y.push_back(testing::random_m_element(rng));
            y2.push_back(y.back() + t(k, testing::random_nonzero_rational(rng)));
        }
        const auto s1 = hensel_solve(f, y, N), s2 = hensel_solve(f, y2, N);
        for (int i = 0; i < n; ++i)
            CHECK(s1.solution[static_cast<size_t>(i)].truncated(k) == s2.solution[static_cast<size_t>(i)].truncated(k));
    }
}

TEST_CASE("inverse_map with non-unit e") {
    std::mt19937 rng(404);
    const int N = 20;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 3, k = 1 + trial % 2;
        const PolySystem f = testing::random_degenerate_system(rng, n, 3, k);
        Point y;
        for (int i = 0; i < n; ++i) {
            LaurentSeries yi = testing::random_m_element(rng);
            y.push_back(yi * t(2 * k));
        }
        const auto res = inverse_map(f, y, N);
        CHECK(res.e.valuation() == k);
        CHECK(min_valuation(res.x) > k);
        const Point fx = f.evaluate(res.x);
        for (int i = 0; i < n; ++i) {
            const LaurentSeries r = fx[static_cast<size_t>(i)] - y[static_cast<size_t>(i)];
            CHECK(r.is_zero());
            CHECK(r.precision() >= N);
        }
    }
}
