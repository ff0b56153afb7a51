#include "hk/puiseux.hpp"

#include <numeric>
#include <type_traits>

#include "hk/error.hpp"
#include "hk/matrix.hpp"

namespace hk::puiseux {

namespace {

struct Point {
    int i;
    int o;
};

// Strictly convex lower hull of points sorted by i.
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
    std::vector<Point> h;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const Point& a = h[h.size() - 2];
            const Point& b = h.back();
            const long cross = static_cast<long>(b.i - a.i) * (p.o - a.o) - static_cast<long>(b.o - a.o) * (p.i - a.i);
            if (cross > 0) break;
            h.pop_back();
        }
        h.push_back(p);
    }
    return h;
}

Rational hull_height(const std::vector<Point>& h, int i) {
    for (size_t k = 0; k + 1 < h.size(); ++k)
        if (h[k].i <= i && i <= h[k + 1].i)
            return Rational(h[k].o) + Rational(h[k + 1].o - h[k].o, h[k + 1].i - h[k].i) * Rational(i - h[k].i);
    return Rational(h.front().o);
}

Rational binomial(int n, int k) {
    Rational r(1);
    for (int j = 1; j <= k; ++j) r = r * Rational(n - k + j, j);
    return r;
}

template <class S>
using XPoly = std::vector<LSeries<S>>;

template <class S>
XPoly<S> lift_poly(const SeriesPoly<S>& f) {
    XPoly<S> g;
    for (const auto& c : f.coeffs()) g.push_back(LSeries<S>::from_series(c));
    return g;
}

bool exact_zero(const auto& s) { return s.is_zero() && s.is_exact(); }

// Known points and unknown (zero-to-precision) points of g[k..imax].
template <class S>
void classify(const XPoly<S>& g, int k, int imax, std::vector<Point>& known, std::vector<Point>& unknown) {
    for (int i = k; i <= imax; ++i) {
        const auto& c = g[static_cast<size_t>(i)];
        if (!c.is_zero())
            known.push_back({i, c.valuation()});
        else if (!c.is_exact())
            unknown.push_back({i, c.precision()});
    }
}

// Unknown points at or below the hull could change it.
void check_unknown_above(const std::vector<Point>& hull, const std::vector<Point>& unknown) {
    for (const auto& u : unknown) {
        if (u.i < hull.front().i) {
            if (hull.size() >= 2) {
                const Rational gamma(hull[0].o - hull[1].o, hull[1].i - hull[0].i);
                if (Rational(u.o) <= Rational(hull[0].o) + gamma * Rational(hull[0].i - u.i))
                    raise(ErrorCode::PrecisionInsufficient, "coefficient of T^" + std::to_string(u.i) +
                                                                " is zero only to precision and may change the polygon");
            }
            continue;
        }
        if (Rational(u.o) <= hull_height(hull, u.i))
            raise(ErrorCode::PrecisionInsufficient,
                  "coefficient of T^" + std::to_string(u.i) + " is zero only to precision and may change the polygon");
    }
}

template <class S>
struct RawRoot {
    LSeries<S> body;
    int B;
    int multiplicity;
    int conjugates;
};

// Newton-Puiseux recursion. A node stands for X = W^B, T = R(W) + W^A U with
// g(W, U) the transformed polynomial; roots are wanted modulo X^N.
template <class S>
class Expander {
    using Traits = ScalarTraits<S>;

   public:
    Expander(int order, int tprec) : N_(order), tprec_(tprec) {}

    void node(const XPoly<S>& g, int B, int A, const LSeries<S>& R, int m, bool top, int conj) {
        const int need = B * N_;
        const int deg = static_cast<int>(g.size()) - 1;
        if (!top && A + 1 >= need) {
            emit(R, B, m, conj);
            return;
        }
        const int imax = top ? deg : m;
        int k = 0;
        while (k <= imax && exact_zero(g[static_cast<size_t>(k)])) ++k;
        if (k > 0) emit(R, B, k, conj);
        if (k > imax) return;

        std::vector<Point> known, unknown;
        classify(g, k, imax, known, unknown);
        if (known.empty() || known.back().i != imax)
            raise(ErrorCode::PrecisionInsufficient, "leading coefficient is zero to precision");
        const std::vector<Point> hull = lower_hull(known);
        check_unknown_above(hull, unknown);

        const int i0 = hull.front().i;
        if (i0 > k) {
            // roots hidden behind zero-to-precision coefficients: only their bound is known
            Rational bound(kExactPrecision);
            for (const auto& u : unknown)
                if (u.i < i0) bound = std::min(bound, Rational(u.o - hull[0].o, i0 - u.i));
            if (Rational(A) + bound < Rational(need))
                raise(ErrorCode::PrecisionInsufficient, "small roots not determined by the known coefficients");
            emit(R, B, i0 - k, conj);
        }

        for (size_t e = 0; e + 1 < hull.size(); ++e) {
            const Point p0 = hull[e], p1 = hull[e + 1];
            const Rational gamma(p0.o - p1.o, p1.i - p0.i);
            if (!top && gamma.sign() <= 0)
                raise(ErrorCode::PrecisionInsufficient, "nonpositive slope below the top level");
            const int a = static_cast<int>(gamma.numerator().get_si());
            const int b = static_cast<int>(gamma.denominator().get_si());
            const int mub = p0.o * b + a * p0.i;
            std::vector<S> h;
            for (int i = p0.i; i <= p1.i; i += b) h.push_back(g[static_cast<size_t>(i)].coefficient(p0.o - a * ((i - p0.i) / b)));
            const auto roots = detail::edge_roots(h, b, tprec_);
            int count = 0;
            for (const auto& r : roots) count += r.multiplicity * r.conjugates;
            if (count != p1.i - p0.i)
                raise(ErrorCode::FactorizationUnsupported, "edge polynomial did not split completely");
            for (const auto& r : roots) {
                const XPoly<S> gp = substitute(g, a, b, r.c, mub);
                const LSeries<S> Rp = R.power_substituted(b) + LSeries<S>::monomial(r.c, A * b + a);
                const int Ap = A * b + a, Bp = B * b;
                if (r.multiplicity > 1) {
                    node(gp, Bp, Ap, Rp, r.multiplicity, false, conj * r.conjugates);
                    continue;
                }
                const int needp = Bp * N_;
                const int P = needp - Ap;
                if (P <= 1)
                    emit(Rp, Bp, 1, conj * r.conjugates);
                else
                    emit(Rp + newton(gp, P).shifted(Ap), Bp, 1, conj * r.conjugates);
            }
        }
    }

    std::vector<RawRoot<S>> roots;

   private:
    // g(W^b, W^a (c + U)) / W^mub
    static XPoly<S> substitute(const XPoly<S>& g, int a, int b, const S& c, int mub) {
        const size_t n = g.size();
        std::vector<S> cp(n, Traits::one());
        for (size_t i = 1; i < n; ++i) cp[i] = cp[i - 1] * c;
        XPoly<S> out(n);
        for (size_t i = 0; i < n; ++i) {
            if (exact_zero(g[i])) continue;
            const LSeries<S> base = g[i].power_substituted(b).shifted(a * static_cast<int>(i) - mub);
            for (size_t j = 0; j <= i; ++j)
                out[j] += (Traits::from_rational(binomial(static_cast<int>(i), static_cast<int>(j))) * cp[i - j]) * base;
        }
        return out;
    }

    static LSeries<S> horner(const XPoly<S>& g, const LSeries<S>& u, int k) {
        LSeries<S> acc = g.back().truncated(k);
        for (size_t j = g.size() - 1; j-- > 0;) acc = (acc * u).truncated(k) + g[j].truncated(k);
        return acc;
    }

    // Simple root U of g with v(U) >= 1, modulo W^P.
    static LSeries<S> newton(const XPoly<S>& g, int P) {
        XPoly<S> dg;
        int limit = kExactPrecision;
        for (size_t j = 0; j < g.size(); ++j) {
            limit = std::min(limit, g[j].precision());
            if (j > 0) dg.push_back(Traits::from_rational(Rational(static_cast<long>(j))) * g[j]);
        }
        LSeries<S> u;
        for (int k = 1; k < P;) {
            k = std::min(2 * k, P);
            const LSeries<S> G = horner(g, u, k), D = horner(dg, u, k);
            u = (u - G * D.inverse(k)).truncated(k).exact();
        }
        return u.truncated(std::min(P, limit));
    }

    void emit(const LSeries<S>& raw, int B, int mult, int conj) {
        const int need = B * N_;
        const LSeries<S> body = raw.truncated(need);
        if (body.precision() < need) raise(ErrorCode::PrecisionInsufficient, "root known to lower order than requested");
        int d = B;
        for (const auto& [e, c] : body.terms()) d = std::gcd(d, e < 0 ? -e : e);
        std::map<int, S> t;
        for (const auto& [e, c] : body.terms()) t.emplace(e / d, c);
        roots.push_back({LSeries<S>(std::move(t), need / d), B / d, mult, conj});
    }

    int N_;
    int tprec_;
};

template <class S>
MultiSeries<S> to_multi(const LSeries<S>& s, int offset = 0) {
    MultiSeries<S> out(1, precision_add(s.precision(), -offset));
    for (const auto& [e, c] : s.terms()) out.add_term({e - offset}, c);
    return out;
}

template <class S>
struct TPoly {
    std::vector<LSeries<S>> c;

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        TPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.resize(a.c.size() + b.c.size() - 1);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

// Norm of T - phi over the formal extension of phi's coefficients.
TPoly<AlgebraicNumber> norm_of_linear(const LSeries<AlgebraicNumber>& phi) {
    using A = AlgebraicNumber;
    std::shared_ptr<const FormalExtension> ext;
    for (const auto& [e, c] : phi.terms())
        if (c.extension()) ext = c.extension();
    if (!ext) return TPoly<A>{{-phi, LSeries<A>(A(1))}};
    const size_t k = ext->modulus.size() - 1;
    using Vec = std::vector<TPoly<A>>;
    Vec x(k);
    for (size_t l = 0; l < k; ++l) {
        LSeries<A> part = LSeries<A>::zero_to(phi.precision());
        for (const auto& [e, c] : phi.terms())
            if (l < c.coeffs().size()) part.add_term(e, A(-c.coeffs()[l]));
        x[l].c = {part, LSeries<A>(A(l == 0 ? 1 : 0))};
    }
    Matrix<TPoly<A>> m(k, std::vector<TPoly<A>>(k));
    Vec v = x;
    for (size_t col = 0; col < k; ++col) {
        for (size_t row = 0; row < k; ++row) m[row][col] = v[row];
        Vec next(k);
        const TPoly<A> top = v[k - 1];
        for (size_t l = 0; l < k; ++l) {
            const TPoly<A> h{{LSeries<A>(A(ext->modulus[l]))}};
            next[l] = (l > 0 ? v[l - 1] : TPoly<A>{}) - h * top;
        }
        v = std::move(next);
    }
    return determinant(m, TPoly<A>{{LSeries<A>(A(1))}});
}

}  // namespace

std::vector<std::pair<int, int>> NewtonPolygon::vertices() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) {
        if (out.empty()) out.emplace_back(e.i0, e.o0);
        out.emplace_back(e.i1, e.o1);
    }
    if (out.empty() && !points.empty()) out.push_back(points.front());
    return out;
}

template <class S>
NewtonPolygon newton_polygon(const SeriesPoly<S>& f) {
    if (f.nvars() != 1) raise(ErrorCode::InvalidArgument, "Newton polygon needs one X variable");
    if (f.is_zero()) raise(ErrorCode::InvalidArgument, "Newton polygon of the zero polynomial");
    const XPoly<S> g = lift_poly(f);
    NewtonPolygon out;
    const int deg = f.degree();
    int k = 0;
    while (k <= deg && exact_zero(g[static_cast<size_t>(k)])) ++k;
    out.zero_roots = k;
    std::vector<Point> known, unknown;
    classify(g, k, deg, known, unknown);
    for (const auto& p : known) out.points.emplace_back(p.i, p.o);
    if (known.empty()) raise(ErrorCode::PrecisionInsufficient, "every coefficient is zero to precision");
    const auto hull = lower_hull(known);
    check_unknown_above(hull, unknown);
    for (size_t e = 0; e + 1 < hull.size(); ++e)
        out.edges.push_back({hull[e].i, hull[e].o, hull[e + 1].i, hull[e + 1].o,
                             Rational(hull[e + 1].o - hull[e].o, hull[e + 1].i - hull[e].i), hull[e + 1].i - hull[e].i});
    return out;
}

template <class S>
std::vector<PuiseuxRoot<S>> puiseux_roots(const SeriesPoly<S>& f, int order, bool allow_non_monic, int tprec) {
    if (order < 1) raise(ErrorCode::NonpositiveOrderArgument, "order must be positive");
    if (f.nvars() != 1) raise(ErrorCode::InvalidArgument, "Puiseux expansion needs one X variable");
    if (f.degree() < 1) raise(ErrorCode::InvalidArgument, "Puiseux expansion needs degree at least 1 in T");
    if (!allow_non_monic && !f.is_monic()) raise(ErrorCode::InvalidArgument, "polynomial is not monic in T");
    Expander<S> ex(order, tprec);
    ex.node(lift_poly(f), 1, 0, LSeries<S>(), f.degree(), true, 1);
    std::vector<PuiseuxRoot<S>> out;
    int count = 0;
    for (const auto& r : ex.roots) {
        PuiseuxRoot<S> root;
        root.series.ramification = r.B;
        root.series.lead_offset = r.body.is_zero() ? 0 : std::min(0, r.body.valuation());
        root.series.body = to_multi(r.body, root.series.lead_offset);
        root.multiplicity = r.multiplicity;
        root.conjugates = r.conjugates;
        count += r.multiplicity * r.conjugates;
        out.push_back(std::move(root));
    }
    if (count != f.degree()) raise(ErrorCode::FactorizationUnsupported, "root count does not match the degree");
    return out;
}

template <class S>
int common_ramification(const std::vector<PuiseuxRoot<S>>& roots) {
    int R = 1;
    for (const auto& r : roots) R = std::lcm(R, r.series.ramification);
    return R;
}

template <class S>
ReconstructionReport reconstruct(const SeriesPoly<S>& f, const std::vector<PuiseuxRoot<S>>& roots) {
    ReconstructionReport rep;
    rep.ramification = common_ramification(roots);
    const int R = rep.ramification;
    TPoly<S> prod{{LSeries<S>(ScalarTraits<S>::one())}};
    for (const auto& r : roots) {
        const LSeries<S> phi = r.series.series().power_substituted(R / r.series.ramification);
        TPoly<S> lin{{-phi, LSeries<S>(ScalarTraits<S>::one())}};
        if constexpr (std::is_same_v<S, AlgebraicNumber>)
            if (r.conjugates > 1) lin = norm_of_linear(phi);
        for (int m = 0; m < r.multiplicity; ++m) prod = prod * lin;
    }
    const LSeries<S> lc = LSeries<S>::from_series(f.coeffs().back()).power_substituted(R);
    const size_t n = std::max(prod.c.size(), f.coeffs().size());
    rep.precision = kExactPrecision;
    rep.matches = true;
    for (size_t j = 0; j < n; ++j) {
        const LSeries<S> pj = j < prod.c.size() ? (f.is_monic() ? prod.c[j] : lc * prod.c[j]) : LSeries<S>();
        const LSeries<S> fj = LSeries<S>::from_series(f.coeff(static_cast<int>(j))).power_substituted(R);
        const LSeries<S> diff = pj - fj;
        rep.precision = std::min(rep.precision, diff.precision());
        if (!diff.is_zero() && rep.matches) {
            rep.matches = false;
            rep.first_mismatch = static_cast<int>(j);
        }
    }
    return rep;
}

SplitResult split_irreducible(const SeriesPoly<AlgebraicNumber>& f, int order) {
    using A = AlgebraicNumber;
    const auto roots = puiseux_roots(f, order);
    SplitResult out;
    out.s = f.degree();
    const int s = out.s;
    for (const auto& r : roots)
        if (r.multiplicity != 1 || r.conjugates != 1 || r.series.ramification != s)
            raise(ErrorCode::NotSingleOrbit, "roots do not form one conjugacy orbit of size " + std::to_string(s));
    size_t pick = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
        const A lc = roots[i].series.series().leading_coefficient();
        if (lc.is_rational()) {
            pick = i;
            break;
        }
    }
    out.epsilon = A(Cyclo::zeta(s, 1));
    const LSeries<A> phi = roots[pick].series.series();
    std::vector<bool> used(roots.size(), false);
    A eps_i(1);
    for (int i = 0; i < s; ++i) {
        const LSeries<A> cand = phi.scaled_variable(eps_i);
        bool found = false;
        for (size_t j = 0; j < roots.size() && !found; ++j)
            if (!used[j] && roots[j].series.series() == cand) used[j] = found = true;
        if (!found) raise(ErrorCode::NotSingleOrbit, "roots are not closed under X^(1/s) -> eps X^(1/s)");
        out.factors.push_back(to_multi(cand));
        eps_i = eps_i * out.epsilon;
    }
    out.phi = to_multi(phi);
    out.verified = verify_fractional_roots(f, out.factors, s).pass;
    return out;
}

MultiSeries<Rational> discriminant(const SeriesPoly<Rational>& f) {
    using M = MultiSeries<Rational>;
    const int n = f.nvars();
    const int s = f.degree();
    if (s < 1 || !f.is_monic()) raise(ErrorCode::InvalidArgument, "discriminant needs a monic polynomial of degree >= 1");
    if (s == 1) return M::constant(n, Rational(1));
    const SeriesPoly<Rational> df = f.derivative();
    const size_t size = static_cast<size_t>(2 * s - 1);
    Matrix<M> syl(size, std::vector<M>(size, M(n)));
    for (int r = 0; r < s - 1; ++r)
        for (int i = 0; i <= s; ++i) syl[static_cast<size_t>(r)][static_cast<size_t>(r + s - i)] = f.coeff(i);
    for (int r = 0; r < s; ++r)
        for (int i = 0; i <= s - 1; ++i)
            syl[static_cast<size_t>(s - 1 + r)][static_cast<size_t>(r + s - 1 - i)] = df.coeff(i);
    M d = determinant(syl, M::constant(n, Rational(1)));
    if ((s * (s - 1) / 2) % 2 == 1) d = -d;
    return d;
}

QuasiordinaryReport quasiordinary_check(const SeriesPoly<Rational>& f) {
    if (f.nvars() > 2) raise(ErrorCode::InvalidArgument, "quasiordinary check supports at most two X variables");
    QuasiordinaryReport rep;
    rep.discriminant = discriminant(f);
    const MultiSeries<Rational>& d = rep.discriminant;
    if (d.is_zero()) raise(ErrorCode::ZeroDiscriminant, "discriminant vanishes: the polynomial has a repeated factor");
    const size_t n = static_cast<size_t>(f.nvars());
    rep.alpha.assign(n, kExactPrecision);
    for (const auto& [e, c] : d.terms())
        for (size_t i = 0; i < n; ++i) rep.alpha[i] = std::min(rep.alpha[i], e[i]);
    MultiSeries<Rational> u(f.nvars(), precision_add(d.precision(), -total_degree(rep.alpha)));
    for (const auto& [e, c] : d.terms()) {
        Exponent q = e;
        for (size_t i = 0; i < n; ++i) q[i] -= rep.alpha[i];
        u.add_term(q, c);
    }
    rep.is_quasiordinary = !u.constant_term().is_zero();
    if (rep.is_quasiordinary) rep.unit = u;
    return rep;
}

template <class S>
RootCheckReport verify_fractional_roots(const SeriesPoly<S>& f, const std::vector<MultiSeries<S>>& roots, int r) {
    if (r < 1) raise(ErrorCode::InvalidArgument, "ramification must be positive");
    const int n = f.nvars();
    const std::vector<int> rv(static_cast<size_t>(n), r);
    SeriesPoly<S> prod(n, {MultiSeries<S>::constant(n, ScalarTraits<S>::one())});
    for (const auto& root : roots) prod = prod * SeriesPoly<S>::linear(root);
    RootCheckReport rep;
    rep.pass = true;
    rep.precision = kExactPrecision;
    const int top = std::max(prod.degree(), f.degree());
    for (int j = 0; j <= top; ++j) {
        const MultiSeries<S> diff = prod.coeff(j) - power_substitute(f.coeff(j), rv);
        rep.precision = std::min(rep.precision, diff.precision());
        if (!diff.is_zero() && rep.pass) {
            rep.pass = false;
            rep.first_failing = j;
        }
    }
    return rep;
}

SeriesPoly<AlgebraicNumber> to_algebraic(const SeriesPoly<Rational>& f) {
    return f.map_series([](const MultiSeries<Rational>& s) {
        return s.map_coefficients([](const Rational& q) { return AlgebraicNumber(q); });
    });
}

SeriesPoly<LaurentSeries> to_laurent(const SeriesPoly<Rational>& f) {
    return f.map_series([](const MultiSeries<Rational>& s) {
        return s.map_coefficients([](const Rational& q) { return LaurentSeries(q); });
    });
}

namespace detail {

// Roots of E(c) = H(c^b) in Q((t)) via an expansion in t.
std::vector<EdgeRoot<LaurentSeries>> edge_roots(const std::vector<LaurentSeries>& h, int b, int tprec) {
    using A = AlgebraicNumber;
    int vmin = kExactPrecision;
    for (const auto& c : h)
        if (!c.is_zero()) vmin = std::min(vmin, c.valuation());
    XPoly<A> g(static_cast<size_t>(b) * (h.size() - 1) + 1);
    for (size_t l = 0; l < h.size(); ++l) {
        std::map<int, A> t;
        for (const auto& [e, c] : h[l].terms()) t.emplace(e - vmin, A(c));
        g[l * static_cast<size_t>(b)] = LSeries<A>(std::move(t), precision_add(h[l].precision(), -vmin));
    }
    Expander<A> ex(tprec, tprec);
    ex.node(g, 1, 0, LSeries<A>(), static_cast<int>(g.size()) - 1, true, 1);
    std::vector<EdgeRoot<LaurentSeries>> out;
    for (const auto& r : ex.roots) {
        if (r.B != 1 || r.conjugates != 1)
            raise(ErrorCode::FactorizationUnsupported, "edge polynomial root is not in Q((t))");
        std::map<int, Rational> t;
        for (const auto& [e, c] : r.body.terms()) {
            if (!c.is_rational()) raise(ErrorCode::FactorizationUnsupported, "edge polynomial root is not in Q((t))");
            t.emplace(e, c.cyclo_value().rational_value());
        }
        LaurentSeries c(std::move(t), r.body.precision());
        if (c.is_zero()) raise(ErrorCode::PrecisionInsufficient, "edge polynomial root is zero to precision");
        out.push_back({c, r.multiplicity, 1});
    }
    return out;
}

}  // namespace detail

#define HK_PUISEUX_INSTANTIATE(S)                                                                                   \
    template NewtonPolygon newton_polygon<S>(const SeriesPoly<S>&);                                                 \
    template std::vector<PuiseuxRoot<S>> puiseux_roots<S>(const SeriesPoly<S>&, int, bool, int);                    \
    template int common_ramification<S>(const std::vector<PuiseuxRoot<S>>&);                                        \
    template ReconstructionReport reconstruct<S>(const SeriesPoly<S>&, const std::vector<PuiseuxRoot<S>>&);         \
    template RootCheckReport verify_fractional_roots<S>(const SeriesPoly<S>&, const std::vector<MultiSeries<S>>&, int);

HK_PUISEUX_INSTANTIATE(AlgebraicNumber)
HK_PUISEUX_INSTANTIATE(LaurentSeries)

template NewtonPolygon newton_polygon<Rational>(const SeriesPoly<Rational>&);
template RootCheckReport verify_fractional_roots<Rational>(const SeriesPoly<Rational>&,
                                                           const std::vector<MultiSeries<Rational>>&, int);

}  // namespace hk::puiseux
