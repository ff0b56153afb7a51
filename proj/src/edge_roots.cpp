#include <numeric>
#include <set>
#include <optional>

#include "hk/error.hpp"
#include "hk/puiseux.hpp"
#include "hk/upoly.hpp"

namespace hk::puiseux::detail {

namespace {

using A = AlgebraicNumber;
using APoly = upoly::Poly<A>;

bool divisors(mpz_class n, std::vector<mpz_class>& out) {
    n = abs(n);
    if (n > mpz_class("1000000000000")) return false;
    long rest = n.get_si();
    std::vector<std::pair<long, int>> fac;
    for (long p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) fac.emplace_back(p, e);
    }
    if (rest > 1) fac.emplace_back(rest, 1);
    out = {1};
    for (auto [p, e] : fac) {
        const size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return true;
}

// w = q * (root of unity) with q rational
bool split_rational_unit(const Cyclo& w, Rational& q, Cyclo& unit) {
    if (w.is_zero()) return false;
    if (w.is_rational()) {
        q = w.rational_value();
        unit = Cyclo(1);
        return true;
    }
    const int L = std::lcm(2, w.conductor());
    const Cyclo wl = w.pow(L);
    if (!wl.is_rational() || wl.rational_value().sign() < 0) return false;
    if (!exact_root(wl.rational_value(), L, q)) return false;
    unit = w * Cyclo(q.inverse());
    int n;
    long j;
    return unit.root_of_unity(n, j);
}

std::optional<Cyclo> cyclo_sqrt(const Cyclo& w) {
    Rational q;
    Cyclo unit;
    if (!split_rational_unit(w, q, unit)) return std::nullopt;
    if (q.sign() < 0) {
        q = -q;
        unit = -unit;
    }
    int n;
    long j;
    unit.root_of_unity(n, j);
    try {
        return Cyclo::sqrt_rational(q) * Cyclo::zeta(2 * n, j);
    } catch (const MathError&) {
        return std::nullopt;
    }
}

bool all_rational(const APoly& p) {
    for (const auto& c : p)
        if (!c.is_rational()) return false;
    return true;
}

bool all_cyclo(const APoly& p) {
    for (const auto& c : p)
        if (!c.is_cyclo()) return false;
    return true;
}

bool pure_binomial(const APoly& p) {
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (!p[i].is_zero()) return false;
    return p.size() >= 2;
}

std::vector<Cyclo> cyclo_coeffs(const APoly& p) {
    std::vector<Cyclo> out;
    for (const auto& c : p) out.push_back(c.cyclo_value());
    return out;
}

// Explicit roots of a monic squarefree P, plus the part left unsplit.
void split_squarefree(APoly p, std::vector<A>& roots, APoly& rest) {
    rest.clear();
    if (all_rational(p) && upoly::degree(p) >= 2) {
        std::vector<Rational> q, rr;
        for (const auto& c : p) q.push_back(c.cyclo_value().rational_value());
        if (rational_roots(q, rr))
            for (const auto& r : rr) {
                roots.emplace_back(r);
                p = upoly::divmod(p, APoly{A(-r), A(1)}).first;
            }
    }
    const int d = upoly::degree(p);
    if (d <= 0) return;
    if (d == 1) {
        roots.push_back(-p[0]);
        return;
    }
    if (!all_cyclo(p)) raise(ErrorCode::FactorizationUnsupported, "edge polynomial over a formal root");
    if (d == 2) {
        const Cyclo p0 = p[0].cyclo_value(), p1 = p[1].cyclo_value();
        if (auto s = cyclo_sqrt(p1 * p1 - Cyclo(4) * p0)) {
            const Cyclo half(Rational(1, 2));
            roots.emplace_back(half * (-p1 + *s));
            roots.emplace_back(half * (-p1 - *s));
            return;
        }
    }
    if (pure_binomial(p)) {
        for (auto& r : kth_roots(d, -p[0].cyclo_value())) roots.push_back(r);
        return;
    }
    rest = p;
}

}  // namespace

bool rational_roots(const std::vector<Rational>& p, std::vector<Rational>& out) {
    out.clear();
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.denominator());
    std::vector<mpz_class> a;
    for (const auto& c : p) a.push_back((c * Rational(den)).numerator());
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < 2 || a[0] == 0) return a.size() >= 1;
    std::vector<mpz_class> dp, dq;
    if (!divisors(a.front(), dp) || !divisors(a.back(), dq)) return false;
    std::set<Rational> found;
    for (const auto& u : dp)
        for (const auto& v : dq)
            for (int sign : {1, -1}) {
                const Rational x(mpq_class(sign * u, v));
                Rational acc;
                for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
                if (acc.is_zero()) found.insert(x);
            }
    out.assign(found.begin(), found.end());
    return true;
}

std::vector<A> kth_roots(long k, const Cyclo& w) {
    if (w.is_zero()) raise(ErrorCode::InvalidArgument, "root of zero");
    if (k == 1) return {A(w)};
    Rational q;
    Cyclo unit;
    std::optional<Cyclo> base;
    int n = 1;
    long j = 0;
    if (split_rational_unit(w, q, unit)) {
        Rational rho;
        if (q.sign() < 0 && k % 2 == 1 && exact_root(q, k, rho)) {
            base = Cyclo(rho);
        } else {
            if (q.sign() < 0) {
                q = -q;
                unit = -unit;
            }
            if (exact_root(q, k, rho)) {
                base = Cyclo(rho);
            } else if (k == 2) {
                try {
                    base = Cyclo::sqrt_rational(q);
                } catch (const MathError& e) {
                    if (e.code() != ErrorCode::ConductorLimit) throw;
                }
            }
        }
        unit.root_of_unity(n, j);
    }
    std::vector<A> out;
    if (base) {
        const Cyclo r0 = *base * Cyclo::zeta(n * static_cast<int>(k), j);
        for (long i = 0; i < k; ++i) out.emplace_back(r0 * Cyclo::zeta(static_cast<int>(k), i));
        return out;
    }
    std::vector<Cyclo> modulus(static_cast<size_t>(k) + 1, Cyclo());
    modulus[0] = -w;
    modulus.back() = Cyclo(1);
    const A beta = A::generator(A::adjoin(modulus));
    for (long i = 0; i < k; ++i) out.push_back(beta * A(Cyclo::zeta(static_cast<int>(k), i)));
    return out;
}

std::vector<EdgeRoot<A>> edge_roots(const std::vector<A>& h, int b, int) {
    std::vector<EdgeRoot<A>> out;
    for (const auto& [p, mu] : upoly::squarefree(h)) {
        const int d = upoly::degree(p);
        if (pure_binomial(p) && p[0].is_cyclo() && (d > 1 || b > 1)) {
            for (auto& c : kth_roots(static_cast<long>(d) * b, -p[0].cyclo_value())) out.push_back({c, mu, 1});
            continue;
        }
        std::vector<A> us;
        APoly rest;
        split_squarefree(p, us, rest);
        for (const auto& u : us) {
            if (b == 1) {
                out.push_back({u, mu, 1});
                continue;
            }
            if (!u.is_cyclo()) raise(ErrorCode::FactorizationUnsupported, "ramified root over a formal root");
            for (auto& c : kth_roots(b, u.cyclo_value())) out.push_back({c, mu, 1});
        }
        if (!rest.empty()) {
            const std::vector<Cyclo> r = cyclo_coeffs(rest);
            std::vector<Cyclo> modulus(static_cast<size_t>(upoly::degree(rest) * b) + 1, Cyclo());
            for (size_t i = 0; i < r.size(); ++i) modulus[i * static_cast<size_t>(b)] = r[i];
            out.push_back({A::generator(A::adjoin(modulus)), mu, upoly::degree(rest) * b});
        }
    }
    return out;
}

}  // namespace hk::puiseux::detail
