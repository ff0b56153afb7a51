#include "hk/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hk/error.hpp"
#include "hk/upoly.hpp"

namespace hk {

namespace {

using RPoly = std::vector<Rational>;

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

// std::map never invalidates references to elements on insertion.
std::map<int, RPoly>& cache() {
    static std::map<int, RPoly> c;
    return c;
}

RPoly compute_cyclotomic(int m) {
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    RPoly p(static_cast<size_t>(m) + 1, Rational());
    p[0] = Rational(-1);
    p[static_cast<size_t>(m)] = Rational(1);
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = upoly::divmod(p, cyclotomic_polynomial(d)).first;
    }
    return p;
}

// Reduce a polynomial in zeta_m (any degree) to the canonical basis.
RPoly reduce(RPoly p, int m) {
    const RPoly& phi = cyclotomic_polynomial(m);
    const int deg = static_cast<int>(phi.size()) - 1;
    // zeta^m = 1 first, which keeps the division short.
    if (static_cast<int>(p.size()) > m) {
        for (size_t k = static_cast<size_t>(m); k < p.size(); ++k) p[k % static_cast<size_t>(m)] += p[k];
        p.resize(static_cast<size_t>(m));
    }
    for (int k = static_cast<int>(p.size()) - 1; k >= deg; --k) {
        if (p[k].is_zero()) continue;
        Rational c = p[k];
        const int shift = k - deg;
        for (int j = 0; j <= deg; ++j) p[shift + j] -= c * phi[j];
    }
    p.resize(static_cast<size_t>(deg), Rational());
    return p;
}

void check_conductor(int m) {
    if (m > kConductorCap)
        raise(ErrorCode::ConductorLimit,
              "cyclotomic conductor " + std::to_string(m) + " exceeds cap " + std::to_string(kConductorCap));
}

// Q(zeta_{2k}) = Q(zeta_k) for odd k: never store conductors = 2 mod 4.
int canonical_conductor(int m) { return (m % 4 == 2) ? m / 2 : m; }

}  // namespace

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int m) {
    if (m < 1) raise(ErrorCode::InvalidArgument, "cyclotomic polynomial index must be positive");
    {
        std::lock_guard lock(cache_mutex());
        auto it = cache().find(m);
        if (it != cache().end()) return it->second;
    }
    // Computed outside the lock: recursion needs the smaller ones.
    RPoly p = compute_cyclotomic(m);
    std::lock_guard lock(cache_mutex());
    return cache().emplace(m, std::move(p)).first->second;
}

Cyclo::Cyclo(int conductor, std::vector<Rational> coeffs) : m_(conductor), c_(std::move(coeffs)) {
    if (m_ < 1) raise(ErrorCode::InvalidArgument, "conductor must be positive");
    if (m_ % 4 == 2) {
        // Rewrite over zeta_{m/2}: zeta_m = -zeta_{m/2}^{(m/2+1)/2}.
        Cyclo acc;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) acc = acc + Cyclo(c_[i]) * zeta(m_, static_cast<long>(i));
        *this = acc;
        return;
    }
    check_conductor(m_);
    c_ = reduce(std::move(c_), m_);
    normalize();
}

Cyclo Cyclo::zeta(int m, long k) {
    if (m < 1) raise(ErrorCode::InvalidArgument, "root of unity order must be positive");
    if (m % 4 == 2) {
        const int n = m / 2;
        // zeta_m^k = (-1)^k * zeta_n^{k (n+1)/2}
        Cyclo z = zeta(n, k * ((n + 1) / 2));
        return (k % 2 != 0) ? -z : z;
    }
    check_conductor(m);
    long e = k % m;
    if (e < 0) e += m;
    RPoly p(static_cast<size_t>(e) + 1, Rational());
    p[static_cast<size_t>(e)] = Rational(1);
    Cyclo out;
    out.m_ = m;
    out.c_ = reduce(std::move(p), m);
    out.normalize();
    return out;
}

void Cyclo::normalize() {
    if (c_.empty()) {
        c_ = {Rational()};
        m_ = 1;
        return;
    }
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return;
    c_.resize(1);
    m_ = 1;
}

bool Cyclo::is_zero() const { return m_ == 1 && c_[0].is_zero(); }

bool Cyclo::is_rational() const { return m_ == 1; }

Cyclo Cyclo::lifted(int M) const {
    M = canonical_conductor(M);
    if (M == m_) return *this;
    if (M % m_ != 0) raise(ErrorCode::InvalidArgument, "conductor does not divide lift target");
    check_conductor(M);
    const int step = M / m_;
    RPoly p(static_cast<size_t>(M), Rational());
    for (size_t i = 0; i < c_.size(); ++i) p[(i * static_cast<size_t>(step)) % static_cast<size_t>(M)] += c_[i];
    Cyclo out;
    out.m_ = M;
    out.c_ = reduce(std::move(p), M);
    return out;  // not normalized: callers combine at conductor M
}

namespace {

int common_conductor(int a, int b) {
    const int l = std::lcm(a, b);
    check_conductor(canonical_conductor(l));
    return canonical_conductor(l);
}

}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) {
        Cyclo out = a;
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
        out.normalize();
        return out;
    }
    const int M = common_conductor(a.m_, b.m_);
    return a.lifted(M) + b.lifted(M);
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == 1) {
        Cyclo out = b;
        for (auto& x : out.c_) x *= a.c_[0];
        out.normalize();
        return out;
    }
    if (b.m_ == 1) return b * a;
    if (a.m_ != b.m_) {
        const int M = common_conductor(a.m_, b.m_);
        return a.lifted(M) * b.lifted(M);
    }
    RPoly p(a.c_.size() + b.c_.size() - 1, Rational());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclo out;
    out.m_ = a.m_;
    out.c_ = reduce(std::move(p), a.m_);
    out.normalize();
    return out;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) raise(ErrorCode::InversionOfZero, "inverse of cyclotomic zero");
    if (m_ == 1) return Cyclo(c_[0].inverse());
    // Extended Euclid against Phi_m: u*a + v*Phi = 1.
    RPoly r0 = cyclotomic_polynomial(m_), r1 = c_;
    upoly::trim(r1);
    RPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = upoly::divmod(r0, r1);
        RPoly s = upoly::sub(s0, upoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant since Phi_m is irreducible.
    RPoly u = upoly::scale(s0, r0[0].inverse());
    Cyclo out;
    out.m_ = m_;
    out.c_ = reduce(std::move(u), m_);
    out.normalize();
    return out;
}

Cyclo Cyclo::pow(long k) const { return scalar_pow(*this, k); }

bool Cyclo::root_of_unity(int& order, long& power) const {
    if (is_zero()) return false;
    const int L = std::lcm(2, m_);
    for (int d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        for (long k = 0; k < d; ++k) {
            if (std::gcd(static_cast<long>(d), k) != 1 && !(d == 1 && k == 0)) continue;
            if (zeta(d, k) == *this) {
                order = d;
                power = k;
                return true;
            }
        }
    }
    return false;
}

std::string Cyclo::to_string() const {
    if (m_ == 1) return c_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a;
            continue;
        }
        if (!a.is_one()) os << a << "*";
        os << "z" << m_;
        if (i > 1) os << "^" << i;
    }
    return first ? "0" : os.str();
}

namespace {

// sqrt(p) for a prime p (including 2) and sqrt(-1).
Cyclo sqrt_prime(long p) {
    if (p == -1) return Cyclo::zeta(4);
    if (p == 2) return Cyclo::zeta(8, 1) + Cyclo::zeta(8, 7);
    // Quadratic Gauss sum g = sum (a|p) zeta_p^a, g^2 = (-1)^{(p-1)/2} p.
    check_conductor(static_cast<int>(p));
    std::vector<bool> residue(static_cast<size_t>(p), false);
    for (long a = 1; a < p; ++a) residue[static_cast<size_t>((a * a) % p)] = true;
    RPoly g(static_cast<size_t>(p), Rational());
    for (long a = 1; a < p; ++a) g[static_cast<size_t>(a)] = Rational(residue[static_cast<size_t>(a)] ? 1 : -1);
    Cyclo gauss(static_cast<int>(p), g);
    if (p % 4 == 1) return gauss;
    return -(Cyclo::zeta(4) * gauss);  // g = i*sqrt(p)
}

}  // namespace

Cyclo Cyclo::sqrt_rational(const Rational& q) {
    if (q.is_zero()) return Cyclo();
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class n = ::abs(q.numerator()) * q.denominator();
    mpz_class square_root_part = 1;
    std::vector<long> primes;
    if (n > mpz_class("1000000000000")) raise(ErrorCode::FactorizationUnsupported, "radicand too large to factor");
    long rest = n.get_si();
    for (long p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root_part *= p;
        if (e % 2 == 1) primes.push_back(p);
    }
    if (rest > 1) primes.push_back(rest);
    if (q.sign() < 0) primes.push_back(-1);
    // Conductor check up front so the error is about the radical, not an intermediate.
    long cond = 1;
    for (long p : primes) {
        long c = p == -1 ? 4 : p == 2 ? 8 : (p % 4 == 1 ? p : 4 * p);
        cond = std::lcm(cond, c);
        if (cond > kConductorCap)
            raise(ErrorCode::ConductorLimit, "square root of " + q.to_string() + " needs conductor above cap");
    }
    Cyclo out(Rational(mpq_class(square_root_part, q.denominator())));
    for (long p : primes) out = out * sqrt_prime(p);
    return out;
}

}  // namespace hk
