#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hk/rational.hpp"
#include "hk/scalar.hpp"

namespace hk {

/// Largest conductor a cyclotomic scalar may grow to (6!).
inline constexpr int kConductorCap = 720;

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
/// first. Results are cached; the cache is internally synchronized.
const std::vector<Rational>& cyclotomic_polynomial(int m);

/// Element of Q(zeta_m), stored as a polynomial in zeta_m of degree < phi(m).
/// Conductors congruent to 2 mod 4 are never stored (Q(zeta_2k) = Q(zeta_k)
/// for odd k), and elements that happen to be rational drop to conductor 1.
class Cyclo {
   public:
    Cyclo() : m_(1), c_{Rational()} {}
    Cyclo(const Rational& q) : m_(1), c_{q} {}  // NOLINT(google-explicit-constructor)
    Cyclo(long n) : Cyclo(Rational(n)) {}        // NOLINT(google-explicit-constructor)
    Cyclo(int conductor, std::vector<Rational> coeffs);

    /// zeta_m^k for a fixed primitive m-th root of unity zeta_m = exp(2*pi*i/m).
    static Cyclo zeta(int m, long k = 1);

    /// A square root of q inside a cyclotomic field (Gauss sums). Throws
    /// ConductorLimit if the needed conductor exceeds the cap, and
    /// FactorizationUnsupported if q is too large to factor by trial division.
    static Cyclo sqrt_rational(const Rational& q);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Valid only when is_rational().
    const Rational& rational_value() const { return c_[0]; }

    /// Same element written over Q(zeta_M); m must divide M.
    Cyclo lifted(int M) const;

    /// If this element is a root of unity, returns true and sets it to zeta(order, 1)^power
    /// with order minimal.
    bool root_of_unity(int& order, long& power) const;

    Cyclo inverse() const;
    Cyclo pow(long k) const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

   private:
    void normalize();

    int m_;
    std::vector<Rational> c_;
};

template <>
struct ScalarTraits<Cyclo> {
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }
    static Cyclo from_rational(const Rational& q) { return Cyclo(q); }
    static bool is_zero(const Cyclo& a) { return a.is_zero(); }
    static Cyclo inverse(const Cyclo& a) { return a.inverse(); }
    static std::string to_string(const Cyclo& a) { return a.to_string(); }
    static bool in_valuation_ring(const Cyclo&) { return true; }
};

}  // namespace hk
