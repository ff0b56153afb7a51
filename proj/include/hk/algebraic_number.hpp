#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "hk/cyclo.hpp"
#include "hk/scalar.hpp"

namespace hk {

/// A single formal root adjoined to a cyclotomic field: Q(zeta)[a]/(modulus(a)).
/// The modulus is assumed irreducible; a zero divisor met during inversion
/// proves otherwise and is reported as FactorizationUnsupported.
struct FormalExtension {
    std::vector<Cyclo> modulus;  // monic, lowest degree first, degree >= 2
    std::string name;
};

/// Scalar of the Puiseux coefficient tower: cyclotomic numbers, optionally
/// extended by one formal root. Two numbers over different formal roots
/// cannot be combined.
class AlgebraicNumber {
   public:
    AlgebraicNumber() : c_{Cyclo()} {}
    AlgebraicNumber(const Cyclo& c) : c_{c} {}      // NOLINT(google-explicit-constructor)
    AlgebraicNumber(const Rational& q) : c_{Cyclo(q)} {}  // NOLINT(google-explicit-constructor)
    AlgebraicNumber(long n) : c_{Cyclo(n)} {}       // NOLINT(google-explicit-constructor)

    static std::shared_ptr<const FormalExtension> adjoin(std::vector<Cyclo> monic_modulus);
    /// The formal root itself.
    static AlgebraicNumber generator(const std::shared_ptr<const FormalExtension>& ext);

    const std::shared_ptr<const FormalExtension>& extension() const { return ext_; }
    const std::vector<Cyclo>& coeffs() const { return c_; }

    bool is_zero() const { return !ext_ && c_[0].is_zero(); }
    bool is_cyclo() const { return !ext_; }
    bool is_rational() const { return !ext_ && c_[0].is_rational(); }
    const Cyclo& cyclo_value() const { return c_[0]; }

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long k) const { return scalar_pow(*this, k); }

    AlgebraicNumber operator-() const;
    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).is_zero(); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a) { return os << a.to_string(); }

   private:
    AlgebraicNumber(std::shared_ptr<const FormalExtension> ext, std::vector<Cyclo> c);
    void normalize();

    std::shared_ptr<const FormalExtension> ext_;
    std::vector<Cyclo> c_;
};

template <>
struct ScalarTraits<AlgebraicNumber> {
    static AlgebraicNumber zero() { return AlgebraicNumber(); }
    static AlgebraicNumber one() { return AlgebraicNumber(1); }
    static AlgebraicNumber from_rational(const Rational& q) { return AlgebraicNumber(q); }
    static bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
    static AlgebraicNumber inverse(const AlgebraicNumber& a) { return a.inverse(); }
    static std::string to_string(const AlgebraicNumber& a) { return a.to_string(); }
    static bool in_valuation_ring(const AlgebraicNumber&) { return true; }
};

}  // namespace hk
