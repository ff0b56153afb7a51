#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hk {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "a", "-a" or "a/b".
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational inverse() const;
    Rational pow(long k) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b);
    /// *this += a * b, reusing `scratch` for the product.
    void add_product(const Rational& a, const Rational& b, Rational& scratch) {
        mpq_mul(scratch.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
        mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), scratch.v_.get_mpq_t());
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

   private:
    mpq_class v_;
};

/// Exact integer k-th root of q if q is a k-th power in Q.
bool exact_root(const Rational& q, long k, Rational& out);

}  // namespace hk
