#pragma once

#include <limits>
#include <map>
#include <ostream>
#include <string>

#include "hk/rational.hpp"
#include "hk/scalar.hpp"

namespace hk {

/// Truncated element of K = Q((t)). Terms with exponent >= precision() are
/// unknown; kExact marks a finite Laurent polynomial known exactly.
class LaurentSeries {
   public:
    static constexpr int kExact = 1 << 28;
    static constexpr int kInfiniteValuation = std::numeric_limits<int>::max();
    static constexpr int kDefaultPrecision = 20;

    LaurentSeries() = default;
    LaurentSeries(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentSeries(long c) : LaurentSeries(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentSeries(std::map<int, Rational> terms, int precision);

    static LaurentSeries monomial(const Rational& c, int exponent, int precision = kExact);
    /// O(t^precision).
    static LaurentSeries zero_to(int precision) { return LaurentSeries({}, precision); }

    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    const std::map<int, Rational>& terms() const { return terms_; }
    /// Least stored exponent, or kInfiniteValuation.
    int valuation() const { return terms_.empty() ? kInfiniteValuation : terms_.begin()->first; }
    /// Valuation, with zero-to-precision counted as its precision.
    int effective_valuation() const { return terms_.empty() ? prec_ : terms_.begin()->first; }
    Rational coefficient(int e) const;
    Rational leading_coefficient() const { return terms_.empty() ? Rational() : terms_.begin()->second; }
    bool is_zero() const { return terms_.empty(); }

    LaurentSeries truncated(int precision) const;
    /// Multiplicative inverse; the result carries relative precision
    /// precision() - valuation() (or `relative_precision` for exact input
    /// that is not a monomial).
    LaurentSeries inverse(int relative_precision = kDefaultPrecision) const;
    LaurentSeries pow(long k) const { return scalar_pow(*this, k); }

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& b);
    LaurentSeries& operator-=(const LaurentSeries& b) { return *this += -b; }
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

    /// Equality up to the smaller of the two precisions.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    /// Stored terms and precision both identical.
    bool identical(const LaurentSeries& b) const { return prec_ == b.prec_ && terms_ == b.terms_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& a) { return os << a.to_string(); }

   private:
    std::map<int, Rational> terms_;
    int prec_ = kExact;
};

/// Saturating precision arithmetic: anything at or above kExact stays exact.
inline int precision_add(int a, int b) {
    if (a >= LaurentSeries::kExact || b >= LaurentSeries::kExact) return LaurentSeries::kExact;
    long s = static_cast<long>(a) + b;
    return s >= LaurentSeries::kExact ? LaurentSeries::kExact : static_cast<int>(s);
}

template <>
struct ScalarTraits<LaurentSeries> {
    static LaurentSeries zero() { return LaurentSeries(); }
    static LaurentSeries one() { return LaurentSeries(1); }
    static LaurentSeries from_rational(const Rational& q) { return LaurentSeries(q); }
    static bool is_zero(const LaurentSeries& a) { return a.is_zero(); }
    static LaurentSeries inverse(const LaurentSeries& a) { return a.inverse(); }
    static std::string to_string(const LaurentSeries& a) { return a.to_string(); }
    static bool in_valuation_ring(const LaurentSeries& a) { return a.effective_valuation() >= 0; }
};

}  // namespace hk
