#pragma once

#include <string>

#include "hk/rational.hpp"

namespace hk {

// Uniform access to the coefficient rings used by the series code.
// Specializations provide:
//   static S zero(); static S one(); static S from_rational(const Rational&);
//   static bool is_zero(const S&); static S inverse(const S&);
//   static std::string to_string(const S&);
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational inverse(const Rational& a) { return a.inverse(); }
    static std::string to_string(const Rational& a) { return a.to_string(); }
    // t-adic valuation of a constant: 0 unless zero.
    static bool is_unit_of_valuation_ring(const Rational& a) { return !a.is_zero(); }
    static bool in_valuation_ring(const Rational&) { return true; }
};

template <class S>
S scalar_pow(S base, long k) {
    S result = ScalarTraits<S>::one();
    if (k < 0) {
        base = ScalarTraits<S>::inverse(base);
        k = -k;
    }
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace hk
