#include "hk/rational.hpp"

#include "hk/error.hpp"

namespace hk {

Rational::Rational(long num, long den) {
    if (den == 0) raise(ErrorCode::InversionOfZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) raise(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
    if (v.get_den() == 0) raise(ErrorCode::InversionOfZero, "rational with zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) raise(ErrorCode::InversionOfZero, "inverse of rational zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& b) {
    if (b.is_zero()) raise(ErrorCode::InversionOfZero, "division by rational zero");
    v_ /= b.v_;
    return *this;
}

Rational Rational::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(n, d));
}

bool exact_root(const Rational& q, long k, Rational& out) {
    if (k <= 0) return false;
    if (q.sign() < 0 && k % 2 == 0) return false;
    mpz_class n = ::abs(q.numerator()), d = q.denominator(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
    if (q.sign() < 0) rn = -rn;
    out = Rational(mpq_class(rn, rd));
    return true;
}

}  // namespace hk
