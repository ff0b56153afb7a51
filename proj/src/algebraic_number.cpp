#include "hk/algebraic_number.hpp"

#include <atomic>
#include <sstream>

#include "hk/error.hpp"
#include "hk/upoly.hpp"

namespace hk {

namespace {

using CPoly = std::vector<Cyclo>;

const std::shared_ptr<const FormalExtension>& common_extension(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.extension() && b.extension() && a.extension() != b.extension())
        raise(ErrorCode::FactorizationUnsupported,
              "cannot combine formal roots " + a.extension()->name + " and " + b.extension()->name);
    return a.extension() ? a.extension() : b.extension();
}

CPoly widen(const AlgebraicNumber& a, size_t d) {
    CPoly out = a.coeffs();
    out.resize(d, Cyclo());
    return out;
}

CPoly reduce(CPoly p, const CPoly& modulus) {
    upoly::trim(p);
    if (p.size() < modulus.size()) return p;
    return upoly::divmod(p, modulus).second;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const FormalExtension> ext, std::vector<Cyclo> c)
    : ext_(std::move(ext)), c_(std::move(c)) {
    normalize();
}

void AlgebraicNumber::normalize() {
    if (!ext_) {
        if (c_.empty()) c_ = {Cyclo()};
        return;
    }
    c_.resize(ext_->modulus.size() - 1, Cyclo());
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return;
    ext_.reset();
    c_.resize(1);
}

std::shared_ptr<const FormalExtension> AlgebraicNumber::adjoin(std::vector<Cyclo> monic_modulus) {
    static std::atomic<int> counter{0};
    upoly::trim(monic_modulus);
    if (monic_modulus.size() < 3) raise(ErrorCode::InvalidArgument, "formal extension needs degree >= 2");
    if (!(monic_modulus.back() == Cyclo(1))) monic_modulus = upoly::make_monic(monic_modulus);
    auto ext = std::make_shared<FormalExtension>();
    ext->modulus = std::move(monic_modulus);
    ext->name = "a" + std::to_string(++counter);
    return ext;
}

AlgebraicNumber AlgebraicNumber::generator(const std::shared_ptr<const FormalExtension>& ext) {
    std::vector<Cyclo> c(ext->modulus.size() - 1, Cyclo());
    c[1] = Cyclo(1);
    return AlgebraicNumber(ext, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    const auto& ext = common_extension(a, b);
    if (!ext) return AlgebraicNumber(a.c_[0] + b.c_[0]);
    const size_t d = ext->modulus.size() - 1;
    CPoly x = widen(a, d), y = widen(b, d);
    for (size_t i = 0; i < d; ++i) x[i] = x[i] + y[i];
    return AlgebraicNumber(ext, std::move(x));
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    const auto& ext = common_extension(a, b);
    if (!ext) return AlgebraicNumber(a.c_[0] * b.c_[0]);
    if (!a.ext_) {
        CPoly x = b.c_;
        for (auto& v : x) v = v * a.c_[0];
        return AlgebraicNumber(ext, std::move(x));
    }
    if (!b.ext_) return b * a;
    return AlgebraicNumber(ext, reduce(upoly::mul(a.c_, b.c_), ext->modulus));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) raise(ErrorCode::InversionOfZero, "inverse of algebraic zero");
    if (!ext_) return AlgebraicNumber(c_[0].inverse());
    CPoly r0 = ext_->modulus, r1 = c_;
    upoly::trim(r1);
    CPoly s0{}, s1{Cyclo(1)};
    while (!r1.empty()) {
        auto [q, r] = upoly::divmod(r0, r1);
        CPoly s = upoly::sub(s0, upoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        raise(ErrorCode::FactorizationUnsupported,
              "modulus of formal root " + ext_->name + " is reducible (zero divisor found)");
    return AlgebraicNumber(ext_, reduce(upoly::scale(s0, r0[0].inverse()), ext_->modulus));
}

std::string AlgebraicNumber::to_string() const {
    if (!ext_) return c_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string coef = c_[i].to_string();
        bool negative = false;
        if (c_[i].is_rational() && c_[i].rational_value().sign() < 0) {
            negative = true;
            coef.erase(0, 1);
        }
        if (!c_[i].is_rational()) coef = "(" + coef + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") os << coef << "*";
        os << ext_->name;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace hk
