#include "hk/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "hk/error.hpp"

namespace hk {

LaurentSeries::LaurentSeries(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentSeries::LaurentSeries(std::map<int, Rational> terms, int precision) : prec_(std::min(precision, kExact)) {
    for (auto& [e, c] : terms)
        if (e < prec_ && !c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int precision) {
    return LaurentSeries({{exponent, c}}, precision);
}

Rational LaurentSeries::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

LaurentSeries LaurentSeries::truncated(int precision) const {
    if (precision >= prec_) return *this;
    LaurentSeries out;
    out.prec_ = precision;
    for (const auto& [e, c] : terms_) {
        if (e >= precision) break;
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& b) {
    prec_ = std::min(prec_, b.prec_);
    for (const auto& [e, c] : b.terms_) {
        if (e >= prec_) break;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    terms_.erase(terms_.lower_bound(prec_), terms_.end());
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int prec = std::min(precision_add(a.prec_, b.effective_valuation()),
                              precision_add(b.prec_, a.effective_valuation()));
    LaurentSeries out;
    out.prec_ = prec;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const int lo = a.terms_.begin()->first + b.terms_.begin()->first;
    const int hi = std::min(prec - 1, a.terms_.rbegin()->first + b.terms_.rbegin()->first);
    if (hi < lo) return out;
    std::vector<Rational> acc(static_cast<size_t>(hi - lo + 1));
    Rational scratch;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            const int e = ea + eb;
            if (e > hi) break;
            acc[static_cast<size_t>(e - lo)].add_product(ca, cb, scratch);
        }
    }
    for (size_t k = 0; k < acc.size(); ++k)
        if (!acc[k].is_zero()) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<int>(k), std::move(acc[k]));
    return out;
}

LaurentSeries LaurentSeries::inverse(int relative_precision) const {
    if (terms_.empty()) raise(ErrorCode::InversionOfZero, "inverse of a series that is zero to precision");
    const int v = valuation();
    const Rational lead_inv = terms_.begin()->second.inverse();
    if (is_exact() && terms_.size() == 1) return monomial(lead_inv, -v);
    const int rel = is_exact() ? relative_precision : prec_ - v;
    // Unit part u = a * t^-v = c (1 + w); invert term by term: b_k = -(1/c) sum_{j>=1} u_j b_{k-j}.
    std::vector<Rational> u(static_cast<size_t>(rel), Rational());
    for (const auto& [e, c] : terms_) {
        if (e - v >= rel) break;
        u[static_cast<size_t>(e - v)] = c;
    }
    std::vector<Rational> inv(static_cast<size_t>(rel), Rational());
    inv[0] = lead_inv;
    for (int k = 1; k < rel; ++k) {
        Rational s;
        for (int j = 1; j <= k; ++j)
            if (!u[static_cast<size_t>(j)].is_zero()) s += u[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -(s * lead_inv);
    }
    std::map<int, Rational> terms;
    for (int k = 0; k < rel; ++k)
        if (!inv[static_cast<size_t>(k)].is_zero()) terms.emplace(k - v, inv[static_cast<size_t>(k)]);
    return LaurentSeries(std::move(terms), rel - v);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    const int prec = std::min(a.prec_, b.prec_);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (true) {
        const bool ea = ia == a.terms_.end() || ia->first >= prec;
        const bool eb = ib == b.terms_.end() || ib->first >= prec;
        if (ea || eb) return ea && eb;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (!a.is_one()) os << a << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (!is_exact()) {
        os << (first ? "" : " + ") << "O(t^" << prec_ << ")";
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace hk
