#pragma once

// Univariate Laurent series over an arbitrary scalar ring S. Same precision
// conventions as LaurentSeries: exponents >= precision() are unknown.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hk/error.hpp"
#include "hk/laurent.hpp"
#include "hk/scalar.hpp"
#include "hk/series.hpp"

namespace hk {

template <class S>
class LSeries {
    using Traits = ScalarTraits<S>;

   public:
    static constexpr int kExact = LaurentSeries::kExact;
    static constexpr int kInfiniteValuation = LaurentSeries::kInfiniteValuation;

    LSeries() = default;
    explicit LSeries(const S& c) {
        if (!Traits::is_zero(c)) terms_.emplace(0, c);
    }
    LSeries(std::map<int, S> terms, int precision) : prec_(std::min(precision, kExact)) {
        for (auto& [e, c] : terms)
            if (e < prec_ && !Traits::is_zero(c)) terms_.emplace(e, std::move(c));
    }
    static LSeries monomial(const S& c, int e, int precision = kExact) { return LSeries({{e, c}}, precision); }
    static LSeries zero_to(int precision) { return LSeries({}, precision); }

    /// Univariate MultiSeries, or Y^offset times one.
    static LSeries from_series(const MultiSeries<S>& s, int offset = 0) {
        if (s.nvars() != 1) raise(ErrorCode::InvalidArgument, "expected a univariate series");
        std::map<int, S> t;
        for (const auto& [e, c] : s.terms()) t.emplace(e[0] + offset, c);
        return LSeries(std::move(t), precision_add(s.precision(), offset));
    }

    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    const std::map<int, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int valuation() const { return terms_.empty() ? kInfiniteValuation : terms_.begin()->first; }
    int effective_valuation() const { return terms_.empty() ? prec_ : terms_.begin()->first; }
    S coefficient(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Traits::zero() : it->second;
    }
    S leading_coefficient() const { return terms_.empty() ? Traits::zero() : terms_.begin()->second; }

    LSeries truncated(int precision) const {
        if (precision >= prec_) return *this;
        LSeries out;
        out.prec_ = precision;
        for (const auto& [e, c] : terms_) {
            if (e >= precision) break;
            out.terms_.emplace(e, c);
        }
        return out;
    }
    /// Forget the precision: treat the stored terms as exact.
    LSeries exact() const {
        LSeries out = *this;
        out.prec_ = kExact;
        return out;
    }
    /// Multiply by Y^k.
    LSeries shifted(int k) const {
        LSeries out;
        out.prec_ = is_exact() ? kExact : prec_ + k;
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
        return out;
    }
    /// Y -> Y^b.
    LSeries power_substituted(int b) const {
        LSeries out;
        out.prec_ = precision_mul(prec_, b);
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * b, c);
        return out;
    }
    /// Y -> z Y for a scalar z.
    LSeries scaled_variable(const S& z) const {
        LSeries out;
        out.prec_ = prec_;
        S zp = Traits::one();
        int last = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                zp = scalar_pow(z, e);
                first = false;
            } else {
                zp = zp * scalar_pow(z, e - last);
            }
            last = e;
            out.add_term(e, c * zp);
        }
        return out;
    }
    template <class F>
    auto map_coefficients(F&& f) const -> LSeries<decltype(f(std::declval<S>()))> {
        using T = decltype(f(std::declval<S>()));
        std::map<int, T> t;
        for (const auto& [e, c] : terms_) t.emplace(e, f(c));
        return LSeries<T>(std::move(t), prec_);
    }

    void add_term(int e, const S& c) {
        if (e >= prec_ || Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    LSeries operator-() const {
        LSeries out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    LSeries& operator+=(const LSeries& b) {
        if (b.prec_ < prec_) *this = truncated(b.prec_);
        for (const auto& [e, c] : b.terms_) {
            if (e >= prec_) break;
            add_term(e, c);
        }
        return *this;
    }
    LSeries& operator-=(const LSeries& b) { return *this += -b; }
    friend LSeries operator+(LSeries a, const LSeries& b) { return a += b; }
    friend LSeries operator-(LSeries a, const LSeries& b) { return a -= b; }
    friend LSeries operator*(const LSeries& a, const LSeries& b) {
        LSeries out;
        out.prec_ = std::min(precision_add(a.prec_, b.effective_valuation()),
                             precision_add(b.prec_, a.effective_valuation()));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb >= out.prec_) break;
                out.add_term(ea + eb, ca * cb);
            }
        return out;
    }
    friend LSeries operator*(const S& s, const LSeries& a) {
        LSeries out;
        out.prec_ = a.prec_;
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    /// Inverse with relative precision prec - v, or `relative` for exact non-monomials.
    LSeries inverse(int relative = LaurentSeries::kDefaultPrecision) const {
        if (terms_.empty()) raise(ErrorCode::InversionOfZero, "inverse of a series that is zero to precision");
        const int v = valuation();
        const S lead_inv = Traits::inverse(terms_.begin()->second);
        if (is_exact() && terms_.size() == 1) return monomial(lead_inv, -v);
        const int rel = is_exact() ? relative : prec_ - v;
        std::vector<S> u(static_cast<size_t>(std::max(rel, 0)), Traits::zero());
        for (const auto& [e, c] : terms_) {
            if (e - v >= rel) break;
            u[static_cast<size_t>(e - v)] = c;
        }
        std::vector<S> inv(u.size(), Traits::zero());
        if (!inv.empty()) inv[0] = lead_inv;
        for (int k = 1; k < rel; ++k) {
            S s = Traits::zero();
            for (int j = 1; j <= k; ++j)
                if (!Traits::is_zero(u[static_cast<size_t>(j)])) s = s + u[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
            inv[static_cast<size_t>(k)] = -(s * lead_inv);
        }
        std::map<int, S> t;
        for (int k = 0; k < rel; ++k) t.emplace(k - v, inv[static_cast<size_t>(k)]);
        return LSeries(std::move(t), rel - v);
    }

    friend bool operator==(const LSeries& a, const LSeries& b) {
        const int prec = std::min(a.prec_, b.prec_);
        return (a.truncated(prec) - b.truncated(prec)).is_zero();
    }
    bool identical(const LSeries& b) const {
        return prec_ == b.prec_ && terms_.size() == b.terms_.size() &&
               std::equal(terms_.begin(), terms_.end(), b.terms_.begin(),
                          [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
    }

    /// Sum notation in `var`; exponents shown as e/den when den > 1.
    std::string to_string(const std::string& var = "X", int den = 1) const;

   private:
    std::map<int, S> terms_;
    int prec_ = kExact;
};

namespace detail {

inline std::string fractional_power(const std::string& var, int e, int den) {
    int g = std::gcd(e < 0 ? -e : e, den);
    if (g == 0) g = 1;
    const int p = e / g, q = den / g;
    if (p == 0) return "";
    if (q == 1) return p == 1 ? var : var + "^" + std::to_string(p);
    return var + "^(" + std::to_string(p) + "/" + std::to_string(q) + ")";
}

}  // namespace detail

template <class S>
std::string LSeries<S>::to_string(const std::string& var, int den) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) detail::append_term(os, first, Traits::to_string(c), detail::fractional_power(var, e, den));
    if (!is_exact()) {
        const std::string p = detail::fractional_power(var, prec_, den);
        os << (first ? "" : " + ") << "O(" << (p.empty() ? "1" : p) << ")";
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace hk
