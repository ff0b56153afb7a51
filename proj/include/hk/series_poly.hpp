#pragma once

#include <string>
#include <vector>

#include "hk/series.hpp"

namespace hk {

/// Polynomial in T whose coefficients are truncated series in X1..Xn,
/// coefficient i multiplying T^i.
template <class S>
class SeriesPoly {
   public:
    using Series = MultiSeries<S>;

    explicit SeriesPoly(int nvars = 1) : nvars_(nvars) {}
    SeriesPoly(int nvars, std::vector<Series> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (c.nvars() != nvars_) raise(ErrorCode::InvalidArgument, "coefficient variable count mismatch");
        trim();
    }

    /// T - root.
    static SeriesPoly linear(const Series& root) {
        return SeriesPoly(root.nvars(), {-root, Series::constant(root.nvars(), ScalarTraits<S>::one())});
    }

    int nvars() const { return nvars_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Series>& coeffs() const { return c_; }
    Series coeff(int i) const {
        if (i < 0 || i > degree()) return Series(nvars_);
        return c_[static_cast<size_t>(i)];
    }
    bool is_zero() const { return c_.empty(); }

    bool is_monic() const {
        if (c_.empty()) return false;
        const Series& lc = c_.back();
        return lc.terms().size() == 1 && lc.constant_term() == ScalarTraits<S>::one();
    }

    /// Smallest coefficient precision.
    int precision() const {
        int p = kExactPrecision;
        for (const auto& c : c_) p = std::min(p, c.precision());
        return p;
    }

    /// f(X, t) by Horner's rule.
    Series evaluate(const Series& t) const {
        Series acc(nvars_);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
        return acc;
    }

    SeriesPoly derivative() const {
        std::vector<Series> d;
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(ScalarTraits<S>::from_rational(Rational(static_cast<long>(i))) * c_[i]);
        return SeriesPoly(nvars_, std::move(d));
    }

    SeriesPoly truncated(int precision) const {
        std::vector<Series> out;
        for (const auto& c : c_) out.push_back(c.truncated(precision));
        return SeriesPoly(nvars_, std::move(out));
    }

    template <class F>
    auto map_series(F&& f) const -> SeriesPoly<typename decltype(f(std::declval<Series>()))::Scalar> {
        using T = typename decltype(f(std::declval<Series>()))::Scalar;
        std::vector<MultiSeries<T>> out;
        int n = nvars_;
        for (const auto& c : c_) {
            out.push_back(f(c));
            n = out.back().nvars();
        }
        return SeriesPoly<T>(n, std::move(out));
    }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<Series> out(std::max(a.c_.size(), b.c_.size()), Series(a.nvars_));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] = i < a.c_.size() ? out[i] + b.c_[i] : b.c_[i];
        return SeriesPoly(a.nvars_, std::move(out));
    }
    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<Series> neg;
        for (const auto& c : b.c_) neg.push_back(-c);
        return a + SeriesPoly(b.nvars_, std::move(neg));
    }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return SeriesPoly(a.nvars_);
        std::vector<Series> out(a.c_.size() + b.c_.size() - 1, Series(a.nvars_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return SeriesPoly(a.nvars_, std::move(out));
    }

    /// Coefficientwise equality up to the smaller precisions.
    friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
        const size_t n = std::max(a.c_.size(), b.c_.size());
        for (size_t i = 0; i < n; ++i)
            if (!(a.coeff(static_cast<int>(i)) == b.coeff(static_cast<int>(i)))) return false;
        return true;
    }

    std::string to_string(const std::vector<std::string>& names, const std::string& tname = "T") const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero() && c_[k].is_exact()) continue;
            std::string coef = c_[k].to_string(names);
            std::string mono = k == 0 ? "" : (k == 1 ? tname : tname + "^" + std::to_string(k));
            std::string piece;
            if (mono.empty())
                piece = coef;
            else if (coef == "1")
                piece = mono;
            else if (coef == "-1")
                piece = "-" + mono;
            else if (detail::needs_parens(coef))
                piece = "(" + coef + ")*" + mono;
            else
                piece = coef + "*" + mono;
            if (out.empty())
                out = piece;
            else if (piece[0] == '-')
                out += " - " + piece.substr(1);
            else
                out += " + " + piece;
        }
        return out.empty() ? "0" : out;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int nvars_;
    std::vector<Series> c_;
};

/// Reads the last variable of p as T.
template <class S>
SeriesPoly<S> split_last_variable(const MultiSeries<S>& p) {
    const int n = p.nvars() - 1;
    if (n < 0) raise(ErrorCode::InvalidArgument, "no variable to read as T");
    std::vector<MultiSeries<S>> c;
    for (const auto& [e, a] : p.terms()) {
        const size_t k = static_cast<size_t>(e.back());
        while (c.size() <= k) c.emplace_back(n, precision_add(p.precision(), -static_cast<int>(c.size())));
        c[k].add_term(Exponent(e.begin(), e.end() - 1), a);
    }
    if (c.empty() && !p.is_exact()) c.emplace_back(n, p.precision());
    return SeriesPoly<S>(n, std::move(c));
}

}  // namespace hk
