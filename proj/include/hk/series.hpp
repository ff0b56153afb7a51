#pragma once

// Truncated multivariate power series over a generic scalar ring, with
// total-degree truncation. A series with precision N knows every term of total
// degree < N; precision kExactPrecision marks an exact polynomial.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hk/error.hpp"
#include "hk/laurent.hpp"
#include "hk/scalar.hpp"

namespace hk {

using Exponent = std::vector<int>;

inline constexpr int kExactPrecision = LaurentSeries::kExact;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline int precision_mul(int n, int k) {
    if (n >= kExactPrecision) return kExactPrecision;
    long p = static_cast<long>(n) * k;
    return p >= kExactPrecision ? kExactPrecision : static_cast<int>(p);
}

template <class S>
class MultiSeries {
   public:
    using Scalar = S;
    using Traits = ScalarTraits<S>;

    explicit MultiSeries(int nvars = 1, int precision = kExactPrecision) : nvars_(nvars), prec_(precision) {
        if (nvars < 0) raise(ErrorCode::InvalidArgument, "negative variable count");
    }

    static MultiSeries constant(int nvars, const S& c, int precision = kExactPrecision) {
        MultiSeries out(nvars, precision);
        out.add_term(Exponent(static_cast<size_t>(nvars), 0), c);
        return out;
    }
    static MultiSeries variable(int nvars, int index, int precision = kExactPrecision) {
        Exponent e(static_cast<size_t>(nvars), 0);
        e.at(static_cast<size_t>(index)) = 1;
        return monomial(nvars, e, Traits::one(), precision);
    }
    static MultiSeries monomial(int nvars, const Exponent& e, const S& c, int precision = kExactPrecision) {
        MultiSeries out(nvars, precision);
        out.add_term(e, c);
        return out;
    }

    int nvars() const { return nvars_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExactPrecision; }
    const std::map<Exponent, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Least total degree of a stored term; precision() when nothing is stored.
    int order() const {
        int best = prec_;
        for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
        return best;
    }
    /// Largest total degree of a stored term (-1 for none).
    int max_degree() const {
        int best = -1;
        for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
        return best;
    }

    S coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Traits::zero() : it->second;
    }
    S constant_term() const { return coefficient(Exponent(static_cast<size_t>(nvars_), 0)); }

    /// Adds c * X^e (dropped when beyond precision or zero).
    void add_term(const Exponent& e, const S& c) {
        if (static_cast<int>(e.size()) != nvars_) raise(ErrorCode::InvalidArgument, "exponent length mismatch");
        if (total_degree(e) >= prec_ || Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiSeries truncated(int precision) const {
        if (precision >= prec_) return *this;
        MultiSeries out(nvars_, precision);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) < precision) out.terms_.emplace(e, c);
        return out;
    }

    /// Same stored terms below `precision`, with the precision field set to it.
    /// Newton iterations use this to lift an iterate known to higher accuracy
    /// than pessimistic propagation records.
    MultiSeries with_precision(int precision) const {
        MultiSeries out(nvars_, precision);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) < precision) out.terms_.emplace(e, c);
        return out;
    }

    MultiSeries operator-() const {
        MultiSeries out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    MultiSeries& operator+=(const MultiSeries& b) {
        check_compatible(b);
        if (b.prec_ < prec_) *this = truncated(b.prec_);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    MultiSeries& operator-=(const MultiSeries& b) { return *this += -b; }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        a.check_compatible(b);
        const int prec = std::min(precision_add(a.prec_, b.order()), precision_add(b.prec_, a.order()));
        MultiSeries out(a.nvars_, prec);
        Exponent e(static_cast<size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            if (da >= prec) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) >= prec) continue;
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    MultiSeries& operator*=(const MultiSeries& b) { return *this = *this * b; }

    friend MultiSeries operator*(const S& s, const MultiSeries& a) {
        MultiSeries out(a.nvars_, a.prec_);
        if (Traits::is_zero(s)) return out;
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }
    friend MultiSeries operator*(const MultiSeries& a, const S& s) { return s * a; }

    /// Multiplicative inverse mod (X)^N, N = min(precision(), max_precision).
    MultiSeries reciprocal(int max_precision = kExactPrecision) const {
        const S a0 = constant_term();
        if (Traits::is_zero(a0)) raise(ErrorCode::NonUnitReciprocal, "reciprocal of a series with zero constant term");
        const int target = std::min(prec_, max_precision);
        if (terms_.size() == 1) return constant(nvars_, Traits::inverse(a0), target);
        if (target >= kExactPrecision)
            raise(ErrorCode::InvalidArgument, "reciprocal of an exact non-constant series needs a truncation order");
        MultiSeries r = constant(nvars_, Traits::inverse(a0), target);
        const MultiSeries two = constant(nvars_, Traits::from_rational(Rational(2)));
        for (int k = 1; k < target;) {
            k = std::min(2 * k, target);
            const MultiSeries ak = truncated(k).with_precision(kExactPrecision);
            const MultiSeries rk = r.with_precision(kExactPrecision);
            r = (rk * (two - ak * rk)).with_precision(k);
        }
        return r;
    }

    /// Partial derivative in variable i.
    MultiSeries derivative(int i) const {
        MultiSeries out(nvars_, prec_ >= kExactPrecision ? prec_ : prec_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            Exponent d = e;
            d[static_cast<size_t>(i)] -= 1;
            out.add_term(d, c * Traits::from_rational(Rational(e[static_cast<size_t>(i)])));
        }
        return out;
    }

    template <class F>
    auto map_coefficients(F&& f) const -> MultiSeries<decltype(f(std::declval<S>()))> {
        using T = decltype(f(std::declval<S>()));
        MultiSeries<T> out(nvars_, prec_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    /// Exact stored-term equality (precision included).
    bool identical(const MultiSeries& b) const {
        return nvars_ == b.nvars_ && prec_ == b.prec_ && terms_.size() == b.terms_.size() &&
               std::equal(terms_.begin(), terms_.end(), b.terms_.begin(),
                          [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
    }

    /// Equality of all terms below the smaller precision.
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        if (a.nvars_ != b.nvars_) return false;
        const int prec = std::min(a.prec_, b.prec_);
        return (a.truncated(prec) - b.truncated(prec)).is_zero();
    }

    std::string to_string(const std::vector<std::string>& names) const;

   private:
    void check_compatible(const MultiSeries& b) const {
        if (nvars_ != b.nvars_) raise(ErrorCode::InvalidArgument, "series over different variable counts");
    }

    int nvars_;
    int prec_;
    std::map<Exponent, S> terms_;
};

/// Default variable names X1..Xn.
inline std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

namespace detail {

inline bool needs_parens(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == ' ' || s[i] == '+' || (s[i] == '-' && s[i - 1] != '^')) return true;
    return false;
}

// Appends "c*mono" in sum notation.
inline void append_term(std::ostringstream& os, bool& first, std::string coef, const std::string& mono) {
    bool negative = false;
    if (!needs_parens(coef) && !coef.empty() && coef[0] == '-') {
        negative = true;
        coef.erase(0, 1);
    }
    if (needs_parens(coef)) coef = "(" + coef + ")";
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
        os << coef;
    else if (coef == "1")
        os << mono;
    else
        os << coef << "*" << mono;
}

}  // namespace detail

template <class S>
std::string MultiSeries<S>::to_string(const std::vector<std::string>& names) const {
    std::vector<std::pair<Exponent, S>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "X" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        detail::append_term(os, first, Traits::to_string(c), mono);
    }
    if (!is_exact()) {
        os << (first ? "" : " + ") << "O(" << prec_ << ")";
        first = false;
    }
    return first ? "0" : os.str();
}

/// phi(args): every argument must have zero constant term. The result lives in
/// the arguments' variables and is known to min(N_phi * min order, min N_arg),
/// further capped at max_precision.
template <class S>
MultiSeries<S> substitute(const MultiSeries<S>& phi, std::span<const MultiSeries<S>> args,
                          int max_precision = kExactPrecision) {
    if (static_cast<int>(args.size()) != phi.nvars())
        raise(ErrorCode::InvalidArgument, "substitute needs one argument per variable");
    if (args.empty()) return phi;
    const int m = args.front().nvars();
    int min_order = kExactPrecision, prec = max_precision;
    for (const auto& a : args) {
        if (a.nvars() != m) raise(ErrorCode::InvalidArgument, "substitution arguments over different variables");
        if (!ScalarTraits<S>::is_zero(a.constant_term()))
            raise(ErrorCode::NonpositiveOrderArgument, "substitution argument with nonzero constant term");
        min_order = std::min(min_order, a.order());
        prec = std::min(prec, a.precision());
    }
    prec = std::min(prec, precision_mul(phi.precision(), std::max(min_order, 1)));
    MultiSeries<S> out(m, prec);
    // powers[i][k] = args[i]^k truncated to prec
    std::vector<std::vector<MultiSeries<S>>> powers(args.size());
    for (size_t i = 0; i < args.size(); ++i)
        powers[i].push_back(MultiSeries<S>::constant(m, ScalarTraits<S>::one(), prec));
    for (const auto& [e, c] : phi.terms()) {
        long lowest = 0;
        for (size_t i = 0; i < e.size(); ++i) lowest += static_cast<long>(e[i]) * std::max(args[i].order(), 1);
        if (lowest >= prec) continue;
        MultiSeries<S> term = MultiSeries<S>::constant(m, c, prec);
        for (size_t i = 0; i < e.size(); ++i) {
            const int k = e[i];
            while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back((powers[i].back() * args[i]).truncated(prec));
            if (k > 0) term = (term * powers[i][static_cast<size_t>(k)]).truncated(prec);
        }
        out += term;
    }
    return out.truncated(prec);
}

template <class S>
MultiSeries<S> substitute(const MultiSeries<S>& phi, const std::vector<MultiSeries<S>>& args,
                          int max_precision = kExactPrecision) {
    return substitute(phi, std::span<const MultiSeries<S>>(args), max_precision);
}

/// X_i -> X_i^{r_i}.
template <class S>
MultiSeries<S> power_substitute(const MultiSeries<S>& phi, const std::vector<int>& r) {
    if (static_cast<int>(r.size()) != phi.nvars()) raise(ErrorCode::InvalidArgument, "one exponent per variable");
    int rmin = kExactPrecision;
    for (int ri : r) {
        if (ri < 1) raise(ErrorCode::InvalidArgument, "power substitution exponents must be positive");
        rmin = std::min(rmin, ri);
    }
    MultiSeries<S> out(phi.nvars(), precision_mul(phi.precision(), r.empty() ? 1 : rmin));
    for (const auto& [e, c] : phi.terms()) {
        Exponent f = e;
        for (size_t i = 0; i < f.size(); ++i) f[i] *= r[i];
        out.add_term(f, c);
    }
    return out;
}

/// phi / X_i; every stored term must contain X_i.
template <class S>
MultiSeries<S> divide_by_coordinate(const MultiSeries<S>& phi, int i) {
    if (i < 0 || i >= phi.nvars()) raise(ErrorCode::InvalidArgument, "variable index out of range");
    MultiSeries<S> out(phi.nvars(), phi.is_exact() ? kExactPrecision : phi.precision() - 1);
    for (const auto& [e, c] : phi.terms()) {
        if (e[static_cast<size_t>(i)] == 0)
            raise(ErrorCode::NotDivisible, "term without X" + std::to_string(i + 1) + " cannot be divided");
        Exponent f = e;
        f[static_cast<size_t>(i)] -= 1;
        out.add_term(f, c);
    }
    return out;
}

/// Value of an exact polynomial at a point of S^n.
template <class S>
S evaluate(const MultiSeries<S>& poly, std::span<const S> point) {
    if (!poly.is_exact()) raise(ErrorCode::InvalidArgument, "evaluate needs an exact polynomial");
    if (static_cast<int>(point.size()) != poly.nvars()) raise(ErrorCode::InvalidArgument, "point dimension mismatch");
    std::vector<std::vector<S>> powers(point.size(), std::vector<S>{ScalarTraits<S>::one()});
    S acc = ScalarTraits<S>::zero();
    for (const auto& [e, c] : poly.terms()) {
        S term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * point[i]);
            if (e[i] > 0) term = term * powers[i][static_cast<size_t>(e[i])];
        }
        acc = acc + term;
    }
    return acc;
}

template <class S>
S evaluate(const MultiSeries<S>& poly, const std::vector<S>& point) {
    return evaluate(poly, std::span<const S>(point));
}

}  // namespace hk
