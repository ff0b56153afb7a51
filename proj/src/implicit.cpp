#include "hk/implicit.hpp"

#include <algorithm>

namespace hk::implicit {

namespace {

// Incremental row echelon basis over Q.
class Echelon {
   public:
    /// Adds v if it is independent of the basis; reports whether it was.
    bool insert(std::vector<Rational> v) {
        for (const auto& [col, row] : rows_) {
            if (v[col].is_zero()) continue;
            const Rational f = v[col];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
        for (size_t col = 0; col < v.size(); ++col) {
            if (v[col].is_zero()) continue;
            const Rational inv = v[col].inverse();
            for (auto& x : v) x *= inv;
            for (auto& [c, row] : rows_) {
                if (row[col].is_zero()) continue;
                const Rational f = row[col];
                for (size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
            }
            rows_.emplace_back(col, std::move(v));
            return true;
        }
        return false;
    }
    int rank() const { return static_cast<int>(rows_.size()); }

   private:
    std::vector<std::pair<size_t, std::vector<Rational>>> rows_;
};

}  // namespace

SmoothnessReport jacobian_smoothness(const std::vector<QPoly>& generators, int r) {
    if (generators.empty()) raise(ErrorCode::InvalidArgument, "no generators");
    const int n = generators.front().nvars();
    if (r < 0 || r > n) raise(ErrorCode::InvalidArgument, "expected dimension out of range");
    std::vector<std::vector<Rational>> jac;
    for (const auto& p : generators) {
        if (p.nvars() != n) raise(ErrorCode::InvalidArgument, "generators over different variable counts");
        if (!p.constant_term().is_zero())
            raise(ErrorCode::NonvanishingAtOrigin, "generator " + p.to_string(default_names(n)) + " is nonzero at 0");
        std::vector<Rational> row;
        for (int j = 0; j < n; ++j) {
            Exponent e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(j)] = 1;
            row.push_back(p.coefficient(e));
        }
        jac.push_back(std::move(row));
    }

    SmoothnessReport out;
    Echelon rows;
    std::vector<int> pivot_rows, other_rows;
    for (size_t i = 0; i < jac.size(); ++i)
        (rows.insert(jac[i]) ? pivot_rows : other_rows).push_back(static_cast<int>(i));
    out.rank = rows.rank();
    out.is_smooth = out.rank == n - r;

    Echelon cols;
    std::vector<int> pivot_cols, free_cols;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> col;
        for (int i : pivot_rows) col.push_back(jac[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        const bool independent = !col.empty() && cols.rank() < out.rank && cols.insert(col);
        (independent ? pivot_cols : free_cols).push_back(j);
    }
    out.generator_order = pivot_rows;
    out.generator_order.insert(out.generator_order.end(), other_rows.begin(), other_rows.end());
    out.variable_order = free_cols;
    out.variable_order.insert(out.variable_order.end(), pivot_cols.begin(), pivot_cols.end());
    return out;
}

ImplicitProblem<LaurentSeries> to_laurent(const ImplicitProblem<Rational>& pb) {
    ImplicitProblem<LaurentSeries> out{pb.n, pb.r, {}};
    for (const auto& p : pb.polys)
        out.polys.push_back(p.map_coefficients([](const Rational& c) { return LaurentSeries(c); }));
    return out;
}

hensel::Point implicit_eval(const ImplicitProblem<LaurentSeries>& pb, const hensel::Point& u, int precision) {
    pb.validate();
    if (static_cast<int>(u.size()) != pb.r) raise(ErrorCode::InvalidArgument, "need one value per free variable");
    if (detail::constant_minor(pb).is_zero())
        raise(ErrorCode::SingularMinor, "the Jacobian minor vanishes at the origin");
    std::vector<hensel::Poly> f;
    for (int i = 0; i < pb.r; ++i) f.push_back(hensel::Poly::variable(pb.n, i));
    for (const auto& p : pb.polys) f.push_back(p);
    hensel::Point y = u;
    y.resize(static_cast<size_t>(pb.n), LaurentSeries());
    const auto res = hensel::inverse_map(hensel::PolySystem(std::move(f)), y, precision);
    return hensel::Point(res.x.begin() + pb.r, res.x.end());
}

hensel::Point implicit_eval(const ImplicitProblem<Rational>& pb, const hensel::Point& u, int precision) {
    return implicit_eval(to_laurent(pb), u, precision);
}

}  // namespace hk::implicit
