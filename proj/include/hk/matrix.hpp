#pragma once

// Small dense matrices over commutative rings. Determinants use division-free
// Laplace expansion memoized over column subsets, O(n 2^n), which is exact
// over truncated series rings where Bareiss-style division would lose
// precision.

#include <cstdint>
#include <vector>

#include "hk/error.hpp"

namespace hk {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
R determinant(const Matrix<R>& m, const R& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    if (n > 20) raise(ErrorCode::InvalidArgument, "determinant size too large");
    for (const auto& row : m)
        if (row.size() != n) raise(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const R zero = one - one;
    std::vector<R> dp(size_t{1} << n, zero);
    std::vector<bool> live(size_t{1} << n, false);
    dp[0] = one;
    live[0] = true;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!live[mask]) continue;
        const int row = __builtin_popcount(mask);
        if (row == static_cast<int>(n)) continue;
        int unused_before = 0;
        for (size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            R term = m[static_cast<size_t>(row)][j] * dp[mask];
            const uint32_t next = mask | (1u << j);
            dp[next] = (unused_before % 2 == 0) ? dp[next] + term : dp[next] - term;
            live[next] = true;
            ++unused_before;
        }
    }
    return dp[(size_t{1} << n) - 1];
}

template <class R>
Matrix<R> minor_matrix(const Matrix<R>& m, size_t skip_row, size_t skip_col) {
    Matrix<R> out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i == skip_row) continue;
        std::vector<R> row;
        for (size_t j = 0; j < m.size(); ++j)
            if (j != skip_col) row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

/// Classical adjugate: adj(M) M = M adj(M) = det(M) I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m, const R& one) {
    const size_t n = m.size();
    Matrix<R> adj(n, std::vector<R>(n, one - one));
    if (n == 1) {
        adj[0][0] = one;
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            R c = determinant(minor_matrix(m, i, j), one);
            adj[j][i] = ((i + j) % 2 == 0) ? c : (one - one) - c;
        }
    return adj;
}

template <class R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b, const R& zero) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Matrix<R> out(n, std::vector<R>(p, zero));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j)
            for (size_t l = 0; l < k; ++l) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    return out;
}

template <class R>
std::vector<R> apply(const Matrix<R>& a, const std::vector<R>& v, const R& zero) {
    std::vector<R> out(a.size(), zero);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
    return out;
}

}  // namespace hk
