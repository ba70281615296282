#pragma once

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace detsing {

using QMat = std::vector<std::vector<Q>>;
using ZMat = std::vector<std::vector<Z>>;

inline QMat zero_matrix(std::size_t r, std::size_t c) { return QMat(r, std::vector<Q>(c)); }

inline QMat identity_matrix(std::size_t n)
{
    QMat a = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

inline std::size_t cols_of(const QMat& a) { return a.empty() ? 0 : a[0].size(); }

inline QMat transpose(const QMat& a)
{
    QMat t = zero_matrix(cols_of(a), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline QMat matmul(const QMat& a, const QMat& b, std::size_t inner = 0)
{
    std::size_t k = a.empty() ? inner : a[0].size();
    std::size_t c = b.empty() ? 0 : b[0].size();
    if (!a.empty() && b.size() != k) throw std::invalid_argument("matmul: shape mismatch");
    QMat r = zero_matrix(a.size(), c);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < c; ++j)
                if (sgn(b[l][j]) != 0) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

inline bool is_zero_matrix(const QMat& a)
{
    for (auto& row : a)
        for (auto& x : row)
            if (sgn(x) != 0) return false;
    return true;
}

// Fraction-free (Bareiss) row echelon rank over the integers.
inline std::size_t rank_bareiss(ZMat a)
{
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    Z prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Rows are rescaled to integers, then eliminated fraction-free.
inline std::size_t rank(const QMat& a)
{
    ZMat z;
    z.reserve(a.size());
    for (auto& row : a) {
        Z l = 1;
        bool nonzero = false;
        for (auto& x : row) {
            if (sgn(x) == 0) continue;
            nonzero = true;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        if (!nonzero) continue;
        std::vector<Z> zr(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            if (sgn(row[j]) != 0) zr[j] = row[j].get_num() * (l / row[j].get_den());
        z.push_back(std::move(zr));
    }
    return rank_bareiss(std::move(z));
}

struct Echelon {
    QMat rows;                 // reduced rows, one per pivot
    std::vector<std::size_t> pivots;
};

inline Echelon rref(QMat a)
{
    Echelon e;
    std::size_t rows = a.size();
    if (rows == 0) return e;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Q inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(a[r][j]) != 0) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Q f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

// Reduce v modulo the row space of an rref echelon.
inline void reduce_against(const Echelon& e, std::vector<Q>& v)
{
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        std::size_t c = e.pivots[k];
        if (sgn(v[c]) == 0) continue;
        Q f = v[c];
        const auto& row = e.rows[k];
        for (std::size_t j = c; j < row.size(); ++j)
            if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
}

// Basis of {x : a x = 0}, one vector per free column.
inline QMat nullspace(const QMat& a, std::size_t ncols)
{
    Echelon e = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    QMat basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> v(ncols);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Q determinant(QMat a)
{
    std::size_t n = a.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            Q f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline QMat inverse(const QMat& a)
{
    std::size_t n = a.size();
    QMat aug = zero_matrix(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    QMat inv = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
    return inv;
}

} // namespace detsing
