#pragma once

#include "index_set.hpp"
#include "linalg.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace detsing {

// alpha: (m-1) x m, column i is the image of lambda_i in P^v; beta: (m-1) x n, column j is the functional of g_j on P^v.
struct ModuliPoint {
    QMat alpha;
    QMat beta;
};

// Vertex a carries a space of dimension C(m-1, a-1); lambda_i goes a -> a-1, g_j goes a -> a+1.
struct QuiverRep {
    int m = 2, n = 2;
    std::vector<std::size_t> dims;              // dims[a-1]
    std::vector<std::vector<QMat>> lambda;      // lambda[i-1][a], defined for 2 <= a <= m
    std::vector<std::vector<QMat>> g;           // g[j-1][a], defined for 1 <= a <= m-1

    std::size_t dim(int a) const { return a >= 1 && a <= m ? dims[a - 1] : 0; }
};

inline QMat zero_map(std::size_t rows, std::size_t cols) { return zero_matrix(rows, cols); }

inline QMat add_maps(QMat a, const QMat& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
    return a;
}

inline QMat scale_map(QMat a, const Q& s)
{
    for (auto& row : a)
        for (auto& x : row) x *= s;
    return a;
}

inline bool maps_equal(const QMat& a, const QMat& b) { return a == b; }

inline QMat compose(const QMat& after, const QMat& before, std::size_t inner) { return matmul(after, before, inner); }

inline void check_point(const ModuliPoint& pt, int m, int n)
{
    if (m < 2) throw std::invalid_argument("moduli points need m >= 2");
    if (static_cast<int>(pt.alpha.size()) != m - 1 || static_cast<int>(pt.beta.size()) != m - 1)
        throw std::invalid_argument("alpha and beta need m-1 rows");
    for (auto& row : pt.alpha)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("alpha needs m columns");
    for (auto& row : pt.beta)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("beta needs n columns");
}

inline bool is_split(const ModuliPoint& pt) { return static_cast<int>(rank(pt.alpha)) == static_cast<int>(pt.alpha.size()); }

inline ModuliPoint make_point(const QMat& alpha, const QMat& beta) { return {alpha, beta}; }

// W_a = Lambda^{m-a} P^v in increasing-subset basis.
inline QuiverRep build_rep(const ModuliPoint& pt)
{
    int m = static_cast<int>(pt.alpha.size()) + 1;
    int n = pt.beta.empty() ? 0 : static_cast<int>(pt.beta[0].size());
    check_point(pt, m, n);
    if (!is_split(pt)) throw std::invalid_argument("alpha is not a split monomorphism");
    QuiverRep rep;
    rep.m = m;
    rep.n = n;
    for (int a = 1; a <= m; ++a) rep.dims.push_back(static_cast<std::size_t>(binom(m - 1, m - a)));
    rep.lambda.assign(m, std::vector<QMat>(m + 1));
    rep.g.assign(n, std::vector<QMat>(m + 1));
    for (int a = 1; a <= m; ++a) {
        auto src = subsets(m - 1, m - a);
        if (a >= 2) {
            auto tgt = subsets(m - 1, m - a + 1);
            for (int i = 1; i <= m; ++i) {
                QMat x = zero_map(tgt.size(), src.size());
                for (std::size_t c = 0; c < src.size(); ++c)
                    for (int k = 1; k <= m - 1; ++k) {
                        if (sgn(pt.alpha[k - 1][i - 1]) == 0) continue;
                        auto [s, u] = left_insert(src[c], k);
                        if (s != 0) x[index_of_subset(tgt, u)][c] += pt.alpha[k - 1][i - 1] * s;
                    }
                rep.lambda[i - 1][a] = std::move(x);
            }
        }
        if (a <= m - 1) {
            auto tgt = subsets(m - 1, m - a - 1);
            for (int j = 1; j <= n; ++j) {
                QMat x = zero_map(tgt.size(), src.size());
                for (std::size_t c = 0; c < src.size(); ++c)
                    for (int k : src[c]) {
                        if (sgn(pt.beta[k - 1][j - 1]) == 0) continue;
                        auto [s, u] = left_remove(src[c], k);
                        x[index_of_subset(tgt, u)][c] += pt.beta[k - 1][j - 1] * s;
                    }
                rep.g[j - 1][a] = std::move(x);
            }
        }
    }
    return rep;
}

// Action of lambda_i g_j + g_j lambda_i on W_a, boundary terms omitted.
inline QMat anticommutator(const QuiverRep& rep, int i, int j, int a)
{
    std::size_t d = rep.dim(a);
    QMat z = zero_map(d, d);
    if (a <= rep.m - 1) z = add_maps(z, compose(rep.lambda[i - 1][a + 1], rep.g[j - 1][a], rep.dim(a + 1)));
    if (a >= 2) z = add_maps(z, compose(rep.g[j - 1][a - 1], rep.lambda[i - 1][a], rep.dim(a - 1)));
    return z;
}

inline std::vector<std::string> check_relations(const QuiverRep& rep)
{
    std::vector<std::string> bad;
    int m = rep.m, n = rep.n;
    auto tag = [](const char* what, int x, int y, int a) {
        return std::string(what) + "(" + std::to_string(x) + "," + std::to_string(y) + ") at vertex " + std::to_string(a);
    };
    for (int a = 3; a <= m; ++a)
        for (int i = 1; i <= m; ++i)
            for (int k = i; k <= m; ++k) {
                QMat s = add_maps(compose(rep.lambda[i - 1][a - 1], rep.lambda[k - 1][a], rep.dim(a - 1)),
                                  compose(rep.lambda[k - 1][a - 1], rep.lambda[i - 1][a], rep.dim(a - 1)));
                if (!is_zero_matrix(s)) bad.push_back(tag("lambda anticommutator", i, k, a));
            }
    for (int a = 1; a <= m - 2; ++a)
        for (int j = 1; j <= n; ++j)
            for (int l = j; l <= n; ++l) {
                QMat s = add_maps(compose(rep.g[j - 1][a + 1], rep.g[l - 1][a], rep.dim(a + 1)),
                                  compose(rep.g[l - 1][a + 1], rep.g[j - 1][a], rep.dim(a + 1)));
                if (!is_zero_matrix(s)) bad.push_back(tag("g anticommutator", j, l, a));
            }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<QMat> z;
            for (int a = 1; a <= m; ++a) z.push_back(anticommutator(rep, i, j, a));
            for (int a = 2; a <= m; ++a)
                for (int k = 1; k <= m; ++k)
                    if (compose(z[a - 2], rep.lambda[k - 1][a], rep.dim(a - 1)) !=
                        compose(rep.lambda[k - 1][a], z[a - 1], rep.dim(a)))
                        bad.push_back(tag("x central vs lambda", i, j, a) + " arrow " + std::to_string(k));
            for (int a = 1; a <= m - 1; ++a)
                for (int l = 1; l <= n; ++l)
                    if (compose(z[a], rep.g[l - 1][a], rep.dim(a + 1)) != compose(rep.g[l - 1][a], z[a - 1], rep.dim(a)))
                        bad.push_back(tag("x central vs g", i, j, a) + " arrow " + std::to_string(l));
        }
    return bad;
}

// The m x n matrix (a_ij) when every x_ij acts on every vertex as a_ij times the identity.
inline std::optional<QMat> scalar_action(const QuiverRep& rep)
{
    QMat s = zero_matrix(rep.m, rep.n);
    for (int i = 1; i <= rep.m; ++i)
        for (int j = 1; j <= rep.n; ++j) {
            bool have = false;
            for (int a = 1; a <= rep.m; ++a) {
                QMat z = anticommutator(rep, i, j, a);
                std::size_t d = rep.dim(a);
                if (d == 0) continue;
                Q c = z[0][0];
                if (have && c != s[i - 1][j - 1]) return std::nullopt;
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t k = 0; k < d; ++k)
                        if (z[r][k] != (r == k ? c : Q(0))) return std::nullopt;
                s[i - 1][j - 1] = c;
                have = true;
            }
        }
    return s;
}

// alpha^T beta: the composite K -> P (x) P^v -> F (x) G^v.
inline QMat associated_matrix(const ModuliPoint& pt)
{
    return matmul(transpose(pt.alpha), pt.beta, pt.alpha.size());
}

// Gauge fix under GL(P): the pivot columns of alpha become the identity.
inline ModuliPoint normalize_point(const ModuliPoint& pt)
{
    Echelon e = rref(pt.alpha);
    if (e.pivots.size() != pt.alpha.size()) throw std::invalid_argument("alpha is not a split monomorphism");
    std::size_t p = pt.alpha.size();
    QMat block = zero_matrix(p, p);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t k = 0; k < p; ++k) block[r][k] = pt.alpha[r][e.pivots[k]];
    QMat inv = inverse(block);
    return {matmul(inv, pt.alpha), matmul(transpose(block), pt.beta)};
}

// Vertex spaces reachable from W_m (generation) and detected by paths into W_m (cogeneration).
inline std::vector<QMat> generated_from_top(const QuiverRep& rep)
{
    int m = rep.m;
    std::vector<QMat> span(m + 1);
    span[m] = identity_matrix(rep.dim(m));   // columns span the subspace, stored as rows for rref
    for (int a = m - 1; a >= 1; --a) {
        QMat rows;
        if (span[a + 1].empty()) continue;
        for (int i = 1; i <= m; ++i) {
            QMat img = transpose(compose(rep.lambda[i - 1][a + 1], transpose(span[a + 1]), rep.dim(a + 1)));
            for (auto& r : img) rows.push_back(r);
        }
        span[a] = rows.empty() ? QMat{} : rref(rows).rows;
    }
    return span;
}

inline bool is_generated_by_top(const QuiverRep& rep)
{
    auto span = generated_from_top(rep);
    for (int a = 1; a <= rep.m; ++a)
        if (span[a].size() != rep.dim(a)) return false;
    return true;
}

inline bool is_cogenerated_by_top(const QuiverRep& rep)
{
    int m = rep.m;
    std::vector<QMat> fun(m + 1);
    fun[m] = identity_matrix(rep.dim(m));
    bool changed = true;
    auto grow = [&](int a, const QMat& extra) {
        QMat all = fun[a];
        for (auto& r : extra) all.push_back(r);
        QMat red = all.empty() ? QMat{} : rref(all).rows;
        if (red.size() != fun[a].size()) {
            fun[a] = red;
            changed = true;
        }
    };
    while (changed) {
        changed = false;
        for (int a = 1; a <= m; ++a) {
            if (a + 1 <= m && !fun[a + 1].empty())
                for (int j = 1; j <= rep.n; ++j) grow(a, matmul(fun[a + 1], rep.g[j - 1][a], rep.dim(a + 1)));
            if (a - 1 >= 1 && !fun[a - 1].empty())
                for (int i = 1; i <= m; ++i) grow(a, matmul(fun[a - 1], rep.lambda[i - 1][a], rep.dim(a - 1)));
        }
    }
    for (int a = 1; a <= m; ++a)
        if (fun[a].size() != rep.dim(a)) return false;
    return true;
}

// A rep generated by W_m is simple iff no nonzero subrepresentation avoids W_m.
inline bool is_simple(const QuiverRep& rep) { return is_generated_by_top(rep) && is_cogenerated_by_top(rep); }

struct Reconstruction {
    ModuliPoint point;
    std::vector<QMat> iso;   // iso[a]: W_a of build_rep(point) -> W_a of the input
};

inline Reconstruction reconstruct(const QuiverRep& rep)
{
    int m = rep.m, n = rep.n;
    if (m < 2 || rep.dim(m) != 1) throw std::invalid_argument("reconstruct: top vertex must be one-dimensional");
    auto A = scalar_action(rep);
    if (!A) throw std::invalid_argument("reconstruct: the x_ij do not act as scalars");
    QMat pi = zero_matrix(rep.dim(m - 1), m);
    for (int i = 1; i <= m; ++i)
        for (std::size_t r = 0; r < rep.dim(m - 1); ++r) pi[r][i - 1] = rep.lambda[i - 1][m][r][0];
    Echelon e = rref(pi);
    if (static_cast<int>(e.pivots.size()) != m - 1) throw std::invalid_argument("reconstruct: rep not generated by W_m");
    std::vector<int> J;
    for (auto p : e.pivots) J.push_back(static_cast<int>(p) + 1);
    QMat block = zero_matrix(m - 1, m - 1);
    for (int r = 0; r < m - 1; ++r)
        for (int k = 0; k < m - 1; ++k) block[r][k] = pi[r][J[k] - 1];
    Reconstruction out;
    out.point.alpha = matmul(inverse(block), pi);
    out.point.beta = zero_matrix(m - 1, n);
    for (int k = 0; k < m - 1; ++k) out.point.beta[k] = (*A)[J[k] - 1];
    out.iso.assign(m + 1, {});
    for (int a = 1; a <= m; ++a) {
        auto basis = subsets(m - 1, m - a);
        QMat iso = zero_matrix(rep.dim(a), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            QMat v = identity_matrix(1);
            int at = m;
            for (auto it = basis[c].rbegin(); it != basis[c].rend(); ++it) {
                v = matmul(rep.lambda[J[*it - 1] - 1][at], v, rep.dim(at));
                --at;
            }
            for (std::size_t r = 0; r < rep.dim(a); ++r) iso[r][c] = v[r][0];
        }
        if (rank(iso) != rep.dim(a)) throw std::invalid_argument("reconstruct: rep not generated by W_m");
        out.iso[a] = std::move(iso);
    }
    return out;
}

// True when iso intertwines build_rep(point) with rep on every arrow.
inline bool verify_reconstruction(const QuiverRep& rep, const Reconstruction& r)
{
    QuiverRep w = build_rep(r.point);
    for (int a = 1; a <= rep.m; ++a) {
        if (a >= 2)
            for (int i = 1; i <= rep.m; ++i)
                if (matmul(rep.lambda[i - 1][a], r.iso[a], rep.dim(a)) != matmul(r.iso[a - 1], w.lambda[i - 1][a], w.dim(a - 1)))
                    return false;
        if (a <= rep.m - 1)
            for (int j = 1; j <= rep.n; ++j)
                if (matmul(rep.g[j - 1][a], r.iso[a], rep.dim(a)) != matmul(r.iso[a + 1], w.g[j - 1][a], w.dim(a + 1)))
                    return false;
    }
    return true;
}

// Small-integer random point; about a third of the betas are rank deficient.
inline ModuliPoint random_point(int m, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-3, 3);
    ModuliPoint pt;
    do {
        pt.alpha = zero_matrix(m - 1, m);
        for (auto& row : pt.alpha)
            for (auto& x : row) x = entry(rng);
    } while (!is_split(pt));
    pt.beta = zero_matrix(m - 1, n);
    for (auto& row : pt.beta)
        for (auto& x : row) x = entry(rng);
    if (m >= 2 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        std::size_t r = std::uniform_int_distribution<std::size_t>(0, m - 2)(rng);
        Q c = entry(rng);
        for (int j = 0; j < n; ++j) pt.beta[r][j] = r + 1 < static_cast<std::size_t>(m - 1) ? c * pt.beta[r + 1][j] : Q(0);
    }
    return pt;
}

} // namespace detsing
