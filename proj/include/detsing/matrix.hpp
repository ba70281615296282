#pragma once

#include "index_set.hpp"
#include "linalg.hpp"
#include "poly.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace detsing {

// Torus weight in Z^{m+n}: f_i -> (e_i,0), lambda_i -> (-e_i,0), g_j -> (0,e_j), x_ij -> (-e_i,e_j).
using Weight = std::vector<int>;

inline Weight zero_weight(const RingContext& ctx) { return Weight(ctx.m + ctx.n, 0); }

inline Weight weight_of_monomial(const RingContext& ctx, const Exps& e)
{
    Weight w = zero_weight(ctx);
    for (int v = 0; v < ctx.nvars(); ++v) {
        if (e[v] == 0) continue;
        w[ctx.row_of(v) - 1] -= e[v];
        w[ctx.m + ctx.col_of(v) - 1] += e[v];
    }
    return w;
}

inline Weight operator+(Weight a, const Weight& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
inline Weight operator-(Weight a, const Weight& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

// Degree carried by a weight: the G part.
inline int weight_degree(const RingContext& ctx, const Weight& w)
{
    int d = 0;
    for (int j = 0; j < ctx.n; ++j) d += w[ctx.m + j];
    return d;
}

// Monomials of weight w, i.e. contingency tables with row sums -w_F and column sums w_G.
inline std::vector<Exps> monomials_of_weight(const RingContext& ctx, const Weight& w)
{
    std::vector<Exps> out;
    std::vector<int> rows(ctx.m), cols(ctx.n);
    int rs = 0, cs = 0;
    for (int i = 0; i < ctx.m; ++i) {
        rows[i] = -w[i];
        if (rows[i] < 0) return out;
        rs += rows[i];
    }
    for (int j = 0; j < ctx.n; ++j) {
        cols[j] = w[ctx.m + j];
        if (cols[j] < 0) return out;
        cs += cols[j];
    }
    if (rs != cs) return out;
    Exps e(ctx.nvars(), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == ctx.nvars()) {
            out.push_back(e);
            return;
        }
        int i = ctx.row_of(v) - 1, j = ctx.col_of(v) - 1;
        if (j == ctx.n - 1) {
            int k = rows[i];
            if (k > cols[j]) return;
            e[v] = static_cast<std::uint8_t>(k);
            rows[i] -= k;
            cols[j] -= k;
            if (i < ctx.m - 1 || cols[j] == 0) self(self, v + 1);
            rows[i] += k;
            cols[j] += k;
            e[v] = 0;
            return;
        }
        int hi = std::min(rows[i], cols[j]);
        for (int k = hi; k >= 0; --k) {
            if (i == ctx.m - 1 && k != cols[j]) continue;
            e[v] = static_cast<std::uint8_t>(k);
            rows[i] -= k;
            cols[j] -= k;
            self(self, v + 1);
            rows[i] += k;
            cols[j] += k;
        }
        e[v] = 0;
    };
    rec(rec, 0);
    return out;
}

// Weights of all degree-d monomials: pairs of compositions.
inline std::vector<Weight> monomial_weights_of_degree(const RingContext& ctx, int d)
{
    std::vector<Weight> out;
    if (d < 0) return out;
    auto comps = [](int parts, int total) {
        std::vector<std::vector<int>> r;
        std::vector<int> c(parts, 0);
        auto rec = [&](auto&& self, int k, int left) -> void {
            if (k == parts - 1) {
                c[k] = left;
                r.push_back(c);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                c[k] = x;
                self(self, k + 1, left - x);
            }
        };
        rec(rec, 0, total);
        return r;
    };
    auto rc = comps(ctx.m, d), cc = comps(ctx.n, d);
    for (auto& r : rc)
        for (auto& c : cc) {
            Weight w = zero_weight(ctx);
            for (int i = 0; i < ctx.m; ++i) w[i] = -r[i];
            for (int j = 0; j < ctx.n; ++j) w[ctx.m + j] = c[j];
            out.push_back(std::move(w));
        }
    return out;
}

struct Generator {
    std::string label;
    int twist = 0;
    Weight weight;   // empty when no torus weight is attached
};

struct GradedFreeModule {
    std::vector<Generator> gens;
    std::size_t rank() const { return gens.size(); }
    bool has_weights() const
    {
        for (auto& g : gens)
            if (g.weight.empty()) return false;
        return true;
    }
    // Dimension of the degree-d piece.
    long piece_dim(const RingContext& ctx, int d) const
    {
        long s = 0;
        for (auto& g : gens) s += count_monomials(ctx.nvars(), d - g.twist);
        return s;
    }
    void append(const GradedFreeModule& o) { gens.insert(gens.end(), o.gens.begin(), o.gens.end()); }
};

struct PolyMatrix {
    RingContext ctx;
    GradedFreeModule source;   // columns
    GradedFreeModule target;   // rows
    std::map<std::pair<int, int>, Poly> entries;

    std::size_t rows() const { return target.rank(); }
    std::size_t cols() const { return source.rank(); }

    void set(int r, int c, const Poly& p)
    {
        if (p.is_zero()) entries.erase({r, c});
        else entries[{r, c}] = p;
    }
    void add(int r, int c, const Poly& p)
    {
        if (p.is_zero()) return;
        auto it = entries.find({r, c});
        if (it == entries.end()) entries.emplace(std::make_pair(r, c), p);
        else {
            it->second += p;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    Poly at(int r, int c) const
    {
        auto it = entries.find({r, c});
        return it == entries.end() ? Poly() : it->second;
    }
    // Entry (r,c) has degree twist(source c) - twist(target r).
    bool is_homogeneous() const
    {
        for (auto& [rc, p] : entries)
            if (!p.is_homogeneous_of(source.gens[rc.second].twist - target.gens[rc.first].twist)) return false;
        return true;
    }
    bool operator==(const PolyMatrix& o) const { return rows() == o.rows() && cols() == o.cols() && entries == o.entries; }
};

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    PolyMatrix r{a.ctx, b.source, a.target, {}};
    std::map<int, std::vector<std::pair<int, const Poly*>>> brows;
    for (auto& [rc, p] : b.entries) brows[rc.first].push_back({rc.second, &p});
    for (auto& [rc, p] : a.entries) {
        auto it = brows.find(rc.second);
        if (it == brows.end()) continue;
        for (auto& [c, q] : it->second) r.add(rc.first, c, p * *q);
    }
    return r;
}

inline PolyMatrix generic_matrix(const RingContext& ctx)
{
    PolyMatrix x{ctx, {}, {}, {}};
    for (int j = 1; j <= ctx.n; ++j) {
        Weight w = zero_weight(ctx);
        w[ctx.m + j - 1] = 1;
        x.source.gens.push_back({"g" + std::to_string(j), 1, w});
    }
    for (int i = 1; i <= ctx.m; ++i) {
        Weight w = zero_weight(ctx);
        w[i - 1] = 1;
        x.target.gens.push_back({"f" + std::to_string(i), 0, w});
    }
    for (int i = 1; i <= ctx.m; ++i)
        for (int j = 1; j <= ctx.n; ++j) x.set(i - 1, j - 1, Poly::variable(ctx.nvars(), ctx.var(i, j)));
    return x;
}

// Laplace expansion along the first row.
inline Poly poly_determinant(const std::vector<std::vector<Poly>>& a, int nvars)
{
    std::size_t t = a.size();
    if (t == 0) return Poly::constant(nvars, 1);
    if (t == 1) return a[0][0];
    Poly r;
    for (std::size_t c = 0; c < t; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        for (std::size_t i = 1; i < t; ++i) {
            std::vector<Poly> row;
            for (std::size_t j = 0; j < t; ++j)
                if (j != c) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        Poly term = a[0][c] * poly_determinant(sub, nvars);
        if (c % 2) r -= term;
        else r += term;
    }
    return r;
}

inline Poly minor(const RingContext& ctx, const IndexSet& rows, const IndexSet& cols)
{
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: size mismatch");
    if (!is_index_set(rows, ctx.m) || !is_index_set(cols, ctx.n)) throw std::out_of_range("minor: bad index set");
    std::vector<std::vector<Poly>> a;
    for (int i : rows) {
        std::vector<Poly> row;
        for (int j : cols) row.push_back(Poly::variable(ctx.nvars(), ctx.var(i, j)));
        a.push_back(std::move(row));
    }
    return poly_determinant(a, ctx.nvars());
}

inline std::string set_label(const std::vector<std::string>& names, const IndexSet& s)
{
    if (s.empty()) return "1";
    std::string r;
    for (std::size_t k = 0; k < s.size(); ++k) r += (k ? "^" : "") + names[s[k] - 1];
    return r;
}

// Matrix of the a-th exterior power in increasing-subset bases; entries are a x a minors.
inline PolyMatrix exterior_power_map(const PolyMatrix& mtx, int a)
{
    int p = static_cast<int>(mtx.cols()), q = static_cast<int>(mtx.rows());
    if (a < 0 || a > std::min(p, q)) throw std::out_of_range("exterior power out of range");
    auto src = subsets(p, a), tgt = subsets(q, a);
    std::vector<std::string> sn, tn;
    for (auto& g : mtx.source.gens) sn.push_back(g.label);
    for (auto& g : mtx.target.gens) tn.push_back(g.label);
    PolyMatrix r{mtx.ctx, {}, {}, {}};
    bool sw = mtx.source.has_weights(), tw = mtx.target.has_weights();
    for (auto& s : src) {
        Generator g{set_label(sn, s), 0, sw ? zero_weight(mtx.ctx) : Weight{}};
        for (int k : s) {
            g.twist += mtx.source.gens[k - 1].twist;
            if (sw) g.weight = g.weight + mtx.source.gens[k - 1].weight;
        }
        r.source.gens.push_back(g);
    }
    for (auto& t : tgt) {
        Generator g{set_label(tn, t), 0, tw ? zero_weight(mtx.ctx) : Weight{}};
        for (int k : t) {
            g.twist += mtx.target.gens[k - 1].twist;
            if (tw) g.weight = g.weight + mtx.target.gens[k - 1].weight;
        }
        r.target.gens.push_back(g);
    }
    for (std::size_t ci = 0; ci < src.size(); ++ci)
        for (std::size_t ri = 0; ri < tgt.size(); ++ri) {
            std::vector<std::vector<Poly>> sub;
            for (int i : tgt[ri]) {
                std::vector<Poly> row;
                for (int j : src[ci]) row.push_back(mtx.at(i - 1, j - 1));
                sub.push_back(std::move(row));
            }
            r.set(static_cast<int>(ri), static_cast<int>(ci), poly_determinant(sub, mtx.ctx.nvars()));
        }
    return r;
}

namespace detail {

struct PieceBasis {
    std::vector<std::pair<int, Exps>> elems;
    std::map<std::pair<int, Exps>, std::size_t> index;
    void add(int g, const Exps& e)
    {
        index.emplace(std::make_pair(g, e), elems.size());
        elems.push_back({g, e});
    }
};

inline std::vector<std::vector<std::pair<int, const Poly*>>> columns_of(const PolyMatrix& mtx)
{
    std::vector<std::vector<std::pair<int, const Poly*>>> cols(mtx.cols());
    for (auto& [rc, p] : mtx.entries) cols[rc.second].push_back({rc.first, &p});
    return cols;
}

inline std::size_t rank_on(const PolyMatrix& mtx, const PieceBasis& src, const PieceBasis& tgt,
                           const std::vector<std::vector<std::pair<int, const Poly*>>>& cols)
{
    if (src.elems.empty() || tgt.elems.empty()) return 0;
    QMat a = zero_matrix(src.elems.size(), tgt.elems.size());   // transposed: one row per source element
    for (std::size_t s = 0; s < src.elems.size(); ++s) {
        auto& [g, e] = src.elems[s];
        for (auto& [r, p] : cols[g])
            for (auto& [pe, pc] : p->terms()) {
                Exps sum(e.size());
                for (std::size_t k = 0; k < e.size(); ++k) sum[k] = static_cast<std::uint8_t>(e[k] + pe[k]);
                auto it = tgt.index.find({r, sum});
                if (it == tgt.index.end()) throw std::logic_error("graded piece: matrix not homogeneous");
                a[s][it->second] += pc;
            }
    }
    return rank(a);
}

} // namespace detail

// Rank of M on degree-d pieces; split into torus-weight blocks when weights are attached.
inline std::size_t graded_piece_rank(const PolyMatrix& mtx, int d)
{
    const RingContext& ctx = mtx.ctx;
    auto cols = detail::columns_of(mtx);
    if (mtx.source.has_weights() && mtx.target.has_weights()) {
        std::set<Weight> ws;
        for (auto& g : mtx.source.gens)
            for (auto& mw : monomial_weights_of_degree(ctx, d - g.twist)) ws.insert(g.weight + mw);
        std::size_t total = 0;
        for (auto& w : ws) {
            detail::PieceBasis src, tgt;
            for (std::size_t g = 0; g < mtx.source.rank(); ++g)
                for (auto& e : monomials_of_weight(ctx, w - mtx.source.gens[g].weight)) src.add(static_cast<int>(g), e);
            if (src.elems.empty()) continue;
            for (std::size_t g = 0; g < mtx.target.rank(); ++g)
                for (auto& e : monomials_of_weight(ctx, w - mtx.target.gens[g].weight)) tgt.add(static_cast<int>(g), e);
            total += detail::rank_on(mtx, src, tgt, cols);
        }
        return total;
    }
    detail::PieceBasis src, tgt;
    for (std::size_t g = 0; g < mtx.source.rank(); ++g)
        for (auto& e : monomials_of_degree(ctx.nvars(), d - mtx.source.gens[g].twist)) src.add(static_cast<int>(g), e);
    for (std::size_t g = 0; g < mtx.target.rank(); ++g)
        for (auto& e : monomials_of_degree(ctx.nvars(), d - mtx.target.gens[g].twist)) tgt.add(static_cast<int>(g), e);
    return detail::rank_on(mtx, src, tgt, cols);
}

// Dimension of the degree-d piece of the cokernel.
inline long cokernel_hilbert(const PolyMatrix& mtx, int d)
{
    return mtx.target.piece_dim(mtx.ctx, d) - static_cast<long>(graded_piece_rank(mtx, d));
}

struct EvaluatedMatrix {
    QMat values;
    std::size_t rank = 0;
};

inline EvaluatedMatrix evaluate_at_point(const PolyMatrix& mtx, const std::vector<Q>& point)
{
    if (static_cast<int>(point.size()) != mtx.ctx.nvars()) throw std::invalid_argument("point needs one value per variable");
    EvaluatedMatrix ev;
    ev.values = zero_matrix(mtx.rows(), mtx.cols());
    for (auto& [rc, p] : mtx.entries) ev.values[rc.first][rc.second] = p.evaluate(point);
    ev.rank = rank(ev.values);
    return ev;
}

} // namespace detsing
