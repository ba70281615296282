#pragma once

#include "matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>

namespace detsing {

// A finitely generated Z^{m+n}-graded S-module, known through its weight pieces and variable actions.
class WeightedModule {
public:
    explicit WeightedModule(const RingContext& ctx) : ctx_(ctx) {}
    virtual ~WeightedModule() = default;

    const RingContext& ctx() const { return ctx_; }
    virtual std::size_t dim(const Weight& w) = 0;
    // Matrix (dim(w + wt x_v) x dim(w)) of multiplication by x_v.
    virtual QMat multiply(int v, const Weight& w) = 0;
    // A superset of the weights of degree d that can carry a nonzero piece.
    virtual std::vector<Weight> weights_of_degree(int d) = 0;
    // Pieces are invariant under permuting F-coordinates and G-coordinates separately.
    virtual bool symmetric() const { return false; }

    Weight variable_weight(int v) const
    {
        Weight w = zero_weight(ctx_);
        w[ctx_.row_of(v) - 1] -= 1;
        w[ctx_.m + ctx_.col_of(v) - 1] += 1;
        return w;
    }

    // Multiplication by a monomial, composed from single variables.
    QMat multiply_monomial(const Exps& e, const Weight& w)
    {
        auto key = std::make_pair(e, w);
        auto it = mono_cache_.find(key);
        if (it != mono_cache_.end()) return it->second;
        int v = 0;
        while (v < ctx_.nvars() && e[v] == 0) ++v;
        QMat r;
        if (v == ctx_.nvars()) r = identity_matrix(dim(w));
        else {
            Exps rest = e;
            --rest[v];
            QMat first = multiply(v, w);
            r = matmul(multiply_monomial(rest, w + variable_weight(v)), first, first.size());
        }
        return mono_cache_.emplace(key, std::move(r)).first->second;
    }

    // Entry-wise polynomial p acting from weight w; p must have a single torus weight.
    QMat multiply_poly(const Poly& p, const Weight& w, const Weight& pw)
    {
        std::size_t rows = dim(w + pw), cols = dim(w);
        QMat r = zero_matrix(rows, cols);
        if (rows == 0 || cols == 0) return r;
        for (auto& [e, c] : p.terms()) {
            QMat t = multiply_monomial(e, w);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (sgn(t[i][j]) != 0) r[i][j] += c * t[i][j];
        }
        return r;
    }

private:
    RingContext ctx_;
    std::map<std::pair<Exps, Weight>, QMat> mono_cache_;
};

inline Weight canonical_weight(const RingContext& ctx, Weight w)
{
    std::sort(w.begin(), w.begin() + ctx.m);
    std::sort(w.begin() + ctx.m, w.end());
    return w;
}

// Weight of a homogeneous polynomial entry, or nullopt if it mixes weights.
inline std::optional<Weight> poly_weight(const RingContext& ctx, const Poly& p)
{
    std::optional<Weight> w;
    for (auto& [e, c] : p.terms()) {
        Weight x = weight_of_monomial(ctx, e);
        if (w && *w != x) return std::nullopt;
        w = x;
    }
    return w;
}

// Cokernel of a weighted presentation matrix (rows = generators, columns = relations).
class CokernelModule : public WeightedModule {
public:
    CokernelModule(const PolyMatrix& pres, bool symmetric = false)
        : WeightedModule(pres.ctx), pres_(pres), symmetric_(symmetric), cols_(detail::columns_of(pres_))
    {
        if (!pres.source.has_weights() || !pres.target.has_weights())
            throw std::invalid_argument("oracle modules need torus weights on all generators");
    }

    std::size_t dim(const Weight& w) override { return piece(w).free.size(); }
    bool symmetric() const override { return symmetric_; }

    QMat multiply(int v, const Weight& w) override
    {
        const Piece& src = piece(w);
        Weight w2 = w + variable_weight(v);
        const Piece& tgt = piece(w2);
        QMat r = zero_matrix(tgt.free.size(), src.free.size());
        for (std::size_t k = 0; k < src.free.size(); ++k) {
            auto [g, e] = src.amb[src.free[k]];
            ++e[v];
            auto it = tgt.index.find({g, e});
            if (it == tgt.index.end()) throw std::logic_error("cokernel piece missing a shifted monomial");
            std::vector<Q> vec(tgt.amb.size());
            vec[it->second] = 1;
            reduce_against(tgt.rel, vec);
            for (std::size_t f = 0; f < tgt.free.size(); ++f) r[f][k] = vec[tgt.free[f]];
        }
        return r;
    }

    std::vector<Weight> weights_of_degree(int d) override
    {
        std::set<Weight> ws;
        for (auto& g : pres_.target.gens)
            for (auto& mw : monomial_weights_of_degree(ctx(), d - g.twist)) ws.insert(g.weight + mw);
        return {ws.begin(), ws.end()};
    }

    // Normal form (free coordinates) of sum_g p_g e_g at weight w, given as ambient coordinates.
    std::vector<Q> normal_form(const Weight& w, std::vector<Q> amb)
    {
        const Piece& pc = piece(w);
        reduce_against(pc.rel, amb);
        std::vector<Q> out(pc.free.size());
        for (std::size_t f = 0; f < pc.free.size(); ++f) out[f] = amb[pc.free[f]];
        return out;
    }

private:
    struct Piece {
        std::vector<std::pair<int, Exps>> amb;
        std::map<std::pair<int, Exps>, std::size_t> index;
        Echelon rel;
        std::vector<std::size_t> free;
    };

    const Piece& piece(const Weight& w)
    {
        auto it = pieces_.find(w);
        if (it != pieces_.end()) return it->second;
        Piece pc;
        for (std::size_t g = 0; g < pres_.target.rank(); ++g)
            for (auto& e : monomials_of_weight(ctx(), w - pres_.target.gens[g].weight)) {
                pc.index.emplace(std::make_pair(static_cast<int>(g), e), pc.amb.size());
                pc.amb.push_back({static_cast<int>(g), e});
            }
        QMat rels;
        if (!pc.amb.empty())
            for (std::size_t s = 0; s < pres_.source.rank(); ++s)
                for (auto& e : monomials_of_weight(ctx(), w - pres_.source.gens[s].weight)) {
                    std::vector<Q> row(pc.amb.size());
                    for (auto& [r, p] : cols_[s])
                        for (auto& [pe, pcoef] : p->terms()) {
                            Exps sum(e.size());
                            for (std::size_t k = 0; k < e.size(); ++k) sum[k] = static_cast<std::uint8_t>(e[k] + pe[k]);
                            auto jt = pc.index.find({r, sum});
                            if (jt == pc.index.end()) throw std::logic_error("presentation not weight-homogeneous");
                            row[jt->second] += pcoef;
                        }
                    rels.push_back(std::move(row));
                }
        pc.rel = rref(rels);
        std::vector<bool> piv(pc.amb.size(), false);
        for (auto p : pc.rel.pivots) piv[p] = true;
        for (std::size_t c = 0; c < pc.amb.size(); ++c)
            if (!piv[c]) pc.free.push_back(c);
        return pieces_.emplace(w, std::move(pc)).first->second;
    }

    PolyMatrix pres_;
    bool symmetric_;
    std::vector<std::vector<std::pair<int, const Poly*>>> cols_;
    std::map<Weight, Piece> pieces_;
};

// Hom_S(cok pres, N): generator images subject to the relations, graded by the shift weight.
class HomModule : public WeightedModule {
public:
    HomModule(const PolyMatrix& pres, std::shared_ptr<WeightedModule> target, bool symmetric = false)
        : WeightedModule(pres.ctx), pres_(pres), target_(std::move(target)), symmetric_(symmetric),
          cols_(detail::columns_of(pres_))
    {
        if (!pres.source.has_weights() || !pres.target.has_weights())
            throw std::invalid_argument("oracle modules need torus weights on all generators");
        for (auto& [rc, p] : pres.entries) {
            auto pw = poly_weight(pres.ctx, p);
            if (!pw || *pw != pres.source.gens[rc.second].weight - pres.target.gens[rc.first].weight)
                throw std::invalid_argument("presentation entry does not match generator weights");
        }
    }

    std::size_t dim(const Weight& w) override { return piece(w).basis.rows.size(); }
    bool symmetric() const override { return symmetric_; }

    QMat multiply(int v, const Weight& w) override
    {
        const Piece& src = piece(w);
        Weight w2 = w + variable_weight(v);
        const Piece& tgt = piece(w2);
        QMat r = zero_matrix(tgt.basis.rows.size(), src.basis.rows.size());
        if (src.basis.rows.empty()) return r;
        std::vector<QMat> blocks;
        for (std::size_t g = 0; g < pres_.target.rank(); ++g) blocks.push_back(target_->multiply(v, pres_.target.gens[g].weight + w));
        for (std::size_t k = 0; k < src.basis.rows.size(); ++k) {
            std::vector<Q> out(tgt.total, Q(0));
            for (std::size_t g = 0; g < pres_.target.rank(); ++g) {
                const QMat& b = blocks[g];
                for (std::size_t i = 0; i < b.size(); ++i) {
                    Q s = 0;
                    for (std::size_t j = 0; j < b[i].size(); ++j)
                        if (sgn(b[i][j]) != 0) s += b[i][j] * src.basis.rows[k][src.offset[g] + j];
                    out[tgt.offset[g] + i] = s;
                }
            }
            for (std::size_t p = 0; p < tgt.basis.pivots.size(); ++p) r[p][k] = out[tgt.basis.pivots[p]];
        }
        return r;
    }

    std::vector<Weight> weights_of_degree(int d) override
    {
        std::set<Weight> ws;
        for (auto& g : pres_.target.gens)
            for (auto& w : target_->weights_of_degree(g.twist + d)) ws.insert(w - g.weight);
        return {ws.begin(), ws.end()};
    }

private:
    struct Piece {
        std::vector<std::size_t> offset;
        std::size_t total = 0;
        Echelon basis;   // kernel basis in rref
    };

    const Piece& piece(const Weight& w)
    {
        auto it = pieces_.find(w);
        if (it != pieces_.end()) return it->second;
        Piece pc;
        for (std::size_t g = 0; g < pres_.target.rank(); ++g) {
            pc.offset.push_back(pc.total);
            pc.total += target_->dim(pres_.target.gens[g].weight + w);
        }
        if (pc.total > 0) {
            QMat eqs;
            for (std::size_t r = 0; r < pres_.source.rank(); ++r) {
                Weight rw = pres_.source.gens[r].weight + w;
                std::size_t rd = target_->dim(rw);
                if (rd == 0 || cols_[r].empty()) continue;
                QMat block = zero_matrix(rd, pc.total);
                for (auto& [g, p] : cols_[r]) {
                    Weight gw = pres_.target.gens[g].weight + w;
                    QMat mp = target_->multiply_poly(*p, gw, pres_.source.gens[r].weight - pres_.target.gens[g].weight);
                    for (std::size_t i = 0; i < rd; ++i)
                        for (std::size_t j = 0; j < mp[i].size(); ++j) block[i][pc.offset[g] + j] += mp[i][j];
                }
                for (auto& row : block) eqs.push_back(std::move(row));
            }
            QMat ker = eqs.empty() ? identity_matrix(pc.total) : nullspace(eqs, pc.total);
            pc.basis = rref(ker);
        }
        return pieces_.emplace(w, std::move(pc)).first->second;
    }

    PolyMatrix pres_;
    std::shared_ptr<WeightedModule> target_;
    bool symmetric_;
    std::vector<std::vector<std::pair<int, const Poly*>>> cols_;
    std::map<Weight, Piece> pieces_;
};

// Groups the weights of degree d into symmetry classes when allowed; returns (representative, multiplicity).
inline std::vector<std::pair<Weight, long>> weight_classes(WeightedModule& mod, const std::vector<Weight>& ws)
{
    std::map<Weight, long> cls;
    for (auto& w : ws) cls[mod.symmetric() ? canonical_weight(mod.ctx(), w) : w] += 1;
    return {cls.begin(), cls.end()};
}

inline long hilbert_function(WeightedModule& mod, int d)
{
    if (d < 0) return 0;
    long s = 0;
    for (auto& [w, mult] : weight_classes(mod, mod.weights_of_degree(d))) s += mult * static_cast<long>(mod.dim(w));
    return s;
}

inline PolyMatrix lambda_phi(const RingContext& ctx, int a) { return exterior_power_map(generic_matrix(ctx), a); }

inline std::shared_ptr<CokernelModule> module_M(const RingContext& ctx, int a)
{
    return std::make_shared<CokernelModule>(lambda_phi(ctx, a), true);
}

inline std::shared_ptr<HomModule> hom_module(const RingContext& ctx, int a, int b)
{
    return std::make_shared<HomModule>(lambda_phi(ctx, a), module_M(ctx, b), true);
}

inline long hilbert_M(const RingContext& ctx, int a, int d)
{
    if (d < 0) return 0;
    PolyMatrix p = lambda_phi(ctx, a);
    return cokernel_hilbert(p, d);
}

inline long hilbert_hom(const RingContext& ctx, int a, int b, int d)
{
    auto h = hom_module(ctx, a, b);
    return hilbert_function(*h, d);
}

// Presentation of M_a with one redundant generator and one redundant relation.
inline PolyMatrix redundant_presentation(const RingContext& ctx, int a)
{
    PolyMatrix p = lambda_phi(ctx, a);
    int nv = ctx.nvars();
    int x11 = ctx.var(1, 1), x12 = ctx.var(1, std::min(2, ctx.n));
    Weight w11 = zero_weight(ctx), w12 = zero_weight(ctx);
    w11[0] -= 1;
    w11[ctx.m] += 1;
    w12[0] -= 1;
    w12[ctx.m + std::min(2, ctx.n) - 1] += 1;
    int gnew = static_cast<int>(p.target.rank());
    const Generator f0 = p.target.gens[0];
    p.target.gens.push_back({"f'", f0.twist + 1, f0.weight + w11});
    int rnew = static_cast<int>(p.source.rank());
    p.source.gens.push_back({"r'", f0.twist + 1, f0.weight + w11});
    p.set(gnew, rnew, Poly::constant(nv, 1));
    p.set(0, rnew, Poly::variable(nv, x11, -1));
    const Generator s0 = p.source.gens[0];
    p.source.gens.push_back({"r''", s0.twist + 1, s0.weight + w12});
    int rdup = static_cast<int>(p.source.rank()) - 1;
    for (std::size_t g = 0; g < static_cast<std::size_t>(gnew); ++g) {
        Poly e = p.at(static_cast<int>(g), 0);
        if (!e.is_zero()) p.set(static_cast<int>(g), rdup, e * Poly::variable(nv, x12));
    }
    return p;
}

inline long hilbert_hom_redundant(const RingContext& ctx, int a, int b, int d)
{
    HomModule h(redundant_presentation(ctx, a), module_M(ctx, b), false);
    return hilbert_function(h, d);
}

// ---------------------------------------------------------------- Betti numbers via Koszul homology

struct BettiNumbers {
    std::map<std::pair<int, int>, long> values;   // (i, degree) -> beta
    int max_i = 0;
    int degree_bound = 0;
    bool bound_reached = false;                   // some beta is nonzero at the bound

    long at(int i, int d) const
    {
        auto it = values.find({i, d});
        return it == values.end() ? 0 : it->second;
    }
    long total(int i) const
    {
        long s = 0;
        for (auto& [k, v] : values)
            if (k.first == i) s += v;
        return s;
    }
    int projective_dimension() const
    {
        int pd = -1;
        for (auto& [k, v] : values)
            if (v != 0) pd = std::max(pd, k.first);
        return pd;
    }
    std::map<int, long> row(int i) const
    {
        std::map<int, long> r;
        for (auto& [k, v] : values)
            if (k.first == i && v != 0) r[k.second] = v;
        return r;
    }
};

namespace detail {

struct KoszulPiece {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;   // (subset index, offset)
    std::size_t total = 0;
};

inline KoszulPiece koszul_piece(WeightedModule& mod, const std::vector<IndexSet>& subs, const std::vector<Weight>& sw,
                                const Weight& w)
{
    KoszulPiece kp;
    for (std::size_t s = 0; s < subs.size(); ++s) {
        std::size_t d = mod.dim(w - sw[s]);
        if (d == 0) continue;
        kp.blocks.push_back({s, kp.total});
        kp.total += d;
    }
    return kp;
}

struct KoszulLevel {
    std::vector<IndexSet> subs;   // 1-based variable indices
    std::vector<Weight> weights;
};

inline KoszulLevel koszul_level(WeightedModule& mod, int i)
{
    KoszulLevel lv;
    lv.subs = subsets(mod.ctx().nvars(), i);
    for (auto& s : lv.subs) {
        Weight w = zero_weight(mod.ctx());
        for (int v : s) w = w + mod.variable_weight(v - 1);
        lv.weights.push_back(w);
    }
    return lv;
}

// Rank of d_i: K_i -> K_{i-1} at weight w.
inline std::size_t koszul_rank(WeightedModule& mod, const KoszulLevel& hi, const KoszulLevel& lo, const Weight& w)
{
    if (hi.subs.empty() || hi.subs[0].empty()) return 0;
    KoszulPiece src = koszul_piece(mod, hi.subs, hi.weights, w);
    KoszulPiece tgt = koszul_piece(mod, lo.subs, lo.weights, w);
    if (src.total == 0 || tgt.total == 0) return 0;
    std::map<std::size_t, std::size_t> toff;
    for (auto& [s, off] : tgt.blocks) toff[s] = off;
    QMat a = zero_matrix(src.total, tgt.total);   // transposed
    for (auto& [s, off] : src.blocks) {
        const IndexSet& S = hi.subs[s];
        Weight nw = w - hi.weights[s];
        for (std::size_t k = 0; k < S.size(); ++k) {
            IndexSet rest = S;
            rest.erase(rest.begin() + k);
            std::size_t ls = static_cast<std::size_t>(index_of_subset(lo.subs, rest));
            auto it = toff.find(ls);
            if (it == toff.end()) continue;
            QMat mult = mod.multiply(S[k] - 1, nw);
            int sign = k % 2 ? -1 : 1;
            for (std::size_t r = 0; r < mult.size(); ++r)
                for (std::size_t c = 0; c < mult[r].size(); ++c)
                    if (sgn(mult[r][c]) != 0) a[off + c][it->second + r] += sign * mult[r][c];
        }
    }
    return rank(a);
}

} // namespace detail

// beta_{i,d} = dim Tor_i(N, K)_d for 0 <= i <= max_i, d <= degree_bound.
inline BettiNumbers minimal_betti(WeightedModule& mod, int max_i, int degree_bound)
{
    BettiNumbers b;
    b.max_i = max_i;
    b.degree_bound = degree_bound;
    std::vector<detail::KoszulLevel> lv;
    for (int i = 0; i <= max_i + 1; ++i) lv.push_back(detail::koszul_level(mod, i));
    for (int i = 0; i <= max_i; ++i)
        for (int d = i; d <= degree_bound; ++d) {
            std::vector<Weight> ws;
            {
                std::set<Weight> all;
                for (auto& u : mod.weights_of_degree(d - i))
                    for (auto& sw : lv[i].weights) all.insert(u + sw);
                ws.assign(all.begin(), all.end());
            }
            long total = 0;
            for (auto& [w, mult] : weight_classes(mod, ws)) {
                auto kp = detail::koszul_piece(mod, lv[i].subs, lv[i].weights, w);
                if (kp.total == 0) continue;
                long dimk = static_cast<long>(kp.total);
                long r1 = i > 0 ? static_cast<long>(detail::koszul_rank(mod, lv[i], lv[i - 1], w)) : 0;
                long r2 = static_cast<long>(detail::koszul_rank(mod, lv[i + 1], lv[i], w));
                total += mult * (dimk - r1 - r2);
            }
            if (total != 0) {
                b.values[{i, d}] = total;
                if (d == degree_bound) b.bound_reached = true;
            }
        }
    return b;
}

// Hilbert function predicted by the Betti numbers, valid through the bound when beta_{max_i} vanishes there.
inline long betti_hilbert(const RingContext& ctx, const BettiNumbers& b, int d)
{
    long s = 0;
    for (auto& [k, v] : b.values) s += (k.first % 2 ? -1 : 1) * v * count_monomials(ctx.nvars(), d - k.second);
    return s;
}

} // namespace detsing
