#pragma once

#include "matrix.hpp"

#include <mutex>
#include <random>
#include <tuple>

namespace detsing {

// Sign ledger
//   basis element (J, L) of an element is the exterior monomial g_J ^ lambda_L, both sets increasing;
//   d^R_A: right contractions of g_{a_t}, ..., g_{a_1} in that order; d^L_B: left contractions of lambda_{b_t}, ..., lambda_{b_1};
//   Delta^(t)(g_J (x) lambda_L) = sum_{|A|=|B|=t} [B|A] d^R_A g_J (x) d^L_B lambda_L, [B|A] the minor with rows B, columns A;
//   u * v contracts the g-part of u against the lambda-part of v with exactly these signs (no (-1)^t);
//   x_ij = lambda_i g_j + g_j lambda_i, i a row (lambda) index and j a column (g) index.

inline int parity_sign(long k) { return k % 2 ? -1 : 1; }

inline const Poly& cached_minor(const RingContext& ctx, const IndexSet& rows, const IndexSet& cols)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, IndexSet, IndexSet>, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(ctx.m, ctx.n, rows, cols);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, minor(ctx, rows, cols)).first;
    return it->second;
}

struct DeltaTerm {
    Poly coeff;
    IndexSet g;
    IndexSet lambda;
};

inline std::vector<DeltaTerm> delta_terms(const RingContext& ctx, int t, const IndexSet& gs, const IndexSet& ls)
{
    std::vector<DeltaTerm> out;
    int qg = static_cast<int>(gs.size()), ql = static_cast<int>(ls.size());
    if (t < 0 || t > qg || t > ql) return out;
    int tri = parity_sign(static_cast<long>(t) * (t - 1) / 2);
    for (auto& ai : subsets(qg, t)) {
        IndexSet A;
        for (int k : ai) A.push_back(gs[k - 1]);
        IndexSet J = set_minus(gs, A);
        int s1 = shuffle_sign(J, A);
        for (auto& bi : subsets(ql, t)) {
            IndexSet B;
            for (int k : bi) B.push_back(ls[k - 1]);
            IndexSet L = set_minus(ls, B);
            int s2 = shuffle_sign(B, L);
            out.push_back({cached_minor(ctx, B, A) * Q(s1 * s2 * tri), J, L});
        }
    }
    return out;
}

struct CliffordElement {
    RingContext ctx;
    std::map<std::pair<IndexSet, IndexSet>, Poly> terms;

    static CliffordElement zero(const RingContext& c) { return {c, {}}; }
    static CliffordElement scalar(const RingContext& c, const Poly& p)
    {
        CliffordElement e{c, {}};
        e.add({}, {}, p);
        return e;
    }
    static CliffordElement one(const RingContext& c) { return scalar(c, Poly::constant(c.nvars(), 1)); }
    static CliffordElement lambda(const RingContext& c, int i)
    {
        CliffordElement e{c, {}};
        e.add({}, {i}, Poly::constant(c.nvars(), 1));
        return e;
    }
    static CliffordElement g(const RingContext& c, int j)
    {
        CliffordElement e{c, {}};
        e.add({j}, {}, Poly::constant(c.nvars(), 1));
        return e;
    }
    // Exterior monomial g_J ^ lambda_L.
    static CliffordElement monomial(const RingContext& c, const IndexSet& gs, const IndexSet& ls, const Q& coeff = 1)
    {
        CliffordElement e{c, {}};
        e.add(gs, ls, Poly::constant(c.nvars(), coeff));
        return e;
    }

    void add(const IndexSet& gs, const IndexSet& ls, const Poly& p)
    {
        if (p.is_zero()) return;
        auto key = std::make_pair(gs, ls);
        auto it = terms.find(key);
        if (it == terms.end()) terms.emplace(key, p);
        else {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    CliffordElement& operator+=(const CliffordElement& o)
    {
        for (auto& [k, p] : o.terms) add(k.first, k.second, p);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o)
    {
        for (auto& [k, p] : o.terms) add(k.first, k.second, -p);
        return *this;
    }
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    bool operator==(const CliffordElement& o) const { return terms == o.terms; }
};

inline CliffordElement star_multiply(const CliffordElement& u, const CliffordElement& v)
{
    CliffordElement r{u.ctx, {}};
    for (auto& [ku, cu] : u.terms) {
        const IndexSet& J = ku.first;
        const IndexSet& L = ku.second;
        int su = parity_sign(static_cast<long>(J.size()) * L.size());
        for (auto& [kv, cv] : v.terms) {
            const IndexSet& J2 = kv.first;
            const IndexSet& L2 = kv.second;
            int sv = parity_sign(static_cast<long>(J2.size()) * L2.size());
            Poly base = cu * cv;
            int tmax = static_cast<int>(std::min(J.size(), L2.size()));
            for (int t = 0; t <= tmax; ++t)
                for (auto& d : delta_terms(u.ctx, t, J, L2)) {
                    // (lambda_L ^ g_JA) ^ (lambda_LB ^ g_J2)
                    int s = su * sv * parity_sign(static_cast<long>(d.g.size()) * d.lambda.size());
                    int sl = shuffle_sign(L, d.lambda);
                    int sg = shuffle_sign(d.g, J2);
                    if (sl == 0 || sg == 0) continue;
                    IndexSet Ln = set_union(L, d.lambda), Jn = set_union(d.g, J2);
                    s *= sl * sg * parity_sign(static_cast<long>(Ln.size()) * Jn.size());
                    r.add(Jn, Ln, base * d.coeff * Q(s));
                }
        }
    }
    return r;
}

// Free module on g_J (x) lambda_L, |J| = qg, |L| = ql; twist qg, weight (-e_L, e_J).
inline GradedFreeModule exterior_module(const RingContext& ctx, int qg, int ql)
{
    GradedFreeModule mod;
    for (auto& J : subsets(ctx.n, qg))
        for (auto& L : subsets(ctx.m, ql)) {
            Weight w = zero_weight(ctx);
            for (int i : L) w[i - 1] -= 1;
            for (int j : J) w[ctx.m + j - 1] += 1;
            mod.gens.push_back({"g" + index_label(J) + "⊗λ" + index_label(L), qg, w});
        }
    return mod;
}

inline int exterior_index(const RingContext& ctx, const IndexSet& J, const IndexSet& L)
{
    int ql = static_cast<int>(L.size());
    int iJ = index_of_subset(subsets(ctx.n, static_cast<int>(J.size())), J);
    int iL = index_of_subset(subsets(ctx.m, ql), L);
    return iJ * static_cast<int>(binom(ctx.m, ql)) + iL;
}

// Writes Delta^(t) from block (qg, ql) at column offset into the matrix at row offset, scaled.
inline void write_delta(PolyMatrix& mtx, int row_off, int col_off, int t, int qg, int ql, const Q& scale = 1)
{
    const RingContext& ctx = mtx.ctx;
    auto Js = subsets(ctx.n, qg), Ls = subsets(ctx.m, ql);
    int col = col_off;
    for (auto& J : Js)
        for (auto& L : Ls) {
            for (auto& d : delta_terms(ctx, t, J, L))
                mtx.add(row_off + exterior_index(ctx, d.g, d.lambda), col, d.coeff * scale);
            ++col;
        }
}

inline PolyMatrix delta_matrix(const RingContext& ctx, int t, int qg, int ql)
{
    if (qg < 0 || ql < 0 || qg > ctx.n || ql > ctx.m) throw std::out_of_range("delta_matrix: bidegree out of range");
    if (t < 0 || t > std::min({qg, ql, ctx.m, ctx.n})) throw std::out_of_range("delta_matrix: t out of range");
    PolyMatrix mtx{ctx, exterior_module(ctx, qg, ql), exterior_module(ctx, qg - t, ql - t), {}};
    write_delta(mtx, 0, 0, t, qg, ql);
    return mtx;
}

// ---------------------------------------------------------------- paths

struct Letter {
    bool is_g = false;
    int index = 0;
    auto operator<=>(const Letter&) const = default;
};

inline Letter lam(int i) { return {false, i}; }
inline Letter gen(int j) { return {true, j}; }

using Word = std::vector<Letter>;   // written order: the rightmost letter acts first

struct PathWord {
    int start = 1;
    Word letters;

    int end() const
    {
        int v = start;
        for (auto& l : letters) v += l.is_g ? 1 : -1;
        return v;
    }
    // Vertices visited, in traversal order.
    std::vector<int> vertices() const
    {
        std::vector<int> vs{start};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) vs.push_back(vs.back() + (it->is_g ? 1 : -1));
        return vs;
    }
    bool stays_in(int m) const
    {
        for (int v : vertices())
            if (v < 1 || v > m) return false;
        return true;
    }
};

inline std::string word_string(const Word& w)
{
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::string(w[k].is_g ? "g" : "λ") + std::to_string(w[k].index);
    return s;
}

using WordCombination = std::map<Word, Poly>;

enum class PbwOrdering { RightFirst, LeftFirst };
enum class RewriteStrategy { Leftmost, Rightmost, Random };

inline void add_word(WordCombination& c, const Word& w, const Poly& p)
{
    if (p.is_zero()) return;
    auto it = c.find(w);
    if (it == c.end()) c.emplace(w, p);
    else {
        it->second += p;
        if (it->second.is_zero()) c.erase(it);
    }
}

// Positions k where letters k, k+1 are out of order.
inline std::vector<std::size_t> violations(const Word& w, PbwOrdering ord)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        const Letter &x = w[k], &y = w[k + 1];
        bool bad;
        if (x.is_g != y.is_g) bad = ord == PbwOrdering::RightFirst ? x.is_g : !x.is_g;
        else if (x.is_g) bad = x.index >= y.index;
        else bad = x.index <= y.index;
        if (bad) out.push_back(k);
    }
    return out;
}

// Normal form in C-infinity by the relations lambda lambda, g g anticommuting and lambda_i g_j + g_j lambda_i = x_ij.
inline WordCombination pbw_rewrite(const RingContext& ctx, const WordCombination& input, PbwOrdering ord,
                                   RewriteStrategy strategy = RewriteStrategy::Leftmost, unsigned seed = 0)
{
    std::mt19937 rng(seed);
    WordCombination pending = input, done;
    while (!pending.empty()) {
        auto it = pending.begin();
        if (strategy == RewriteStrategy::Random && pending.size() > 1)
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng));
        Word w = it->first;
        Poly c = it->second;
        pending.erase(it);
        auto vs = violations(w, ord);
        if (vs.empty()) {
            add_word(done, w, c);
            continue;
        }
        std::size_t k = vs.front();
        if (strategy == RewriteStrategy::Rightmost) k = vs.back();
        if (strategy == RewriteStrategy::Random) k = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        Letter x = w[k], y = w[k + 1];
        if (x.is_g == y.is_g && x.index == y.index) continue;
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        add_word(pending, swapped, -c);
        if (x.is_g != y.is_g) {
            int i = x.is_g ? y.index : x.index, j = x.is_g ? x.index : y.index;
            Word shorter = w;
            shorter.erase(shorter.begin() + k, shorter.begin() + k + 2);
            add_word(pending, shorter, c * Poly::variable(ctx.nvars(), ctx.var(i, j)));
        }
    }
    return done;
}

inline WordCombination pbw_expand(const RingContext& ctx, const PathWord& w, PbwOrdering ord,
                                  RewriteStrategy strategy = RewriteStrategy::Leftmost, unsigned seed = 0)
{
    WordCombination in;
    add_word(in, w.letters, Poly::constant(ctx.nvars(), 1));
    return pbw_rewrite(ctx, in, ord, strategy, seed);
}

// Re-expands a combination given in one PBW basis into the other.
inline WordCombination convert_basis(const RingContext& ctx, const WordCombination& c, PbwOrdering target)
{
    return pbw_rewrite(ctx, c, target);
}

// Drops basis paths that leave [1,m]: turning vertex above m (right-first) or below 1 (left-first).
inline WordCombination quotient_to_C(const RingContext& ctx, int start, const WordCombination& c, PbwOrdering ord)
{
    WordCombination out;
    for (auto& [w, p] : c) {
        if (!violations(w, ord).empty()) throw std::invalid_argument("quotient_to_C: input not in PBW normal form");
        PathWord pw{start, w};
        if (start < 1 || start > ctx.m || pw.end() < 1 || pw.end() > ctx.m) continue;
        int ng = 0, nl = 0;
        for (auto& l : w) (l.is_g ? ng : nl)++;
        int turn = ord == PbwOrdering::RightFirst ? start + ng : start - nl;
        if (turn > ctx.m || turn < 1) continue;
        add_word(out, w, p);
    }
    return out;
}

// g_J ^ lambda_L as (sign, right-first word lambda_{L desc} g_{J asc}).
inline std::pair<int, Word> exterior_to_word(const IndexSet& gs, const IndexSet& ls)
{
    Word w;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.push_back(lam(*it));
    for (int j : gs) w.push_back(gen(j));
    long q = static_cast<long>(ls.size());
    return {parity_sign(static_cast<long>(gs.size()) * q + q * (q - 1) / 2), w};
}

inline WordCombination element_to_words(const CliffordElement& e)
{
    WordCombination c;
    for (auto& [k, p] : e.terms) {
        auto [s, w] = exterior_to_word(k.first, k.second);
        add_word(c, w, p * Q(s));
    }
    return c;
}

inline WordCombination concat(const WordCombination& a, const WordCombination& b)
{
    WordCombination r;
    for (auto& [wa, pa] : a)
        for (auto& [wb, pb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_word(r, w, pa * pb);
        }
    return r;
}

// ---------------------------------------------------------------- presentations

struct PresentationBlock {
    int vertex = 0;   // k for P0 blocks, l for P1 blocks
    int offset = 0;
    int size = 0;
    int qg = 0;
    int ql = 0;
};

struct Presentation {
    RingContext ctx;
    int a = 1, b = 1;           // requested
    int ea = 1, eb = 1;         // after the involution
    bool dualized = false;
    GradedFreeModule P1, P0;
    PolyMatrix rho;
    std::vector<PresentationBlock> p0_blocks, p1_blocks;
};

inline Presentation presentation(const RingContext& ctx, int a, int b)
{
    int m = ctx.m;
    if (a < 1 || a > m || b < 1 || b > m) throw std::out_of_range("presentation: need 1 <= a,b <= m");
    Presentation pr;
    pr.ctx = ctx;
    pr.a = a;
    pr.b = b;
    if (a + b < m + 1) {
        pr.dualized = true;
        std::tie(a, b) = std::make_pair(m + 1 - b, m + 1 - a);
    }
    pr.ea = a;
    pr.eb = b;
    int off = 0;
    for (int k = std::max(a, b); k <= m; ++k) {
        auto mod = exterior_module(ctx, k - a, k - b);
        pr.p0_blocks.push_back({k, off, static_cast<int>(mod.rank()), k - a, k - b});
        off += static_cast<int>(mod.rank());
        pr.P0.append(mod);
    }
    off = 0;
    for (int l = std::max(a - m, b - m); l <= 0; ++l) {
        auto mod = exterior_module(ctx, b - l, a - l);
        pr.p1_blocks.push_back({l, off, static_cast<int>(mod.rank()), b - l, a - l});
        off += static_cast<int>(mod.rank());
        pr.P1.append(mod);
    }
    pr.rho = PolyMatrix{ctx, pr.P1, pr.P0, {}};
    for (auto& kb : pr.p0_blocks)
        for (auto& lb : pr.p1_blocks) {
            int t = a + b - kb.vertex - lb.vertex;
            if (t < 0) continue;
            write_delta(pr.rho, kb.offset, lb.offset, t, lb.qg, lb.ql);
        }
    return pr;
}

// Degree-d piece of the cokernel of rho.
inline long presentation_hilbert(const Presentation& pr, int d) { return cokernel_hilbert(pr.rho, d); }

// ---------------------------------------------------------------- characteristic zero

inline QMat hankel_factorial_matrix(int u, int t)
{
    QMat a = zero_matrix(t, t);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (u - i - j >= 0) a[i - 1][j - 1] = Q(1) / Q(factorial(u - i - j));
    return a;
}

inline Q hankel_factorial_det(int u, int t)
{
    if (t < 1 || u < 2 * t) throw std::domain_error("hankel_factorial_det: need u >= 2t >= 2");
    return determinant(hankel_factorial_matrix(u, t));
}

struct SymmetricFactorization {
    QMat P;             // upper unitriangular
    std::vector<Q> D;
};

// A = P D P^T, eliminating from the last variable.
inline SymmetricFactorization symmetric_diagonalize(const QMat& A)
{
    std::size_t t = A.size();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (A[i][j] != A[j][i]) throw std::invalid_argument("symmetric_diagonalize: matrix not symmetric");
    QMat W = A;
    SymmetricFactorization f{identity_matrix(t), std::vector<Q>(t)};
    for (std::size_t ii = t; ii-- > 0;) {
        Q piv = W[ii][ii];
        if (sgn(piv) == 0) throw std::domain_error("symmetric_diagonalize: singular trailing minor");
        f.D[ii] = piv;
        for (std::size_t j = 0; j < ii; ++j) f.P[j][ii] = W[j][ii] / piv;
        for (std::size_t r = 0; r <= ii; ++r)
            for (std::size_t c = 0; c <= ii; ++c) W[r][c] -= f.P[r][ii] * piv * f.P[c][ii];
    }
    return f;
}

struct BlockDecomposition {
    struct Block {
        int p = 0;
        int alpha = 0, beta = 0;   // the summand C^{alpha beta}
        int t = 0;
        PolyMatrix delta;
    };
    int u = 0;
    QMat A;
    SymmetricFactorization PD;
    std::vector<Block> blocks;
    PolyMatrix Ptilde;   // on P0, upper unitriangular
    PolyMatrix middle;   // P1 -> P0, block diagonal
    PolyMatrix Qtilde;   // on P1, lower unitriangular
};

inline BlockDecomposition block_decomposition(const RingContext& ctx, int a, int b)
{
    int m = ctx.m;
    if (a + b < m + 1) throw std::domain_error("block_decomposition: needs a+b >= m+1");
    Presentation pr = presentation(ctx, a, b);
    int s = static_cast<int>(pr.p0_blocks.size());
    int r = m - std::abs(a - b);
    BlockDecomposition bd;
    bd.u = r + 2;
    bd.A = zero_matrix(s, s);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) bd.A[i - 1][j - 1] = Q(1) / Q(factorial(bd.u - i - j));
    bd.PD = symmetric_diagonalize(bd.A);
    bd.Ptilde = PolyMatrix{ctx, pr.P0, pr.P0, {}};
    bd.middle = PolyMatrix{ctx, pr.P1, pr.P0, {}};
    bd.Qtilde = PolyMatrix{ctx, pr.P1, pr.P1, {}};
    for (int i = 0; i < s; ++i) {
        auto& kb = pr.p0_blocks[i];
        auto& lb = pr.p1_blocks[i];
        int t = a + b - kb.vertex - lb.vertex;
        BlockDecomposition::Block blk;
        blk.p = kb.vertex;
        blk.alpha = kb.vertex - a;
        blk.beta = kb.vertex - b;
        blk.t = t;
        blk.delta = delta_matrix(ctx, t, lb.qg, lb.ql);
        bd.blocks.push_back(std::move(blk));
        write_delta(bd.middle, kb.offset, lb.offset, t, lb.qg, lb.ql, bd.PD.D[i] * Q(factorial(t)));
        for (int j = i; j < s; ++j) {
            Q pij = bd.PD.P[i][j];
            if (sgn(pij) == 0) continue;
            auto& kj = pr.p0_blocks[j];
            write_delta(bd.Ptilde, kb.offset, kj.offset, j - i, kj.qg, kj.ql, pij * Q(factorial(j - i)));
            auto& lj = pr.p1_blocks[j];
            write_delta(bd.Qtilde, lj.offset, lb.offset, j - i, lb.qg, lb.ql, pij * Q(factorial(j - i)));
        }
    }
    return bd;
}

// ---------------------------------------------------------------- action on M

struct CliffordGenerator {
    bool is_g = false;
    int index = 1;
};

struct ActionLift {
    PolyMatrix alpha;   // on exterior powers of F
    PolyMatrix beta;    // on exterior powers of G
};

inline GradedFreeModule exterior_F(const RingContext& ctx, int a)
{
    GradedFreeModule mod;
    for (auto& I : subsets(ctx.m, a)) {
        Weight w = zero_weight(ctx);
        for (int i : I) w[i - 1] += 1;
        mod.gens.push_back({"f" + index_label(I), 0, w});
    }
    return mod;
}

inline GradedFreeModule exterior_G(const RingContext& ctx, int a)
{
    GradedFreeModule mod;
    for (auto& J : subsets(ctx.n, a)) {
        Weight w = zero_weight(ctx);
        for (int j : J) w[ctx.m + j - 1] += 1;
        mod.gens.push_back({"g" + index_label(J), a, w});
    }
    return mod;
}

inline PolyMatrix lambda_power(const RingContext& ctx, int a) { return exterior_power_map(generic_matrix(ctx), a); }

// (alpha, beta) with alpha o Lambda^a phi = Lambda^{a'} phi o beta.
inline ActionLift clifford_action_lifts(const RingContext& ctx, int a, CliffordGenerator gen)
{
    int nv = ctx.nvars();
    if (a < 0 || a > ctx.m) throw std::out_of_range("clifford_action_lifts: a out of range");
    ActionLift lift;
    if (!gen.is_g) {
        int i = gen.index;
        if (i < 1 || i > ctx.m) throw std::out_of_range("lambda index");
        auto srcF = subsets(ctx.m, a), tgtF = subsets(ctx.m, a - 1);
        lift.alpha = PolyMatrix{ctx, exterior_F(ctx, a), a >= 1 ? exterior_F(ctx, a - 1) : GradedFreeModule{}, {}};
        for (std::size_t c = 0; c < srcF.size(); ++c) {
            auto [s, rest] = left_remove(srcF[c], i);
            if (s != 0) lift.alpha.set(index_of_subset(tgtF, rest), static_cast<int>(c), Poly::constant(nv, s));
        }
        auto srcG = subsets(ctx.n, a), tgtG = subsets(ctx.n, a - 1);
        lift.beta = PolyMatrix{ctx, exterior_G(ctx, a), a >= 1 ? exterior_G(ctx, a - 1) : GradedFreeModule{}, {}};
        for (std::size_t c = 0; c < srcG.size(); ++c)
            for (int j : srcG[c]) {
                auto [s, rest] = left_remove(srcG[c], j);
                lift.beta.add(index_of_subset(tgtG, rest), static_cast<int>(c), Poly::variable(nv, ctx.var(i, j), s));
            }
    } else {
        int j = gen.index;
        if (j < 1 || j > ctx.n) throw std::out_of_range("g index");
        auto srcG = subsets(ctx.n, a), tgtG = subsets(ctx.n, a + 1);
        lift.beta = PolyMatrix{ctx, exterior_G(ctx, a), exterior_G(ctx, a + 1), {}};
        for (std::size_t c = 0; c < srcG.size(); ++c) {
            auto [s, rest] = left_insert(srcG[c], j);
            if (s != 0 && static_cast<int>(rest.size()) <= ctx.n)
                lift.beta.set(index_of_subset(tgtG, rest), static_cast<int>(c), Poly::constant(nv, s));
        }
        auto srcF = subsets(ctx.m, a), tgtF = subsets(ctx.m, a + 1);
        lift.alpha = PolyMatrix{ctx, exterior_F(ctx, a), exterior_F(ctx, a + 1), {}};
        for (std::size_t c = 0; c < srcF.size(); ++c)
            for (int i = 1; i <= ctx.m; ++i) {
                auto [s, rest] = left_insert(srcF[c], i);
                if (s != 0) lift.alpha.add(index_of_subset(tgtF, rest), static_cast<int>(c), Poly::variable(nv, ctx.var(i, j), s));
            }
    }
    return lift;
}

} // namespace detsing
