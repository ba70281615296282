#pragma once

#include "cohomology.hpp"
#include "partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace detsing {

struct BottResult {
    int degree = 0;
    std::vector<int> dominant;
};

// Dotted action: add rho = (m-1,...,0), sort decreasingly, subtract rho.
inline std::optional<BottResult> bott_flatten(const std::vector<int>& w)
{
    int m = static_cast<int>(w.size());
    std::vector<int> v(m);
    for (int k = 0; k < m; ++k) v[k] = w[k] + (m - 1 - k);
    int swaps = 0;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k + 1 < m - i; ++k) {
            if (v[k] == v[k + 1]) return std::nullopt;
            if (v[k] < v[k + 1]) {
                std::swap(v[k], v[k + 1]);
                ++swaps;
            }
        }
    for (int k = 0; k + 1 < m; ++k)
        if (v[k] == v[k + 1]) return std::nullopt;
    BottResult r{swaps, std::vector<int>(m)};
    for (int k = 0; k < m; ++k) r.dominant[k] = v[k] - (m - 1 - k);
    return r;
}

// Weyl dimension of the irreducible GL_m module of a dominant weight.
inline Z weyl_dim(const std::vector<int>& dominant)
{
    if (dominant.empty()) return 1;
    int low = dominant.back();
    std::vector<int> p;
    for (int x : dominant) p.push_back(x - low);
    return schur_dim(Partition(p), static_cast<int>(dominant.size()));
}

struct OmegaCohomology {
    int degree = 0;
    Z rank = 0;
};

// Omega^b(s) on P^{m-1} as the weight (1^{m-1-b}, 0^b, b+1-s).
inline std::vector<int> omega_weight(int m, int b, int s)
{
    std::vector<int> w(m, 0);
    for (int k = 0; k < m - 1 - b; ++k) w[k] = 1;
    w[m - 1] = b + 1 - s;
    return w;
}

inline std::optional<OmegaCohomology> omega_cohomology_bott(int m, int b, int s)
{
    auto r = bott_flatten(omega_weight(m, b, s));
    if (!r) return std::nullopt;
    return OmegaCohomology{r->degree, weyl_dim(r->dominant)};
}

inline std::optional<OmegaCohomology> omega_cohomology_direct(int m, int b, int s)
{
    CohomologyEntry e = direct_image(m, b + 1, m, b - s + 1);
    if (e.vanishes) return std::nullopt;
    return OmegaCohomology{e.nu, e.rank};
}

// Both routes; throws on disagreement.
inline std::optional<OmegaCohomology> cohom_omega_crosscheck(int m, int b, int s)
{
    if (m < 1 || b < 0 || b > m - 1) throw std::out_of_range("cohom_omega_crosscheck: need 0 <= b <= m-1");
    auto x = omega_cohomology_bott(m, b, s);
    auto y = omega_cohomology_direct(m, b, s);
    bool same = x.has_value() == y.has_value() && (!x || (x->degree == y->degree && x->rank == y->rank));
    if (!same) throw std::logic_error("Omega cohomology: Bott and direct-image routes disagree");
    return x;
}

struct ExtSummand {
    Partition alpha;
    ConvexSquare square;
    Partition col_dropped;      // C_c(alpha), on F^v
    Partition row_dropped_conj; // R_r(alpha)', on G
    Z dim_f = 0, dim_g = 0, dim = 0;
    int twist = 0;              // |C_c(alpha)| + |R_r(alpha)|
};

inline std::string schur_label(const Partition& p, const char* space)
{
    if (p.empty()) return "";
    if (p.length() == 1) return (p[1] == 1 ? std::string() : "S^" + std::to_string(p[1])) + space;
    if (p[1] == 1) return "Λ^" + std::to_string(p.length()) + space;
    std::string s = "L_";
    for (int x : p.parts()) s += std::to_string(x);
    return s + space;
}

inline std::string descriptor(const ExtSummand& e)
{
    std::string f = schur_label(e.col_dropped, "F^∨"), g = schur_label(e.row_dropped_conj, "G");
    if (f.empty() && g.empty()) return "K";
    if (f.empty()) return g;
    if (g.empty()) return f;
    return f + " ⊗ " + g;
}

inline ExtSummand make_ext_summand(const Partition& alpha, const ConvexSquare& sq, int m, int n)
{
    ExtSummand e;
    e.alpha = alpha;
    e.square = sq;
    e.col_dropped = drop_column(alpha, sq.c);
    Partition rr = drop_row(alpha, sq.r);
    e.row_dropped_conj = conjugate(rr);
    e.dim_f = schur_dim(e.col_dropped, m);
    e.dim_g = schur_dim(e.row_dropped_conj, n);
    e.dim = e.dim_f * e.dim_g;
    e.twist = e.col_dropped.size() + rr.size();
    return e;
}

// Summands of Ext^t(S_b, S_a): alpha in the m x n box, |alpha| = t+1, convex (r,c) with b - a = c - r.
inline std::vector<ExtSummand> ext_dims(int m, int n, int t, int a, int b)
{
    check_triple(m, a, b);
    if (t < 0) throw std::out_of_range("ext_dims: t must be nonnegative");
    std::vector<ExtSummand> out;
    for (auto& alpha : partitions_in_box(t + 1, m, n))
        for (auto& sq : convex_squares(alpha))
            if (b - a == sq.c - sq.r) out.push_back(make_ext_summand(alpha, sq, m, n));
    return out;
}

inline Z ext_total(int m, int n, int t, int a, int b)
{
    Z s = 0;
    for (auto& e : ext_dims(m, n, t, a, b)) s += e.dim;
    return s;
}

struct SimpleResolutionEntry {
    int t = 0;
    int vertex = 0;   // P_vertex
    ExtSummand summand;
};

// Terms of the minimal projective resolution of S_a, degree t <= t_max; P_b with b outside [1,m] is dropped.
inline std::vector<SimpleResolutionEntry> simple_resolution_table(int m, int n, int a, int t_max)
{
    if (a < 1 || a > m) throw std::out_of_range("simple_resolution_table: vertex out of range");
    std::vector<SimpleResolutionEntry> out;
    for (int t = 0; t <= t_max; ++t)
        for (auto& alpha : partitions_in_box(t + 1, m, n))
            for (auto& sq : convex_squares(alpha)) {
                int b = a + sq.r - sq.c;
                if (b < 1 || b > m) continue;
                out.push_back({t, b, make_ext_summand(alpha, sq, m, n)});
            }
    return out;
}

} // namespace detsing
