#pragma once

#include "cohomology.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detsing {

struct BettiSummand {
    Z rank = 0;
    std::string descriptor;
    std::optional<int> twist;   // empty when the closed form leaves it open
    int natural_twist = 0;      // number of G factors
    int row = 0;
};

struct BettiTable {
    std::map<int, std::vector<BettiSummand>> terms;   // homological degree mu -> summands

    Z total_rank(int mu) const
    {
        Z r = 0;
        auto it = terms.find(mu);
        if (it != terms.end())
            for (auto& s : it->second) r += s.rank;
        return r;
    }
    int min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    int amplitude() const { return max_degree() - min_degree(); }
    // twist -> rank at degree mu, using natural twists
    std::map<int, Z> graded(int mu) const
    {
        std::map<int, Z> g;
        auto it = terms.find(mu);
        if (it != terms.end())
            for (auto& s : it->second) g[s.natural_twist] += s.rank;
        return g;
    }
};

inline bool in_vanishing_regime(int m, int a, int b, int c)
{
    return c <= 0 || (c == 1 && (b == m || a == 1)) || (c == 2 && b == m && a == 1);
}

inline void check_resolution_args(int m, int n, int a, int b, int c)
{
    if (m < 1 || n < m) throw std::out_of_range("need 1 <= m <= n");
    check_triple(m, a, b);
    if (!in_vanishing_regime(m, a, b, c)) throw std::domain_error("higher direct images do not vanish for this c");
}

inline std::string ext_factor(const char* space, int p)
{
    return "Λ^" + std::to_string(p) + space;
}

inline BettiTable resolution_shape(int m, int n, int a, int b, int c)
{
    check_resolution_args(m, n, a, b, c);
    if (a + b < m + 1) {
        auto [a2, b2, c2] = dual_triple(m, a, b, c);
        return resolution_shape(m, n, a2, b2, c2);
    }
    BettiTable t;
    auto add = [&](int mu, BettiSummand s) {
        if (s.rank != 0) t.terms[mu].push_back(std::move(s));
    };
    if (c >= m - n + 1) {
        for (int mu = m - n - 1; mu <= c - 2; ++mu) {
            int shift = c - mu + m - 1;
            CohomologyEntry e = direct_image(m, a, b, shift);
            Z r = (!e.vanishes && e.nu == m - 1) ? e.rank : Z(0);
            int q = m - 1 - mu;
            add(mu, {r * binomial(n, q),
                     "R^" + std::to_string(m - 1) + "pi_* M^" + std::to_string(b) + "_" + std::to_string(a) + "(-" +
                         std::to_string(shift) + ") ⊗ " + ext_factor("G", q),
                     std::nullopt, q, 1});
        }
    }
    if (c >= a - n) {
        for (int k = 0; k <= std::min(m - a, m - b); ++k) {
            int p = b + k, q = a - c + k;
            add(c - 1, {binomial(m, p) * binomial(n, q), ext_factor("F^∨", p) + " ⊗ " + ext_factor("G", q), q, q, 2});
        }
    }
    if (c >= std::max(a - b - n, -n) && c <= 0) {
        for (int k = std::max(a, b); k <= m; ++k) {
            int p = k - a, q = k - b - c;
            add(c, {binomial(m, p) * binomial(n, q), ext_factor("F^∨", p) + " ⊗ " + ext_factor("G", q), q, q, 3});
        }
    }
    auto pi_row = [&](int lo, int hi, int row) {
        for (int mu = lo; mu <= hi; ++mu) {
            CohomologyEntry e = direct_image(m, a, b, c - mu);
            Z r = (!e.vanishes && e.nu == 0) ? e.rank : Z(0);
            int q = -mu;
            add(mu, {r * binomial(n, q),
                     "pi_* M^" + std::to_string(b) + "_" + std::to_string(a) + "(" + std::to_string(mu - c) + ") ⊗ " +
                         ext_factor("G", q),
                     q, q, row});
        }
    };
    if (c >= -n && c <= 0) pi_row(c + 1, 0, 4);
    if (c < -n) pi_row(-n, 0, 5);
    return t;
}

inline int projective_dimension(int m, int n, int a, int b, int c)
{
    check_resolution_args(m, n, a, b, c);
    if (a + b < m + 1) {
        auto [a2, b2, c2] = dual_triple(m, a, b, c);
        return projective_dimension(m, n, a2, b2, c2);
    }
    if (c == 2 && a == 1 && b == m) return n - m + 1;
    if (c == 1 && b == m) return n - m + 1;
    if (c >= m - n && c <= 0) return n - m + 1;
    if (c >= a - n && c <= m - n) return -c + 1;
    if (a > b && c >= a - b - n && c <= a - n - 1) return -c;
    if (a <= b && c >= -n && c <= a - n - 1) return -c;
    if (a > b && c >= -n && c <= a - b - n - 1) return -c - 1;
    if (c < -n) return n;
    throw std::domain_error("projective dimension: outside the table");
}

inline bool perfection_check(int m, int n, int a, int b, int c)
{
    if (c == m - n - 1 && (a == m || b == 1)) return true;
    if (c >= m - n && c <= 0) return true;
    if (c == 1 && (b == m || a == 1)) return true;
    return c == 2 && b == m && a == 1;
}

} // namespace detsing
