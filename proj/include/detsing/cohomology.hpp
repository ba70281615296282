#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace detsing {

struct CohomologyEntry {
    bool vanishes = false;
    int nu = 0;
    Z rank = 0;
    std::string descriptor;
    int case_number = 0;   // which of the five regimes produced the entry
};

struct RankPolynomial {
    std::vector<Q> coeffs;   // ascending powers

    Q operator()(const Q& z) const
    {
        Q r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * z + *it;
        return r;
    }
    int degree() const
    {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (sgn(coeffs[k]) != 0) return k;
        return -1;
    }
};

inline void check_triple(int m, int a, int b)
{
    if (m < 1 || a < 1 || a > m || b < 1 || b > m) throw std::out_of_range("need 1 <= a,b <= m");
}

inline std::tuple<int, int, int> dual_triple(int m, int a, int b, int c)
{
    check_triple(m, a, b);
    return {m + 1 - b, m + 1 - a, c};
}

// Prescribed value r(-c) for 0 <= c <= m, assuming a+b >= m+1.
inline Z rank_polynomial_value(int m, int a, int b, int c)
{
    if (c >= std::max(0, a - b) && c <= m - b) return (c % 2 ? -1 : 1) * binomial(m, c + b - a);
    if (c >= a && c <= std::min(a + m - b, m)) return (c % 2 ? 1 : -1) * binomial(m, c + b - a);
    return 0;
}

// Lagrange through z = -m..-1, asserted at z = 0.
inline RankPolynomial rank_polynomial(int m, int a, int b)
{
    check_triple(m, a, b);
    if (a + b < m + 1) {
        auto [a2, b2, c2] = dual_triple(m, a, b, 0);
        return rank_polynomial(m, a2, b2);
    }
    std::vector<Q> xs, ys;
    for (int c = m; c >= 1; --c) {
        xs.push_back(-c);
        ys.push_back(Q(rank_polynomial_value(m, a, b, c)));
    }
    RankPolynomial p;
    p.coeffs.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        std::vector<Q> basis{1};
        Q denom = 1;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<Q> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) p.coeffs[k] += ys[i] * basis[k] / denom;
    }
    if (p(0) != Q(rank_polynomial_value(m, a, b, 0)))
        throw std::logic_error("rank polynomial: inconsistent interpolation");
    return p;
}

inline CohomologyEntry direct_image(int m, int a, int b, int c)
{
    check_triple(m, a, b);
    if (a + b < m + 1) {
        auto [a2, b2, c2] = dual_triple(m, a, b, c);
        return direct_image(m, a2, b2, c2);
    }
    CohomologyEntry e;
    if (c < 0) {
        e.case_number = 1;
        e.nu = 0;
        e.rank = rank_polynomial(m, a, b)(-c).get_num();
        e.descriptor = "pi_* M^" + std::to_string(b) + "_" + std::to_string(a) + "(" + std::to_string(-c) + ")";
    } else if (c >= std::max(0, a - b) && c <= m - b) {
        e.case_number = 3;
        e.nu = c;
        e.rank = binomial(m, c + b - a);
        e.descriptor = "F^∨_" + std::to_string(c + b - a);
    } else if (c >= a && c <= std::min(a + m - b, m)) {
        e.case_number = 4;
        e.nu = c - 1;
        e.rank = binomial(m, c + b - a);
        e.descriptor = "F^∨_" + std::to_string(c + b - a);
    } else if (c > m) {
        e.case_number = 5;
        e.nu = m - 1;
        e.rank = rank_polynomial(m, b, a)(c - m).get_num();
        e.descriptor = "(pi_* M^" + std::to_string(a) + "_" + std::to_string(b) + "(" + std::to_string(c - m) + "))^∨ ⊗ |F|^∨";
    } else {
        e.case_number = 2;
        e.vanishes = true;
    }
    if (!e.vanishes && e.rank == 0) e.vanishes = true;
    return e;
}

inline bool vanishing_window(int m, int a, int b, int c, int d)
{
    int diff = d - c;
    if (diff > 0) return d == 0 && c < 0;
    if (diff == 0) return c + b >= std::max(a, b) && c + b <= std::min(m, a + b - 1);
    if (diff == -1) return c - a >= std::max(0, m + 1 - a - b) && c - a <= std::min(m - b, m - a);
    return d == m - 1 && c > m;
}

} // namespace detsing
