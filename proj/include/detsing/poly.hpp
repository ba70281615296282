#pragma once

#include "rational.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace detsing {

struct RingContext {
    int m = 1;
    int n = 1;

    RingContext() = default;
    RingContext(int rows, int cols) : m(rows), n(cols)
    {
        if (m < 1 || n < m) throw std::invalid_argument("ring context needs n >= m >= 1");
    }
    int nvars() const { return m * n; }
    // 1-based (i,j), row-major.
    int var(int i, int j) const
    {
        if (i < 1 || i > m || j < 1 || j > n) throw std::out_of_range("variable index");
        return (i - 1) * n + (j - 1);
    }
    int row_of(int v) const { return v / n + 1; }
    int col_of(int v) const { return v % n + 1; }
    std::string var_name(int v) const { return "x_" + std::to_string(row_of(v)) + std::to_string(col_of(v)); }
    bool operator==(const RingContext&) const = default;
};

using Exps = std::vector<std::uint8_t>;

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lex, x_11 largest.
struct MonoOrder {
    bool operator()(const Exps& a, const Exps& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

class Poly {
public:
    using Map = std::map<Exps, Q, MonoOrder>;

    Poly() = default;

    static Poly constant(int nvars, const Q& c)
    {
        Poly p;
        p.add_term(Exps(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int v, const Q& c = 1)
    {
        Exps e(nvars, 0);
        e[v] = 1;
        Poly p;
        p.add_term(e, c);
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exps& e, const Q& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o)
    {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Q& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Q& s) { return a *= s; }
    friend Poly operator*(const Q& s, Poly a) { return a *= s; }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exps e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Poly times_monomial(const Exps& m) const
    {
        Poly r;
        for (auto& [e, c] : terms_) {
            Exps s(e.size());
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<std::uint8_t>(e[k] + m[k]);
            r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    bool is_homogeneous_of(int d) const
    {
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Q constant_term() const
    {
        for (auto& [e, c] : terms_)
            if (total_degree(e) == 0) return c;
        return 0;
    }

    Q evaluate(const std::vector<Q>& point) const
    {
        Q r = 0;
        for (auto& [e, c] : terms_) {
            Q t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                for (int p = 0; p < e[k]; ++p) t *= point[k];
            r += t;
        }
        return r;
    }

    std::string to_string(const RingContext& ctx) const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool is_const = total_degree(e) == 0;
            Q a = abs(c);
            if (!first) s += sgn(c) < 0 ? " - " : " + ";
            else if (sgn(c) < 0) s += "-";
            first = false;
            bool wrote = false;
            if (is_const || a != 1) {
                s += a.get_str();
                wrote = true;
            }
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (wrote) s += "*";
                s += ctx.var_name(static_cast<int>(v));
                if (e[v] > 1) s += "^" + std::to_string(e[v]);
                wrote = true;
            }
        }
        return s;
    }

private:
    Map terms_;
};

// All exponent vectors of the given total degree in nvars variables.
inline std::vector<Exps> monomials_of_degree(int nvars, int d)
{
    std::vector<Exps> out;
    if (d < 0) return out;
    Exps e(nvars, 0);
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1) {
            e[v] = static_cast<std::uint8_t>(left);
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[v] = static_cast<std::uint8_t>(k);
            self(self, v + 1, left - k);
        }
        e[v] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(e);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

inline long count_monomials(int nvars, int d) { return d < 0 ? 0 : binom(nvars - 1 + d, d); }

} // namespace detsing
