#pragma once

#include "rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace detsing {

class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0) throw std::invalid_argument("partition with a negative part");
            if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition not weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    // 1-based; 0 past the end.
    int operator[](int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& a)
{
    std::vector<int> c;
    for (int j = 1; j <= a[1]; ++j) {
        int k = 0;
        while (a[k + 1] >= j) ++k;
        c.push_back(k);
    }
    return Partition(c);
}

struct ConvexSquare {
    int r = 0;
    int c = 0;
    bool operator==(const ConvexSquare&) const = default;
};

inline std::vector<ConvexSquare> convex_squares(const Partition& a)
{
    std::vector<ConvexSquare> out;
    for (int r = 1; r <= a.length(); ++r)
        if (a[r + 1] < a[r]) out.push_back({r, a[r]});
    return out;
}

inline bool is_convex_square(const Partition& a, int r, int c)
{
    return r >= 1 && r <= a.length() && a[r] == c && a[r + 1] < a[r];
}

inline Partition drop_row(const Partition& a, int r)
{
    if (!is_convex_square(a, r, a[r])) throw std::invalid_argument("drop_row: not a convex square");
    std::vector<int> p = a.parts();
    p.erase(p.begin() + (r - 1));
    return Partition(p);
}

inline Partition drop_column(const Partition& a, int c)
{
    bool ok = false;
    for (auto& s : convex_squares(a)) ok = ok || s.c == c;
    if (!ok) throw std::invalid_argument("drop_column: not a convex square");
    std::vector<int> p = a.parts();
    for (auto& x : p)
        if (x >= c) --x;
    return Partition(p);
}

// Hook-content formula: SSYT of shape a with entries in {1..N}.
inline Z schur_dim(const Partition& a, int N)
{
    if (N < 0) throw std::invalid_argument("schur_dim: negative dimension");
    if (a.length() > N) return 0;
    Partition ac = conjugate(a);
    Q r = 1;
    for (int i = 1; i <= a.length(); ++i)
        for (int j = 1; j <= a[i]; ++j) {
            int hook = (a[i] - j) + (ac[j] - i) + 1;
            r *= fraction(N + j - i, hook);
        }
    return r.get_num();
}

// All beta containing a with beta/a a border strip of s boxes whose lowest box is in row m.
inline std::vector<Partition> rim_hook_extensions(const Partition& a, int s, int m)
{
    if (s < 1) throw std::invalid_argument("rim hook length must be positive");
    std::vector<Partition> out;
    if (a.length() >= m) return out;
    // top row r; rows r+1..m are forced to a_{i-1}+1
    for (int r = m; r >= 1; --r) {
        std::vector<int> b(m);
        for (int i = 1; i <= m; ++i) b[i - 1] = a[i];
        int used = 0;
        for (int i = r + 1; i <= m; ++i) {
            b[i - 1] = a[i - 1] + 1;
            used += b[i - 1] - a[i];
        }
        int top = s - used;
        if (top < 1) continue;
        b[r - 1] = a[r] + top;
        if (r > 1 && b[r - 1] > a[r - 1]) continue;
        out.push_back(Partition(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Partitions of total size k inside an r x c box.
inline std::vector<Partition> partitions_in_box(int k, int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(rec, k, cols);
    return out;
}

} // namespace detsing
