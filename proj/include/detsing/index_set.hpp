#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace detsing {

// Strictly increasing, 1-based.
using IndexSet = std::vector<int>;

inline bool is_index_set(const IndexSet& s, int bound)
{
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > bound) return false;
        if (k > 0 && s[k - 1] >= s[k]) return false;
    }
    return true;
}

// k-subsets of {1..n} in lex order.
inline std::vector<IndexSet> subsets(int n, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

inline int index_of_subset(const std::vector<IndexSet>& basis, const IndexSet& s)
{
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    if (it == basis.end() || *it != s) return -1;
    return static_cast<int>(it - basis.begin());
}

inline IndexSet set_minus(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

// Sign of sorting the concatenation a,b (0 if they overlap).
inline int shuffle_sign(const IndexSet& a, const IndexSet& b)
{
    int inversions = 0;
    for (int x : a)
        for (int y : b) {
            if (x == y) return 0;
            if (x > y) ++inversions;
        }
    return inversions % 2 ? -1 : 1;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline std::string index_label(const IndexSet& s)
{
    std::string r = "{";
    for (std::size_t k = 0; k < s.size(); ++k) r += (k ? "," : "") + std::to_string(s[k]);
    return r + "}";
}

// Left contraction of e_x from e_s: (sign, s minus x), sign 0 if x not in s.
inline std::pair<int, IndexSet> left_remove(const IndexSet& s, int x)
{
    auto it = std::find(s.begin(), s.end(), x);
    if (it == s.end()) return {0, {}};
    int pos = static_cast<int>(it - s.begin());
    IndexSet r = s;
    r.erase(r.begin() + pos);
    return {pos % 2 ? -1 : 1, r};
}

// Right contraction: e_s = sign * e_{s minus x} e_x.
inline std::pair<int, IndexSet> right_remove(const IndexSet& s, int x)
{
    auto it = std::find(s.begin(), s.end(), x);
    if (it == s.end()) return {0, {}};
    int after = static_cast<int>(s.end() - it) - 1;
    IndexSet r = s;
    r.erase(r.begin() + (it - s.begin()));
    return {after % 2 ? -1 : 1, r};
}

// e_x wedge e_s: (sign, sorted set), sign 0 if x in s.
inline std::pair<int, IndexSet> left_insert(const IndexSet& s, int x)
{
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it != s.end() && *it == x) return {0, {}};
    int pos = static_cast<int>(it - s.begin());
    IndexSet r = s;
    r.insert(r.begin() + pos, x);
    return {pos % 2 ? -1 : 1, r};
}

} // namespace detsing
