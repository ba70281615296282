#include "detsing/detsing.hpp"

#include <gtest/gtest.h>

using namespace detsing;

namespace {

// Semistandard tableaux of shape a with entries in 1..N.
long count_ssyt(const Partition& a, int N)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= a.length(); ++i)
        for (int j = 1; j <= a[i]; ++j) cells.push_back({i, j});
    std::map<std::pair<int, int>, int> fill;
    auto rec = [&](auto&& self, std::size_t k) -> long {
        if (k == cells.size()) return 1;
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 1) lo = std::max(lo, fill[{i, j - 1}]);
        if (i > 1) lo = std::max(lo, fill[{i - 1, j}] + 1);
        long s = 0;
        for (int v = lo; v <= N; ++v) {
            fill[{i, j}] = v;
            s += self(self, k + 1);
        }
        return s;
    };
    return rec(rec, 0);
}

Q weyl_product(const Partition& a, int N)
{
    Q r = 1;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) r *= fraction(a[i] - a[j] + j - i, j - i);
    return r;
}

} // namespace

TEST(Partitions, Conjugate)
{
    EXPECT_EQ(conjugate({4, 2, 1}), Partition({3, 2, 1, 1}));
    EXPECT_EQ(conjugate({}), Partition());
    EXPECT_EQ(conjugate({4}), Partition({1, 1, 1, 1}));
    for (int k = 0; k <= 9; ++k)
        for (auto& p : partitions_in_box(k, 4, 4)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(conjugate(p).size(), p.size());
        }
}

TEST(Partitions, ConvexSquares)
{
    auto sq = convex_squares({4, 2, 1});
    ASSERT_EQ(sq.size(), 3u);
    EXPECT_EQ(sq[0].r, 1);
    EXPECT_EQ(sq[0].c, 4);
    EXPECT_EQ(sq[1].r, 2);
    EXPECT_EQ(sq[1].c, 2);
    EXPECT_EQ(sq[2].r, 3);
    EXPECT_EQ(sq[2].c, 1);
    auto single = convex_squares({5});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].c, 5);
    auto box = convex_squares({2, 2});
    ASSERT_EQ(box.size(), 1u);
    EXPECT_EQ(box[0].r, 2);
    EXPECT_EQ(box[0].c, 2);
}

TEST(Partitions, DropPairs)
{
    Partition a{4, 2, 1};
    std::vector<std::pair<Partition, Partition>> want = {{{3, 2, 1}, {2, 1}}, {{3, 1, 1}, {4, 1}}, {{3, 1}, {4, 2}}};
    auto sq = convex_squares(a);
    ASSERT_EQ(sq.size(), want.size());
    for (std::size_t k = 0; k < sq.size(); ++k) {
        EXPECT_EQ(drop_column(a, sq[k].c), want[k].first);
        EXPECT_EQ(drop_row(a, sq[k].r), want[k].second);
    }
    EXPECT_EQ(drop_row({3}, 1), Partition());
    EXPECT_EQ(drop_column({2, 2}, 2), Partition({1, 1}));
}

TEST(Partitions, SchurDimExamples)
{
    for (int N = 1; N <= 6; ++N) {
        EXPECT_EQ(schur_dim({1}, N), N);
        EXPECT_EQ(schur_dim({1, 1}, N), N * (N - 1) / 2);
    }
    EXPECT_EQ(schur_dim({2, 1}, 3), 8);
    EXPECT_EQ(schur_dim({1, 1, 1}, 2), 0);
}

TEST(Partitions, SchurDimAgreesWithWeylAndTableaux)
{
    for (int N = 1; N <= 4; ++N)
        for (int k = 0; k <= 6; ++k)
            for (auto& p : partitions_in_box(k, N, 4)) {
                Q w = weyl_product(p, N);
                ASSERT_EQ(w.get_den(), 1);
                EXPECT_EQ(schur_dim(p, N), w.get_num()) << p.to_string() << " N=" << N;
                EXPECT_EQ(schur_dim(p, N), count_ssyt(p, N)) << p.to_string() << " N=" << N;
            }
}

TEST(Partitions, RimHookExtensions)
{
    auto one = rim_hook_extensions({2, 1}, 1, 3);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], Partition({2, 1, 1}));
    EXPECT_TRUE(rim_hook_extensions({1, 1, 1}, 2, 3).empty());
    for (int s = 1; s <= 5; ++s)
        for (auto& a : partitions_in_box(3, 2, 3))
            for (auto& b : rim_hook_extensions(a, s, 3)) {
                EXPECT_EQ(b.size(), a.size() + s);
                EXPECT_EQ(b.length(), 3);
                for (int i = 1; i <= 3; ++i) EXPECT_GE(b[i], a[i]);
                for (int i = 1; i < 3; ++i) EXPECT_LE(b[i + 1], a[i] + 1) << "not a border strip";
            }
}
