#include "detsing/detsing.hpp"

#include <gtest/gtest.h>

using namespace detsing;

namespace {

// Sort w + rho by adjacent swaps, counting them.
std::optional<BottResult> bubble_flatten(std::vector<int> w)
{
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) w[i] += m - 1 - i;
    int swaps = 0;
    for (int pass = 0; pass < m; ++pass)
        for (int i = 0; i + 1 < m; ++i) {
            if (w[i] == w[i + 1]) return std::nullopt;
            if (w[i] < w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                ++swaps;
            }
        }
    for (int i = 0; i < m; ++i) w[i] -= m - 1 - i;
    return BottResult{swaps, w};
}

} // namespace

TEST(Bott, Examples)
{
    auto d = bott_flatten({3, 1, 0});
    ASSERT_TRUE(d);
    EXPECT_EQ(d->degree, 0);
    EXPECT_EQ(d->dominant, (std::vector<int>{3, 1, 0}));
    for (int m = 2; m <= 5; ++m) {
        std::vector<int> w(m, 0);
        w[m - 1] = m;
        auto r = bott_flatten(w);
        ASSERT_TRUE(r);
        EXPECT_EQ(r->degree, m - 1);
        EXPECT_EQ(weyl_dim(r->dominant), 1);
    }
    EXPECT_FALSE(bott_flatten({0, 0, 1}));
}

TEST(Bott, AgreesWithBubbleSort)
{
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 5; ++c) {
                auto got = bott_flatten({a, b, c});
                auto want = bubble_flatten({a, b, c});
                ASSERT_EQ(got.has_value(), want.has_value());
                if (got) {
                    EXPECT_EQ(got->degree, want->degree);
                    EXPECT_EQ(got->dominant, want->dominant);
                }
            }
}

TEST(Bott, LineBundlesOnProjectiveSpace)
{
    for (int m = 2; m <= 4; ++m)
        for (int k = -5; k <= 8; ++k) {
            std::vector<int> w(m, 0);
            w[m - 1] = k;
            auto r = bott_flatten(w);
            if (k <= 0) {
                ASSERT_TRUE(r);
                EXPECT_EQ(r->degree, 0);
                EXPECT_EQ(weyl_dim(r->dominant), binomial(-k + m - 1, m - 1));
            } else if (k < m) {
                EXPECT_FALSE(r);
            } else {
                ASSERT_TRUE(r);
                EXPECT_EQ(r->degree, m - 1);
                EXPECT_EQ(weyl_dim(r->dominant), binomial(k - 1, m - 1));
            }
        }
}

TEST(Bott, OmegaCrossCheck)
{
    for (int b = 0; b <= 2; ++b) {
        auto h = cohom_omega_crosscheck(3, b, 0);
        ASSERT_TRUE(h);
        EXPECT_EQ(h->degree, b);
        EXPECT_EQ(h->rank, 1);
    }
    for (int b = 0; b <= 2; ++b)
        for (int s = -4; s <= 4; ++s) EXPECT_NO_THROW(cohom_omega_crosscheck(3, b, s));
}

TEST(Ext, LowDegrees)
{
    for (int a = 1; a <= 3; ++a) {
        auto e0 = ext_dims(3, 4, 0, a, a);
        ASSERT_EQ(e0.size(), 1u);
        EXPECT_EQ(e0[0].dim, 1);
        EXPECT_EQ(e0[0].alpha, Partition({1}));
        EXPECT_EQ(e0[0].col_dropped, Partition());
        EXPECT_EQ(e0[0].row_dropped_conj, Partition());
    }
    EXPECT_EQ(ext_total(3, 4, 1, 1, 2), 3);
    EXPECT_EQ(ext_total(3, 4, 1, 2, 1), 4);
    EXPECT_EQ(ext_total(3, 4, 1, 2, 2), 0);
}

TEST(Ext, SquareSummandAtDegreeThree)
{
    auto sums = ext_dims(3, 4, 3, 2, 2);
    bool found = false;
    for (auto& e : sums)
        if (e.alpha == Partition({2, 2})) {
            found = true;
            EXPECT_EQ(e.dim, binomial(3, 2) * binomial(4, 2));
            EXPECT_EQ(e.twist, 4);
        }
    EXPECT_TRUE(found);
}

TEST(Ext, SimpleResolutionLowTerms)
{
    for (int a = 1; a <= 3; ++a) {
        auto tab = simple_resolution_table(3, 3, a, 1);
        int t0 = 0, t1 = 0;
        for (auto& e : tab) {
            if (e.t == 0) {
                ++t0;
                EXPECT_EQ(e.vertex, a);
                EXPECT_EQ(e.summand.twist, 0);
            } else {
                ++t1;
                EXPECT_EQ(e.summand.twist, 1);
                EXPECT_TRUE(e.vertex == a - 1 || e.vertex == a + 1);
                EXPECT_EQ(e.summand.dim, 3);
            }
        }
        EXPECT_EQ(t0, 1);
        EXPECT_EQ(t1, (a > 1) + (a < 3));
    }
}
