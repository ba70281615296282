#include "detsing/detsing.hpp"

#include <gtest/gtest.h>

using namespace detsing;

TEST(Cohomology, DualTriple)
{
    EXPECT_EQ(dual_triple(3, 1, 2, 5), std::make_tuple(2, 3, 5));
    EXPECT_EQ(dual_triple(5, 4, 4, 0), std::make_tuple(2, 2, 0));
    for (int m = 1; m <= 4; ++m)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                auto [a2, b2, c2] = dual_triple(m, a, b, 1);
                EXPECT_EQ(dual_triple(m, a2, b2, c2), std::make_tuple(a, b, 1));
            }
}

TEST(Cohomology, DirectImageExamples)
{
    auto e = direct_image(3, 2, 2, 1);
    EXPECT_FALSE(e.vanishes);
    EXPECT_EQ(e.nu, 1);
    EXPECT_EQ(e.rank, 3);
    EXPECT_EQ(e.descriptor, "F^∨_1");
    for (int m = 1; m <= 5; ++m)
        for (int a = 1; a <= m; ++a) {
            auto d = direct_image(m, a, a, 0);
            EXPECT_EQ(d.nu, 0);
            EXPECT_EQ(d.rank, 1);
        }
    auto p1 = direct_image(2, 1, 2, -1);
    EXPECT_EQ(p1.nu, 0);
    EXPECT_EQ(p1.rank, 3);
}

TEST(Cohomology, RankPolynomialExamples)
{
    auto r = rank_polynomial(2, 2, 2);
    EXPECT_EQ(r.coeffs, (std::vector<Q>{1, 1}));
    EXPECT_EQ(r(0), 1);
    EXPECT_EQ(r(-1), 0);
    EXPECT_EQ(r(-2), -1);
    auto c = rank_polynomial(1, 1, 1);
    EXPECT_EQ(c.coeffs, (std::vector<Q>{1}));
}

TEST(Cohomology, RankPolynomialMatchesSignedRanks)
{
    for (int m = 1; m <= 5; ++m)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                auto r = rank_polynomial(m, a, b);
                for (int c = -(m + 2); c <= 2 * m; ++c) {
                    auto e = direct_image(m, a, b, c);
                    Z chi = e.vanishes ? Z(0) : Z(e.nu % 2 ? -e.rank : e.rank);
                    EXPECT_EQ(r(Q(-c)), Q(chi)) << m << a << b << c;
                }
            }
}

TEST(Cohomology, VanishingWindows)
{
    EXPECT_TRUE(vanishing_window(3, 2, 1, -1, 0));
    EXPECT_FALSE(vanishing_window(3, 2, 1, -1, 1));
    EXPECT_FALSE(vanishing_window(3, 1, 1, 5, 1));
    for (int m = 1; m <= 4; ++m)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                for (int c = -(m + 2); c <= 2 * m; ++c) {
                    int open = 0;
                    for (int d = 0; d < m; ++d) open += vanishing_window(m, a, b, c, d);
                    EXPECT_LE(open, 1);
                    auto e = direct_image(m, a, b, c);
                    if (!e.vanishes) EXPECT_TRUE(vanishing_window(m, a, b, c, e.nu));
                }
}

TEST(Cohomology, RejectsBadTriples)
{
    EXPECT_THROW(direct_image(3, 0, 1, 0), std::out_of_range);
    EXPECT_THROW(direct_image(3, 1, 4, 0), std::out_of_range);
}
