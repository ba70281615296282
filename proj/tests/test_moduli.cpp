#include "detsing/detsing.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace detsing;

namespace {

ModuliPoint standard_point(int m, int n, const QMat& beta)
{
    QMat alpha = zero_matrix(m - 1, m);
    for (int k = 0; k < m - 1; ++k) alpha[k][k] = 1;
    return {alpha, beta};
}

} // namespace

TEST(Moduli, BuildRepDimensions)
{
    auto rep = build_rep(standard_point(3, 4, {{1, 0, 2, 0}, {0, 1, 0, 1}}));
    EXPECT_EQ(rep.dim(1), 1u);
    EXPECT_EQ(rep.dim(2), 2u);
    EXPECT_EQ(rep.dim(3), 1u);
    EXPECT_TRUE(check_relations(rep).empty());
}

TEST(Moduli, ZeroBeta)
{
    auto pt = standard_point(3, 3, zero_matrix(2, 3));
    auto rep = build_rep(pt);
    for (auto& gj : rep.g)
        for (auto& map : gj) EXPECT_TRUE(is_zero_matrix(map));
    EXPECT_TRUE(check_relations(rep).empty());
    EXPECT_FALSE(is_simple(rep));
    EXPECT_LT(rank(associated_matrix(pt)), 2u);
}

TEST(Moduli, PerturbationIsDetected)
{
    auto rep = build_rep(standard_point(3, 3, {{1, 2, 0}, {0, 1, 1}}));
    rep.g[0][1][0][0] += 1;
    EXPECT_FALSE(check_relations(rep).empty());
}

TEST(Moduli, RandomMatricesBreakRelations)
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(-2, 2);
    auto rep = build_rep(standard_point(3, 3, {{1, 0, 0}, {0, 1, 0}}));
    int broken = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto r = rep;
        for (auto* arrows : {&r.lambda, &r.g})
            for (auto& per : *arrows)
                for (auto& map : per)
                    for (auto& row : map)
                        for (auto& v : row) v = d(rng);
        broken += !check_relations(r).empty();
    }
    EXPECT_GE(broken, 18);
}

TEST(Moduli, ScalarActionIsAssociatedMatrix)
{
    auto pt = standard_point(3, 3, {{1, 2, 0}, {0, 1, 1}});
    auto sc = scalar_action(build_rep(pt));
    ASSERT_TRUE(sc.has_value());
    EXPECT_EQ(*sc, associated_matrix(pt));
}

TEST(Moduli, ReconstructRoundTrip)
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        auto pt = random_point(3, 4, rng);
        auto rep = build_rep(pt);
        auto rc = reconstruct(rep);
        EXPECT_TRUE(verify_reconstruction(rep, rc));
        auto a = normalize_point(pt), b = normalize_point(rc.point);
        EXPECT_EQ(a.alpha, b.alpha);
        EXPECT_EQ(a.beta, b.beta);
    }
}

TEST(Moduli, ReconstructRejectsZeroRep)
{
    auto rep = build_rep(standard_point(3, 3, {{1, 0, 0}, {0, 1, 0}}));
    for (auto* arrows : {&rep.lambda, &rep.g})
        for (auto& per : *arrows)
            for (auto& map : per)
                for (auto& row : map)
                    for (auto& v : row) v = 0;
    EXPECT_THROW(reconstruct(rep), std::invalid_argument);
}

TEST(Moduli, SimplicityCriterion)
{
    std::mt19937_64 rng(4);
    int simple = 0, total = 200;
    for (int k = 0; k < total; ++k) {
        auto pt = random_point(3, 4, rng);
        bool s = is_simple(build_rep(pt));
        EXPECT_EQ(s, rank(pt.beta) == 2u);
        EXPECT_EQ(s, rank(associated_matrix(pt)) == 2u);
        simple += s;
    }
    EXPECT_GT(simple, 0);
    EXPECT_LT(simple, total);
    EXPECT_TRUE(is_simple(build_rep(standard_point(3, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}))));
}

TEST(Moduli, SeededPointsAreDeterministic)
{
    std::mt19937_64 a(99), b(99);
    for (int k = 0; k < 10; ++k) {
        auto p = random_point(3, 3, a), q = random_point(3, 3, b);
        EXPECT_EQ(p.alpha, q.alpha);
        EXPECT_EQ(p.beta, q.beta);
    }
}
