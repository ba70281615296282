#include "detsing/detsing.hpp"

#include <gtest/gtest.h>

using namespace detsing;

TEST(Oracle, HilbertOfM)
{
    RingContext ctx(2, 2);
    EXPECT_EQ(hilbert_M(ctx, 1, -1), 0);
    EXPECT_EQ(hilbert_M(ctx, 1, 0), 2);
    for (int d = 0; d <= 5; ++d) {
        EXPECT_EQ(hilbert_M(ctx, 1, d), 2 * binom(d + 3, 3) - 2 * binom(d + 2, 3)) << d;
        EXPECT_EQ(hilbert_M(ctx, 2, d), binom(d + 3, 3) - binom(d + 1, 3)) << d;
    }
}

TEST(Oracle, HomMatchesPresentationAt22)
{
    RingContext ctx(2, 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            auto pr = presentation(ctx, a, b);
            for (int d = 0; d <= 6; ++d) EXPECT_EQ(presentation_hilbert(pr, d), hilbert_hom(ctx, a, b, d)) << a << b << d;
        }
}

TEST(Oracle, RedundantPresentationGivesSameHom)
{
    RingContext ctx(2, 2);
    for (int b = 1; b <= 2; ++b)
        for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_hom_redundant(ctx, 1, b, d), hilbert_hom(ctx, 1, b, d));
}

TEST(Oracle, FreeModuleBetti)
{
    RingContext ctx(2, 2);
    GradedFreeModule target;
    target.gens.push_back({"e0", 0, zero_weight(ctx)});
    Exps e(ctx.nvars(), 0);
    e[ctx.var(1, 1)] = 1;
    target.gens.push_back({"e1", 1, weight_of_monomial(ctx, e)});
    CokernelModule free(PolyMatrix{ctx, {}, target, {}});
    auto b = minimal_betti(free, 3, 4);
    EXPECT_EQ(b.at(0, 0), 1);
    EXPECT_EQ(b.at(0, 1), 1);
    EXPECT_EQ(b.total(0), 2);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(b.total(i), 0);
    EXPECT_EQ(b.projective_dimension(), 0);
}

TEST(Oracle, BettiOfMMatchesBuchsbaumRim)
{
    RingContext ctx(2, 3);
    auto m1 = module_M(ctx, 1);
    auto b = minimal_betti(*m1, 3, 5);
    EXPECT_EQ(b.total(0), 2);
    EXPECT_EQ(b.total(1), 3);
    EXPECT_EQ(b.total(2), 1);
    EXPECT_EQ(b.total(3), 0);
    for (int d = 0; d <= 5; ++d) EXPECT_EQ(betti_hilbert(ctx, b, d), hilbert_M(ctx, 1, d));
}

TEST(Oracle, SymmetryReductionIsExact)
{
    RingContext ctx(2, 3);
    for (int d = 0; d <= 4; ++d) {
        CokernelModule a(presentation(ctx, 1, 2).rho, false), s(presentation(ctx, 1, 2).rho, true);
        EXPECT_EQ(hilbert_function(a, d), hilbert_function(s, d));
    }
}
