#include "tcpd/linalg.hpp"
#include "tcpd/oracle.hpp"
#include "tcpd/rank1.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tcpd {
namespace {

const PrimeField gf2(2);

TEST(TryRank1, Examples) {
    const auto zero = try_rank1(Tensor<PrimeField>(gf2, {2, 2, 2}));
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->rank(), 0u);
    EXPECT_EQ(zero->shape(), (Shape{2, 2, 2}));

    const auto t = outer(gf2, {{1, 1}, {0, 1}, {1, 1}});
    const auto cpd = try_rank1(t);
    ASSERT_TRUE(cpd);
    EXPECT_EQ(cpd->rank(), 1u);
    EXPECT_EQ(cpd_eval(*cpd), t);

    EXPECT_FALSE(try_rank1(testing::w_tensor(gf2)));
}

TEST(TryRank1, OrderOneTensorsAreRankOne) {
    const PrimeField f(5);
    const auto t = testing::field_tensor(f, {4}, {0, 3, 0, 2});
    const auto cpd = try_rank1(t);
    ASSERT_TRUE(cpd);
    EXPECT_EQ(cpd_eval(*cpd), t);
}

TEST(TryRank1, RoundTripAndUnfoldingCriterion) {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const PrimeField f(p);
        for (std::size_t trial = 0; trial < 100; ++trial) {
            const Shape shape{1 + trial % 3, 2, 1 + trial % 4};
            const auto t = trial % 2 ? cpd_eval(testing::random_cpd(f, shape, 1, rng)) : testing::random_tensor(f, shape, rng);
            bool unfold_rank_le1 = true;
            for (std::size_t d = 0; d < t.order(); ++d) unfold_rank_le1 &= matrix_rank(unfold(t, d)) <= 1;
            const auto cpd = try_rank1(t);
            EXPECT_EQ(cpd.has_value(), unfold_rank_le1);
            if (cpd) EXPECT_EQ(cpd_eval(*cpd), t);
        }
    }
}

TEST(TryRank1, CompleteOnExhaustive2x2x2) {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const auto t = testing::tensor_from_code(gf2, {2, 2, 2}, code);
        const auto oracle = oracle_rank(t, 1);
        const auto cpd = try_rank1(t);
        EXPECT_EQ(cpd.has_value(), oracle.rank.has_value()) << "code " << code;
        if (cpd) EXPECT_EQ(cpd_eval(*cpd), t);
    }
}

TEST(TryRank1Border, Examples) {
    const BorderRing ring(gf2, 2);
    const auto t = embed_scaled(outer(gf2, {{1, 1}, {1, 0}}), ring, 1);
    const auto cpd = try_rank1_border(t);
    ASSERT_TRUE(cpd);
    EXPECT_EQ(cpd->rank(), 1u);
    EXPECT_EQ(cpd_eval(*cpd), t);

    const auto zero = try_rank1_border(Tensor<BorderRing>(ring, {2, 2}));
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->rank(), 0u);

    Tensor<BorderRing> xi(ring, {2, 2});
    xi[0] = xi[3] = ring.x_power(1);
    EXPECT_FALSE(try_rank1_border(xi));
}

TEST(TryRank1Border, SoundAndCompleteOnRandomRingTensors) {
    std::mt19937_64 rng(29);
    for (int h = 1; h <= 3; ++h) {
        const BorderRing ring(PrimeField(3), h);
        for (std::size_t trial = 0; trial < 80; ++trial) {
            const Shape shape{2, 1 + trial % 3, 2};
            const auto t = trial % 2 ? cpd_eval(testing::random_cpd(ring, shape, 1, rng))
                                     : testing::random_tensor(ring, shape, rng);
            const auto cpd = try_rank1_border(t);
            if (trial % 2) EXPECT_TRUE(cpd.has_value());
            if (cpd) {
                EXPECT_LE(cpd->rank(), 1u);
                EXPECT_EQ(cpd_eval(*cpd), t);
            }
        }
    }
}

TEST(TryRank1Border, MatchesOracleExhaustive2x2) {
    const BorderRing ring(gf2, 2);
    for (std::uint64_t code = 0; code < 256; ++code) {
        const auto t = testing::ring_tensor_from_code(ring, {2, 2}, code);
        EXPECT_EQ(try_rank1_border(t).has_value(), oracle_border_rank(t, 1).rank.has_value()) << code;
    }
}

} // namespace
} // namespace tcpd
