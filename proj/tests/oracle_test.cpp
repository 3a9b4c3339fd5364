#include "tcpd/errors.hpp"
#include "tcpd/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tcpd {
namespace {

const PrimeField gf2(2);

TEST(Oracle, SmallField) {
    EXPECT_EQ(oracle_rank(Tensor<PrimeField>(gf2, {2, 2, 2}), 2).rank, std::optional<std::size_t>(0));
    const auto id = testing::field_tensor(gf2, {2, 2}, {1, 0, 0, 1});
    const auto r = oracle_rank(id, 2);
    EXPECT_EQ(r.rank, std::optional<std::size_t>(2));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(cpd_eval(*r.witness), id);
    EXPECT_EQ(oracle_rank(testing::w_tensor(gf2), 3).rank, std::optional<std::size_t>(3));
    EXPECT_FALSE(oracle_rank(testing::w_tensor(gf2), 2).rank.has_value());
}

TEST(Oracle, BorderRing) {
    const BorderRing ring(gf2, 2);
    const auto x = ring.x_power(1);
    Tensor<BorderRing> xi(ring, {2, 2});
    xi[0] = x;
    xi[3] = x;
    EXPECT_EQ(oracle_border_rank(xi, 2).rank, std::optional<std::size_t>(2));

    // x * (1,1) (1,0)^T
    Tensor<BorderRing> rank1(ring, {2, 2});
    rank1[0] = x;
    rank1[2] = x;
    const auto r = oracle_border_rank(rank1, 2);
    EXPECT_EQ(r.rank, std::optional<std::size_t>(1));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(cpd_eval(*r.witness), rank1);

    EXPECT_EQ(oracle_border_rank(embed_scaled(testing::w_tensor(gf2), ring, 1), 3).rank,
              std::optional<std::size_t>(2));
}

TEST(Oracle, RefusesHugeSearches) {
    const PrimeField f7(7);
    const auto ones = testing::field_tensor(f7, {2, 2, 2}, std::vector<std::int64_t>(8, 1));
    EXPECT_EQ(oracle_rank(ones, 1).rank, std::optional<std::size_t>(1));
    Tensor<PrimeField> diag(f7, {2, 2, 2});
    diag[0] = 1;
    diag[7] = 1;
    EXPECT_THROW(oracle_rank(diag, 2), TooLarge);
    EXPECT_THROW(oracle_rank(Tensor<PrimeField>(f7, {3, 3, 3}, std::vector<PrimeField::Elem>(27, 1)), 1), TooLarge);
}

} // namespace
} // namespace tcpd
