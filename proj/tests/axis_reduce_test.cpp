#include "tcpd/axis_reduce.hpp"
#include "tcpd/linalg.hpp"
#include "tcpd/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tcpd {
namespace {

using testing::w_tensor;

const PrimeField gf2(2);

template <ScalarRing Ring>
void expect_reduction_invariants(const Tensor<Ring>& t, const AxisReduction<Ring>& red) {
    ASSERT_EQ(red.axis_ranks.size(), t.order());
    EXPECT_EQ(red.reduced.shape(), Shape(red.axis_ranks.begin(), red.axis_ranks.end()));
    EXPECT_EQ(expand(red), t);
    auto projected = t;
    for (std::size_t d = 0; d < t.order(); ++d) projected = mode_product(red.projections[d], projected, d);
    EXPECT_EQ(projected, red.reduced);
}

TEST(AxisReduce, FullAxisRankTensor) {
    const auto w = w_tensor(gf2);
    const auto red = axis_reduce(w);
    EXPECT_EQ(red.axis_ranks, (std::vector<std::size_t>{2, 2, 2}));
    expect_reduction_invariants(w, red);
}

TEST(AxisReduce, ZeroTensorReducesToEmptyShape) {
    const Tensor<PrimeField> z(gf2, {2, 3, 2});
    const auto red = axis_reduce(z);
    EXPECT_EQ(red.axis_ranks, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(red.reduced.size(), 0u);
    expect_reduction_invariants(z, red);
    const auto lifted = lift_cpd(red, Cpd<PrimeField>::empty(gf2, red.reduced.shape()));
    EXPECT_EQ(lifted.shape(), z.shape());
    EXPECT_EQ(lifted.rank(), 0u);
    EXPECT_EQ(cpd_eval(lifted), z);
}

TEST(AxisReduce, RankOneMatrix) {
    const auto t = outer(gf2, {{1, 1}, {1, 0}});
    const auto red = axis_reduce(t);
    EXPECT_EQ(red.axis_ranks, (std::vector<std::size_t>{1, 1}));
    expect_reduction_invariants(t, red);
}

TEST(AxisReduce, InvariantsAndLiftOnRandomLowRankTensors) {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (std::size_t trial = 0; trial < 40; ++trial) {
            const Shape shape{2 + trial % 3, 3, 2 + trial % 2};
            const auto cpd = testing::random_cpd(f, shape, 1 + trial % 3, rng);
            const auto t = cpd_eval(cpd);
            const auto red = axis_reduce(t);
            expect_reduction_invariants(t, red);
            for (std::size_t d = 0; d < t.order(); ++d) EXPECT_EQ(red.axis_ranks[d], matrix_rank(unfold(t, d)));
            // Project the known CPD down, then lift it back.
            Cpd<PrimeField> down;
            for (std::size_t d = 0; d < t.order(); ++d) down.factors.push_back(multiply(red.projections[d], cpd.factors[d]));
            EXPECT_EQ(cpd_eval(down), red.reduced);
            EXPECT_EQ(cpd_eval(lift_cpd(red, down)), t);
            // Idempotence.
            const auto again = axis_reduce(red.reduced);
            EXPECT_EQ(again.axis_ranks, red.axis_ranks);
        }
    }
}

TEST(AxisReduce, IdentityReductionLeavesFactorsUnchanged) {
    // An identity-shaped tensor whose rref transforms are all identities.
    const auto t = testing::field_tensor(gf2, {2, 2}, {1, 0, 0, 1});
    const auto red = axis_reduce(t);
    EXPECT_EQ(red.reduced, t);
    Cpd<PrimeField> cpd;
    cpd.factors.push_back(Matrix<PrimeField>::identity(gf2, 2));
    cpd.factors.push_back(Matrix<PrimeField>::identity(gf2, 2));
    EXPECT_EQ(lift_cpd(red, cpd), cpd);
    EXPECT_THROW(lift_cpd(red, Cpd<PrimeField>::empty(gf2, Shape{3, 2})), ShapeMismatch);
}

TEST(AxisReduce, RankPreservedExhaustive2x2x2) {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const auto t = testing::tensor_from_code(gf2, {2, 2, 2}, code);
        const auto red = axis_reduce(t);
        const auto direct = oracle_rank(t, 3);
        if (red.reduced.size() == 0) {
            EXPECT_EQ(direct.rank, std::optional<std::size_t>(0));
            continue;
        }
        EXPECT_EQ(oracle_rank(red.reduced, 3).rank, direct.rank) << "code " << code;
    }
}

TEST(AxisReduce, PruningIsSoundOnSmallInstances) {
    std::mt19937_64 rng(21);
    for (std::size_t trial = 0; trial < 60; ++trial) {
        const auto t = testing::random_tensor(gf2, {3, 2, 2}, rng);
        const auto red = axis_reduce(t);
        const std::size_t widest = *std::max_element(red.axis_ranks.begin(), red.axis_ranks.end());
        if (widest == 0) continue;
        // Some axis-rank exceeds widest - 1, so no CPD of that rank may exist.
        const auto oracle = oracle_rank(t, widest - 1);
        EXPECT_FALSE(oracle.rank.has_value());
    }
}

TEST(BorderAxisReduce, Examples) {
    const BorderRing ring(gf2, 2);
    Tensor<BorderRing> xi(ring, {2, 2});
    xi[0] = xi[3] = ring.x_power(1);
    const auto red = border_axis_reduce(xi);
    EXPECT_EQ(red.axis_ranks, (std::vector<std::size_t>{2, 2}));
    expect_reduction_invariants(xi, red);

    const auto xw = embed_scaled(w_tensor(gf2), ring, 1);
    const auto redw = border_axis_reduce(xw);
    EXPECT_EQ(redw.axis_ranks, (std::vector<std::size_t>{2, 2, 2}));
    expect_reduction_invariants(xw, redw);

    const Tensor<BorderRing> z(ring, {2, 2, 3});
    const auto redz = border_axis_reduce(z);
    EXPECT_EQ(redz.axis_ranks, (std::vector<std::size_t>{0, 0, 0}));
    expect_reduction_invariants(z, redz);
}

TEST(BorderAxisReduce, InvariantsOnRandomRingTensors) {
    std::mt19937_64 rng(17);
    for (int h = 1; h <= 3; ++h) {
        const BorderRing ring(PrimeField(3), h);
        for (std::size_t trial = 0; trial < 25; ++trial) {
            const Shape shape{2, 2 + trial % 2, 2};
            const auto cpd = testing::random_cpd(ring, shape, 1 + trial % 2, rng);
            const auto t = cpd_eval(cpd);
            const auto red = border_axis_reduce(t);
            expect_reduction_invariants(t, red);
            Cpd<BorderRing> down;
            for (std::size_t d = 0; d < t.order(); ++d) down.factors.push_back(multiply(red.projections[d], cpd.factors[d]));
            EXPECT_EQ(cpd_eval(lift_cpd(red, down)), t);
        }
    }
}

} // namespace
} // namespace tcpd
