#include "tcpd/axis_reduce.hpp"
#include "tcpd/oracle.hpp"
#include "tcpd/search.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tcpd {
namespace {

using testing::w_tensor;

const PrimeField gf2(2);

Tensor<BorderRing> x_identity(const BorderRing& ring, std::size_t n, int h) {
    Tensor<BorderRing> t(ring, {n, n});
    for (std::size_t i = 0; i < n; ++i) t[i * n + i] = ring.x_power(h);
    return t;
}

TEST(BorderDfs, BorderCpdOfWTensor) {
    const BorderRing ring(gf2, 2);
    const auto xw = embed_scaled(w_tensor(gf2), ring, 1);
    const auto out = border_dfs(xw, 2);
    ASSERT_TRUE(out.found());
    EXPECT_EQ(out.certificate->rank(), 2u);
    EXPECT_EQ(cpd_eval(*out.certificate), xw);

    const auto pruned = border_dfs(xw, 1);
    EXPECT_TRUE(pruned.exhausted());
    EXPECT_TRUE(pruned.stats.pruned);
}

TEST(BorderDfs, XPowerIdentityCannotDropRank) {
    for (int big_h = 1; big_h <= 3; ++big_h) {
        const BorderRing ring(gf2, big_h);
        for (int h = 0; h < big_h; ++h)
            for (std::size_t n = 1; n <= 3; ++n) {
                const auto t = x_identity(ring, n, h);
                EXPECT_TRUE(border_dfs(t, n - 1).exhausted());
                EXPECT_TRUE(border_dfs(t, n).found());
            }
    }
}

TEST(BorderDfs, ZeroTensor) {
    const BorderRing ring(gf2, 3);
    const auto out = border_dfs(Tensor<BorderRing>(ring, {2, 2, 2}), 0);
    ASSERT_TRUE(out.found());
    EXPECT_EQ(out.certificate->rank(), 0u);
}

TEST(BorderRankAt, Examples) {
    const auto w = w_tensor(gf2);
    EXPECT_EQ(border_rank_at(w, 1, 3).rank, std::optional<std::size_t>(3));
    const auto two = border_rank_at(w, 2, 3);
    EXPECT_EQ(two.rank, std::optional<std::size_t>(2));
    ASSERT_TRUE(two.certificate);
    EXPECT_EQ(cpd_eval(*two.certificate), embed_scaled(w, BorderRing(gf2, 2), 1));
    const auto r1 = outer(gf2, {{1, 0}, {1, 1}, {0, 1}});
    for (int h = 1; h <= 3; ++h) EXPECT_EQ(border_rank_at(r1, h, 2).rank, std::optional<std::size_t>(1));
    EXPECT_FALSE(border_rank_at(w, 1, 2).rank.has_value());
}

TEST(BorderRankAt, MonotoneInExponent) {
    std::mt19937_64 rng(59);
    for (std::size_t trial = 0; trial < 12; ++trial) {
        const auto t = testing::random_tensor(gf2, {2, 2, 2}, rng);
        std::size_t previous = 4;
        for (int h = 1; h <= 2; ++h) {
            const auto r = border_rank_at(t, h, 3);
            ASSERT_TRUE(r.rank);
            EXPECT_LE(*r.rank, previous);
            previous = *r.rank;
        }
    }
}

TEST(BorderRankAt, ExponentOneMatchesExactRank) {
    std::mt19937_64 rng(61);
    const PrimeField f3(3);
    for (std::size_t trial = 0; trial < 10; ++trial) {
        const auto t = testing::random_tensor(f3, {2, 2, 2}, rng);
        const auto exact = oracle_rank(t, 3);
        EXPECT_EQ(border_rank_at(t, 1, 3).rank, exact.rank);
    }
}

TEST(BorderDfs, RootBranchCountInExhaustedRuns) {
    const BorderRing ring(gf2, 2);
    const auto t = x_identity(ring, 2, 1);
    EXPECT_TRUE(border_dfs(t, 2).found());
    const auto ex = border_dfs(t, 1);
    ASSERT_TRUE(ex.exhausted());
    EXPECT_TRUE(ex.stats.pruned);  // axis-ranks 2 > 1

    // W embedded without a shift keeps rank 3; axis-ranks (2,2,2) are all within R = 2.
    const auto xw = embed_scaled(w_tensor(gf2), ring, 0);
    const auto run = border_dfs(xw, 2);
    ASSERT_TRUE(run.exhausted());
    EXPECT_EQ(run.stats.root_branches, saturating_pow(2, 2 * 6));
}

TEST(BorderDfs, EveryNodeBranchesToFullColumnSpace) {
    const BorderRing ring(gf2, 2);
    const auto xw = embed_scaled(w_tensor(gf2), ring, 0);
    SearchOptions opts;
    std::uint64_t checked = 0;
    opts.node_observer = [&](const NodeReport& node) {
        if (node.pruned || node.found) return;
        std::uint64_t width = 0;
        bool has_zero = false;
        for (auto r : node.axis_ranks) {
            width += r;
            has_zero |= r == 0;
        }
        if (has_zero) return;
        EXPECT_EQ(node.children, saturating_pow(ring.size(), width));
        ++checked;
    };
    EXPECT_TRUE(border_dfs(xw, 2, opts).exhausted());
    EXPECT_GT(checked, 0u);
}

TEST(BorderDfs, SkippingZeroColumnDoesNotChangeAnswers) {
    const BorderRing ring(gf2, 2);
    SearchOptions skip;
    skip.skip_zero_column = true;
    for (std::uint64_t code = 0; code < 256; code += 3) {
        const auto t = testing::ring_tensor_from_code(ring, {2, 2}, code);
        for (std::size_t r = 0; r <= 2; ++r) {
            const auto plain = border_dfs(t, r);
            const auto fast = border_dfs(t, r, skip);
            EXPECT_EQ(plain.found(), fast.found());
            if (fast.found()) EXPECT_EQ(cpd_eval(*fast.certificate), t);
        }
    }
}

TEST(BorderDfs, AgreesWithOracleOnRandomRingTensors) {
    std::mt19937_64 rng(67);
    const BorderRing ring(gf2, 2);
    for (std::size_t trial = 0; trial < 30; ++trial) {
        const auto cpd = testing::random_cpd(ring, {2, 2, 1 + trial % 2}, 1 + trial % 2, rng);
        const auto t = cpd_eval(cpd);
        const auto oracle = oracle_border_rank(t, 2);
        const auto search = min_border_rank(t, 2);
        EXPECT_EQ(search.rank, oracle.rank);
        if (search.certificate) EXPECT_EQ(cpd_eval(*search.certificate), t);
    }
}

TEST(BorderDfs, MultithreadedRootSplit) {
    SearchOptions opts;
    opts.threads = 3;
    const BorderRing ring(gf2, 2);
    const auto xw = embed_scaled(w_tensor(gf2), ring, 1);
    const auto out = border_dfs(xw, 2, opts);
    ASSERT_TRUE(out.found());
    EXPECT_EQ(cpd_eval(*out.certificate), xw);
    const auto w = embed_scaled(w_tensor(gf2), ring, 0);
    const auto ex = border_dfs(w, 2, opts);
    EXPECT_TRUE(ex.exhausted());
    EXPECT_EQ(ex.stats.root_branches, saturating_pow(2, 12));
}

TEST(DfsSearch, CountsRootChildrenThatRecurse) {
    const auto out = dfs_search(w_tensor(gf2), 2);
    ASSERT_TRUE(out.exhausted());
    EXPECT_EQ(out.stats.root_branches, 64u);
    // A child within budget would have all axis-ranks <= 1, hence rank <= 1.
    EXPECT_EQ(out.stats.root_children_recursed, 0u);

    const auto id = testing::field_tensor(gf2, {3, 3}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto deep = dfs_search(id, 3);
    ASSERT_TRUE(deep.found());
    EXPECT_GT(deep.stats.root_children_recursed, 0u);
    EXPECT_LE(deep.stats.root_children_recursed, deep.stats.root_branches);
}

} // namespace
} // namespace tcpd
