#include "tcpd/border_ring.hpp"
#include "tcpd/errors.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace tcpd {
namespace {

Poly poly(const BorderRing& r, std::vector<std::int64_t> c) { return r.from_coeffs(c); }

TEST(BorderRing, RejectsBadExponent) {
    EXPECT_THROW(BorderRing(PrimeField(2), 0), InvalidArgument);
    EXPECT_THROW(BorderRing(PrimeField(2), kMaxExponent + 1), InvalidArgument);
    EXPECT_THROW(BorderRing(PrimeField(2), 2).from_coeffs(std::vector<std::int64_t>{1, 0, 1}), InvalidArgument);
}

TEST(BorderRing, ArithmeticExamples) {
    const BorderRing r2(PrimeField(2), 2);
    EXPECT_EQ(r2.mul(poly(r2, {1, 1}), poly(r2, {1, 1})), r2.one());
    const BorderRing r3(PrimeField(2), 3);
    EXPECT_EQ(r3.mul(r3.x_power(1), r3.x_power(1)), r3.x_power(2));
    const BorderRing g3(PrimeField(3), 2);
    EXPECT_EQ(g3.add(poly(g3, {1, 1}), poly(g3, {2, 2})), g3.zero());
    EXPECT_EQ(g3.sub(poly(g3, {0, 1}), poly(g3, {1, 0})), poly(g3, {2, 1}));
}

TEST(BorderRing, UnitsAndInverse) {
    const BorderRing r(PrimeField(2), 3);
    EXPECT_TRUE(r.is_unit(poly(r, {1, 1})));
    EXPECT_FALSE(r.is_unit(r.x_power(1)));
    EXPECT_FALSE(r.is_unit(r.zero()));
    EXPECT_EQ(r.inv(poly(r, {1, 1})), poly(r, {1, 1, 1}));
    EXPECT_EQ(r.inv(r.one()), r.one());
    EXPECT_THROW(BorderRing(PrimeField(2), 2).inv(BorderRing(PrimeField(2), 2).x_power(1)), NotAUnit);
}

TEST(BorderRing, Valuation) {
    const BorderRing r3(PrimeField(2), 3);
    EXPECT_EQ(r3.valuation(poly(r3, {0, 1, 1})), 1);
    EXPECT_EQ(r3.valuation(poly(r3, {1, 1})), 0);
    const BorderRing r2(PrimeField(2), 2);
    EXPECT_EQ(r2.valuation(r2.zero()), 2);
}

TEST(BorderRing, ShiftsUndoEachOther) {
    const BorderRing r(PrimeField(5), 4);
    for (std::uint64_t i = 0; i < r.size(); i += 7) {
        const auto a = r.element(i);
        const int v = r.valuation(a);
        if (v == r.exponent()) continue;
        EXPECT_EQ(r.shift_up(r.shift_down(a, v), v), a);
        EXPECT_TRUE(r.is_unit(r.shift_down(a, v)));
        EXPECT_EQ(r.shift_up(a, 1), r.mul(a, r.x_power(1)));
    }
}

TEST(BorderRing, ElementEnumerationIsABijection) {
    const BorderRing r(PrimeField(3), 3);
    std::vector<Poly> seen;
    for (std::uint64_t i = 0; i < r.size(); ++i) seen.push_back(r.element(i));
    EXPECT_EQ(seen.front(), r.zero());
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) ASSERT_FALSE(seen[i] == seen[j]);
}

// Ring axioms on all triples of GF(2)[x]/(x^H), H <= 3.
TEST(BorderRing, AxiomsExhaustiveGf2) {
    for (int h = 1; h <= 3; ++h) {
        const BorderRing r(PrimeField(2), h);
        const auto n = r.size();
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto a = r.element(i);
            EXPECT_EQ(r.add(a, r.zero()), a);
            EXPECT_EQ(r.mul(a, r.one()), a);
            EXPECT_EQ(r.add(a, r.neg(a)), r.zero());
            for (std::uint64_t j = 0; j < n; ++j) {
                const auto b = r.element(j);
                EXPECT_EQ(r.mul(a, b), r.mul(b, a));
                EXPECT_EQ(r.add(a, b), r.add(b, a));
                EXPECT_EQ(r.valuation(r.mul(a, b)), std::min(r.valuation(a) + r.valuation(b), h));
                for (std::uint64_t k = 0; k < n; ++k) {
                    const auto c = r.element(k);
                    ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                    ASSERT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
                    ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                }
            }
        }
    }
}

TEST(BorderRing, ValuationOfProductGf3) {
    const BorderRing r(PrimeField(3), 3);
    for (std::uint64_t i = 0; i < r.size(); ++i)
        for (std::uint64_t j = 0; j < r.size(); ++j) {
            const auto a = r.element(i), b = r.element(j);
            ASSERT_EQ(r.valuation(r.mul(a, b)), std::min(r.valuation(a) + r.valuation(b), 3));
        }
}

} // namespace
} // namespace tcpd
