#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gbs/error.hpp"
#include "gbs/zmod.hpp"
#include "oracles.hpp"

using namespace gbs;

TEST(zmod, sigma_known_values) {
    EXPECT_EQ(make_ring(6).sigma(), 12);
    EXPECT_EQ(make_ring(16).sigma(), 31);
    const auto r2 = make_ring(2);
    EXPECT_EQ(r2.divisors(), (std::vector<std::int64_t>{1, 2}));
    EXPECT_EQ(r2.sigma(), 3);
}

TEST(zmod, divisors_sorted_and_complete) {
    for (std::int64_t d = 2; d <= 1000; ++d) {
        const auto ring = make_ring(d);
        const auto &div = ring.divisors();
        ASSERT_EQ(div.front(), 1);
        ASSERT_EQ(div.back(), d);
        ASSERT_TRUE(std::is_sorted(div.begin(), div.end()));
        ASSERT_EQ(std::adjacent_find(div.begin(), div.end()), div.end());
        std::size_t count = 0;
        for (std::int64_t k = 1; k <= d; ++k) count += (d % k == 0);
        ASSERT_EQ(div.size(), count) << d;
        for (auto k : div) ASSERT_EQ(d % k, 0);
        ASSERT_EQ(ring.sigma(), std::accumulate(div.begin(), div.end(), std::int64_t{0}));
    }
}

TEST(zmod, sigma_matches_factorization_product) {
    for (std::int64_t d = 2; d <= 1000; ++d) {
        ASSERT_EQ(make_ring(d).sigma(), ref::sigma_by_factorization(d)) << d;
    }
}

TEST(zmod, invalid_dimension) {
    for (std::int64_t d : {-3, 0, 1}) {
        try {
            make_ring(d);
            FAIL() << "accepted d=" << d;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidDimension);
        }
    }
    EXPECT_THROW(make_ring(std::int64_t{1} << 40), Error);
}

TEST(zmod, reduce_is_canonical) {
    const auto ring = make_ring(8);
    EXPECT_EQ(ring.reduce(-1), 7);
    EXPECT_EQ(ring.reduce(-16), 0);
    EXPECT_EQ(ring.reduce(17), 1);
    EXPECT_EQ(ring.neg(3), 5);
    EXPECT_EQ(ring.neg(0), 0);
    EXPECT_EQ(ring.mul(5, 7), 3);
}

TEST(zmod, gcd_bezout_examples) {
    auto r = gcd_bezout(6, 8);
    EXPECT_EQ(r.g, 2);
    EXPECT_EQ(r.q * 6 + r.r * 8, 2);
    EXPECT_EQ(gcd_bezout(5, 8).g, 1);
    r = gcd_bezout(0, 7);
    EXPECT_EQ(r.g, 7);
    EXPECT_EQ(r.q, 0);
    EXPECT_EQ(r.r, 1);
    r = gcd_bezout(-4, 6);
    EXPECT_EQ(r.g, 2);
    EXPECT_EQ(r.q * -4 + r.r * 6, 2);
}

TEST(zmod, gcd_bezout_zero_zero) {
    try {
        gcd_bezout(0, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UndefinedGcd);
    }
}

TEST(zmod, gcd_bezout_property) {
    std::mt19937_64 rng(20211);
    std::uniform_int_distribution<std::int64_t> pick(-1'000'000, 1'000'000);
    for (int trial = 0; trial < 200'000; ++trial) {
        const auto a = pick(rng), b = pick(rng);
        if (a == 0 && b == 0) continue;
        const auto r = gcd_bezout(a, b);
        ASSERT_GT(r.g, 0);
        ASSERT_EQ(a % r.g, 0);
        ASSERT_EQ(b % r.g, 0);
        ASSERT_EQ(r.q * a + r.r * b, r.g) << a << ' ' << b;
        ASSERT_EQ(r.g, std::gcd(a, b));
    }
}

TEST(zmod, is_unit_examples) {
    EXPECT_TRUE(is_unit(3, make_ring(8)));
    EXPECT_FALSE(is_unit(2, make_ring(8)));
    EXPECT_FALSE(is_unit(0, make_ring(5)));
    EXPECT_TRUE(is_unit(1, make_ring(2)));
}
