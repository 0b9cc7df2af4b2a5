#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dcl/bounds.hpp"

using namespace dcl;

TEST(Threshold, FirstTwoPeriods) {
    // Exact values from (6911t^2 + 1028882t - 3309665)/16, computed with
    // arbitrary-precision integers outside this code base.
    EXPECT_EQ(n_threshold(27889), 337752597179);
    EXPECT_EQ(n_threshold(55609), 1339282364879);
    Wide t = 27889;
    EXPECT_EQ(Wide(16) * n_threshold(27889) + 3309665 - 1028882 * t - 6911 * t * t, 0);
}

TEST(Threshold, RejectsInvalidT) {
    EXPECT_THROW(n_threshold(169), InvalidT);
    EXPECT_THROW(n_threshold(170), InvalidT);
    EXPECT_THROW(n_threshold(27890), InvalidT);
}

TEST(Threshold, DivisibleBySixteenForR1To1000) {
    for (Int r = 1; r <= 1000; ++r) {
        EXPECT_EQ(n_threshold_times16(t_for(r)) % 16, 0) << "r=" << r;
        EXPECT_NO_THROW(n_threshold(t_for(r)));
    }
}

TEST(LaiLower, Boundaries) {
    const Int n1 = n_threshold(27889);
    auto b = lai_lower(n1);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->t, 27889);
    EXPECT_EQ(b->bound, n1 + 892447);
    EXPECT_FALSE(lai_lower(n1 - 1).has_value());
    EXPECT_FALSE(lai_lower(10).has_value());

    const Int n2 = n_threshold(55609);
    EXPECT_EQ(lai_lower(n2)->t, 55609);
    EXPECT_EQ(lai_lower(n2 - 1)->t, 27889);
}

TEST(LaiLower, MonotoneInN) {
    std::mt19937_64 rng(4);
    const Int lo = n_threshold(27889) - 1000;
    const Int hi = n_threshold(t_for(40));
    std::uniform_int_distribution<Int> dist(lo, hi);
    std::vector<Int> ns(300);
    for (auto& n : ns) n = dist(rng);
    std::sort(ns.begin(), ns.end());
    Int prev_t = 0;
    Int prev_bound = 0;
    for (Int n : ns) {
        auto b = lai_lower(n);
        Int t = b ? b->t : 0;
        Int bound = b ? b->bound : 0;
        EXPECT_GE(t, prev_t);
        EXPECT_GE(bound, prev_bound);
        if (b) {
            EXPECT_LE(n_threshold(t), n);
            EXPECT_GT(n_threshold_wide(t + kPeriod), Wide(n));
        }
        prev_t = t;
        prev_bound = bound;
    }
}

TEST(Shi, Values) {
    EXPECT_EQ(shi_lower(3), 4);
    EXPECT_EQ(shi_lower(16), 21);  // floor((sqrt(105)+1)/2) = 5
    EXPECT_THROW(shi_lower(2), NTooSmall);
}

TEST(Shi, FloorAgreesWithExactSquares) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Int> dist(3, Int{1} << 58);
    for (int k = 0; k < 5000; ++k) {
        Int n = k < 1000 ? 3 + k : dist(rng);
        Int f = shi_lower(n) - n;
        Wide d = Wide(8) * n - 23;
        // f = floor((sqrt(d)+1)/2)  <=>  (2f-1)^2 <= d < (2f+1)^2
        EXPECT_LE(Wide(2 * f - 1) * (2 * f - 1), d) << n;
        EXPECT_LT(d, Wide(2 * f + 1) * (2 * f + 1)) << n;
    }
}

TEST(Isqrt, Exact) {
    for (Int v = 0; v < 10000; ++v) {
        Int s = isqrt(v);
        EXPECT_LE(s * s, v);
        EXPECT_GT((s + 1) * (s + 1), v);
    }
    EXPECT_EQ(isqrt(std::numeric_limits<Int>::max()), 3037000499);
}

TEST(LaiUpper, MillionScansToLargestValidM) {
    auto u = lai_upper(1'000'000);
    ASSERT_TRUE(u.has_value());
    // m = 6 is the largest m with e^{2m}(2m+3)/4 <= 10^6 (m = 7 gives ~1.5e6).
    EXPECT_EQ(u->m, 6);
    EXPECT_NEAR(static_cast<double>(u->value), 1003824.997996, 1e-4);
}

TEST(LaiUpper, SmallN) {
    auto u = lai_upper(3);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(u->m, 0);
    EXPECT_TRUE(std::isfinite(static_cast<double>(u->value)));
    EXPECT_FALSE(lai_upper(1).has_value());
}

TEST(Liminf, Constant) {
    LiminfConstant c = liminf_constant();
    EXPECT_EQ(c.radicand, Rational(16384, 6911));
    EXPECT_TRUE(c.square_identity);
    EXPECT_GE(c.value, 1.5397L);
    EXPECT_LT(c.value, 1.5398L);
}

TEST(Liminf, AsymptoticConsistency) {
    // (32t - 1) / sqrt(n_t) -> 128 / sqrt(6911) as r grows.
    const Int t = t_for(10'000);
    long double ratio = (32.0L * t - 1) / std::sqrt(static_cast<long double>(n_threshold_wide(t)));
    long double c = liminf_constant().value;
    EXPECT_LT(std::fabs(ratio - c) / c, 1e-3L);
}
