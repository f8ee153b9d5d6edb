#include <gtest/gtest.h>

#include <cmath>

#include "gmed/bounds.hpp"
#include "gmed/error.hpp"
#include "gmed/generators.hpp"
#include "gmed/solvers.hpp"

using namespace gmed;

TEST(Breakdown, Floor)
{
    EXPECT_EQ(breakdown_floor(101), (Fraction{51, 101}));
    EXPECT_EQ(breakdown_floor(101).str(), "51/101");
    EXPECT_EQ(breakdown_floor(4).str(), "2/4");
    EXPECT_THROW(breakdown_floor(0), Error);
    for (std::int64_t n = 1; n <= 2000; ++n) EXPECT_LE(std::abs(breakdown_floor(n).value() - 0.5), 0.5 / n + 1e-15);
}

TEST(Thm1, Examples)
{
    EXPECT_EQ(thm1_bound(4, 1, 1).value, 6.0);
    EXPECT_EQ(thm1_bound(7, 0, 0).value, 0.0);
    EXPECT_EQ(thm1_bound(101, 5, 0).value, 510.0);
    EXPECT_THROW(thm1_bound(4, -1, 0), Error);
    EXPECT_THROW(thm1_bound(4, 1, -1), Error);
    EXPECT_TRUE(thm1_bound(101, 5, 0, 50).applicable);
    const auto out = thm1_bound(101, 5, 0, 51);
    EXPECT_FALSE(out.applicable);
    EXPECT_TRUE(std::isinf(out.value));
    EXPECT_FALSE(out.precondition_note.empty());
}

TEST(Thm2, Examples)
{
    const auto b = thm2_added_bound(4, 1, 4);
    EXPECT_TRUE(b.applicable);
    EXPECT_EQ(b.value, 8.0 / 3.0);
    EXPECT_EQ(thm2_added_bound(10, 0, 7).value, 2.0 * 7 / 10);
    EXPECT_FALSE(thm2_added_bound(4, 4, 1).applicable);
    EXPECT_THROW(thm2_added_bound(4, 1, -1), Error);
}

TEST(Thm3, Examples)
{
    EXPECT_EQ(thm3_replaced_bound(4, 1, 3).value, 6.0);
    EXPECT_EQ(thm3_replaced_bound(10, 0, 5).value, 2.0);
    EXPECT_FALSE(thm3_replaced_bound(4, 2, 3).applicable);
    EXPECT_THROW(thm3_replaced_bound(4, 1, -3), Error);
}

TEST(Thm4, Examples)
{
    EXPECT_EQ(thm4_sod_bound(4, 3, 4).value, 24.0);
    EXPECT_EQ(thm4_sod_bound(4, 0, 4).value, 0.0);
    EXPECT_DOUBLE_EQ(thm4_sod_bound(101, 50, 7.5).value, 100.0 / 51.0 * 7.5);
    EXPECT_FALSE(thm4_sod_bound(4, 4, 4).applicable);
}

TEST(Thm5, Examples)
{
    const std::vector<double> wo(5, 1.0);
    for (double w : {0.5, 1.0, 2.0, 4.5}) {
        const std::vector<double> wp{w};
        EXPECT_DOUBLE_EQ(thm5_weighted_added_bound(wo, wp, 5).value, 10.0 / (5.0 - w));
    }
    EXPECT_DOUBLE_EQ(thm5_weighted_added_bound(wo, std::vector<double>{2.0}, 5).value, 10.0 / 3.0);
    EXPECT_FALSE(thm5_weighted_added_bound(wo, std::vector<double>{5.0}, 5).applicable);
    EXPECT_THROW(thm5_weighted_added_bound(wo, std::vector<double>{0.0}, 5), Error);
}

TEST(Thm5, UnitWeightsReduceToThm2)
{
    for (int n = 2; n <= 20; ++n)
        for (int k = 0; k < n; ++k) {
            const std::vector<double> wo(n, 1.0), wp(k, 1.0);
            EXPECT_DOUBLE_EQ(thm5_weighted_added_bound(wo, wp, 3.5).value, thm2_added_bound(n, k, 3.5).value);
        }
}

TEST(Thm6, Examples)
{
    // Weighted four-ranking set {1,2,1,1}: replacing a weight-1 ranking leaves
    // W_X = 4 and Omega_X = 4; replacing the weight-2 ranking leaves W_X = 3, Omega_X = 3.
    const auto a = thm6_weighted_replaced_bound(std::vector<double>{1, 2, 1}, std::vector<double>{1}, 4);
    EXPECT_DOUBLE_EQ(a.value, 16.0 / 3.0);
    const auto b = thm6_weighted_replaced_bound(std::vector<double>{1, 1, 1}, std::vector<double>{2}, 3);
    EXPECT_EQ(b.value, 12.0);
    EXPECT_FALSE(thm6_weighted_replaced_bound(std::vector<double>{1}, std::vector<double>{1}, 3).applicable);
}

TEST(Thm6, UnitWeightsReduceToThm3)
{
    for (int n = 3; n <= 20; ++n)
        for (int k = 0; 2 * k < n; ++k) {
            const std::vector<double> wx(n - k, 1.0), wp(k, 1.0);
            EXPECT_DOUBLE_EQ(thm6_weighted_replaced_bound(wx, wp, 2.5).value, thm3_replaced_bound(n, k, 2.5).value);
        }
}

TEST(WeightedBreakdown, Examples)
{
    EXPECT_EQ(weighted_breakdown_estimate(std::vector<double>{1, 1, 1, 1}).str(), "1/4");
    EXPECT_EQ(weighted_breakdown_estimate(std::vector<double>{1, 1, 3}).str(), "0/3");
    EXPECT_EQ(weighted_breakdown_estimate(std::vector<double>{1, 2, 1, 1}).str(), "1/4");
    EXPECT_THROW(weighted_breakdown_estimate(std::vector<double>{}), Error);
}

TEST(WeightedBreakdown, EqualWeightsMatchFloorRelation)
{
    for (int n = 1; n <= 60; ++n) {
        const auto f = weighted_breakdown_estimate(std::vector<double>(n, 2.5));
        EXPECT_EQ(f, (Fraction{(n - 1) / 2, n}));
        // floor((n+1)/2) - floor((n-1)/2) is 1 for every n.
        EXPECT_EQ(breakdown_floor(n).num - f.num, 1);
    }
}

TEST(NonmetricPull, Examples)
{
    for (int n = 2; n <= 10; ++n) EXPECT_DOUBLE_EQ(nonmetric_pull(7.0, n, 2), 7.0 / n);
    for (int p = 2; p <= 6; ++p) EXPECT_DOUBLE_EQ(nonmetric_pull(3.0, 2, p), 1.5);
    EXPECT_DOUBLE_EQ(nonmetric_pull(1.0, 5, 3), 1.0 / 3.0);
    EXPECT_THROW(nonmetric_pull(0.0, 5, 2), Error);
    EXPECT_THROW(nonmetric_pull(1.0, 1, 2), Error);
    EXPECT_THROW(nonmetric_pull(1.0, 5, 1), Error);
}

TEST(NonmetricPull, MatchesGridOracle)
{
    // Independent minimization of (n-1) a^p + (d-a)^p on a fine grid.
    for (int p = 2; p <= 4; ++p)
        for (int n : {2, 3, 7}) {
            const double d = 10.0;
            double best_a = 0, best = 1e300;
            for (int i = 0; i <= 200000; ++i) {
                const double a = d * i / 200000.0;
                const double v = (n - 1) * std::pow(a, p) + std::pow(d - a, p);
                if (v < best) {
                    best = v;
                    best_a = a;
                }
            }
            EXPECT_NEAR(nonmetric_pull(d, n, p), best_a, 2 * d / 200000.0);
        }
}

TEST(Tightness, Examples)
{
    const auto one = tightness_example(2, 1, 2, 3.0);
    EXPECT_EQ(one.bound, 6.0);
    EXPECT_EQ(one.actual, 3.0);
    const auto fifty = tightness_example(51, 50, 2, 1.0);
    EXPECT_DOUBLE_EQ(fifty.bound, 100.0 / 99.0);
    EXPECT_THROW(tightness_example(2, 2, 1, 1.0), Error);
    EXPECT_THROW(tightness_example(3, 1, 2, 1.0), Error);
    EXPECT_THROW(tightness_example(2, 1, 2, 0.0), Error);
    for (std::int64_t n2 = 1; n2 <= 200; ++n2) {
        const auto ex = tightness_example(n2 + 1, n2, 2, 1.0);
        EXPECT_LE(ex.bound / ex.actual - 1.0, 1.0 / (2.0 * n2 - 1.0) + 1e-15);
    }
}

TEST(Tightness, ConstructionSolvesToD)
{
    for (std::int64_t n2 = 1; n2 <= 30; ++n2) {
        const std::int64_t n1 = n2 + 3;
        const auto ex = tightness_example(n1, n2, n1 - n2 + 1, 2.0);
        EXPECT_EQ(static_cast<std::int64_t>(ex.original.size()), n1 + n2);
        EXPECT_EQ(static_cast<std::int64_t>(ex.added.size()), n1 - n2 + 1);
        auto q = ex.original;
        q.insert(q.end(), ex.added.begin(), ex.added.end());
        EXPECT_EQ(real_line_median(ex.original).median, 0.0);
        EXPECT_EQ(real_line_median(q).median, 2.0);
        EXPECT_LE(2.0, ex.bound);
    }
}

TEST(BoundProperties, MonotoneInOmegaAndK)
{
    for (std::int64_t n = 3; n <= 40; ++n)
        for (std::int64_t k = 0; k + 1 < n; ++k)
            for (double omega : {0.0, 1.0, 7.5}) {
                EXPECT_LE(thm2_added_bound(n, k, omega).value, thm2_added_bound(n, k, omega + 1).value);
                EXPECT_LE(thm2_added_bound(n, k, omega).value, thm2_added_bound(n, k + 1, omega).value);
                EXPECT_LE(thm4_sod_bound(n, k, omega).value, thm4_sod_bound(n, k, omega + 1).value);
                EXPECT_LE(thm4_sod_bound(n, k, omega).value, thm4_sod_bound(n, k + 1, omega).value);
                EXPECT_LE(thm3_replaced_bound(n, k, omega).value, thm3_replaced_bound(n, k, omega + 1).value);
                EXPECT_LE(thm3_replaced_bound(n, k, omega).value, thm3_replaced_bound(n, k + 1, omega).value);
                EXPECT_LE(thm1_bound(n, omega, 1, k).value, thm1_bound(n, omega + 1, 1, k).value);
                EXPECT_LE(thm1_bound(n, omega, 1, k).value, thm1_bound(n, omega, 1, k + 1).value);
            }
}

TEST(BoundProperties, ReplacedBoundTighterThanRadiusBound)
{
    // Normal data, k replaced: Omega_X <= (n-k) R, so the replaced-object bound
    // should not exceed the radius bound.
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 101;
        const auto v = normal_reals(n, 0, 5, 4000 + trial);
        const auto o = real_line_median(v);
        double radius = 0;
        for (double x : v) radius = std::max(radius, std::abs(x - o.median));
        for (int k = 0; k <= 50; k += 5) {
            std::vector<double> survivors(v.begin() + k, v.end());
            const auto x = real_line_median(survivors);
            ASSERT_LE(x.omega, (n - k) * radius);
            EXPECT_LE(thm3_replaced_bound(n, k, x.omega).value, thm1_bound(n, radius, 0, k).value);
        }
    }
}
