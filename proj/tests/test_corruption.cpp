#include <gtest/gtest.h>

#include <algorithm>

#include "gmed/corruption.hpp"
#include "gmed/generators.hpp"
#include "gmed/io.hpp"
#include "gmed/solvers.hpp"

using namespace gmed;

namespace {

std::vector<Ranking> four_rankings()
{
    return {Ranking({1, 2, 4, 3, 5}), Ranking({1, 2, 3, 5, 4}), Ranking({2, 1, 3, 4, 5}), Ranking({1, 3, 2, 4, 5})};
}

} // namespace

TEST(Corruption, AddNothingIsIdentity)
{
    const WeightedSet<double> o({1, 2, 3}, {1, 2, 3});
    const auto q = apply(make_add_plan<double>({}), o);
    EXPECT_EQ(q.set.objects(), o.objects());
    EXPECT_EQ(q.set.weights(), o.weights());
    EXPECT_EQ(q.surviving, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(q.corrupted_weights.empty());
}

TEST(Corruption, FullReplacement)
{
    const WeightedSet<double> o({1, 2, 3, 4});
    const auto q = apply(make_replace_plan<double>(4, std::vector<double>(4, 9.0), 5), o);
    EXPECT_EQ(q.set.objects(), std::vector<double>(4, 9.0));
    EXPECT_TRUE(q.surviving.empty());
    EXPECT_FALSE(q.survivors(o).has_value());
}

TEST(Corruption, AddedReverseRankingsExample)
{
    const WeightedSet<Ranking> o(four_rankings());
    const auto q = apply(make_add_plan(std::vector<Ranking>(3, Ranking({5, 4, 3, 2, 1}))), o);
    ASSERT_EQ(q.set.size(), 7u);
    const RankingSpace space{5};
    const auto qm = exhaustive_median(space, space.distance(), q.set);
    EXPECT_EQ(qm.omega, 32.0);
}

TEST(Corruption, ReplacedRankingDisplacementWithinBound)
{
    const WeightedSet<Ranking> o(four_rankings());
    const RankingSpace space{5};
    const auto om = exhaustive_median(space, space.distance(), o);
    for (std::size_t idx = 0; idx < 4; ++idx) {
        for (const auto& outlier : enumerate_rankings(5)) {
            CorruptionPlan<Ranking> plan;
            plan.mode = CorruptionMode::replace;
            plan.k = 1;
            plan.replaced_indices = {idx};
            plan.outliers = {outlier};
            const auto q = apply(plan, o);
            const auto qm = exhaustive_median(space, space.distance(), q.set);
            EXPECT_LE(displacement(space.distance(), om.median, qm.median), 6.0);
        }
    }
}

TEST(Corruption, RealFullReplacementMovesToD)
{
    const auto v = normal_reals(101, 0, 5, 3);
    const WeightedSet<double> o(v);
    const double om = real_line_median(v).median;
    for (double D : {1e2, 1e4, 1e6}) {
        const auto q = apply(make_replace_plan<double>(101, std::vector<double>(51, D), 8), o);
        const double qm = real_line_median(q.set.objects()).median;
        EXPECT_EQ(qm, D);
        EXPECT_NEAR(displacement(RealSpace{}.distance(), om, qm), D, 20.0);
    }
}

TEST(Corruption, CountsAndWeightsPreserved)
{
    const auto v = normal_reals(30, 0, 1, 4);
    std::vector<double> w;
    for (int i = 0; i < 30; ++i) w.push_back(1.0 + i);
    const WeightedSet<double> o(v, w);
    for (std::size_t k = 0; k <= 30; k += 3) {
        const auto rep = apply(make_replace_plan<double>(30, std::vector<double>(k, 100.0), 77), o);
        EXPECT_EQ(rep.set.size(), 30u);
        auto a = rep.set.weights(), b = o.weights();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        EXPECT_EQ(rep.surviving.size() + rep.corrupted_weights.size(), 30u);

        const auto add = apply(make_add_plan<double>(std::vector<double>(k, 100.0)), o);
        EXPECT_EQ(add.set.size(), 30u + k);
        EXPECT_EQ(add.corrupted_weights, std::vector<double>(k, 1.0));
    }
}

TEST(Corruption, PlansReproducibleAndNested)
{
    for (std::size_t k = 0; k <= 20; ++k) {
        EXPECT_EQ(draw_indices(20, k, 99), draw_indices(20, k, 99));
        const auto big = draw_indices(20, 20, 99);
        const auto small = draw_indices(20, k, 99);
        EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
    }
    const auto all = draw_indices(20, 20, 99);
    std::vector<std::size_t> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(sorted[i], i);
    EXPECT_THROW(draw_indices(3, 4, 0), Error);
}

TEST(Corruption, InvalidPlansRejected)
{
    const WeightedSet<double> o({1, 2, 3});
    CorruptionPlan<double> bad;
    bad.mode = CorruptionMode::replace;
    bad.k = 1;
    bad.replaced_indices = {5};
    bad.outliers = {1.0};
    EXPECT_THROW(apply(bad, o), Error);
    bad.replaced_indices = {0, 1};
    EXPECT_THROW(apply(bad, o), Error);
    bad.k = 2;
    bad.outliers = {1.0, 2.0};
    bad.replaced_indices = {1, 1};
    EXPECT_THROW(apply(bad, o), Error);
    EXPECT_THROW(apply(make_add_plan<double>({1.0}, {0.0}), o), Error);
}

TEST(Corruption, PlanJson)
{
    const auto plan = make_replace_plan<double>(10, {7.5, 8.5}, 3);
    const Json j = to_json(plan);
    EXPECT_EQ(j.at("mode"), "replace");
    EXPECT_EQ(j.at("k"), 2);
    EXPECT_EQ(j.at("replaced_indices").size(), 2u);
    EXPECT_EQ(j.at("outliers").size(), 2u);
    EXPECT_EQ(j.at("seed"), 3);
    EXPECT_TRUE(j.contains("outlier_weights"));
}
