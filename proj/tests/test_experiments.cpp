#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "gmed/config.hpp"
#include "gmed/experiments.hpp"

using namespace gmed;

namespace {

ExperimentConfig config_from(const std::string& text)
{
    return parse_config(Json::parse(text));
}

// Minimal CSV reader that shares no code with the library.
struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const
    {
        return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    }
};

Table read_table(const std::string& csv)
{
    Table t;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (t.header.empty()) {
            t.header = fields;
        } else {
            t.rows.push_back(fields);
        }
    }
    return t;
}

} // namespace

TEST(Config, RequiresSeedAndRejectsUnknownKeys)
{
    EXPECT_THROW(config_from(R"({"experiment":"bounds_reals"})"), Error);
    EXPECT_THROW(config_from(R"({"experiment":"bounds_reals","seed":1,"colour":3})"), Error);
    EXPECT_THROW(config_from(R"({"experiment":"nope","seed":1})"), Error);
    EXPECT_THROW(config_from(R"({"experiment":"bounds_reals","seed":1,"trials":0})"), Error);
    EXPECT_THROW(config_from(R"({"experiment":"rankings","seed":1,"ranking_length":9})"), Error);
    EXPECT_THROW(config_from(R"({"experiment":"median","seed":1})"), Error);
}

TEST(Config, Defaults)
{
    const auto reals = config_from(R"({"experiment":"bounds_reals","seed":1})");
    EXPECT_EQ(reals.n, 101);
    EXPECT_EQ(reals.trials, 100);
    EXPECT_EQ(reals.sigma, 5.0);
    EXPECT_EQ(reals.k_values.size(), 51u);
    EXPECT_EQ(reals.k_values.back(), 50);

    const auto rot = config_from(R"({"experiment":"rotations","seed":1})");
    EXPECT_EQ(rot.n, 21);
    EXPECT_EQ(rot.trials, 20);
    EXPECT_EQ(rot.k_values.back(), 10);

    const auto k = config_from(R"({"experiment":"rankings","seed":1,"k_range":[2,4]})");
    EXPECT_EQ(k.k_values, (std::vector<int>{2, 3, 4}));
}

TEST(Trials, RealsSoundAndKZeroStill)
{
    const auto c = config_from(R"({"experiment":"bounds_reals","seed":5,"trials":30})");
    const auto rows = run_trials(c);
    EXPECT_EQ(rows.size(), 30u * 51u);
    for (const auto& r : rows) {
        EXPECT_GE(r.observed_displacement, 0.0);
        if (r.k == 0) EXPECT_EQ(r.observed_displacement, 0.0);
        EXPECT_TRUE(r.bound_thm1.has_value());
        EXPECT_TRUE(r.bound_thm3.has_value());
        EXPECT_FALSE(r.bound_thm2.has_value());
    }
    const auto s = check_soundness(rows);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_EQ(s.bound_checks, 2 * rows.size());
}

TEST(Trials, BoundsIndependentOfOutlierDistance)
{
    const auto c = config_from(
        R"({"experiment":"bounds_reals","seed":6,"trials":10,"k":50,"displacements":[100,1000,10000]})");
    const auto rows = run_trials(c);
    ASSERT_EQ(rows.size(), 30u);
    for (std::size_t t = 0; t < 10; ++t) {
        const auto& a = rows[3 * t];
        for (int i = 1; i < 3; ++i) {
            const auto& b = rows[3 * t + i];
            EXPECT_EQ(a.bound_thm1, b.bound_thm1);
            EXPECT_EQ(a.bound_thm3, b.bound_thm3);
            EXPECT_EQ(a.observed_displacement, b.observed_displacement);
        }
    }
}

TEST(Trials, AddedModeRecordsSodGap)
{
    const auto c = config_from(R"({"experiment":"bounds_reals","seed":7,"trials":10,"mode":"add","k_range":[0,100]})");
    const auto rows = run_trials(c);
    for (const auto& r : rows) {
        ASSERT_TRUE(r.sod_gap.has_value());
        EXPECT_GE(*r.sod_gap, -1e-9);
        EXPECT_TRUE(r.bound_thm2.has_value());
        EXPECT_TRUE(r.bound_thm4.has_value());
    }
    EXPECT_EQ(check_soundness(rows).violations, 0u);
}

TEST(Trials, WeightedModes)
{
    for (const char* mode : {"add", "replace"}) {
        const auto c = config_from(std::string(R"({"experiment":"bounds_reals","seed":8,"trials":10,"weighted":true,"k_range":[0,40],"mode":")") +
                                   mode + "\"}");
        const auto rows = run_trials(c);
        std::size_t with_bound = 0;
        for (const auto& r : rows) {
            if (std::string(mode) == "add") {
                with_bound += r.bound_thm5.has_value();
                EXPECT_FALSE(r.bound_thm2.has_value());
            } else {
                with_bound += r.bound_thm6.has_value();
                EXPECT_FALSE(r.bound_thm3.has_value());
            }
        }
        EXPECT_GT(with_bound, 0u);
        EXPECT_EQ(check_soundness(rows).violations, 0u);
    }
}

TEST(Trials, RotationKZeroWithinTolerance)
{
    const auto c = config_from(R"({"experiment":"rotations","seed":9,"trials":5,"k_range":[0,10]})");
    const auto rows = run_trials(c);
    for (const auto& r : rows) {
        if (r.k == 0) {
            EXPECT_LT(r.observed_displacement, 10 * c.tol);
        }
        EXPECT_TRUE(r.solver_converged);
    }
    EXPECT_EQ(check_soundness(rows).violations, 0u);
}

TEST(Trials, RankingKZeroIsExact)
{
    const auto c = config_from(R"({"experiment":"rankings","seed":10,"trials":3,"k_values":[0,5]})");
    const auto rows = run_trials(c);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) {
        if (r.k == 0) EXPECT_EQ(r.observed_displacement, 0.0);
        EXPECT_EQ(r.outlier_distance, 21.0);
    }
}

TEST(Trials, CycleAssignment)
{
    const auto c = config_from(R"({"experiment":"bounds_reals","seed":11,"trials":6,"k_values":[1,2,3],"k_assignment":"cycle"})");
    const auto rows = run_trials(c);
    ASSERT_EQ(rows.size(), 6u);
    for (int t = 0; t < 6; ++t) EXPECT_EQ(rows[t].k, 1 + t % 3);
}

TEST(Csv, RoundTrip)
{
    const auto c = config_from(R"({"experiment":"bounds_reals","seed":12,"trials":4,"mode":"add","k_values":[0,3]})");
    const auto rows = run_trials(c);
    const std::string csv = trials_to_csv(rows);
    EXPECT_EQ(csv.rfind("#schema=gmed.trials.v1\n", 0), 0u);
    const auto back = parse_trials_csv(csv);
    ASSERT_EQ(back.size(), rows.size());
    EXPECT_EQ(trials_to_csv(back), csv);
    EXPECT_NE(csv.find("inapplicable"), std::string::npos);
    EXPECT_THROW(parse_trials_csv("no schema\n"), Error);
}

TEST(Csv, RerunIsByteIdenticalAndThreadIndependent)
{
    for (const char* kind : {"bounds_reals", "rotations", "rankings"}) {
        const std::string base = std::string(R"({"experiment":")") + kind + R"(","seed":13,"trials":6,"k_values":[0,2,4])";
        const auto serial = trials_to_csv(run_trials(config_from(base + "}")));
        EXPECT_EQ(serial, trials_to_csv(run_trials(config_from(base + "}"))));
        EXPECT_EQ(serial, trials_to_csv(run_trials(config_from(base + R"(,"threads":3})"))));
        EXPECT_NE(serial, trials_to_csv(run_trials(config_from(std::string(R"({"experiment":")") + kind +
                                                               R"(","seed":14,"trials":6,"k_values":[0,2,4]})"))));
    }
}

TEST(Summary, MatchesIndependentRecomputation)
{
    const auto c = config_from(R"({"experiment":"bounds_reals","seed":15,"trials":25,"k_values":[0,10,30,50]})");
    const auto out = run_experiment(c);
    ASSERT_TRUE(out.summary.has_value());
    const Table t = read_table(out.csv);

    for (const std::string column : {"observed_displacement", "mean_displacement", "bound_thm3", "bound_thm1"}) {
        std::map<std::pair<double, int>, std::vector<double>> groups;
        for (const auto& row : t.rows) {
            groups[{std::stod(row[t.col("outlier_distance")]), std::stoi(row[t.col("k")])}].push_back(
                std::stod(row[t.col(column)]));
        }
        for (const auto& g : out.summary->at("groups")) {
            const auto& xs = groups.at({g.at("outlier_distance").get<double>(), g.at("k").get<int>()});
            double mean = 0;
            for (double x : xs) mean += x;
            mean /= xs.size();
            double ss = 0;
            for (double x : xs) ss += (x - mean) * (x - mean);
            const double sd = std::sqrt(ss / (xs.size() - 1));
            EXPECT_NEAR(g.at(column).at("mean").get<double>(), mean, 1e-12 * (1 + std::abs(mean)));
            EXPECT_NEAR(g.at(column).at("std").get<double>(), sd, 1e-12 * (1 + sd));
            EXPECT_EQ(g.at(column).at("count").get<std::size_t>(), xs.size());
        }
    }
    EXPECT_EQ(out.summary->at("soundness").at("violations"), 0);
}

TEST(Tightness, CsvRows)
{
    const auto c = config_from(R"({"experiment":"tightness","seed":1,"n2_values":[1,50,100]})");
    const Table t = read_table(run_tightness(c));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(std::stod(t.rows[0][t.col("ratio")]), 2.0);
    EXPECT_DOUBLE_EQ(std::stod(t.rows[2][t.col("ratio")]), 200.0 / 199.0);
    for (const auto& r : t.rows) {
        EXPECT_EQ(r[t.col("solved_matches_actual")], "true");
        EXPECT_EQ(r[t.col("ratio")], r[t.col("expected_ratio")]);
    }
}

TEST(NonmetricPull, CsvWithinGrid)
{
    const auto c = config_from(R"({"experiment":"nonmetric_pull","seed":1})");
    const Table t = read_table(run_nonmetric_pull(c));
    EXPECT_EQ(t.rows.size(), 27u);
    for (const auto& r : t.rows) EXPECT_LE(std::stod(r[t.col("relative_error")]), 2.0 / 1200.0);
}

TEST(NonmetricPull, IntegerSpace)
{
    const auto c = config_from(R"({"experiment":"nonmetric_pull","seed":1,"space":"integer","p_values":[2],"n_values":[2,3,5,10],"d_values":[1,7,100,1001]})");
    const Table t = read_table(run_nonmetric_pull(c));
    for (const auto& r : t.rows) {
        const double d = std::stod(r[t.col("d")]);
        const double n = std::stod(r[t.col("n")]);
        EXPECT_LE(std::abs(std::stod(r[t.col("empirical")]) - d / n), 1.0);
    }
}

TEST(CheckMetricForSpace, Reports)
{
    const auto hybrid = check_metric_for_space("hybrid", 0, 100000, std::nullopt, 1, 1, 3, 5, 2);
    EXPECT_GT(hybrid.at("report").at("triangle_violations").get<int>(), 0);
    EXPECT_FALSE(hybrid.at("metric_claim").get<bool>());
    const auto ranking = check_metric_for_space("ranking", 0, 100000, std::nullopt, 1, 1, 3, 4, 2);
    EXPECT_EQ(ranking.at("report").at("triangle_violations").get<int>(), 0);
    EXPECT_TRUE(ranking.at("report").at("exhaustive").get<bool>());
    const auto rot = check_metric_for_space("rotation", 20, 5000, std::nullopt, 1, 1, 3, 4, 2);
    EXPECT_TRUE(rot.at("is_metric_on_sample").get<bool>());
    const auto sq = check_metric_for_space("real", 20, 50000, std::nullopt, 1, 2, 3, 4, 2);
    EXPECT_FALSE(sq.at("is_metric_on_sample").get<bool>());
    EXPECT_THROW(check_metric_for_space("banana", 20, 10, std::nullopt, 1, 1, 3, 4, 2), Error);
}

TEST(SolveDataset, Examples)
{
    SolveOptions o;
    o.space = "ranking";
    o.input = std::string(GMED_SOURCE_DIR) + "/data/four_rankings.json";
    auto j = solve_dataset(o);
    EXPECT_EQ(j.at("median"), Json::parse("[1,2,3,4,5]"));
    EXPECT_EQ(j.at("omega"), 4.0);

    o.input = std::string(GMED_SOURCE_DIR) + "/data/four_rankings_weighted.json";
    EXPECT_EQ(solve_dataset(o).at("omega"), 5.0);

    o.space = "real";
    o.input = std::string(GMED_SOURCE_DIR) + "/data/weighted_counterexample.json";
    EXPECT_EQ(solve_dataset(o).at("median"), 2.0);
    o.input = std::string(GMED_SOURCE_DIR) + "/data/three_reals.csv";
    EXPECT_EQ(solve_dataset(o).at("median"), 1.0);
    o.p = 2;
    EXPECT_DOUBLE_EQ(solve_dataset(o).at("median").get<double>(), 11.0 / 3.0);

    o.space = "integer";
    o.input = std::string(GMED_SOURCE_DIR) + "/data/weighted_counterexample.json";
    o.p = 1;
    EXPECT_EQ(solve_dataset(o).at("median"), 2);

    o.space = "vector";
    o.input = std::string(GMED_SOURCE_DIR) + "/data/square.json";
    const auto v = solve_dataset(o).at("median");
    EXPECT_NEAR(v[0].get<double>(), 1.0, 1e-8);
    EXPECT_NEAR(v[1].get<double>(), 0.0, 1e-8);

    o.space = "rotation";
    o.input = std::string(GMED_SOURCE_DIR) + "/data/single_axis_rotations.json";
    EXPECT_TRUE(solve_dataset(o).at("converged").get<bool>());

    o.space = "ranking";
    o.input = "/nonexistent/file.json";
    try {
        solve_dataset(o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::io);
    }
}

TEST(WriteOutput, Files)
{
    auto c = config_from(R"({"experiment":"tightness","seed":1,"n2_values":[1,2]})");
    c.output = testing::TempDir() + "gmed_out/tight";
    const auto paths = write_experiment_output(c, run_experiment(c));
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(read_text_file(paths[0]), run_tightness(c));
}
