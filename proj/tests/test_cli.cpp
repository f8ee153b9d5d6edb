#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult
{
    int code = 0;
    std::string out;
};

RunResult run(const std::string& args, bool capture_stderr = false)
{
    const std::string cmd = std::string(GMED_CLI_PATH) + " " + args + (capture_stderr ? " 2>&1 >/dev/null" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name)
{
    return std::string(GMED_SOURCE_DIR) + "/data/" + name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Cli, BoundsAddedObject)
{
    const auto r = run("bounds --theorem 2 --n 4 --k 1 --omega 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("2.666", 0), 0u);
}

TEST(Cli, BoundsJsonAndInapplicable)
{
    const auto r = run("bounds --theorem 3 --n 4 --k 2 --omega 3 --json");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("applicable"), false);
    EXPECT_EQ(j.at("value"), "inapplicable");

    EXPECT_EQ(run("bounds --theorem 6 --weights-original 1,2,1 --weights-corrupted 1 --omega 4").out,
              "5.333333333333333\n");
    EXPECT_EQ(run("bounds --theorem weighted-breakdown --weights-original 1,1,3").out, "0/3 = 0\n");
}

TEST(Cli, MedianFourRankings)
{
    const auto r = run("median --space ranking --p 1 --input " + data("four_rankings.json"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("median"), nlohmann::json::parse("[1,2,3,4,5]"));
    EXPECT_EQ(j.at("omega"), 4.0);
}

TEST(Cli, MissingConfigGivesErrorJson)
{
    const auto r = run("experiment missing.json", true);
    EXPECT_NE(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("error").at("kind"), "io");
    EXPECT_FALSE(j.at("error").at("message").get<std::string>().empty());
}

TEST(Cli, UnknownSpaceAndCapability)
{
    auto r = run("median --space banana --input " + data("four_rankings.json"), true);
    EXPECT_NE(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).at("error").at("kind"), "invalid_input");

    r = run("check-metric --space banana", true);
    EXPECT_NE(r.code, 0);
}

TEST(Cli, ExperimentDeterministicAndValidated)
{
    const auto dir = std::filesystem::path(testing::TempDir()) / "gmed_cli";
    std::filesystem::create_directories(dir);
    const auto config = dir / "rank.json";
    std::ofstream(config) << R"({"experiment":"rankings","seed":3,"trials":3,"k_values":[0,4,8]})";

    const auto a = run("experiment " + config.string() + " --out " + (dir / "a").string());
    const auto b = run("experiment --config " + config.string() + " --out " + (dir / "b").string() + " --threads 2");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
    EXPECT_FALSE(slurp(dir / "a.csv").empty());
    EXPECT_TRUE(std::filesystem::exists(dir / "a.summary.json"));

    const auto v = run("validate " + (dir / "a.csv").string());
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(nlohmann::json::parse(v.out).at("violations"), 0);

    const auto k = run("experiment " + config.string() + " --k 2 --out " + (dir / "k").string());
    ASSERT_EQ(k.code, 0);
    EXPECT_NE(slurp(dir / "k.csv").find(",2,21,"), std::string::npos);
}

TEST(Cli, ValidateFlagsViolation)
{
    const auto dir = std::filesystem::path(testing::TempDir()) / "gmed_cli";
    std::filesystem::create_directories(dir);
    const auto csv = dir / "bad.csv";
    std::ofstream(csv) << "#schema=gmed.trials.v1\n"
                          "experiment,space,mode,weighted,trial_index,k,outlier_distance,observed_displacement,"
                          "mean_displacement,bound_thm1,bound_thm2,bound_thm3,bound_thm4,bound_thm5,bound_thm6,sod_gap,"
                          "omega_original,omega_corrupted,solver_converged,seed_derivation\n"
                          "bounds_reals,real,replace,false,0,1,1000,5,NA,inapplicable,inapplicable,2,inapplicable,"
                          "inapplicable,inapplicable,NA,1,1,true,0x1\n";
    const auto v = run("validate " + csv.string());
    EXPECT_EQ(v.code, 1);
    EXPECT_EQ(nlohmann::json::parse(v.out).at("violations"), 1);
}

TEST(Cli, CheckMetricHybrid)
{
    const auto r = run("check-metric --space hybrid --hybrid-c 3");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j.at("report").at("triangle_violations").get<int>(), 0);
}
