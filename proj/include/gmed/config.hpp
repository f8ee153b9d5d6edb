#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmed/corruption.hpp"
#include "gmed/io.hpp"

namespace gmed {

enum class ExperimentKind { bounds_reals, rotations, rankings, tightness, nonmetric_pull, check_metric, median };

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind experiment_kind_from_string(std::string_view name);

/// How corruption levels are assigned to trials: every trial runs every k
/// (sweep), or trial t runs k_values[t mod |k_values|] (cycle).
enum class KAssignment { sweep, cycle };

/// Parsed experiment configuration. Field names match the JSON keys; see
/// docs/config.md for the schema.
struct ExperimentConfig
{
    ExperimentKind experiment = ExperimentKind::bounds_reals;
    std::uint64_t seed = 0;
    int trials = 100;
    int threads = 1;
    std::string output = "results/experiment";

    // Corruption sweep.
    int n = 101;
    std::vector<int> k_values;
    KAssignment k_assignment = KAssignment::sweep;
    CorruptionMode mode = CorruptionMode::replace;
    bool weighted = false;
    double weight_min = 0.5;
    double weight_max = 2.0;
    std::optional<double> bridge_c;  // c of the radius bound; space default when unset

    // Reals.
    double mu = 0.0;
    double sigma = 5.0;
    std::vector<double> displacements{1000.0};

    // Rankings.
    int ranking_length = 7;
    int swap_count = 1;
    int outlier_swap_count = 4;

    // Rotations.
    double angle_sigma = 0.1;

    // Solvers.
    double tol = 1e-9;
    int max_iter = 10'000;
    int p = 1;

    // Tightness.
    std::vector<int> n2_values;
    int n1_gap = 1;
    double d = 1.0;

    // Non-metric pull.
    std::string space = "real";
    std::vector<int> p_values{2, 3, 4};
    std::vector<int> n_values{2, 5, 10};
    std::vector<double> d_values{1.0, 1e3, 1e6};
    int grid = 1200;

    // Metric check and single median.
    int sample_size = 30;
    std::int64_t triple_budget = 100'000;
    std::optional<double> metric_tol;
    int power = 1;
    std::int64_t hybrid_c = 3;
    int dimension = 2;
    std::string input;
    std::string solver = "exact";
};

/// Parses and validates a config. Unknown keys are rejected; `seed` is required.
ExperimentConfig parse_config(const Json& j);

ExperimentConfig load_config(const std::filesystem::path& path);

} // namespace gmed
