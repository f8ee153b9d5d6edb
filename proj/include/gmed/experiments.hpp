#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmed/config.hpp"
#include "gmed/io.hpp"

namespace gmed {

/// One (trial, k, outlier distance) row of a corruption experiment.
/// Bound fields hold nullopt when the bound is inapplicable or does not
/// belong to the corruption mode of the row.
struct TrialRecord
{
    std::string experiment;
    std::string space;
    CorruptionMode mode = CorruptionMode::replace;
    bool weighted = false;
    int trial_index = 0;
    int k = 0;
    double outlier_distance = 0.0;
    double observed_displacement = 0.0;
    std::optional<double> mean_displacement;
    std::optional<double> bound_thm1;
    std::optional<double> bound_thm2;
    std::optional<double> bound_thm3;
    std::optional<double> bound_thm4;
    std::optional<double> bound_thm5;
    std::optional<double> bound_thm6;
    /// Omega_Q(original median) - Omega_Q(corrupted median); add mode only.
    std::optional<double> sod_gap;
    double omega_original = 0.0;
    double omega_corrupted = 0.0;
    bool solver_converged = true;
    std::uint64_t trial_seed = 0;
};

inline constexpr const char* trials_schema = "#schema=gmed.trials.v1";

/// Runs a bounds_reals, rotations or rankings config. Rows come back ordered
/// by (trial_index, outlier_distance, k) regardless of the thread count.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

std::string trials_to_csv(const std::vector<TrialRecord>& rows);
std::vector<TrialRecord> parse_trials_csv(const std::string& text);

/// Mean and sample standard deviation per (outlier_distance, k) group.
Json summarize_trials(const std::vector<TrialRecord>& rows);

struct SoundnessCheck
{
    std::size_t rows = 0;
    std::size_t bound_checks = 0;
    std::size_t violations = 0;
    std::vector<std::string> messages;
};

/// Absolute slack on top of a 1e-9 relative slack when comparing an
/// observed displacement with a bound; covers iterative-solver tolerance.
inline constexpr double soundness_abs_slack = 1e-6;

/// Checks every finite bound column of every row against the observation it bounds.
SoundnessCheck check_soundness(const std::vector<TrialRecord>& rows);

struct ExperimentOutput
{
    /// Written to <output>.csv when non-empty.
    std::string csv;
    /// Written to <output>.summary.json (trial experiments) or <output>.json.
    std::optional<Json> summary;
    std::optional<Json> report;
};

ExperimentOutput run_experiment(const ExperimentConfig& config);

/// Writes the output files next to `config.output` and returns their paths.
std::vector<std::string> write_experiment_output(const ExperimentConfig& config, const ExperimentOutput& out);

/// Tightness sweep: one CSV row per n2.
std::string run_tightness(const ExperimentConfig& config);

/// Non-metric pull sweep over p_values x n_values x d_values.
std::string run_nonmetric_pull(const ExperimentConfig& config);

/// Axiom report for a named space: real, vector, ranking, rotation,
/// integer or hybrid. `power` > 1 checks the powered distance instead.
Json check_metric_for_space(const std::string& space, int sample_size, std::int64_t triple_budget,
                            std::optional<double> tol, std::uint64_t seed, int power, std::int64_t hybrid_c,
                            int ranking_length, int dimension, const std::string& input = "");

struct SolveOptions
{
    std::string space;
    std::string input;
    int p = 1;
    std::string solver = "exact";  // exact | medoid
    std::optional<double> tol;
    int max_iter = 10'000;
    std::vector<double> weights;  // overrides dataset weights when non-empty
};

/// Loads a dataset and returns its (generalized) median as JSON.
Json solve_dataset(const SolveOptions& options);

} // namespace gmed
