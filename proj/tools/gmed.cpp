// Command-line front end: median, bounds, check-metric, experiment, validate.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gmed/bounds.hpp"
#include "gmed/config.hpp"
#include "gmed/error.hpp"
#include "gmed/experiments.hpp"
#include "gmed/io.hpp"

namespace {

int exit_code(gmed::ErrorKind kind)
{
    switch (kind) {
    case gmed::ErrorKind::invalid_input: return 2;
    case gmed::ErrorKind::capability: return 3;
    case gmed::ErrorKind::resource: return 4;
    case gmed::ErrorKind::not_positive_definite: return 5;
    case gmed::ErrorKind::io: return 6;
    }
    return 1;
}

void print_error(std::string_view kind, const std::string& message)
{
    gmed::Json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

struct BoundsArgs
{
    std::string theorem;
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    double radius = 0.0;
    double c = 0.0;
    double omega = 0.0;
    std::vector<double> weights_original;
    std::vector<double> weights_corrupted;
    double d = 1.0;
    int p = 2;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    bool json = false;
};

int run_bounds(const BoundsArgs& a)
{
    using namespace gmed;
    const auto need_k = [&] {
        require(a.k.has_value(), "--k is required for this bound");
        return *a.k;
    };
    const auto emit_fraction = [&](const Fraction& f) {
        if (a.json) {
            std::cout << to_json(f).dump(2) << "\n";
        } else {
            std::cout << f.str() << " = " << format_double(f.value()) << "\n";
        }
        return 0;
    };
    const auto emit_value = [&](double v) {
        if (a.json) {
            std::cout << Json{{"value", v}}.dump(2) << "\n";
        } else {
            std::cout << format_double(v) << "\n";
        }
        return 0;
    };

    if (a.theorem == "breakdown") return emit_fraction(breakdown_floor(a.n));
    if (a.theorem == "weighted-breakdown") return emit_fraction(weighted_breakdown_estimate(a.weights_original));
    if (a.theorem == "pull") return emit_value(nonmetric_pull(a.d, static_cast<int>(a.n), a.p));
    if (a.theorem == "tightness") {
        require(a.n1 > 0 && a.n2 > 0, "--n1 and --n2 are required for the tightness example");
        const auto ex = tightness_example(a.n1, a.n2, a.k.value_or(a.n1 - a.n2 + 1), a.d);
        if (a.json) {
            std::cout << Json{{"n1", ex.n1}, {"n2", ex.n2}, {"k", ex.k}, {"d", ex.d},
                              {"bound", ex.bound}, {"actual", ex.actual}, {"ratio", ex.bound / ex.actual}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "bound " << format_double(ex.bound) << " actual " << format_double(ex.actual) << "\n";
        }
        return 0;
    }

    BoundReport report;
    if (a.theorem == "1") {
        report = thm1_bound(a.n, a.radius, a.c, a.k);
    } else if (a.theorem == "2") {
        report = thm2_added_bound(a.n, need_k(), a.omega);
    } else if (a.theorem == "3") {
        report = thm3_replaced_bound(a.n, need_k(), a.omega);
    } else if (a.theorem == "4") {
        report = thm4_sod_bound(a.n, need_k(), a.omega);
    } else if (a.theorem == "5") {
        report = thm5_weighted_added_bound(a.weights_original, a.weights_corrupted, a.omega);
    } else if (a.theorem == "6") {
        report = thm6_weighted_replaced_bound(a.weights_original, a.weights_corrupted, a.omega);
    } else {
        throw_invalid("unknown bound '" + a.theorem + "'");
    }

    if (a.json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else if (report.applicable) {
        std::cout << format_double(report.value) << "\n";
    } else {
        std::cout << "inapplicable: " << report.precondition_note << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized median solvers, displacement bounds and robustness experiments"};
    app.require_subcommand(1);

    // median
    gmed::SolveOptions solve;
    double solve_tol = 0.0;
    auto* median = app.add_subcommand("median", "Generalized median of a dataset (JSON to stdout)");
    median->add_option("--space", solve.space, "real | vector | ranking | rotation | integer")->required();
    median->add_option("--input", solve.input, "Dataset file (.csv for reals, .json otherwise)")->required();
    median->add_option("--p", solve.p, "Distance power (1 = median, 2 = mean)");
    median->add_option("--solver", solve.solver, "exact | medoid");
    median->add_option("--weights", solve.weights, "Object weights, overriding the dataset")->delimiter(',');
    auto* tol_opt = median->add_option("--tol", solve_tol, "Iterative solver tolerance");
    median->add_option("--max-iter", solve.max_iter, "Iterative solver iteration cap");

    // bounds
    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a displacement or breakdown bound");
    bounds_cmd
        ->add_option("--theorem", bounds.theorem, "1..6 | breakdown | weighted-breakdown | pull | tightness")
        ->required();
    bounds_cmd->add_option("--n", bounds.n, "Number of original objects");
    bounds_cmd->add_option("--k", bounds.k, "Number of corrupted objects");
    bounds_cmd->add_option("--radius", bounds.radius, "Largest distance from the original median");
    bounds_cmd->add_option("--c", bounds.c, "Bridge constant of the radius bound");
    bounds_cmd->add_option("--omega", bounds.omega, "Sum of distances at the relevant median");
    bounds_cmd->add_option("--weights-original", bounds.weights_original, "Original (or surviving) weights")
        ->delimiter(',');
    bounds_cmd->add_option("--weights-corrupted", bounds.weights_corrupted, "Weights of corrupted objects")
        ->delimiter(',');
    bounds_cmd->add_option("--d", bounds.d, "Distance for pull and tightness");
    bounds_cmd->add_option("--p", bounds.p, "Distance power for pull");
    bounds_cmd->add_option("--n1", bounds.n1, "Tightness: objects at 0");
    bounds_cmd->add_option("--n2", bounds.n2, "Tightness: objects at d");
    bounds_cmd->add_flag("--json", bounds.json, "Print the full report as JSON");

    // check-metric
    std::string cm_space;
    std::string cm_input;
    int cm_sample = 30;
    std::int64_t cm_budget = 100'000;
    std::optional<double> cm_tol;
    std::uint64_t cm_seed = 0;
    int cm_power = 1;
    std::int64_t cm_hybrid_c = 3;
    int cm_length = 5;
    int cm_dim = 2;
    auto* check = app.add_subcommand("check-metric", "Report metric-axiom violations on a sample");
    check->add_option("--space", cm_space, "real | vector | ranking | rotation | integer | hybrid")->required();
    check->add_option("--input", cm_input, "Dataset to use as the sample");
    check->add_option("--sample-size", cm_sample, "Random sample size (0 enumerates all rankings)");
    check->add_option("--triple-budget", cm_budget, "Triangle triples to test; exhaustive when >= N^3");
    check->add_option("--tol", cm_tol, "Violation tolerance");
    check->add_option("--seed", cm_seed, "Sampling seed");
    check->add_option("--power", cm_power, "Check d^power instead of d");
    check->add_option("--hybrid-c", cm_hybrid_c, "Threshold c of the hybrid integer distance");
    check->add_option("--length", cm_length, "Ranking length");
    check->add_option("--dimension", cm_dim, "Vector dimension");

    // experiment
    std::string config_path;
    std::optional<std::string> out_prefix;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> trials_override;
    std::optional<int> threads_override;
    std::optional<int> k_override;
    auto* experiment = app.add_subcommand("experiment", "Run an experiment config");
    experiment->add_option("config,--config", config_path, "JSON config file")->required();
    experiment->add_option("--out", out_prefix, "Output path prefix");
    experiment->add_option("--seed", seed_override, "Override the config seed");
    experiment->add_option("--trials", trials_override, "Override the trial count");
    experiment->add_option("--threads", threads_override, "Override the worker count");
    experiment->add_option("--k", k_override, "Run a single corruption level");

    // validate
    std::string csv_path;
    auto* validate = app.add_subcommand("validate", "Check every bound in a trials CSV against its observation");
    validate->add_option("csv", csv_path, "Trials CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*median) {
            if (*tol_opt) solve.tol = solve_tol;
            std::cout << gmed::solve_dataset(solve).dump(2) << "\n";
            return 0;
        }
        if (*bounds_cmd) return run_bounds(bounds);
        if (*check) {
            std::cout << gmed::check_metric_for_space(cm_space, cm_sample, cm_budget, cm_tol, cm_seed, cm_power,
                                                      cm_hybrid_c, cm_length, cm_dim, cm_input)
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (*experiment) {
            gmed::Json j = gmed::read_json_file(config_path);
            gmed::require(j.is_object(), "config must be a JSON object");
            if (seed_override) j["seed"] = *seed_override;
            if (trials_override) j["trials"] = *trials_override;
            if (threads_override) j["threads"] = *threads_override;
            if (out_prefix) j["output"] = *out_prefix;
            if (k_override) {
                j.erase("k_range");
                j.erase("k_values");
                j["k"] = *k_override;
            }
            const auto config = gmed::parse_config(j);
            const auto out = gmed::run_experiment(config);
            for (const auto& path : gmed::write_experiment_output(config, out)) std::cout << path << "\n";
            return 0;
        }
        if (*validate) {
            const auto rows = gmed::parse_trials_csv(gmed::read_text_file(csv_path));
            const auto s = gmed::check_soundness(rows);
            gmed::Json j{{"rows", s.rows}, {"bound_checks", s.bound_checks}, {"violations", s.violations},
                         {"messages", s.messages}};
            std::cout << j.dump(2) << "\n";
            return s.violations == 0 ? 0 : 1;
        }
    } catch (const gmed::Error& e) {
        print_error(gmed::to_string(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
    return 0;
}
