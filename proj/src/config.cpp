#include "gmed/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace gmed {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 7> kind_names{{
    {ExperimentKind::bounds_reals, "bounds_reals"},
    {ExperimentKind::rotations, "rotations"},
    {ExperimentKind::rankings, "rankings"},
    {ExperimentKind::tightness, "tightness"},
    {ExperimentKind::nonmetric_pull, "nonmetric_pull"},
    {ExperimentKind::check_metric, "check_metric"},
    {ExperimentKind::median, "median"},
}};

const std::set<std::string> known_keys{
    "experiment", "seed",        "trials",        "threads",      "output",     "n",
    "k",          "k_range",     "k_values",      "k_assignment", "mode",       "weighted",
    "weight_min", "weight_max",  "bridge_c",      "mu",           "sigma",      "displacement",
    "displacements", "ranking_length", "swap_count", "outlier_swap_count", "angle_sigma", "tol",
    "max_iter",   "p",           "n2_values",     "n2_range",     "n1_gap",     "d",
    "space",      "p_values",    "n_values",      "d_values",     "grid",       "sample_size",
    "triple_budget", "metric_tol", "power",       "hybrid_c",     "dimension",  "input",
    "solver",
};

template <typename T>
T get_number(const Json& j, const char* key)
{
    const auto& v = j.at(key);
    if constexpr (std::is_integral_v<T>) {
        require(v.is_number_integer(), std::string("config key '") + key + "' must be an integer");
    } else {
        require(v.is_number(), std::string("config key '") + key + "' must be a number");
    }
    return v.template get<T>();
}

template <typename T>
std::vector<T> get_list(const Json& j, const char* key)
{
    const auto& v = j.at(key);
    require(v.is_array() && !v.empty(), std::string("config key '") + key + "' must be a non-empty array");
    std::vector<T> out;
    for (const auto& item : v) {
        if constexpr (std::is_integral_v<T>) {
            require(item.is_number_integer(), std::string("entries of '") + key + "' must be integers");
        } else {
            require(item.is_number(), std::string("entries of '") + key + "' must be numbers");
        }
        out.push_back(item.template get<T>());
    }
    return out;
}

std::vector<int> range_inclusive(int lo, int hi)
{
    require(lo <= hi, "range lower end exceeds upper end");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

template <typename T>
void set_if(const Json& j, const char* key, T& field)
{
    if (j.contains(key)) field = get_number<T>(j, key);
}

} // namespace

std::string_view to_string(ExperimentKind kind) noexcept
{
    for (const auto& [k, name] : kind_names)
        if (k == kind) return name;
    return "unknown";
}

ExperimentKind experiment_kind_from_string(std::string_view name)
{
    for (const auto& [k, n] : kind_names)
        if (n == name) return k;
    throw_invalid("unknown experiment '" + std::string(name) + "'");
}

ExperimentConfig parse_config(const Json& j)
{
    require(j.is_object(), "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        require(known_keys.contains(key), "unknown config key '" + key + "'");
    }
    require(j.contains("experiment") && j.at("experiment").is_string(), "config needs a string 'experiment'");
    require(j.contains("seed"), "config needs an explicit 'seed'");

    ExperimentConfig c;
    c.experiment = experiment_kind_from_string(j.at("experiment").get<std::string>());
    const auto& seed = j.at("seed");
    require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0),
            "'seed' must be a nonnegative integer");
    c.seed = seed.get<std::uint64_t>();

    // Experiment-specific defaults.
    switch (c.experiment) {
    case ExperimentKind::bounds_reals:
        c.n = 101;
        c.trials = 100;
        break;
    case ExperimentKind::rotations:
        c.n = 21;
        c.trials = 20;
        c.tol = default_so3_tol;
        break;
    case ExperimentKind::rankings:
        c.n = 21;
        c.trials = 20;
        break;
    default:
        break;
    }

    set_if(j, "trials", c.trials);
    set_if(j, "threads", c.threads);
    if (j.contains("output")) {
        require(j.at("output").is_string(), "'output' must be a string");
        c.output = j.at("output").get<std::string>();
    }
    set_if(j, "n", c.n);

    if (j.contains("k")) c.k_values = {get_number<int>(j, "k")};
    if (j.contains("k_range")) {
        const auto r = get_list<int>(j, "k_range");
        require(r.size() == 2, "'k_range' must be [lo, hi]");
        c.k_values = range_inclusive(r[0], r[1]);
    }
    if (j.contains("k_values")) c.k_values = get_list<int>(j, "k_values");
    if (c.k_values.empty()) c.k_values = range_inclusive(0, std::max(0, (c.n - 1) / 2));

    if (j.contains("k_assignment")) {
        const auto v = j.at("k_assignment").get<std::string>();
        require(v == "sweep" || v == "cycle", "'k_assignment' must be \"sweep\" or \"cycle\"");
        c.k_assignment = v == "sweep" ? KAssignment::sweep : KAssignment::cycle;
    }
    if (j.contains("mode")) {
        const auto v = j.at("mode").get<std::string>();
        require(v == "add" || v == "replace", "'mode' must be \"add\" or \"replace\"");
        c.mode = v == "add" ? CorruptionMode::add : CorruptionMode::replace;
    }
    if (j.contains("weighted")) {
        require(j.at("weighted").is_boolean(), "'weighted' must be a boolean");
        c.weighted = j.at("weighted").get<bool>();
    }
    set_if(j, "weight_min", c.weight_min);
    set_if(j, "weight_max", c.weight_max);
    if (j.contains("bridge_c")) c.bridge_c = get_number<double>(j, "bridge_c");

    set_if(j, "mu", c.mu);
    set_if(j, "sigma", c.sigma);
    if (j.contains("displacement")) c.displacements = {get_number<double>(j, "displacement")};
    if (j.contains("displacements")) c.displacements = get_list<double>(j, "displacements");

    set_if(j, "ranking_length", c.ranking_length);
    set_if(j, "swap_count", c.swap_count);
    set_if(j, "outlier_swap_count", c.outlier_swap_count);
    set_if(j, "angle_sigma", c.angle_sigma);
    set_if(j, "tol", c.tol);
    set_if(j, "max_iter", c.max_iter);
    set_if(j, "p", c.p);

    if (j.contains("n2_values")) c.n2_values = get_list<int>(j, "n2_values");
    if (j.contains("n2_range")) {
        const auto r = get_list<int>(j, "n2_range");
        require(r.size() == 2, "'n2_range' must be [lo, hi]");
        c.n2_values = range_inclusive(r[0], r[1]);
    }
    if (c.n2_values.empty()) c.n2_values = range_inclusive(1, 100);
    set_if(j, "n1_gap", c.n1_gap);
    set_if(j, "d", c.d);

    if (j.contains("space")) {
        require(j.at("space").is_string(), "'space' must be a string");
        c.space = j.at("space").get<std::string>();
    }
    if (j.contains("p_values")) c.p_values = get_list<int>(j, "p_values");
    if (j.contains("n_values")) c.n_values = get_list<int>(j, "n_values");
    if (j.contains("d_values")) c.d_values = get_list<double>(j, "d_values");
    set_if(j, "grid", c.grid);

    set_if(j, "sample_size", c.sample_size);
    set_if(j, "triple_budget", c.triple_budget);
    if (j.contains("metric_tol")) c.metric_tol = get_number<double>(j, "metric_tol");
    set_if(j, "power", c.power);
    set_if(j, "hybrid_c", c.hybrid_c);
    set_if(j, "dimension", c.dimension);
    if (j.contains("input")) {
        require(j.at("input").is_string(), "'input' must be a string");
        c.input = j.at("input").get<std::string>();
    }
    if (j.contains("solver")) {
        require(j.at("solver").is_string(), "'solver' must be a string");
        c.solver = j.at("solver").get<std::string>();
    }

    // Validation.
    require(c.trials >= 1, "'trials' must be >= 1");
    require(c.threads >= 1, "'threads' must be >= 1");
    require(c.n >= 1, "'n' must be >= 1");
    for (int k : c.k_values) require(k >= 0, "k values must be >= 0");
    if (c.mode == CorruptionMode::replace) {
        for (int k : c.k_values) require(k <= c.n, "replace mode needs k <= n");
    }
    require(c.weight_min > 0.0 && c.weight_min <= c.weight_max, "weights need 0 < weight_min <= weight_max");
    if (c.bridge_c) require(*c.bridge_c >= 0.0, "'bridge_c' must be >= 0");
    require(c.sigma >= 0.0, "'sigma' must be >= 0");
    for (double d : c.displacements) require(std::isfinite(d), "displacements must be finite");
    require(c.swap_count >= 0 && c.outlier_swap_count >= 0, "swap counts must be >= 0");
    require(c.angle_sigma >= 0.0, "'angle_sigma' must be >= 0");
    require(c.tol > 0.0, "'tol' must be > 0");
    require(c.max_iter >= 1, "'max_iter' must be >= 1");
    require(c.p >= 1, "'p' must be >= 1");
    require(c.n1_gap >= 1, "'n1_gap' must be >= 1");
    require(c.d > 0.0, "'d' must be > 0");
    for (int n2 : c.n2_values) require(n2 >= 1, "n2 values must be >= 1");
    for (int p : c.p_values) require(p >= 2, "p values must be >= 2");
    for (int n : c.n_values) require(n >= 2, "n values must be >= 2");
    for (double d : c.d_values) require(d > 0.0 && std::isfinite(d), "d values must be finite and > 0");
    require(c.grid >= 10, "'grid' must be >= 10");
    require(c.triple_budget >= 1, "'triple_budget' must be >= 1");
    require(c.power >= 1, "'power' must be >= 1");
    require(c.dimension >= 1, "'dimension' must be >= 1");
    if (c.experiment == ExperimentKind::rankings) {
        require(c.ranking_length >= 1 && c.ranking_length <= 8, "ranking experiment needs 1 <= ranking_length <= 8");
    }
    if (c.experiment == ExperimentKind::median) require(!c.input.empty(), "median experiment needs 'input'");
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    return parse_config(read_json_file(path));
}

} // namespace gmed
