#include "gmed/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gmed/bounds.hpp"
#include "gmed/generators.hpp"
#include "gmed/rng.hpp"
#include "gmed/solvers.hpp"

namespace gmed {

namespace {

// Extra sub-streams of a trial seed beyond the shared tags.
constexpr std::uint64_t stream_outlier_weights = 6;
constexpr std::uint64_t stream_outlier_axis = 7;

template <typename T>
struct Adapter
{
    std::string space;
    DistanceFn<T> d;
    std::function<MedianResult<T>(const WeightedSet<T>&)> median;
    std::function<MedianResult<T>(const WeightedSet<T>&)> mean;
    double bridge_c = 0.0;
};

/// Everything a trial draws before any corruption is applied.
template <typename T>
struct TrialData
{
    WeightedSet<T> original;
    /// One outlier pool per displacement; plans for k take the first k entries.
    std::vector<std::vector<T>> outlier_pools;
    std::vector<double> outlier_distances;
    std::vector<double> outlier_weights;
    std::uint64_t plan_seed = 0;
};

std::vector<double> uniform_weights(int count, double lo, double hi, std::uint64_t seed)
{
    Engine engine = make_engine(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> w(static_cast<std::size_t>(count));
    for (double& x : w) x = dist(engine);
    return w;
}

std::vector<int> trial_k_values(const ExperimentConfig& c, int trial)
{
    if (c.k_assignment == KAssignment::sweep) return c.k_values;
    return {c.k_values[static_cast<std::size_t>(trial) % c.k_values.size()]};
}

template <typename T>
std::vector<TrialRecord> run_one_trial(const ExperimentConfig& c, const Adapter<T>& a, const TrialData<T>& data,
                                       int trial, std::uint64_t trial_seed)
{
    const WeightedSet<T>& O = data.original;
    const auto n = static_cast<std::int64_t>(O.size());
    const MedianResult<T> o_med = a.median(O);
    std::optional<MedianResult<T>> o_mean;
    if (a.mean) o_mean = a.mean(O);

    double radius = 0.0;
    for (std::size_t i = 0; i < O.size(); ++i) radius = std::max(radius, a.d(o_med.median, O[i]));

    std::vector<TrialRecord> rows;
    for (std::size_t di = 0; di < data.outlier_pools.size(); ++di) {
        for (int k : trial_k_values(c, trial)) {
            const auto kk = static_cast<std::size_t>(k);
            require(kk <= data.outlier_pools[di].size(), "outlier pool smaller than k");
            std::vector<T> outliers(data.outlier_pools[di].begin(), data.outlier_pools[di].begin() + k);

            CorruptionPlan<T> plan;
            if (c.mode == CorruptionMode::replace) {
                plan = make_replace_plan(O.size(), std::move(outliers), data.plan_seed);
            } else {
                std::vector<double> w;
                if (c.weighted) w.assign(data.outlier_weights.begin(), data.outlier_weights.begin() + k);
                plan = make_add_plan(std::move(outliers), std::move(w), data.plan_seed);
            }
            const CorruptedSet<T> Q = apply(plan, O);
            const MedianResult<T> q_med = a.median(Q.set);

            TrialRecord r;
            r.experiment = std::string(to_string(c.experiment));
            r.space = a.space;
            r.mode = c.mode;
            r.weighted = c.weighted;
            r.trial_index = trial;
            r.k = k;
            r.outlier_distance = data.outlier_distances[di];
            r.observed_displacement = displacement(a.d, o_med.median, q_med.median);
            r.omega_original = o_med.omega;
            r.omega_corrupted = q_med.omega;
            r.solver_converged = o_med.converged && q_med.converged;
            r.trial_seed = trial_seed;
            if (o_mean) {
                const MedianResult<T> q_mean = a.mean(Q.set);
                r.mean_displacement = displacement(a.d, o_mean->median, q_mean.median);
            }

            const auto as_opt = [](const BoundReport& b) -> std::optional<double> {
                if (!b.applicable) return std::nullopt;
                return b.value;
            };

            if (c.mode == CorruptionMode::replace) {
                if (!c.weighted) r.bound_thm1 = as_opt(thm1_bound(n, radius, c.bridge_c.value_or(a.bridge_c), k));
                if (const auto X = Q.survivors(O)) {
                    const MedianResult<T> x_med = a.median(*X);
                    r.solver_converged = r.solver_converged && x_med.converged;
                    if (c.weighted) {
                        r.bound_thm6 = as_opt(thm6_weighted_replaced_bound(X->weights(), Q.corrupted_weights, x_med.omega));
                    } else {
                        r.bound_thm3 = as_opt(thm3_replaced_bound(n, k, x_med.omega));
                    }
                }
            } else if (c.weighted) {
                r.bound_thm5 = as_opt(thm5_weighted_added_bound(O.weights(), Q.corrupted_weights, o_med.omega));
            } else {
                r.bound_thm2 = as_opt(thm2_added_bound(n, k, o_med.omega));
                r.bound_thm4 = as_opt(thm4_sod_bound(n, k, o_med.omega));
                r.sod_gap = sum_of_distances(a.d, o_med.median, Q.set) - sum_of_distances(a.d, q_med.median, Q.set);
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

/// Runs `trial(t)` for t in [0, trials) on `threads` workers and concatenates
/// the results in trial order.
std::vector<TrialRecord> parallel_trials(int trials, int threads,
                                         const std::function<std::vector<TrialRecord>(int)>& trial)
{
    std::vector<std::vector<TrialRecord>> per_trial(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (int t = next++; t < trials; t = next++) {
            try {
                per_trial[static_cast<std::size_t>(t)] = trial(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min(threads, trials));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<TrialRecord> rows;
    for (auto& chunk : per_trial) {
        for (auto& r : chunk) rows.push_back(std::move(r));
    }
    return rows;
}

int max_k(const ExperimentConfig& c)
{
    return *std::max_element(c.k_values.begin(), c.k_values.end());
}

std::vector<TrialRecord> run_reals(const ExperimentConfig& c)
{
    Adapter<double> a;
    a.space = "real";
    a.d = RealSpace{}.distance();
    a.median = [](const WeightedSet<double>& s) { return real_line_median(s.objects(), s.weights()); };
    a.mean = [](const WeightedSet<double>& s) { return real_line_mean(s.objects(), s.weights()); };
    a.bridge_c = 0.0;

    return parallel_trials(c.trials, c.threads, [&](int t) {
        const std::uint64_t ts = derive_seed(c.seed, static_cast<std::uint64_t>(t));
        TrialData<double> data{WeightedSet<double>(normal_reals(c.n, c.mu, c.sigma, derive_seed(ts, stream::data))),
                               {}, {}, {}, derive_seed(ts, stream::plan)};
        if (c.weighted) {
            data.original = WeightedSet<double>(data.original.objects(),
                                                uniform_weights(c.n, c.weight_min, c.weight_max,
                                                                derive_seed(ts, stream::weights)));
        }
        const int kmax = max_k(c);
        // Outlier offsets are shared across displacements so that only the
        // cluster centre moves.
        const auto noise = normal_reals(kmax, 0.0, c.sigma, derive_seed(ts, stream::outliers));
        for (double D : c.displacements) {
            std::vector<double> pool;
            for (double z : noise) pool.push_back(c.mu + D + z);
            data.outlier_pools.push_back(std::move(pool));
            data.outlier_distances.push_back(D);
        }
        data.outlier_weights =
            uniform_weights(kmax, c.weight_min, c.weight_max, derive_seed(ts, stream_outlier_weights));
        return run_one_trial(c, a, data, t, ts);
    });
}

std::vector<TrialRecord> run_rotations(const ExperimentConfig& c)
{
    const IterativeOptions opts{c.tol, c.max_iter};
    Adapter<Rotation3> a;
    a.space = "rotation";
    a.d = RotationSpace{}.distance();
    a.median = [opts](const WeightedSet<Rotation3>& s) { return so3_median(s.objects(), s.weights(), opts); };
    a.mean = [opts](const WeightedSet<Rotation3>& s) { return so3_mean(s.objects(), s.weights(), opts); };
    a.bridge_c = 0.0;

    return parallel_trials(c.trials, c.threads, [&](int t) {
        const std::uint64_t ts = derive_seed(c.seed, static_cast<std::uint64_t>(t));
        Engine base_engine = make_engine(derive_seed(ts, stream::base));
        const Rotation3 base = random_rotation(base_engine);
        auto objects = perturbed_rotations(c.n, base, c.angle_sigma, derive_seed(ts, stream::data));
        TrialData<Rotation3> data{c.weighted ? WeightedSet<Rotation3>(std::move(objects),
                                                                      uniform_weights(c.n, c.weight_min, c.weight_max,
                                                                                      derive_seed(ts, stream::weights)))
                                             : WeightedSet<Rotation3>(std::move(objects)),
                                  {}, {}, {}, derive_seed(ts, stream::plan)};
        const Rotation3 far = far_rotation(base, c.angle_sigma, derive_seed(ts, stream_outlier_axis));
        const int kmax = max_k(c);
        data.outlier_pools.push_back(outlier_rotations(kmax, far, c.angle_sigma, derive_seed(ts, stream::outliers)));
        data.outlier_distances.push_back(far_rotation_angle(c.angle_sigma));
        data.outlier_weights =
            uniform_weights(kmax, c.weight_min, c.weight_max, derive_seed(ts, stream_outlier_weights));
        return run_one_trial(c, a, data, t, ts);
    });
}

std::vector<TrialRecord> run_rankings(const ExperimentConfig& c)
{
    const RankingSpace space{c.ranking_length};
    Adapter<Ranking> a;
    a.space = "ranking";
    a.d = space.distance();
    a.median = [space, d = a.d](const WeightedSet<Ranking>& s) { return exhaustive_median(space, d, s, 1); };
    a.mean = [space, d = a.d](const WeightedSet<Ranking>& s) { return exhaustive_median(space, d, s, 2); };
    a.bridge_c = 1.0;

    return parallel_trials(c.trials, c.threads, [&](int t) {
        const std::uint64_t ts = derive_seed(c.seed, static_cast<std::uint64_t>(t));
        Engine base_engine = make_engine(derive_seed(ts, stream::base));
        const Ranking base = random_ranking(c.ranking_length, base_engine);
        auto objects = perturbed_rankings(c.n, base, c.swap_count, derive_seed(ts, stream::data));
        TrialData<Ranking> data{c.weighted ? WeightedSet<Ranking>(std::move(objects),
                                                                  uniform_weights(c.n, c.weight_min, c.weight_max,
                                                                                  derive_seed(ts, stream::weights)))
                                           : WeightedSet<Ranking>(std::move(objects)),
                                {}, {}, {}, derive_seed(ts, stream::plan)};
        const Ranking far = far_ranking(base);
        const int kmax = max_k(c);
        data.outlier_pools.push_back(
            outlier_rankings(kmax, far, c.outlier_swap_count, derive_seed(ts, stream::outliers)));
        data.outlier_distances.push_back(kendall_tau(base, far));
        data.outlier_weights =
            uniform_weights(kmax, c.weight_min, c.weight_max, derive_seed(ts, stream_outlier_weights));
        return run_one_trial(c, a, data, t, ts);
    });
}

// ---- CSV ------------------------------------------------------------------

const std::vector<std::string> trial_columns{
    "experiment",  "space",       "mode",        "weighted",    "trial_index",       "k",
    "outlier_distance", "observed_displacement", "mean_displacement", "bound_thm1", "bound_thm2", "bound_thm3",
    "bound_thm4",  "bound_thm5",  "bound_thm6",  "sod_gap",     "omega_original",    "omega_corrupted",
    "solver_converged", "seed_derivation",
};

std::string fmt_bound(const std::optional<double>& v) { return v ? format_double(*v) : "inapplicable"; }
std::string fmt_opt(const std::optional<double>& v) { return v ? format_double(*v) : "NA"; }

std::string hex64(std::uint64_t v)
{
    char buf[19] = "0x";
    auto [end, ec] = std::to_chars(buf + 2, buf + sizeof buf, v, 16);
    return std::string(buf, end);
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s)
{
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size(), "malformed number '" + s + "' in trials CSV");
    return v;
}

std::optional<double> parse_opt(const std::string& s)
{
    if (s == "NA" || s == "inapplicable") return std::nullopt;
    return parse_double(s);
}

bool parse_bool(const std::string& s)
{
    require(s == "true" || s == "false", "malformed boolean '" + s + "' in trials CSV");
    return s == "true";
}

int parse_int(const std::string& s)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size(), "malformed integer '" + s + "' in trials CSV");
    return v;
}

Json stats_json(const std::vector<double>& xs)
{
    Json j;
    j["count"] = xs.size();
    if (xs.empty()) {
        j["mean"] = nullptr;
        j["std"] = nullptr;
        return j;
    }
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    j["mean"] = mean;
    j["std"] = xs.size() > 1 ? Json(std::sqrt(ss / static_cast<double>(xs.size() - 1))) : Json(nullptr);
    return j;
}

// ---- Metric check helpers ---------------------------------------------------

template <typename T>
Json metric_report(const std::string& space, DistanceFn<T> d, const std::vector<T>& sample, int power,
                   std::int64_t budget, double tol, std::uint64_t seed)
{
    if (power > 1) d = power_distance(std::move(d), power);
    const auto report = check_metric_axioms(d, sample, static_cast<std::size_t>(budget), tol, seed);
    Json j;
    j["space"] = space;
    j["power"] = power;
    j["metric_claim"] = d.metric_claim;
    j["sample_size"] = sample.size();
    j["is_metric_on_sample"] = report.total_violations() == 0;
    j["report"] = to_json(report);
    return j;
}

template <typename T>
std::vector<T> dataset_objects(const std::string& input, const std::function<T(const Json&)>& parse)
{
    return dataset_from_json<T>(read_json_file(input), parse).objects;
}

template <typename T>
Json result_json(const std::string& space, int p, const MedianResult<T>& r)
{
    Json j = to_json(r);
    j["space"] = space;
    j["p"] = p;
    return j;
}

template <typename T>
Dataset<T> load_dataset(const SolveOptions& o, const std::function<T(const Json&)>& parse)
{
    Dataset<T> ds = dataset_from_json<T>(read_json_file(o.input), parse);
    if (!o.weights.empty()) {
        require(o.weights.size() == ds.objects.size(), "weight count must match object count");
        ds.weights = o.weights;
    }
    return ds;
}

} // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& config)
{
    require(!config.k_values.empty(), "no k values");
    switch (config.experiment) {
    case ExperimentKind::bounds_reals:
        return run_reals(config);
    case ExperimentKind::rotations:
        return run_rotations(config);
    case ExperimentKind::rankings:
        return run_rankings(config);
    default:
        throw_invalid("experiment '" + std::string(to_string(config.experiment)) + "' does not produce trials");
    }
}

std::string trials_to_csv(const std::vector<TrialRecord>& rows)
{
    std::string out = std::string(trials_schema) + "\n";
    for (std::size_t i = 0; i < trial_columns.size(); ++i) out += (i ? "," : "") + trial_columns[i];
    out += "\n";
    for (const auto& r : rows) {
        const std::vector<std::string> fields{
            r.experiment,
            r.space,
            std::string(to_string(r.mode)),
            r.weighted ? "true" : "false",
            std::to_string(r.trial_index),
            std::to_string(r.k),
            format_double(r.outlier_distance),
            format_double(r.observed_displacement),
            fmt_opt(r.mean_displacement),
            fmt_bound(r.bound_thm1),
            fmt_bound(r.bound_thm2),
            fmt_bound(r.bound_thm3),
            fmt_bound(r.bound_thm4),
            fmt_bound(r.bound_thm5),
            fmt_bound(r.bound_thm6),
            fmt_opt(r.sod_gap),
            format_double(r.omega_original),
            format_double(r.omega_corrupted),
            r.solver_converged ? "true" : "false",
            hex64(r.trial_seed),
        };
        for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
        out += "\n";
    }
    return out;
}

std::vector<TrialRecord> parse_trials_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    require(std::getline(in, line) && line == trials_schema, "trials CSV must start with " + std::string(trials_schema));
    require(static_cast<bool>(std::getline(in, line)), "trials CSV is missing its header row");
    const auto header = split_csv_line(line);
    require(header == trial_columns, "trials CSV header does not match the schema");

    std::vector<TrialRecord> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        require(f.size() == trial_columns.size(), "trials CSV row has the wrong number of fields");
        TrialRecord r;
        r.experiment = f[0];
        r.space = f[1];
        require(f[2] == "add" || f[2] == "replace", "malformed mode '" + f[2] + "'");
        r.mode = f[2] == "add" ? CorruptionMode::add : CorruptionMode::replace;
        r.weighted = parse_bool(f[3]);
        r.trial_index = parse_int(f[4]);
        r.k = parse_int(f[5]);
        r.outlier_distance = parse_double(f[6]);
        r.observed_displacement = parse_double(f[7]);
        r.mean_displacement = parse_opt(f[8]);
        r.bound_thm1 = parse_opt(f[9]);
        r.bound_thm2 = parse_opt(f[10]);
        r.bound_thm3 = parse_opt(f[11]);
        r.bound_thm4 = parse_opt(f[12]);
        r.bound_thm5 = parse_opt(f[13]);
        r.bound_thm6 = parse_opt(f[14]);
        r.sod_gap = parse_opt(f[15]);
        r.omega_original = parse_double(f[16]);
        r.omega_corrupted = parse_double(f[17]);
        r.solver_converged = parse_bool(f[18]);
        require(f[19].rfind("0x", 0) == 0, "seed_derivation must be hex");
        const auto [ptr, ec] = std::from_chars(f[19].data() + 2, f[19].data() + f[19].size(), r.trial_seed, 16);
        require(ec == std::errc{} && ptr == f[19].data() + f[19].size(), "malformed seed_derivation");
        rows.push_back(std::move(r));
    }
    return rows;
}

Json summarize_trials(const std::vector<TrialRecord>& rows)
{
    struct Group
    {
        std::map<std::string, std::vector<double>> columns;
        std::size_t converged = 0;
        std::size_t rows = 0;
    };
    std::map<std::pair<double, int>, Group> groups;
    for (const auto& r : rows) {
        Group& g = groups[{r.outlier_distance, r.k}];
        ++g.rows;
        if (r.solver_converged) ++g.converged;
        const auto add = [&](const char* name, const std::optional<double>& v) {
            auto& col = g.columns[name];
            if (v && std::isfinite(*v)) col.push_back(*v);
        };
        add("observed_displacement", r.observed_displacement);
        add("mean_displacement", r.mean_displacement);
        add("bound_thm1", r.bound_thm1);
        add("bound_thm2", r.bound_thm2);
        add("bound_thm3", r.bound_thm3);
        add("bound_thm4", r.bound_thm4);
        add("bound_thm5", r.bound_thm5);
        add("bound_thm6", r.bound_thm6);
        add("sod_gap", r.sod_gap);
    }

    Json out;
    out["schema"] = "gmed.summary.v1";
    out["rows"] = rows.size();
    if (!rows.empty()) {
        out["experiment"] = rows.front().experiment;
        out["space"] = rows.front().space;
        out["mode"] = to_string(rows.front().mode);
        out["weighted"] = rows.front().weighted;
    }
    out["groups"] = Json::array();
    for (const auto& [key, g] : groups) {
        Json j;
        j["outlier_distance"] = key.first;
        j["k"] = key.second;
        j["trials"] = g.rows;
        j["converged"] = g.converged;
        for (const auto& [name, xs] : g.columns) j[name] = stats_json(xs);
        out["groups"].push_back(std::move(j));
    }
    return out;
}

SoundnessCheck check_soundness(const std::vector<TrialRecord>& rows)
{
    SoundnessCheck s;
    s.rows = rows.size();
    const auto check = [&](const TrialRecord& r, const char* name, const std::optional<double>& bound, double observed) {
        if (!bound || !std::isfinite(*bound)) return;
        ++s.bound_checks;
        const double slack = 1e-9 * std::abs(*bound) + soundness_abs_slack;
        if (observed > *bound + slack) {
            ++s.violations;
            if (s.messages.size() < 20) {
                s.messages.push_back(r.space + " trial " + std::to_string(r.trial_index) + " k=" + std::to_string(r.k) +
                                     ": " + name + " " + format_double(*bound) + " < observed " +
                                     format_double(observed));
            }
        }
    };
    for (const auto& r : rows) {
        check(r, "bound_thm1", r.bound_thm1, r.observed_displacement);
        check(r, "bound_thm2", r.bound_thm2, r.observed_displacement);
        check(r, "bound_thm3", r.bound_thm3, r.observed_displacement);
        check(r, "bound_thm5", r.bound_thm5, r.observed_displacement);
        check(r, "bound_thm6", r.bound_thm6, r.observed_displacement);
        if (r.sod_gap) check(r, "bound_thm4", r.bound_thm4, *r.sod_gap);
    }
    return s;
}

std::string run_tightness(const ExperimentConfig& c)
{
    std::string out = "#schema=gmed.tightness.v1\n";
    out += "n1,n2,k,d,bound,actual,ratio,expected_ratio,solved_displacement,solved_matches_actual\n";
    for (int n2 : c.n2_values) {
        const std::int64_t n1 = n2 + c.n1_gap;
        const std::int64_t k = n1 - n2 + 1;
        const auto ex = tightness_example(n1, n2, k, c.d);

        // Re-solve both medians rather than trusting the construction.
        const auto o = real_line_median(ex.original);
        std::vector<double> q = ex.original;
        q.insert(q.end(), ex.added.begin(), ex.added.end());
        const auto qm = real_line_median(q);
        const double solved = std::abs(qm.median - o.median);
        const double expected = 2.0 * n2 / (2.0 * n2 - 1.0);

        out += std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(k) + "," + format_double(c.d) +
               "," + format_double(ex.bound) + "," + format_double(ex.actual) + "," +
               format_double(ex.bound / ex.actual) + "," + format_double(expected) + "," + format_double(solved) + "," +
               (solved == ex.actual ? "true" : "false") + "\n";
    }
    return out;
}

std::string run_nonmetric_pull(const ExperimentConfig& c)
{
    std::string out = "#schema=gmed.nonmetric_pull.v1\n";
    out += "space,p,n,d,grid,predicted,empirical,relative_error\n";
    for (int p : c.p_values) {
        for (int n : c.n_values) {
            for (double d : c.d_values) {
                const double predicted = nonmetric_pull(d, n, p);
                double empirical = 0.0;
                int grid = c.grid;
                if (c.space == "real") {
                    empirical = nonmetric_pull_empirical(RealSpace{}, 0.0, d, n, p, grid);
                } else if (c.space == "integer") {
                    require(d == std::floor(d) && d <= 1e7, "integer pull needs integral d <= 1e7");
                    // Every integer in [0, d] is a weighted mean at w = i/d.
                    grid = std::max(10, static_cast<int>(d));
                    empirical = nonmetric_pull_empirical(IntegerSpace{}, Integer{0}, static_cast<Integer>(d), n, p, grid);
                } else if (c.space == "vector") {
                    Vector x = Vector::Zero(c.dimension);
                    Vector y = Vector::Zero(c.dimension);
                    y[0] = d;
                    empirical = nonmetric_pull_empirical(VectorSpace{}, x, y, n, p, grid);
                } else {
                    throw_invalid("non-metric pull supports real, integer and vector spaces, not '" + c.space + "'");
                }
                out += c.space + "," + std::to_string(p) + "," + std::to_string(n) + "," + format_double(d) + "," +
                       std::to_string(grid) + "," + format_double(predicted) + "," + format_double(empirical) + "," +
                       format_double(std::abs(empirical - predicted) / predicted) + "\n";
            }
        }
    }
    return out;
}

Json check_metric_for_space(const std::string& space, int sample_size, std::int64_t triple_budget,
                            std::optional<double> tol, std::uint64_t seed, int power, std::int64_t hybrid_c,
                            int ranking_length, int dimension, const std::string& input)
{
    require(sample_size >= 3 || !input.empty() || space == "hybrid" || space == "ranking",
            "metric check needs at least 3 sample objects");
    require(power >= 1, "power must be >= 1");
    const double exact_tol = tol.value_or(0.0);
    const double float_tol = tol.value_or(1e-9);
    const std::uint64_t sample_seed = derive_seed(seed, stream::data);

    if (space == "real") {
        auto sample = input.empty() ? normal_reals(sample_size, 0.0, 10.0, sample_seed)
                                    : dataset_objects<double>(input, real_from_json);
        return metric_report(space, RealSpace{}.distance(), sample, power, triple_budget, float_tol, seed);
    }
    if (space == "vector") {
        std::vector<Vector> sample;
        if (input.empty()) {
            const auto xs = normal_reals(sample_size * dimension, 0.0, 10.0, sample_seed);
            for (int i = 0; i < sample_size; ++i) {
                sample.emplace_back(Eigen::Map<const Vector>(xs.data() + static_cast<std::ptrdiff_t>(i) * dimension, dimension));
            }
        } else {
            sample = dataset_objects<Vector>(input, vector_from_json);
        }
        return metric_report(space, VectorSpace{}.distance(), sample, power, triple_budget, float_tol, seed);
    }
    if (space == "ranking") {
        std::vector<Ranking> sample;
        if (!input.empty()) {
            sample = dataset_objects<Ranking>(input, ranking_from_json);
        } else if (sample_size <= 0) {
            sample = enumerate_rankings(ranking_length);
        } else {
            Engine engine = make_engine(sample_seed);
            for (int i = 0; i < sample_size; ++i) sample.push_back(random_ranking(ranking_length, engine));
        }
        return metric_report(space, kendall_distance(), sample, power, triple_budget, exact_tol, seed);
    }
    if (space == "rotation") {
        std::vector<Rotation3> sample;
        if (input.empty()) {
            Engine engine = make_engine(sample_seed);
            for (int i = 0; i < sample_size; ++i) sample.push_back(random_rotation(engine));
        } else {
            sample = dataset_objects<Rotation3>(input, rotation_from_json);
        }
        return metric_report(space, angular_metric(), sample, power, triple_budget, float_tol, seed);
    }
    if (space == "integer" || space == "hybrid") {
        std::vector<Integer> sample;
        if (!input.empty()) {
            sample = dataset_objects<Integer>(input, integer_from_json);
        } else if (space == "hybrid") {
            // Every integer in [-(c+2), c+2] covers both regimes and their boundary.
            for (Integer v = -(hybrid_c + 2); v <= hybrid_c + 2; ++v) sample.push_back(v);
        } else {
            Engine engine = make_engine(sample_seed);
            std::uniform_int_distribution<Integer> pick(-50, 50);
            for (int i = 0; i < sample_size; ++i) sample.push_back(pick(engine));
        }
        auto d = space == "hybrid" ? hybrid_distance({hybrid_c}) : IntegerSpace{}.distance();
        Json j = metric_report(space, std::move(d), sample, power, triple_budget, exact_tol, seed);
        if (space == "hybrid") j["hybrid_c"] = hybrid_c;
        return j;
    }
    throw_invalid("unknown space '" + space + "'");
}

Json solve_dataset(const SolveOptions& o)
{
    require(o.p >= 1, "p must be >= 1");
    require(o.solver == "exact" || o.solver == "medoid", "solver must be 'exact' or 'medoid'");
    require(!o.input.empty(), "an input dataset is required");
    const bool medoid_only = o.solver == "medoid";

    if (o.space == "real") {
        Dataset<double> ds;
        if (std::filesystem::path(o.input).extension() == ".json") {
            ds = load_dataset<double>(o, real_from_json);
        } else {
            ds.objects = read_reals_csv(o.input);
            if (!o.weights.empty()) {
                require(o.weights.size() == ds.objects.size(), "weight count must match object count");
                ds.weights = o.weights;
            }
        }
        const auto set = ds.as_set();
        if (medoid_only) return result_json(o.space, o.p, medoid(RealSpace{}.distance(), set, o.p));
        require(o.p == 1 || o.p == 2, "real line supports p = 1 (median) or p = 2 (mean)");
        return result_json(o.space, o.p, o.p == 1 ? real_line_median(set.objects(), set.weights())
                                                  : real_line_mean(set.objects(), set.weights()));
    }
    if (o.space == "vector") {
        const auto set = load_dataset<Vector>(o, vector_from_json).as_set();
        const auto d = VectorSpace{}.distance();
        if (medoid_only) return result_json(o.space, o.p, medoid(d, set, o.p));
        require(o.p == 1 || o.p == 2, "vector space supports p = 1 (geometric median) or p = 2 (mean)");
        if (o.p == 1) {
            return result_json(o.space, o.p,
                               weiszfeld(set.objects(), set.weights(), {o.tol.value_or(1e-9), o.max_iter}));
        }
        Vector mean = Vector::Zero(set[0].size());
        for (std::size_t i = 0; i < set.size(); ++i) mean += set.weight(i) * set[i];
        mean /= set.total_weight();
        const double omega = sum_of_distances(d, mean, set, 2);
        return result_json(o.space, o.p, MedianResult<Vector>{mean, omega, 1, true, "centroid", {}, 0});
    }
    if (o.space == "ranking") {
        const auto set = load_dataset<Ranking>(o, ranking_from_json).as_set();
        const RankingSpace space{static_cast<int>(set[0].size())};
        if (medoid_only) return result_json(o.space, o.p, medoid(space.distance(), set, o.p));
        return result_json(o.space, o.p, exhaustive_median(space, space.distance(), set, o.p));
    }
    if (o.space == "rotation") {
        const auto set = load_dataset<Rotation3>(o, rotation_from_json).as_set();
        if (medoid_only) return result_json(o.space, o.p, medoid(angular_metric(), set, o.p));
        require(o.p == 1 || o.p == 2, "rotation space supports p = 1 (median) or p = 2 (mean)");
        const IterativeOptions opts{o.tol.value_or(default_so3_tol), o.max_iter};
        return result_json(o.space, o.p,
                           o.p == 1 ? so3_median(set.objects(), set.weights(), opts)
                                    : so3_mean(set.objects(), set.weights(), opts));
    }
    if (o.space == "integer") {
        const auto set = load_dataset<Integer>(o, integer_from_json).as_set();
        const auto d = IntegerSpace{}.distance();
        if (medoid_only) return result_json(o.space, o.p, medoid(d, set, o.p));
        // Some minimizer lies between the smallest and largest object.
        const auto [lo, hi] = std::minmax_element(set.objects().begin(), set.objects().end());
        return result_json(o.space, o.p, exhaustive_median(IntegerRangeSpace{{}, *lo, *hi}, d, set, o.p));
    }
    throw_invalid("unknown space '" + o.space + "'");
}

ExperimentOutput run_experiment(const ExperimentConfig& c)
{
    ExperimentOutput out;
    switch (c.experiment) {
    case ExperimentKind::bounds_reals:
    case ExperimentKind::rotations:
    case ExperimentKind::rankings: {
        const auto rows = run_trials(c);
        out.csv = trials_to_csv(rows);
        Json summary = summarize_trials(rows);
        const auto s = check_soundness(rows);
        summary["soundness"] = {{"bound_checks", s.bound_checks}, {"violations", s.violations}, {"messages", s.messages}};
        summary["seed"] = c.seed;
        summary["trials"] = c.trials;
        out.summary = std::move(summary);
        break;
    }
    case ExperimentKind::tightness:
        out.csv = run_tightness(c);
        break;
    case ExperimentKind::nonmetric_pull:
        out.csv = run_nonmetric_pull(c);
        break;
    case ExperimentKind::check_metric:
        out.report = check_metric_for_space(c.space, c.sample_size, c.triple_budget, c.metric_tol, c.seed, c.power,
                                            c.hybrid_c, c.ranking_length, c.dimension, c.input);
        break;
    case ExperimentKind::median: {
        SolveOptions o;
        o.space = c.space;
        o.input = c.input;
        o.p = c.p;
        o.solver = c.solver;
        o.tol = c.tol;
        o.max_iter = c.max_iter;
        out.report = solve_dataset(o);
        break;
    }
    }
    return out;
}

std::vector<std::string> write_experiment_output(const ExperimentConfig& c, const ExperimentOutput& out)
{
    std::vector<std::string> paths;
    if (!out.csv.empty()) {
        paths.push_back(c.output + ".csv");
        write_text_file(paths.back(), out.csv);
    }
    if (out.summary) {
        paths.push_back(c.output + ".summary.json");
        write_text_file(paths.back(), out.summary->dump(2) + "\n");
    }
    if (out.report) {
        paths.push_back(c.output + ".json");
        write_text_file(paths.back(), out.report->dump(2) + "\n");
    }
    return paths;
}

} // namespace gmed
