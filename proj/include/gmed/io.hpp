#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmed/bounds.hpp"
#include "gmed/corruption.hpp"
#include "gmed/metric.hpp"
#include "gmed/solvers.hpp"
#include "gmed/spaces.hpp"

namespace gmed {

using Json = nlohmann::json;

// Object encodings: reals and integers as JSON numbers, vectors and rankings
// as arrays, rotations as row-major 9-element arrays.
inline Json to_json_value(double x) { return x; }
inline Json to_json_value(Integer x) { return x; }
Json to_json_value(const Vector& v);
Json to_json_value(const Ranking& r);
Json to_json_value(const Rotation3& r);

double real_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Ranking ranking_from_json(const Json& j);
Rotation3 rotation_from_json(const Json& j);

/// Shortest round-trip decimal for a double; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);
Json read_json_file(const std::filesystem::path& path);

/// Single-column CSV of reals. Blank lines and lines starting with '#' are
/// skipped; a non-numeric first data line is treated as a header.
std::vector<double> read_reals_csv(const std::filesystem::path& path);

template <typename T>
struct Dataset
{
    std::vector<T> objects;
    std::vector<double> weights;  // empty: unit weights

    WeightedSet<T> as_set() const
    {
        return weights.empty() ? WeightedSet<T>(objects) : WeightedSet<T>(objects, weights);
    }
};

/// Accepts either a bare array of objects or {"objects": [...], "weights": [...]}.
template <typename T>
Dataset<T> dataset_from_json(const Json& j, const std::function<T(const Json&)>& parse)
{
    Dataset<T> data;
    const Json* items = &j;
    if (j.is_object()) {
        require(j.contains("objects"), "dataset object must contain \"objects\"");
        items = &j.at("objects");
        if (j.contains("weights")) {
            require(j.at("weights").is_array(), "\"weights\" must be an array");
            for (const auto& w : j.at("weights")) {
                require(w.is_number(), "weights must be numbers");
                data.weights.push_back(w.get<double>());
            }
        }
    }
    require(items->is_array(), "dataset must be a JSON array of objects");
    for (const auto& item : *items) data.objects.push_back(parse(item));
    require(!data.objects.empty(), "dataset is empty");
    require(data.weights.empty() || data.weights.size() == data.objects.size(),
            "dataset weights and objects differ in length");
    return data;
}

template <typename T>
Json to_json(const MedianResult<T>& r)
{
    return Json{{"median", to_json_value(r.median)}, {"omega", r.omega},         {"iterations", r.iterations},
                {"converged", r.converged},          {"solver", r.solver},       {"anchor_hits", r.anchor_hits}};
}

Json to_json(const BoundReport& b);
Json to_json(const MetricCheckReport& r);
Json to_json(const Fraction& f);

/// Field names: mode, k, replaced_indices, outliers, outlier_weights, seed.
template <typename T>
Json to_json(const CorruptionPlan<T>& plan)
{
    Json outliers = Json::array();
    for (const auto& o : plan.outliers) outliers.push_back(to_json_value(o));
    return Json{{"mode", std::string(to_string(plan.mode))},
                {"k", plan.k},
                {"replaced_indices", plan.replaced_indices},
                {"outliers", std::move(outliers)},
                {"outlier_weights", plan.outlier_weights},
                {"seed", plan.seed}};
}

} // namespace gmed
