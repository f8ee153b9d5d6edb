#include "gmed/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gmed {

Json to_json_value(const Vector& v)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
    return j;
}

Json to_json_value(const Ranking& r) { return r.perm(); }

Json to_json_value(const Rotation3& r)
{
    Json j = Json::array();
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) j.push_back(r.matrix()(row, col));
    return j;
}

double real_from_json(const Json& j)
{
    require(j.is_number(), "expected a number");
    return j.get<double>();
}

Integer integer_from_json(const Json& j)
{
    require(j.is_number_integer(), "expected an integer");
    return j.get<Integer>();
}

Vector vector_from_json(const Json& j)
{
    require(j.is_array() && !j.empty(), "vector must be a non-empty array of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = real_from_json(j[i]);
    return v;
}

Ranking ranking_from_json(const Json& j)
{
    require(j.is_array(), "ranking must be an array of integers");
    std::vector<int> perm;
    for (const auto& item : j) {
        require(item.is_number_integer(), "ranking entries must be integers");
        perm.push_back(item.get<int>());
    }
    return Ranking(std::move(perm));
}

Rotation3 rotation_from_json(const Json& j)
{
    require(j.is_array() && j.size() == 9, "rotation must be a row-major array of 9 numbers");
    Mat3 m;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) m(row, col) = real_from_json(j[static_cast<std::size_t>(row * 3 + col)]);
    return Rotation3(m);
}

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

Json read_json_file(const std::filesystem::path& path)
{
    const auto text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw_invalid("malformed JSON in " + path.string() + ": " + e.what());
    }
}

std::vector<double> read_reals_csv(const std::filesystem::path& path)
{
    std::istringstream in(read_text_file(path));
    std::vector<double> values;
    std::string line;
    bool first_data_line = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::string cell = line.substr(start);
        require(cell.find(',') == std::string::npos,
                path.string() + ":" + std::to_string(line_no) + ": expected a single column");
        double value = 0.0;
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        const bool numeric = res.ec == std::errc() && res.ptr == cell.data() + cell.size();
        if (!numeric && first_data_line) {
            first_data_line = false;
            continue;
        }
        require(numeric && std::isfinite(value),
                path.string() + ":" + std::to_string(line_no) + ": not a finite number: " + cell);
        first_data_line = false;
        values.push_back(value);
    }
    require(!values.empty(), path.string() + ": no values");
    return values;
}

Json to_json(const BoundReport& b)
{
    Json j{{"theorem", b.theorem}, {"applicable", b.applicable}, {"precondition_note", b.precondition_note}};
    if (b.applicable) {
        j["value"] = b.value;
    } else {
        j["value"] = "inapplicable";
    }
    return j;
}

Json to_json(const MetricCheckReport& r)
{
    Json j{{"symmetry_violations", r.symmetry_violations},
           {"identity_violations", r.identity_violations},
           {"positivity_violations", r.positivity_violations},
           {"triangle_violations", r.triangle_violations},
           {"triples_sampled", r.triples_sampled},
           {"exhaustive", r.exhaustive},
           {"seed", r.seed},
           {"tol", r.tol}};
    if (r.worst_symmetry_pair) {
        j["worst_symmetry_pair"] = {r.worst_symmetry_pair->first, r.worst_symmetry_pair->second};
        j["worst_symmetry_gap"] = r.worst_symmetry_gap;
    } else {
        j["worst_symmetry_pair"] = nullptr;
    }
    if (r.worst_triangle) {
        j["worst_triangle"] = *r.worst_triangle;
        j["worst_triangle_margin"] = r.worst_triangle_margin;
    } else {
        j["worst_triangle"] = nullptr;
    }
    return j;
}

Json to_json(const Fraction& f)
{
    return Json{{"numerator", f.num}, {"denominator", f.den}, {"value", f.value()}};
}

} // namespace gmed
