#include "adjq/json_io.hpp"

#include "adjq/error.hpp"

namespace adjq {

namespace {

using nlohmann::json;

const json& member(const json& j, const char* key) {
    require(j.is_object(), errc::parse_error, "expected a JSON object");
    auto it = j.find(key);
    require(it != j.end(), errc::parse_error,
            std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const json& j, const char* where) {
    require(j.is_number(), errc::parse_error,
            std::string("expected a number in ") + where);
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* key) {
    const json& arr = member(j, key);
    require(arr.is_array(), errc::parse_error,
            std::string("field \"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& e : arr) out.push_back(number(e, key));
    return out;
}

}  // namespace

nlohmann::json to_json(const StepCDF& f) {
    return json{{"breakpoints", f.breakpoints()}, {"levels", f.levels()}};
}

nlohmann::json to_json(const ShapeFn& shape) {
    return json{{"jump_points", shape.jump_points()}, {"jump_levels", shape.jump_levels()}};
}

nlohmann::json to_json(const HandicapFn& handicap) {
    json values(handicap.values());
    values.push_back("inf");
    return json{{"cut_points", handicap.cut_points()}, {"values", values}};
}

nlohmann::json to_json(const DualShapeFn& shape) {
    return json{{"base_level", shape.base_level()},
                {"jump_points", shape.jump_points()},
                {"jump_levels", shape.jump_levels()}};
}

nlohmann::json to_json(const DualHandicapFn& handicap) {
    json values = json::array();
    values.push_back("-inf");
    for (double v : handicap.values()) values.push_back(v);
    return json{{"cut_points", handicap.cut_points()}, {"values", values}};
}

nlohmann::json to_json(const FiniteJoint& joint) {
    json outcomes = json::array();
    for (const auto& o : joint.outcomes()) outcomes.push_back(json::array({o.p, o.x, o.y}));
    return json{{"outcomes", outcomes}};
}

nlohmann::json to_json(const CheckReport& report) {
    json j{{"check", report.check}, {"trials", report.trials}, {"failures", report.failures}};
    if (report.first_failure_seed) {
        j["first_failure_seed"] = *report.first_failure_seed;
    } else {
        j["first_failure_seed"] = nullptr;
    }
    return j;
}

StepCDF step_cdf_from_json(const nlohmann::json& j) {
    std::vector<double> breakpoints = number_array(j, "breakpoints");
    std::vector<double> levels = number_array(j, "levels");
    StepCDF f(breakpoints, levels);
    require(f.breakpoints() == breakpoints && f.levels() == levels, errc::validation_error,
            "step CDF is not in canonical form");
    return f;
}

ShapeFn shape_from_json(const nlohmann::json& j) {
    return ShapeFn(number_array(j, "jump_points"), number_array(j, "jump_levels"));
}

HandicapFn handicap_from_json(const nlohmann::json& j) {
    std::vector<double> cuts = number_array(j, "cut_points");
    const json& raw = member(j, "values");
    require(raw.is_array() && !raw.empty(), errc::parse_error,
            "field \"values\" must be a nonempty array");
    require(raw.back().is_string() && raw.back().get<std::string>() == "inf",
            errc::parse_error, "handicap values must end with the \"inf\" tail token");
    std::vector<double> values;
    values.reserve(raw.size() - 1);
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) values.push_back(number(raw[i], "values"));
    return HandicapFn(std::move(cuts), std::move(values));
}

DualShapeFn dual_shape_from_json(const nlohmann::json& j) {
    return DualShapeFn(number(member(j, "base_level"), "base_level"),
                       number_array(j, "jump_points"), number_array(j, "jump_levels"));
}

DualHandicapFn dual_handicap_from_json(const nlohmann::json& j) {
    std::vector<double> cuts = number_array(j, "cut_points");
    const json& raw = member(j, "values");
    require(raw.is_array() && !raw.empty(), errc::parse_error,
            "field \"values\" must be a nonempty array");
    require(raw.front().is_string() && raw.front().get<std::string>() == "-inf",
            errc::parse_error,
            "dual handicap values must start with the \"-inf\" head token");
    std::vector<double> values;
    values.reserve(raw.size() - 1);
    for (std::size_t i = 1; i < raw.size(); ++i) values.push_back(number(raw[i], "values"));
    return DualHandicapFn(std::move(cuts), std::move(values));
}

FiniteJoint joint_from_json(const nlohmann::json& j) {
    const json& raw = member(j, "outcomes");
    require(raw.is_array(), errc::parse_error, "field \"outcomes\" must be an array");
    std::vector<Outcome> outcomes;
    outcomes.reserve(raw.size());
    for (const auto& e : raw) {
        require(e.is_array() && e.size() == 3, errc::parse_error,
                "each outcome must be a [p, x, y] triple");
        outcomes.push_back(
            {number(e[0], "outcomes"), number(e[1], "outcomes"), number(e[2], "outcomes")});
    }
    return FiniteJoint(std::move(outcomes));
}

nlohmann::json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), errc::parse_error, "malformed JSON");
    return j;
}

}  // namespace adjq
