#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"
#include "fcorr/oracle.hpp"

// JSON forms:
//   Interval            [lo, hi]
//   FuzzyNumber         {"K": 100, "levels": [[lo, hi], ...]}
//                       or {"tri": [a, b, c]}, {"trap": [a, b, c, d]}, {"crisp": a}
//                       (shorthands accept an optional "K")
//   CorrelationFunction {"linear": [q, r]}, {"hyperbolic": [q, r]},
//                       "identity", "negation", "reciprocal"

namespace fcorr {

using json = nlohmann::json;

/// Folds -0.0 into 0.0 so output never shows a signed zero.
inline double unsigned_zero(double x) noexcept { return x == 0.0 ? 0.0 : x; }

inline json to_json_value(const Interval& i) { return json::array({unsigned_zero(i.lo()), unsigned_zero(i.hi())}); }

inline Interval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("interval must be a JSON pair [lo, hi]");
    }
    return Interval(j[0].get<double>(), j[1].get<double>());
}

inline json to_json_value(const FuzzyNumber& a) {
    json levels = json::array();
    for (const auto& level : a.levels()) {
        levels.push_back(to_json_value(level));
    }
    return {{"K", a.grid().subdivisions()}, {"levels", std::move(levels)}};
}

namespace detail {

inline std::vector<double> numbers(const json& j, std::size_t count, const char* key) {
    if (!j.is_array() || j.size() != count) {
        throw std::invalid_argument(std::string("\"") + key + "\" expects " + std::to_string(count) + " numbers");
    }
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw std::invalid_argument(std::string("\"") + key + "\" expects numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace detail

inline FuzzyNumber fuzzy_from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("fuzzy number must be a JSON object");
    }
    const AlphaGrid grid = j.contains("K") ? AlphaGrid(j.at("K").get<int>()) : AlphaGrid{};
    if (j.contains("levels")) {
        const json& raw = j.at("levels");
        if (!raw.is_array()) {
            throw std::invalid_argument("\"levels\" must be an array");
        }
        std::vector<Interval> levels;
        for (const auto& l : raw) {
            levels.push_back(interval_from_json(l));
        }
        if (j.contains("K") && levels.size() != grid.size()) {
            throw std::invalid_argument("\"levels\" must hold K + 1 intervals");
        }
        return FuzzyNumber::from_levels(std::move(levels));
    }
    if (j.contains("tri")) {
        const auto v = detail::numbers(j.at("tri"), 3, "tri");
        return FuzzyNumber::triangular(v[0], v[1], v[2], grid);
    }
    if (j.contains("trap")) {
        const auto v = detail::numbers(j.at("trap"), 4, "trap");
        return FuzzyNumber::trapezoidal(v[0], v[1], v[2], v[3], grid);
    }
    if (j.contains("crisp")) {
        if (!j.at("crisp").is_number()) {
            throw std::invalid_argument("\"crisp\" expects a number");
        }
        return FuzzyNumber::crisp(j.at("crisp").get<double>(), grid);
    }
    throw std::invalid_argument("fuzzy number needs one of \"levels\", \"tri\", \"trap\", \"crisp\"");
}

inline json to_json_value(const CorrelationFunction& f) {
    switch (f.family()) {
        case Family::linear: {
            const auto p = *f.linear_params();
            return {{"linear", {p.q, p.r}}};
        }
        case Family::hyperbolic: {
            const auto p = *f.hyperbolic_params();
            return {{"hyperbolic", {p.q, p.r}}};
        }
        case Family::identity:
        case Family::negation:
        case Family::reciprocal:
            return to_string(f.family());
        case Family::custom:
            break;
    }
    throw std::invalid_argument("custom correlation functions have no JSON form");
}

inline CorrelationFunction correlation_from_json(const json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "identity") return CorrelationFunction::identity();
        if (name == "negation") return CorrelationFunction::negation();
        if (name == "reciprocal") return CorrelationFunction::reciprocal();
        throw std::invalid_argument("unknown correlation \"" + name + "\"");
    }
    if (j.is_object() && j.size() == 1) {
        if (j.contains("linear")) {
            const auto v = detail::numbers(j.at("linear"), 2, "linear");
            return CorrelationFunction::linear(v[0], v[1]);
        }
        if (j.contains("hyperbolic")) {
            const auto v = detail::numbers(j.at("hyperbolic"), 2, "hyperbolic");
            return CorrelationFunction::hyperbolic(v[0], v[1]);
        }
    }
    throw std::invalid_argument("unrecognized correlation JSON: " + j.dump());
}

/// One object per level: {"alpha", "engine", "oracle", "hausdorff"} and,
/// for hyperbolic sums, "minkowski_reading".
inline json to_json_value(const oracle::OracleReport& report) {
    json levels = json::array();
    for (const auto& l : report.levels) {
        json row = {{"alpha", l.alpha},
                    {"engine", to_json_value(l.engine)},
                    {"oracle", to_json_value(l.oracle)},
                    {"hausdorff", l.hausdorff}};
        if (l.minkowski_reading) {
            row["minkowski_reading"] = to_json_value(*l.minkowski_reading);
        }
        levels.push_back(std::move(row));
    }
    return {{"op", to_string(report.op)},
            {"N", report.samples},
            {"support_width", report.support_width},
            {"tolerance", report.tolerance},
            {"max_hausdorff", report.max_hausdorff},
            {"passed", report.passed()},
            {"levels", std::move(levels)}};
}

}  // namespace fcorr
