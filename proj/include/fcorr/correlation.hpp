#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"

namespace fcorr {

enum class Direction { increasing, decreasing };

enum class Family { linear, hyperbolic, identity, negation, reciprocal, custom };

inline const char* to_string(Direction d) noexcept {
    return d == Direction::increasing ? "increasing" : "decreasing";
}

inline const char* to_string(Family f) noexcept {
    switch (f) {
        case Family::linear: return "linear";
        case Family::hyperbolic: return "hyperbolic";
        case Family::identity: return "identity";
        case Family::negation: return "negation";
        case Family::reciprocal: return "reciprocal";
        case Family::custom: return "custom";
    }
    return "unknown";
}

/// Parameters (q, r) of f(x) = q x + r or f(x) = q / x + r.
struct AffineParams {
    double q = 0.0;
    double r = 0.0;
    friend constexpr bool operator==(AffineParams, AffineParams) noexcept = default;
};

/// Continuous, strictly monotone, injective map relating two f-correlated numbers.
///
/// Built-in families: linear q x + r (q != 0), hyperbolic q / x + r (q != 0,
/// never applied across 0), identity, negation (-x) and reciprocal (1 / x).
/// Custom evaluators must be pure; their declared direction is sample-checked
/// whenever they are applied to an interval.
class CorrelationFunction {
public:
    using Evaluator = std::function<double(double)>;

    static constexpr int default_monotonicity_samples = 257;

    static CorrelationFunction linear(double q, double r) {
        require_nonzero_slope(q, "linear");
        return CorrelationFunction(Family::linear, {q, r});
    }

    static CorrelationFunction hyperbolic(double q, double r) {
        require_nonzero_slope(q, "hyperbolic");
        return CorrelationFunction(Family::hyperbolic, {q, r});
    }

    static CorrelationFunction identity() { return CorrelationFunction(Family::identity, {1.0, 0.0}); }
    static CorrelationFunction negation() { return CorrelationFunction(Family::negation, {-1.0, 0.0}); }
    static CorrelationFunction reciprocal() { return CorrelationFunction(Family::reciprocal, {1.0, 0.0}); }

    /// `domain`, when given, bounds where the evaluator may be applied.
    static CorrelationFunction custom(Evaluator fn, Direction declared, std::string name = "custom",
                                      std::optional<Interval> domain = std::nullopt) {
        if (!fn) {
            throw std::invalid_argument("custom correlation needs an evaluator");
        }
        CorrelationFunction f(Family::custom, {});
        f.evaluator_ = std::move(fn);
        f.declared_ = declared;
        f.name_ = std::move(name);
        f.domain_ = domain;
        return f;
    }

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] Direction direction() const noexcept {
        switch (family_) {
            case Family::linear:
            case Family::identity:
            case Family::negation:
                return params_.q > 0 ? Direction::increasing : Direction::decreasing;
            case Family::hyperbolic:
            case Family::reciprocal:
                // d/dx (q/x + r) = -q/x^2 on either side of 0.
                return params_.q > 0 ? Direction::decreasing : Direction::increasing;
            case Family::custom:
                break;
        }
        return declared_;
    }

    /// (q, r) when f is affine: linear, identity, negation.
    [[nodiscard]] std::optional<AffineParams> linear_params() const noexcept {
        if (family_ == Family::linear || family_ == Family::identity || family_ == Family::negation) {
            return params_;
        }
        return std::nullopt;
    }

    /// (q, r) when f(x) = q / x + r: hyperbolic, reciprocal.
    [[nodiscard]] std::optional<AffineParams> hyperbolic_params() const noexcept {
        if (family_ == Family::hyperbolic || family_ == Family::reciprocal) {
            return params_;
        }
        return std::nullopt;
    }

    [[nodiscard]] bool excludes_zero() const noexcept {
        return family_ == Family::hyperbolic || family_ == Family::reciprocal;
    }

    [[nodiscard]] double operator()(double x) const {
        switch (family_) {
            case Family::linear: return params_.q * x + params_.r;
            case Family::identity: return x;
            case Family::negation: return -x;
            case Family::hyperbolic: return params_.q / x + params_.r;
            case Family::reciprocal: return 1.0 / x;
            case Family::custom: return evaluator_(x);
        }
        return std::nan("");
    }

    /// Throws std::domain_error unless `interval` lies in the domain of f.
    void require_domain(const Interval& interval) const {
        if (excludes_zero() && interval.contains(0.0)) {
            throw std::domain_error(std::string(to_string(family_)) +
                                    " correlation is undefined on an interval containing 0");
        }
        if (domain_ && !interval.subset_of(*domain_)) {
            throw std::domain_error("interval lies outside the domain of correlation '" + name_ + "'");
        }
    }

private:
    CorrelationFunction(Family family, AffineParams params)
        : family_(family), params_(params), name_(to_string(family)) {}

    static void require_nonzero_slope(double q, const char* family) {
        if (!std::isfinite(q) || q == 0.0) {
            throw std::invalid_argument(std::string(family) +
                                        " correlation requires a finite q != 0 (constant maps are not injective)");
        }
    }

    Family family_;
    AffineParams params_;
    Evaluator evaluator_;
    Direction declared_ = Direction::increasing;
    std::string name_;
    std::optional<Interval> domain_;
};

/// Samples f at `samples` equispaced points of `interval` and reports the
/// direction if consecutive values are uniformly strictly ordered.
/// Throws std::invalid_argument on a flat step or a change of direction.
inline Direction check_monotone(const CorrelationFunction& f, const Interval& interval,
                                int samples = CorrelationFunction::default_monotonicity_samples) {
    if (samples < 3) {
        throw std::invalid_argument("monotonicity check needs at least 3 samples");
    }
    f.require_domain(interval);
    if (interval.is_degenerate()) {
        return f.direction();
    }
    std::optional<Direction> seen;
    double prev = f(interval.lo());
    for (int i = 1; i < samples; ++i) {
        const double x = i + 1 == samples
                             ? interval.hi()
                             : interval.lo() + interval.width() * static_cast<double>(i) / (samples - 1);
        const double y = f(x);
        if (!std::isfinite(y) || y == prev) {
            throw std::invalid_argument("correlation '" + f.name() + "' is not strictly monotone near x = " +
                                        std::to_string(x));
        }
        const Direction step = y > prev ? Direction::increasing : Direction::decreasing;
        if (seen && *seen != step) {
            throw std::invalid_argument("correlation '" + f.name() + "' changes direction near x = " +
                                        std::to_string(x));
        }
        seen = step;
        prev = y;
    }
    return *seen;
}

/// Checks that f may be applied to every alpha-level of a number with the
/// given support: domain, and for custom evaluators the declared direction.
inline void require_applicable(const CorrelationFunction& f, const Interval& support) {
    f.require_domain(support);
    if (f.family() == Family::custom && !support.is_degenerate()) {
        if (check_monotone(f, support) != f.direction()) {
            throw std::invalid_argument("correlation '" + f.name() + "' is declared " +
                                        to_string(f.direction()) + " but samples are not");
        }
    }
}

/// f([a, b]) = [f(a), f(b)] for increasing f, [f(b), f(a)] for decreasing f.
inline Interval image_monotone(const CorrelationFunction& f, const Interval& interval) {
    f.require_domain(interval);
    const double a = f(interval.lo());
    const double b = f(interval.hi());
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::overflow_error("correlation image is not finite");
    }
    if (interval.is_degenerate()) {
        return Interval::point(a);
    }
    return f.direction() == Direction::increasing ? Interval(a, b) : Interval(b, a);
}

/// The number B with [B]^alpha = f([A]^alpha), materialized on A's grid.
inline FuzzyNumber induced_number(const FuzzyNumber& a, const CorrelationFunction& f) {
    require_applicable(f, a.support());
    std::vector<Interval> levels;
    levels.reserve(a.levels().size());
    for (const auto& level : a.levels()) {
        levels.push_back(image_monotone(f, level));
    }
    return FuzzyNumber::from_levels(std::move(levels));
}

}  // namespace fcorr
