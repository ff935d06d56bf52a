#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"
#include "fcorr/range.hpp"

namespace fcorr {

/// g(x, y) = x + y or h(x, y) = x y.
enum class BinaryOp { sum, product };

inline const char* to_string(BinaryOp op) noexcept { return op == BinaryOp::sum ? "sum" : "product"; }

inline double apply(BinaryOp op, double x, double y) noexcept { return op == BinaryOp::sum ? x + y : x * y; }

namespace detail {

template <class LevelOp>
FuzzyNumber levelwise(const FuzzyNumber& a, const FuzzyNumber& b, LevelOp op) {
    const auto [lhs, rhs] = common_grid(a, b);
    std::vector<Interval> levels;
    levels.reserve(lhs.levels().size());
    for (std::size_t i = 0; i < lhs.levels().size(); ++i) {
        levels.push_back(op(lhs.level(i), rhs.level(i)));
    }
    return FuzzyNumber::from_levels(std::move(levels));
}

}  // namespace detail

/// Zadeh sum: [A + B]^alpha = [A]^alpha + [B]^alpha.
inline FuzzyNumber standard_sum(const FuzzyNumber& a, const FuzzyNumber& b) {
    return detail::levelwise(a, b, [](const Interval& x, const Interval& y) { return add(x, y); });
}

/// Zadeh product: [A B]^alpha = [A]^alpha [B]^alpha.
inline FuzzyNumber standard_product(const FuzzyNumber& a, const FuzzyNumber& b) {
    return detail::levelwise(a, b, [](const Interval& x, const Interval& y) { return mul(x, y); });
}

/// The one-variable function x -> op(x, f(x)) whose range over [A]^alpha is
/// the correlated level. Built-in families map onto closed forms.
inline Objective correlated_objective(BinaryOp op, const CorrelationFunction& f) {
    if (const auto p = f.linear_params()) {
        // x + (q x + r)  |  x (q x + r)
        return op == BinaryOp::sum ? Objective::quadratic(0.0, 1.0 + p->q, p->r)
                                   : Objective::quadratic(p->q, p->r, 0.0);
    }
    if (const auto p = f.hyperbolic_params()) {
        // x + q/x + r  |  x (q/x + r) = q + r x
        return op == BinaryOp::sum ? Objective::shifted_reciprocal(1.0, p->q, p->r)
                                   : Objective::quadratic(0.0, p->r, p->q);
    }
    return Objective::generic([f, op](double x) { return apply(op, x, f(x)); });
}

/// [A op_f B]^alpha = closure{op(x, f(x)) : x in [A]^alpha}, with B the
/// number f-correlated to A.
inline FuzzyNumber correlated(BinaryOp op, const FuzzyNumber& a, const CorrelationFunction& f,
                              const RangeMethod& method = RangeMethod::automatic()) {
    require_applicable(f, a.support());
    const Objective g = correlated_objective(op, f);
    std::vector<Interval> levels;
    levels.reserve(a.levels().size());
    for (const auto& level : a.levels()) {
        levels.push_back(range_over_interval(g, level, method));
    }
    return FuzzyNumber::from_levels(std::move(levels));
}

inline FuzzyNumber correlated_sum(const FuzzyNumber& a, const CorrelationFunction& f,
                                  const RangeMethod& method = RangeMethod::automatic()) {
    return correlated(BinaryOp::sum, a, f, method);
}

inline FuzzyNumber correlated_product(const FuzzyNumber& a, const CorrelationFunction& f,
                                      const RangeMethod& method = RangeMethod::automatic()) {
    return correlated(BinaryOp::product, a, f, method);
}

/// Standard operation between A and its induced partner f(A).
inline FuzzyNumber standard(BinaryOp op, const FuzzyNumber& a, const FuzzyNumber& b) {
    return op == BinaryOp::sum ? standard_sum(a, b) : standard_product(a, b);
}

inline constexpr double level_tolerance = 1e-9;

/// Comparison of two numbers at one grid level.
struct LevelResult {
    double alpha = 0.0;
    Interval lhs;
    Interval rhs;
    double hausdorff = 0.0;
    bool subset = false;  // lhs inside rhs within tolerance
    bool equal = false;   // hausdorff within tolerance
};

struct LevelComparison {
    std::vector<LevelResult> levels;

    [[nodiscard]] double max_hausdorff() const noexcept {
        double d = 0.0;
        for (const auto& l : levels) {
            d = std::max(d, l.hausdorff);
        }
        return d;
    }
    [[nodiscard]] bool all_subset() const noexcept {
        return std::all_of(levels.begin(), levels.end(), [](const LevelResult& l) { return l.subset; });
    }
    [[nodiscard]] bool all_equal() const noexcept {
        return std::all_of(levels.begin(), levels.end(), [](const LevelResult& l) { return l.equal; });
    }
};

/// Per-level Hausdorff distance, inclusion and equality of X against Y.
/// Both numbers must share a grid.
inline LevelComparison compare_levels(const FuzzyNumber& x, const FuzzyNumber& y, double tol = level_tolerance) {
    if (x.grid() != y.grid()) {
        throw std::invalid_argument("cannot compare fuzzy numbers on different alpha grids (K = " +
                                    std::to_string(x.grid().subdivisions()) + " vs " +
                                    std::to_string(y.grid().subdivisions()) + ")");
    }
    LevelComparison out;
    out.levels.reserve(x.levels().size());
    const AlphaGrid grid = x.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Interval& a = x.level(i);
        const Interval& b = y.level(i);
        const double d = hausdorff(a, b);
        out.levels.push_back({grid.alpha(i), a, b, d, a.subset_of(b, tol), d <= tol});
    }
    return out;
}

}  // namespace fcorr
