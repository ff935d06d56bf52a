#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fcorr/arithmetic.hpp"
#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"

namespace fcorr {

/// Explicit endpoint formulas for linear (q x + r) and hyperbolic (q / x + r)
/// correlation, evaluated level by level from L(alpha) and U(alpha).
///
/// There is no correlated hyperbolic sum: its decoupled form
/// [A] + q {1/x} + r is wider than the range of x + q/x + r.
enum class ClosedForm {
    std_sum_linear,
    std_prod_linear,
    std_sum_hyperbolic,
    std_prod_hyperbolic,
    corr_sum_linear,
    corr_prod_linear,
    corr_prod_hyperbolic,
};

inline constexpr std::array all_closed_forms{
    ClosedForm::std_sum_linear,    ClosedForm::std_prod_linear, ClosedForm::std_sum_hyperbolic,
    ClosedForm::std_prod_hyperbolic, ClosedForm::corr_sum_linear, ClosedForm::corr_prod_linear,
    ClosedForm::corr_prod_hyperbolic,
};

inline std::string_view to_string(ClosedForm kind) noexcept {
    switch (kind) {
        case ClosedForm::std_sum_linear: return "std-sum-linear";
        case ClosedForm::std_prod_linear: return "std-prod-linear";
        case ClosedForm::std_sum_hyperbolic: return "std-sum-hyperbolic";
        case ClosedForm::std_prod_hyperbolic: return "std-prod-hyperbolic";
        case ClosedForm::corr_sum_linear: return "corr-sum-linear";
        case ClosedForm::corr_prod_linear: return "corr-prod-linear";
        case ClosedForm::corr_prod_hyperbolic: return "corr-prod-hyperbolic";
    }
    return "unknown";
}

inline ClosedForm parse_closed_form(std::string_view id) {
    for (ClosedForm kind : all_closed_forms) {
        if (to_string(kind) == id) {
            return kind;
        }
    }
    throw std::invalid_argument("unsupported closed-form formula '" + std::string(id) + "'");
}

inline bool is_hyperbolic(ClosedForm kind) noexcept {
    return kind == ClosedForm::std_sum_hyperbolic || kind == ClosedForm::std_prod_hyperbolic ||
           kind == ClosedForm::corr_prod_hyperbolic;
}

namespace detail {

inline Interval min_max(std::initializer_list<double> candidates) {
    return Interval(std::min(candidates), std::max(candidates));
}

/// [A ._id A]^alpha: closure of {x^2 : x in [lo, hi]}.
inline Interval square_range(const Interval& a) {
    const double l2 = a.lo() * a.lo();
    const double u2 = a.hi() * a.hi();
    if (a.contains(0.0)) {
        return Interval(0.0, std::max(l2, u2));
    }
    return Interval(std::min(l2, u2), std::max(l2, u2));
}

inline Interval closed_form_level(ClosedForm kind, const Interval& level, double q, double r) {
    const double lo = level.lo();
    const double hi = level.hi();
    switch (kind) {
        case ClosedForm::std_sum_linear:
            if (q > 0) {
                return Interval((q + 1) * lo + r, (q + 1) * hi + r);
            }
            return Interval(lo + q * hi + r, hi + q * lo + r);
        case ClosedForm::std_prod_linear:
            return min_max({q * lo * lo + r * lo, q * hi * lo + r * lo, q * hi * lo + r * hi, q * hi * hi + r * hi});
        case ClosedForm::std_sum_hyperbolic:
            if (q < 0) {  // increasing
                return Interval(q / lo + lo + r, hi + q / hi + r);
            }
            return Interval(q / hi + lo + r, q / lo + hi + r);
        case ClosedForm::std_prod_hyperbolic:
            return min_max({q + r * lo, hi * q / lo + r * hi, lo * q / hi + r * lo, q + r * hi});
        case ClosedForm::corr_sum_linear:
            return shift(scale(q + 1, level), r);
        case ClosedForm::corr_prod_linear:
            return add(scale(q, square_range(level)), scale(r, level));
        case ClosedForm::corr_prod_hyperbolic:
            return shift(scale(r, level), q);
    }
    throw std::invalid_argument("unsupported closed-form formula");
}

}  // namespace detail

/// Applies the explicit formula `kind` with parameters (q, r) to every level of A.
/// Throws std::invalid_argument for q == 0 and std::domain_error when a
/// hyperbolic formula meets a support containing 0.
inline FuzzyNumber closed_form(ClosedForm kind, const FuzzyNumber& a, double q, double r) {
    // Validates q and the domain exactly as the generic engine would.
    const auto f = is_hyperbolic(kind) ? CorrelationFunction::hyperbolic(q, r) : CorrelationFunction::linear(q, r);
    f.require_domain(a.support());
    std::vector<Interval> levels;
    levels.reserve(a.levels().size());
    for (const auto& level : a.levels()) {
        levels.push_back(detail::closed_form_level(kind, level, q, r));
    }
    return FuzzyNumber::from_levels(std::move(levels));
}

/// True when the formula is guaranteed to reproduce the generic engine on a
/// number with this support. Only corr-prod-linear is conditional:
/// q [A ._id A] + r [A] decouples x^2 from x, so it is exact when q x^2 and r x
/// are co-monotone on the support (r == 0, or a sign-definite support with
/// sign(q) * sign(x) == sign(r)).
inline bool closed_form_is_exact(ClosedForm kind, const Interval& support, double q, double r) noexcept {
    if (kind != ClosedForm::corr_prod_linear || r == 0.0) {
        return true;
    }
    int side = 0;
    if (support.lo() >= 0.0) {
        side = 1;
    } else if (support.hi() <= 0.0) {
        side = -1;
    } else {
        return false;
    }
    return (q > 0 ? side : -side) == (r > 0 ? 1 : -1);
}

/// Formula matching a (correlated?, op, family) combination, if one exists.
inline std::optional<ClosedForm> closed_form_for(bool correlated, BinaryOp op, const CorrelationFunction& f) {
    if (f.linear_params()) {
        if (correlated) {
            return op == BinaryOp::sum ? ClosedForm::corr_sum_linear : ClosedForm::corr_prod_linear;
        }
        return op == BinaryOp::sum ? ClosedForm::std_sum_linear : ClosedForm::std_prod_linear;
    }
    if (f.hyperbolic_params()) {
        if (correlated) {
            if (op == BinaryOp::sum) {
                return std::nullopt;
            }
            return ClosedForm::corr_prod_hyperbolic;
        }
        return op == BinaryOp::sum ? ClosedForm::std_sum_hyperbolic : ClosedForm::std_prod_hyperbolic;
    }
    return std::nullopt;
}

}  // namespace fcorr
