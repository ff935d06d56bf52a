#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcorr/arithmetic.hpp"
#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"

// Brute-force evaluation of the interactive extension principle
//
//   (A op_C B)(z) = sup { phi_C(x, y) : z = op(x, y) }
//
// for an f-correlated pair, whose joint distribution phi_C(x, y) is phi_A(x)
// on the graph y = f(x) and 0 elsewhere. Sampling x along the graph therefore
// covers all of the mass of C. Nothing here goes through the range engine, so
// it serves as independent ground truth for the correlated operations.

namespace fcorr::oracle {

inline constexpr int default_samples = 2001;
inline constexpr double merge_window = 1e-12;
/// Membership slack when thresholding sampled levels; absorbs interpolation rounding.
inline constexpr double default_level_slack = 1e-9;
/// Convergence constant C in the oracle bound C * width / N.
inline constexpr double convergence_constant = 5.0;

/// Discretized joint possibility distribution concentrated on y = f(x).
struct JointDistribution {
    std::vector<double> xs;  // strictly increasing, spanning [A]^0
    std::vector<double> mu;  // phi_A(xs[i])
    std::vector<double> ys;  // f(xs[i])
};

/// Points z with their sup-membership, sorted by z with duplicates merged.
struct SampledMembership {
    std::vector<double> zs;
    std::vector<double> mus;
};

/// Samples `n` equispaced points over [A]^0 together with the endpoints of the
/// core, so that the sampled distribution always reaches membership 1.
/// A crisp number yields a single sample.
inline JointDistribution build_joint(const FuzzyNumber& a, const CorrelationFunction& f, int n) {
    if (n < 2) {
        throw std::invalid_argument("joint distribution needs at least 2 samples");
    }
    require_applicable(f, a.support());
    const Interval& support = a.support();

    std::vector<double> xs;
    if (support.is_degenerate()) {
        xs.push_back(support.lo());
    } else {
        xs.reserve(static_cast<std::size_t>(n) + 2);
        for (int i = 0; i < n; ++i) {
            xs.push_back(i + 1 == n ? support.hi()
                                    : support.lo() + support.width() * static_cast<double>(i) / (n - 1));
        }
        xs.push_back(a.core().lo());
        xs.push_back(a.core().hi());
        std::sort(xs.begin(), xs.end());
        const double eps = merge_window * std::max(1.0, support.magnitude());
        xs.erase(std::unique(xs.begin(), xs.end(), [eps](double p, double q) { return q - p <= eps; }), xs.end());
    }

    JointDistribution joint;
    joint.xs = std::move(xs);
    joint.mu.reserve(joint.xs.size());
    joint.ys.reserve(joint.xs.size());
    for (double x : joint.xs) {
        joint.mu.push_back(a.membership(x));
        joint.ys.push_back(f(x));
    }
    return joint;
}

/// z_i = op(x_i, f(x_i)) carrying mu_i; equal z (within the merge window)
/// keep the largest membership, realizing the supremum.
inline SampledMembership extend(const JointDistribution& joint, BinaryOp op) {
    std::vector<std::size_t> order(joint.xs.size());
    std::vector<double> z(joint.xs.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = apply(op, joint.xs[i], joint.ys[i]);
        if (!std::isfinite(z[i])) {
            throw std::overflow_error("extension principle produced a non-finite value");
        }
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return z[i] < z[j]; });

    SampledMembership out;
    for (std::size_t idx : order) {
        if (!out.zs.empty() && z[idx] - out.zs.back() <= merge_window) {
            out.mus.back() = std::max(out.mus.back(), joint.mu[idx]);
        } else {
            out.zs.push_back(z[idx]);
            out.mus.push_back(joint.mu[idx]);
        }
    }
    return out;
}

/// Turns sampled membership back into alpha-levels:
/// [A]^alpha ~ [min z, max z] over samples with mu >= alpha - slack, followed
/// by a cumulative sweep that enforces nestedness.
inline FuzzyNumber levels_from_membership(const SampledMembership& sampled, AlphaGrid grid,
                                          double slack = default_level_slack) {
    if (sampled.zs.empty()) {
        throw std::invalid_argument("sampled membership is empty");
    }
    const double top = *std::max_element(sampled.mus.begin(), sampled.mus.end());
    if (top < 1.0 - 1.0 / static_cast<double>(sampled.zs.size())) {
        throw std::invalid_argument("sampled membership never reaches the core (max " + std::to_string(top) + ")");
    }

    std::vector<double> lo(grid.size());
    std::vector<double> hi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double threshold = std::min(grid.alpha(i), top) - slack;
        std::optional<std::size_t> first;
        std::size_t last = 0;
        for (std::size_t j = 0; j < sampled.zs.size(); ++j) {
            if (sampled.mus[j] >= threshold) {
                if (!first) {
                    first = j;
                }
                last = j;
            }
        }
        if (!first) {
            throw std::invalid_argument("no samples reach alpha = " + std::to_string(grid.alpha(i)));
        }
        lo[i] = sampled.zs[*first];
        hi[i] = sampled.zs[last];
    }
    for (std::size_t i = grid.size() - 1; i-- > 0;) {
        lo[i] = std::min(lo[i], lo[i + 1]);
        hi[i] = std::max(hi[i], hi[i + 1]);
    }
    std::vector<Interval> levels;
    levels.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        levels.emplace_back(lo[i], hi[i]);
    }
    return FuzzyNumber::from_levels(std::move(levels));
}

/// The correlated result computed purely by the extension principle.
inline FuzzyNumber evaluate(const FuzzyNumber& a, const CorrelationFunction& f, BinaryOp op,
                            int n = default_samples) {
    return levels_from_membership(extend(build_joint(a, f, n), op), a.grid());
}

struct OracleLevel {
    double alpha = 0.0;
    Interval engine;
    Interval oracle;
    double hausdorff = 0.0;
    /// Decoupled reading [A] + q {1/x} + r of the hyperbolic correlated sum, for reference.
    std::optional<Interval> minkowski_reading;
};

struct OracleReport {
    BinaryOp op = BinaryOp::sum;
    int samples = 0;
    double support_width = 0.0;
    double tolerance = 0.0;
    double max_hausdorff = 0.0;
    std::vector<OracleLevel> levels;

    [[nodiscard]] bool passed() const noexcept { return max_hausdorff <= tolerance; }
};

/// Allowed engine/oracle distance C * w / N, plus a rounding floor so a
/// crisp operand (w = 0) is not held to exact bitwise agreement.
inline double tolerance_for(double support_width, double magnitude, int n) {
    return convergence_constant * support_width / static_cast<double>(n) + 1e-12 * std::max(1.0, magnitude);
}

/// Differential check of the engine's correlated operation against the oracle.
inline OracleReport check(const FuzzyNumber& a, const CorrelationFunction& f, BinaryOp op,
                          int n = default_samples, std::optional<AlphaGrid> grid = std::nullopt,
                          const RangeMethod& method = RangeMethod::automatic()) {
    const FuzzyNumber base = grid ? a.resample(*grid) : a;
    const FuzzyNumber engine = correlated(op, base, f, method);
    const FuzzyNumber truth = levels_from_membership(extend(build_joint(base, f, n), op), base.grid());
    const LevelComparison cmp = compare_levels(engine, truth);

    OracleReport report;
    report.op = op;
    report.samples = n;
    report.support_width = base.support().width();
    double magnitude = 0.0;
    for (const auto& level : engine.levels()) {
        magnitude = std::max(magnitude, level.magnitude());
    }
    report.tolerance = tolerance_for(report.support_width, magnitude, n);
    report.max_hausdorff = cmp.max_hausdorff();

    const auto hyper = f.hyperbolic_params();
    report.levels.reserve(cmp.levels.size());
    for (std::size_t i = 0; i < cmp.levels.size(); ++i) {
        const auto& l = cmp.levels[i];
        OracleLevel row{l.alpha, l.lhs, l.rhs, l.hausdorff, std::nullopt};
        if (hyper && op == BinaryOp::sum) {
            const Interval& cut = base.level(i);
            const Interval inverse(1.0 / cut.hi(), 1.0 / cut.lo());
            row.minkowski_reading = shift(add(cut, scale(hyper->q, inverse)), hyper->r);
        }
        report.levels.push_back(row);
    }
    return report;
}

}  // namespace fcorr::oracle
