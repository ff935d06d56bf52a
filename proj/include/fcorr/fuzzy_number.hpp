#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcorr/interval.hpp"

namespace fcorr {

/// Uniform subdivision of [0, 1] into K steps; node i sits at alpha = i / K.
class AlphaGrid {
public:
    static constexpr int default_subdivisions = 100;

    constexpr AlphaGrid() noexcept = default;

    explicit AlphaGrid(int subdivisions) : k_(subdivisions) {
        if (subdivisions < 1) {
            throw std::invalid_argument("alpha grid needs at least one subdivision");
        }
    }

    [[nodiscard]] constexpr int subdivisions() const noexcept { return k_; }
    [[nodiscard]] constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(k_) + 1; }
    [[nodiscard]] constexpr double alpha(std::size_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(k_);
    }

    friend constexpr bool operator==(AlphaGrid, AlphaGrid) noexcept = default;

private:
    int k_ = default_subdivisions;
};

/// Relative tolerance used when validating nestedness of stored levels.
inline constexpr double nestedness_tolerance = 1e-12;

/// True when levels[i + 1] lies inside levels[i] for every i, within `tol`
/// scaled by the largest endpoint magnitude (floored at 1).
inline bool is_nested(std::span<const Interval> levels, double tol = nestedness_tolerance) {
    double scale = 1.0;
    for (const auto& level : levels) {
        scale = std::max(scale, level.magnitude());
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (!levels[i].subset_of(levels[i - 1], tol * scale)) {
            return false;
        }
    }
    return true;
}

/// A fuzzy number stored as its alpha-levels on a uniform grid.
///
/// levels()[i] is [L(alpha_i), U(alpha_i)] with alpha_i = i / K. Between grid
/// nodes the endpoints are interpolated linearly, which is exact for
/// triangular and trapezoidal shapes. levels()[0] is the closure of the
/// support and levels()[K] the core.
///
/// Every constructor validates nestedness; violations within the floating
/// point tolerance are clamped so the stored family is exactly nested.
class FuzzyNumber {
public:
    /// Builds from explicit levels; `levels.size()` must be K + 1 for some K >= 1.
    static FuzzyNumber from_levels(std::vector<Interval> levels) {
        if (levels.size() < 2) {
            throw std::invalid_argument("a fuzzy number needs at least two alpha-levels (K >= 1)");
        }
        if (!is_nested(levels)) {
            throw std::invalid_argument("alpha-levels are not nested");
        }
        for (std::size_t i = 1; i < levels.size(); ++i) {
            double lo = std::max(levels[i].lo(), levels[i - 1].lo());
            double hi = std::min(levels[i].hi(), levels[i - 1].hi());
            if (lo > hi) {
                lo = hi = 0.5 * (lo + hi);
            }
            levels[i] = Interval(lo, hi);
        }
        return FuzzyNumber(std::move(levels));
    }

    static FuzzyNumber triangular(double a, double b, double c, AlphaGrid grid = {}) {
        if (!(a <= b && b <= c)) {
            throw std::invalid_argument("triangular number requires a <= b <= c");
        }
        return trapezoidal(a, b, b, c, grid);
    }

    static FuzzyNumber trapezoidal(double a, double b, double c, double d, AlphaGrid grid = {}) {
        if (!(a <= b && b <= c && c <= d)) {
            throw std::invalid_argument("trapezoidal number requires a <= b <= c <= d");
        }
        std::vector<Interval> levels;
        levels.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double alpha = grid.alpha(i);
            // Clamp so rounding never carries an endpoint past the core.
            levels.emplace_back(std::min(a + alpha * (b - a), b), std::max(d - alpha * (d - c), c));
        }
        return from_levels(std::move(levels));
    }

    static FuzzyNumber crisp(double a, AlphaGrid grid = {}) {
        return from_levels(std::vector<Interval>(grid.size(), Interval::point(a)));
    }

    [[nodiscard]] AlphaGrid grid() const { return AlphaGrid(static_cast<int>(levels_.size() - 1)); }
    [[nodiscard]] std::span<const Interval> levels() const& noexcept { return levels_; }
    std::span<const Interval> levels() const&& = delete;  // would dangle
    [[nodiscard]] const Interval& level(std::size_t i) const { return levels_.at(i); }
    [[nodiscard]] const Interval& support() const noexcept { return levels_.front(); }
    [[nodiscard]] const Interval& core() const noexcept { return levels_.back(); }

    /// [A]^alpha, interpolated linearly between grid nodes.
    [[nodiscard]] Interval alpha_cut(double alpha) const {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw std::invalid_argument("alpha must lie in [0, 1]");
        }
        const double k = static_cast<double>(levels_.size() - 1);
        const double pos = alpha * k;
        const auto i = std::min(static_cast<std::size_t>(pos), levels_.size() - 1);
        const double t = pos - static_cast<double>(i);
        if (i + 1 == levels_.size() || t == 0.0) {
            return levels_[i];
        }
        const auto& a = levels_[i];
        const auto& b = levels_[i + 1];
        // Convex combinations of nested endpoints stay ordered.
        const double lo = a.lo() + t * (b.lo() - a.lo());
        const double hi = a.hi() + t * (b.hi() - a.hi());
        return Interval(std::min(lo, hi), std::max(lo, hi));
    }

    /// phi_A(x) = sup{alpha : x in [A]^alpha}; 0 outside the support closure.
    [[nodiscard]] double membership(double x) const {
        if (!levels_.front().contains(x)) {
            return 0.0;
        }
        const std::size_t k = levels_.size() - 1;
        if (levels_.back().contains(x)) {
            return 1.0;
        }
        // Largest node whose level still contains x; containment is monotone in i.
        std::size_t first = 0;
        std::size_t last = k;
        while (last - first > 1) {
            const std::size_t mid = first + (last - first) / 2;
            if (levels_[mid].contains(x)) {
                first = mid;
            } else {
                last = mid;
            }
        }
        const auto& a = levels_[first];
        const auto& b = levels_[first + 1];
        double t = 1.0;
        if (x < b.lo()) {
            t = std::min(t, (x - a.lo()) / (b.lo() - a.lo()));
        }
        if (x > b.hi()) {
            t = std::min(t, (a.hi() - x) / (a.hi() - b.hi()));
        }
        t = std::clamp(t, 0.0, 1.0);
        return (static_cast<double>(first) + t) / static_cast<double>(k);
    }

    /// Re-expresses the number on another grid by endpoint interpolation.
    [[nodiscard]] FuzzyNumber resample(AlphaGrid target) const {
        if (target == grid()) {
            return *this;
        }
        std::vector<Interval> out;
        out.reserve(target.size());
        for (std::size_t i = 0; i < target.size(); ++i) {
            out.push_back(alpha_cut(target.alpha(i)));
        }
        return from_levels(std::move(out));
    }

    friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

private:
    explicit FuzzyNumber(std::vector<Interval> levels) : levels_(std::move(levels)) {}

    std::vector<Interval> levels_;
};

/// Brings both operands onto the finer of their two grids.
inline std::pair<FuzzyNumber, FuzzyNumber> common_grid(const FuzzyNumber& a, const FuzzyNumber& b) {
    const AlphaGrid target = a.grid().subdivisions() >= b.grid().subdivisions() ? a.grid() : b.grid();
    return {a.resample(target), b.resample(target)};
}

}  // namespace fcorr
