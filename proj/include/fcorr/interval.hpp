#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fcorr {

/// Closed bounded interval [lo, hi] of the real line.
///
/// Endpoints are finite doubles with lo <= hi; a degenerate interval (lo == hi)
/// stands for a crisp real. Arithmetic is plain floating point without outward
/// rounding.
class Interval {
public:
    constexpr Interval() noexcept = default;

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            throw std::invalid_argument("interval endpoints must be finite");
        }
        if (lo > hi) {
            throw std::invalid_argument("interval lower endpoint " + std::to_string(lo) +
                                        " exceeds upper endpoint " + std::to_string(hi));
        }
    }

    static Interval point(double x) { return Interval(x, x); }

    [[nodiscard]] constexpr double lo() const noexcept { return lo_; }
    [[nodiscard]] constexpr double hi() const noexcept { return hi_; }
    [[nodiscard]] constexpr double width() const noexcept { return hi_ - lo_; }
    [[nodiscard]] constexpr double midpoint() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
    [[nodiscard]] constexpr bool is_degenerate() const noexcept { return lo_ == hi_; }

    [[nodiscard]] constexpr bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    /// True when this interval lies inside `outer`, allowing `tol` slack on each side.
    [[nodiscard]] constexpr bool subset_of(const Interval& outer, double tol = 0.0) const noexcept {
        return lo_ >= outer.lo_ - tol && hi_ <= outer.hi_ + tol;
    }

    [[nodiscard]] constexpr double magnitude() const noexcept {
        return std::max(lo_ < 0 ? -lo_ : lo_, hi_ < 0 ? -hi_ : hi_);
    }

    friend constexpr bool operator==(const Interval&, const Interval&) noexcept = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval make(double lo, double hi) { return Interval(lo, hi); }

namespace detail {

inline Interval checked(double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::overflow_error(std::string(what) + " overflowed to a non-finite endpoint");
    }
    return Interval(lo, hi);
}

}  // namespace detail

/// Minkowski sum.
inline Interval add(const Interval& a, const Interval& b) {
    return detail::checked(a.lo() + b.lo(), a.hi() + b.hi(), "interval sum");
}

/// Product as [min, max] over the four endpoint products.
inline Interval mul(const Interval& a, const Interval& b) {
    const double p1 = a.lo() * b.lo();
    const double p2 = a.lo() * b.hi();
    const double p3 = a.hi() * b.lo();
    const double p4 = a.hi() * b.hi();
    return detail::checked(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}), "interval product");
}

/// s * [lo, hi], swapping endpoints when s < 0.
inline Interval scale(double s, const Interval& a) {
    const double x = s * a.lo();
    const double y = s * a.hi();
    return detail::checked(std::min(x, y), std::max(x, y), "interval scaling");
}

inline Interval shift(const Interval& a, double t) {
    return detail::checked(a.lo() + t, a.hi() + t, "interval shift");
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }

/// Hausdorff distance between two intervals: max(|lo1 - lo2|, |hi1 - hi2|).
inline double hausdorff(const Interval& a, const Interval& b) noexcept {
    return std::max(std::fabs(a.lo() - b.lo()), std::fabs(a.hi() - b.hi()));
}

/// Smallest interval containing both.
inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline std::ostream& operator<<(std::ostream& os, const Interval& i) {
    return os << '[' << i.lo() << ", " << i.hi() << ']';
}

}  // namespace fcorr
