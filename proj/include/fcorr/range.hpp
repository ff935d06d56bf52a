#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "fcorr/interval.hpp"

namespace fcorr {

/// a x^2 + b x + c
struct Quadratic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// a x + q / x + r, only evaluated away from 0.
struct ShiftedReciprocal {
    double a = 0.0;
    double q = 0.0;
    double r = 0.0;
};

/// A continuous one-variable function whose range over an interval is wanted.
/// Quadratic and shifted-reciprocal forms carry their coefficients so the
/// range can be found from critical points; generic forms are black boxes.
class Objective {
public:
    using Generic = std::function<double(double)>;

    static Objective quadratic(double a, double b, double c) { return Objective(Quadratic{a, b, c}); }
    static Objective shifted_reciprocal(double a, double q, double r) {
        return Objective(ShiftedReciprocal{a, q, r});
    }
    static Objective generic(Generic fn) {
        if (!fn) {
            throw std::invalid_argument("objective needs a callable");
        }
        return Objective(std::move(fn));
    }

    [[nodiscard]] bool has_analytic_form() const noexcept { return !std::holds_alternative<Generic>(form_); }

    [[nodiscard]] double operator()(double x) const {
        if (const auto* p = std::get_if<Quadratic>(&form_)) {
            return (p->a * x + p->b) * x + p->c;
        }
        if (const auto* p = std::get_if<ShiftedReciprocal>(&form_)) {
            return p->a * x + p->q / x + p->r;
        }
        return std::get<Generic>(form_)(x);
    }

    /// Points strictly inside `interval` where the derivative vanishes.
    [[nodiscard]] std::vector<double> critical_points(const Interval& interval) const {
        std::vector<double> out;
        const auto keep = [&](double x) {
            if (x > interval.lo() && x < interval.hi()) {
                out.push_back(x);
            }
        };
        if (const auto* p = std::get_if<Quadratic>(&form_)) {
            if (p->a != 0.0) {
                keep(-p->b / (2.0 * p->a));
            }
        } else if (const auto* p = std::get_if<ShiftedReciprocal>(&form_)) {
            // a - q/x^2 = 0
            if (p->a != 0.0 && p->q / p->a > 0.0) {
                const double root = std::sqrt(p->q / p->a);
                keep(root);
                keep(-root);
            }
        }
        return out;
    }

    [[nodiscard]] bool undefined_at_zero() const noexcept {
        const auto* p = std::get_if<ShiftedReciprocal>(&form_);
        return p != nullptr && p->q != 0.0;
    }

private:
    using Form = std::variant<Quadratic, ShiftedReciprocal, Generic>;
    explicit Objective(Form form) : form_(std::move(form)) {}

    Form form_;
};

/// How a range is computed: closed-form critical points, dense sampling with
/// golden-section refinement, or analytic when available and numeric otherwise.
struct RangeMethod {
    enum class Mode { automatic, analytic, numeric };

    static constexpr int default_samples = 1025;
    static constexpr double default_refine_tol = 1e-10;
    static constexpr int min_samples = 65;

    Mode mode = Mode::automatic;
    int samples = default_samples;
    double refine_tol = default_refine_tol;

    static RangeMethod automatic() { return {}; }
    static RangeMethod analytic() { return {Mode::analytic, default_samples, default_refine_tol}; }
    static RangeMethod numeric(int samples = default_samples, double refine_tol = default_refine_tol) {
        if (samples < min_samples) {
            throw std::invalid_argument("numeric range needs at least 65 samples");
        }
        if (!(refine_tol > 0.0)) {
            throw std::invalid_argument("refinement tolerance must be positive");
        }
        return {Mode::numeric, samples, refine_tol};
    }
};

namespace detail {

/// Minimizes g over [a, b] by golden-section search; returns the best point seen.
template <class F>
double golden_section_min(const F& g, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > tol) {
        if (gc <= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    return gc <= gd ? c : d;
}

inline Interval finite_range(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::overflow_error("range of objective is not finite");
    }
    return Interval(lo, hi);
}

inline Interval analytic_range(const Objective& g, const Interval& interval) {
    double lo = g(interval.lo());
    double hi = lo;
    const auto visit = [&](double x) {
        const double v = g(x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    visit(interval.hi());
    for (double x : g.critical_points(interval)) {
        visit(x);
    }
    return finite_range(lo, hi);
}

inline Interval numeric_range(const Objective& g, const Interval& interval, int samples, double tol) {
    if (interval.is_degenerate()) {
        const double v = g(interval.lo());
        return finite_range(v, v);
    }
    const auto n = static_cast<std::size_t>(samples);
    std::vector<double> xs(n);
    std::vector<double> vs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = i + 1 == n ? interval.hi()
                           : interval.lo() + interval.width() * static_cast<double>(i) / static_cast<double>(n - 1);
        vs[i] = g(xs[i]);
    }
    double lo = vs.front();
    double hi = vs.front();
    const auto neg = [&](double x) { return -g(x); };
    // Discrete extrema, end samples included with their single neighbour;
    // flat runs are skipped since the sampled value is already exact there.
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, vs[i]);
        hi = std::max(hi, vs[i]);
        const std::size_t left = i == 0 ? i : i - 1;
        const std::size_t right = i + 1 == n ? i : i + 1;
        const double vl = vs[left];
        const double vr = vs[right];
        const bool local_min = vs[i] <= vl && vs[i] <= vr && (vs[i] < vl || vs[i] < vr);
        const bool local_max = vs[i] >= vl && vs[i] >= vr && (vs[i] > vl || vs[i] > vr);
        if (local_min) {
            lo = std::min(lo, g(golden_section_min(g, xs[left], xs[right], tol)));
        }
        if (local_max) {
            hi = std::max(hi, g(golden_section_min(neg, xs[left], xs[right], tol)));
        }
    }
    return finite_range(lo, hi);
}

}  // namespace detail

/// [min g, max g] over a compact interval, i.e. the closure of g(interval).
///
/// Analytic mode evaluates g at the endpoints and its interior critical
/// points and throws std::invalid_argument for generic objectives. Numeric
/// mode samples equispaced points and refines each discrete local extremum
/// by golden-section search on its neighbouring bracket.
inline Interval range_over_interval(const Objective& g, const Interval& interval,
                                    const RangeMethod& method = RangeMethod::automatic()) {
    if (g.undefined_at_zero() && interval.contains(0.0)) {
        throw std::domain_error("objective is undefined at 0, which lies in the interval");
    }
    switch (method.mode) {
        case RangeMethod::Mode::analytic:
            if (!g.has_analytic_form()) {
                throw std::invalid_argument("analytic range requested for an objective without a closed form");
            }
            return detail::analytic_range(g, interval);
        case RangeMethod::Mode::numeric:
            return detail::numeric_range(g, interval, method.samples, method.refine_tol);
        case RangeMethod::Mode::automatic:
            break;
    }
    if (g.has_analytic_form()) {
        return detail::analytic_range(g, interval);
    }
    return detail::numeric_range(g, interval, RangeMethod::default_samples, RangeMethod::default_refine_tol);
}

}  // namespace fcorr
