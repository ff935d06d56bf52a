#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"
#include "fcorr/interval.hpp"

namespace fcorr_test {

using namespace fcorr;

/// Hand-rolled generators for property tests; seeded so failures reproduce.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Interval interval(double lo = -10.0, double hi = 10.0) {
        const double a = uniform(lo, hi);
        const double b = uniform(lo, hi);
        return Interval(std::min(a, b), std::max(a, b));
    }

    /// Random triangular or trapezoidal number with support inside [lo, hi].
    FuzzyNumber fuzzy(double lo = -5.0, double hi = 5.0, AlphaGrid grid = {}) {
        std::vector<double> p{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
        std::sort(p.begin(), p.end());
        if (coin()) {
            return FuzzyNumber::triangular(p[0], p[1], p[3], grid);
        }
        return FuzzyNumber::trapezoidal(p[0], p[1], p[2], p[3], grid);
    }

    /// Random number whose support avoids 0 (either side).
    FuzzyNumber sign_definite_fuzzy(AlphaGrid grid = {}) {
        FuzzyNumber a = fuzzy(0.1, 5.0, grid);
        if (coin()) {
            std::vector<Interval> flipped;
            for (const auto& l : a.levels()) {
                flipped.emplace_back(-l.hi(), -l.lo());
            }
            a = FuzzyNumber::from_levels(std::move(flipped));
        }
        return a;
    }

    double nonzero(double magnitude_lo, double magnitude_hi) {
        const double m = uniform(magnitude_lo, magnitude_hi);
        return coin() ? m : -m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace fcorr_test
