#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fcorr/correlation.hpp"
#include "test_support.hpp"

using namespace fcorr;

TEST(Correlation, BuildLinear) {
    const auto f = CorrelationFunction::linear(2, 1);
    EXPECT_EQ(f.direction(), Direction::increasing);
    EXPECT_EQ(f(2), 5);
    EXPECT_EQ(CorrelationFunction::linear(-0.5, 3).direction(), Direction::decreasing);
}

TEST(Correlation, BuildHyperbolic) {
    const auto f = CorrelationFunction::hyperbolic(4, 0);
    EXPECT_EQ(f.direction(), Direction::decreasing);
    EXPECT_EQ(f(2), 2);
    EXPECT_EQ(CorrelationFunction::hyperbolic(-4, 0).direction(), Direction::increasing);
}

TEST(Correlation, ConstantMapsAreRejected) {
    EXPECT_THROW(CorrelationFunction::linear(0, 3), std::invalid_argument);
    EXPECT_THROW(CorrelationFunction::hyperbolic(0, 1), std::invalid_argument);
}

TEST(Correlation, NamedFamilies) {
    EXPECT_EQ(CorrelationFunction::identity()(3.5), 3.5);
    EXPECT_EQ(CorrelationFunction::negation()(3.5), -3.5);
    EXPECT_EQ(CorrelationFunction::reciprocal()(4), 0.25);
    EXPECT_EQ(CorrelationFunction::negation().direction(), Direction::decreasing);
    EXPECT_EQ(CorrelationFunction::reciprocal().direction(), Direction::decreasing);
}

TEST(CheckMonotone, Examples) {
    const auto cube = CorrelationFunction::custom([](double x) { return x * x * x; }, Direction::increasing, "cube");
    EXPECT_EQ(check_monotone(cube, make(1, 2), 100), Direction::increasing);

    const auto square = CorrelationFunction::custom([](double x) { return x * x; }, Direction::increasing, "square");
    EXPECT_THROW(check_monotone(square, make(-1, 1), 100), std::invalid_argument);

    EXPECT_EQ(check_monotone(CorrelationFunction::negation(), make(-7, 3), 10), Direction::decreasing);
}

TEST(CheckMonotone, FlatStepIsAViolation) {
    const auto step = CorrelationFunction::custom([](double x) { return std::floor(x); }, Direction::increasing);
    EXPECT_THROW(check_monotone(step, make(0, 3), 50), std::invalid_argument);
    EXPECT_THROW(check_monotone(CorrelationFunction::identity(), make(0, 1), 2), std::invalid_argument);
}

TEST(CheckMonotone, CustomDeclaredDirectionMustMatch) {
    const auto lying = CorrelationFunction::custom([](double x) { return -x; }, Direction::increasing);
    EXPECT_THROW(require_applicable(lying, make(0, 1)), std::invalid_argument);
}

TEST(CheckMonotone, CustomDomainIsEnforced) {
    const auto log = CorrelationFunction::custom([](double x) { return std::log(x); }, Direction::increasing, "log",
                                                 make(1e-9, 1e9));
    EXPECT_NO_THROW(require_applicable(log, make(1, 5)));
    EXPECT_THROW(require_applicable(log, make(-1, 5)), std::domain_error);
}

TEST(InducedNumber, Linear) {
    const auto a = FuzzyNumber::triangular(1, 2, 3);
    const auto b = induced_number(a, CorrelationFunction::linear(2, 1));
    for (std::size_t i = 0; i < b.levels().size(); ++i) {
        const double alpha = b.grid().alpha(i);
        EXPECT_NEAR(b.level(i).lo(), 3 + 2 * alpha, 1e-12);
        EXPECT_NEAR(b.level(i).hi(), 7 - 2 * alpha, 1e-12);
    }
}

TEST(InducedNumber, IdentityLeavesNumberUnchanged) {
    const auto a = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_EQ(induced_number(a, CorrelationFunction::identity()), a);
}

TEST(InducedNumber, HyperbolicAtZero) {
    const auto b = induced_number(FuzzyNumber::triangular(1, 2, 3), CorrelationFunction::hyperbolic(4, 0));
    EXPECT_DOUBLE_EQ(b.support().lo(), 4.0 / 3.0);
    EXPECT_EQ(b.support().hi(), 4);
    EXPECT_EQ(b.core(), make(2, 2));
}

TEST(InducedNumber, DomainViolation) {
    EXPECT_THROW(induced_number(FuzzyNumber::triangular(-1, 1, 2), CorrelationFunction::reciprocal()),
                 std::domain_error);
}

TEST(InducedNumberProperties, LevelsAreImagesOfLevels) {
    fcorr_test::Generator gen(31);
    for (int c = 0; c < 100; ++c) {
        const FuzzyNumber a = gen.sign_definite_fuzzy();
        const auto f = gen.coin() ? CorrelationFunction::linear(gen.nonzero(0.1, 4), gen.uniform(-3, 3))
                                  : CorrelationFunction::hyperbolic(gen.nonzero(0.1, 4), gen.uniform(-3, 3));
        const auto b = induced_number(a, f);
        EXPECT_TRUE(is_nested(b.levels()));
        for (std::size_t i = 0; i < a.levels().size(); ++i) {
            EXPECT_EQ(b.level(i), image_monotone(f, a.level(i)));
        }
    }
}

TEST(InducedNumberProperties, LinearInverseComposesToIdentity) {
    fcorr_test::Generator gen(32);
    for (int c = 0; c < 100; ++c) {
        const FuzzyNumber a = gen.fuzzy();
        const double q = gen.nonzero(0.1, 5);
        const double r = gen.uniform(-5, 5);
        const auto back = induced_number(induced_number(a, CorrelationFunction::linear(q, r)),
                                         CorrelationFunction::linear(1 / q, -r / q));
        for (std::size_t i = 0; i < a.levels().size(); ++i) {
            EXPECT_LE(hausdorff(back.level(i), a.level(i)), 1e-9);
        }
    }
}

TEST(InducedNumberProperties, CustomMonotoneFunctionPreservesNestedness) {
    const auto cube = CorrelationFunction::custom([](double x) { return x * x * x; }, Direction::increasing, "cube");
    const auto expo = CorrelationFunction::custom([](double x) { return -std::exp(x); }, Direction::decreasing, "-exp");
    fcorr_test::Generator gen(33);
    for (int n = 0; n < 50; ++n) {
        const FuzzyNumber a = gen.fuzzy(-2, 2);
        const auto b = induced_number(a, cube);
        const auto c = induced_number(a, expo);
        EXPECT_TRUE(is_nested(b.levels()));
        EXPECT_TRUE(is_nested(c.levels()));
    }
}
