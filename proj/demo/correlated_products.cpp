// Standard vs correlated products of a number with itself, and the additive
// and multiplicative inverses obtained through negation and reciprocal
// correlation.

#include <iostream>

#include "fcorr/fcorr.hpp"

int main() {
    using namespace fcorr;

    const auto a = FuzzyNumber::triangular(-2, 0, 1);
    const auto id = CorrelationFunction::identity();

    const auto standard_sq = standard_product(a, induced_number(a, id));
    const auto correlated_sq = correlated_product(a, id);
    std::cout << "A = tri(-2, 0, 1)\n"
              << "  standard   [A A]^0     = " << standard_sq.support() << '\n'
              << "  correlated [A ._id A]^0 = " << correlated_sq.support() << '\n';

    const auto report = compare_levels(correlated_sq, standard_sq);
    std::cout << "  correlated levels inside standard levels: " << std::boolalpha << report.all_subset() << "\n\n";

    const auto b = FuzzyNumber::triangular(1, 2, 3);
    std::cout << "B = tri(1, 2, 3)\n"
              << "  B +_neg f(B) at alpha 0.5 = " << correlated_sum(b, CorrelationFunction::negation()).alpha_cut(0.5)
              << '\n'
              << "  B ._rec f(B) at alpha 0.5 = "
              << correlated_product(b, CorrelationFunction::reciprocal()).alpha_cut(0.5) << '\n'
              << "  B + f(B), f = -x, at 0    = "
              << standard_sum(b, induced_number(b, CorrelationFunction::negation())).support() << '\n';
}
