// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fcorr/cli.hpp"
#include "fcorr/fcorr.hpp"
#include "../test_support.hpp"

using namespace fcorr;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            detail = what;
        }
        ok = ok && condition;
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string fmt(const Interval& i) { return "[" + fmt(i.lo()) + ", " + fmt(i.hi()) + "]"; }

bool within(const Interval& got, const Interval& want, double tol) { return hausdorff(got, want) <= tol; }

/// A random built-in correlation paired with an operand inside its domain.
std::pair<FuzzyNumber, CorrelationFunction> random_case(fcorr_test::Generator& gen, bool increasing_only = false) {
    while (true) {
        std::pair<FuzzyNumber, CorrelationFunction> c = [&]() -> std::pair<FuzzyNumber, CorrelationFunction> {
            switch (gen.integer(0, 4)) {
                case 0: return {gen.fuzzy(), CorrelationFunction::linear(gen.nonzero(0.1, 4), gen.uniform(-3, 3))};
                case 1:
                    return {gen.sign_definite_fuzzy(),
                            CorrelationFunction::hyperbolic(gen.nonzero(0.1, 4), gen.uniform(-3, 3))};
                case 2: return {gen.fuzzy(), CorrelationFunction::identity()};
                case 3: return {gen.fuzzy(), CorrelationFunction::negation()};
                default: return {gen.sign_definite_fuzzy(), CorrelationFunction::reciprocal()};
            }
        }();
        if (!increasing_only || c.second.direction() == Direction::increasing) {
            return c;
        }
    }
}

Outcome example_reproduction() {
    Outcome o;
    const auto a = FuzzyNumber::triangular(-2, 0, 1);
    const Interval standard = standard_product(a, a).support();
    const Interval correlated = correlated_product(a, CorrelationFunction::identity()).support();
    o.require(within(standard, make(-2, 4), 1e-12), "standard product " + fmt(standard));
    o.require(within(correlated, make(0, 4), 1e-9), "correlated product " + fmt(correlated));
    o.require(correlated.subset_of(standard, 0.0), "subset");
    if (o.ok) {
        o.detail = "standard " + fmt(standard) + ", correlated " + fmt(correlated);
    }
    return o;
}

Outcome product_subset() {
    Outcome o;
    fcorr_test::Generator gen(1001);
    for (int c = 0; c < 200; ++c) {
        const auto [a, f] = random_case(gen);
        const auto cmp = compare_levels(correlated_product(a, f), standard_product(a, induced_number(a, f)), 1e-9);
        o.require(cmp.all_subset(), "case " + std::to_string(c) + " (" + f.name() + ")");
    }
    if (o.ok) {
        o.detail = "200 cases, every level";
    }
    return o;
}

Outcome sum_coincidence() {
    Outcome o;
    fcorr_test::Generator gen(1002);
    double worst = 0.0;
    for (int c = 0; c < 200; ++c) {
        const auto [a, f] = random_case(gen, true);
        const auto cmp = compare_levels(correlated_sum(a, f), standard_sum(a, induced_number(a, f)), 1e-9);
        worst = std::max(worst, cmp.max_hausdorff());
        o.require(cmp.all_equal(), "case " + std::to_string(c) + " (" + f.name() + ")");
    }
    const auto tri = FuzzyNumber::triangular(1, 2, 3);
    const auto neg = CorrelationFunction::negation();
    const Interval corr = correlated_sum(tri, neg).support();
    const Interval stdv = standard_sum(tri, induced_number(tri, neg)).support();
    o.require(corr == make(0, 0), "negation correlated sum " + fmt(corr));
    o.require(stdv == make(-2, 2), "negation standard sum " + fmt(stdv));
    if (o.ok) {
        o.detail = "200 increasing cases, max distance " + fmt(worst) + "; negation: " + fmt(corr) + " vs " +
                   fmt(stdv);
    }
    return o;
}

Outcome inverses() {
    Outcome o;
    fcorr_test::Generator gen(1003);
    for (int c = 0; c < 50; ++c) {
        const auto sum = correlated_sum(gen.fuzzy(), CorrelationFunction::negation());
        const auto product = correlated_product(gen.sign_definite_fuzzy(), CorrelationFunction::reciprocal());
        for (const auto& l : sum.levels()) {
            o.require(l == make(0, 0), "sum case " + std::to_string(c) + " level " + fmt(l));
        }
        for (const auto& l : product.levels()) {
            o.require(l == make(1, 1), "product case " + std::to_string(c) + " level " + fmt(l));
        }
    }
    if (o.ok) {
        o.detail = "50 cases, exact [0, 0] and [1, 1]";
    }
    return o;
}

FuzzyNumber engine_for(ClosedForm kind, const FuzzyNumber& a, double q, double r) {
    const auto f = is_hyperbolic(kind) ? CorrelationFunction::hyperbolic(q, r) : CorrelationFunction::linear(q, r);
    switch (kind) {
        case ClosedForm::std_sum_linear:
        case ClosedForm::std_sum_hyperbolic: return standard_sum(a, induced_number(a, f));
        case ClosedForm::std_prod_linear:
        case ClosedForm::std_prod_hyperbolic: return standard_product(a, induced_number(a, f));
        case ClosedForm::corr_sum_linear: return correlated_sum(a, f);
        case ClosedForm::corr_prod_linear:
        case ClosedForm::corr_prod_hyperbolic: break;
    }
    return correlated_product(a, f);
}

Outcome closed_form_agreement() {
    Outcome o;
    fcorr_test::Generator gen(1005);
    double worst = 0.0;
    for (ClosedForm kind : all_closed_forms) {
        int checked = 0;
        while (checked < 100) {
            const FuzzyNumber a = is_hyperbolic(kind) ? gen.sign_definite_fuzzy() : gen.fuzzy();
            const double q = gen.nonzero(0.1, 4);
            const double r = gen.uniform(-3, 3);
            if (!closed_form_is_exact(kind, a.support(), q, r)) {
                continue;
            }
            const auto cmp = compare_levels(closed_form(kind, a, q, r), engine_for(kind, a, q, r), 1e-9);
            worst = std::max(worst, cmp.max_hausdorff());
            o.require(cmp.all_equal(), std::string(to_string(kind)) + " case " + std::to_string(checked));
            ++checked;
        }
    }
    const auto tri = FuzzyNumber::triangular(1, 2, 3);
    const auto hyp = CorrelationFunction::hyperbolic(4, 0);
    const Interval golden = correlated_sum(tri, hyp, RangeMethod::numeric()).support();
    const Interval oracle = oracle::evaluate(tri, hyp, BinaryOp::sum).support();
    o.require(within(golden, make(4, 5), 1e-9), "golden-section " + fmt(golden));
    o.require(within(oracle, make(4, 5), 5.0 * 2 / oracle::default_samples), "oracle " + fmt(oracle));
    if (o.ok) {
        o.detail = "100 cases x " + std::to_string(all_closed_forms.size()) + " formulas, max distance " +
                   fmt(worst) + "; x + 4/x on [1, 3]: golden " + fmt(golden) + ", oracle " + fmt(oracle);
    }
    return o;
}

Outcome oracle_convergence() {
    Outcome o;
    const auto tri = FuzzyNumber::triangular(1, 2, 3);
    std::vector<std::pair<FuzzyNumber, CorrelationFunction>> cases;
    for (const auto& f : {CorrelationFunction::identity(), CorrelationFunction::negation(),
                          CorrelationFunction::reciprocal(), CorrelationFunction::linear(2, 1),
                          CorrelationFunction::hyperbolic(4, 0)}) {
        cases.emplace_back(tri, f);
    }
    cases.emplace_back(FuzzyNumber::triangular(-2, 0, 1), CorrelationFunction::identity());

    constexpr double exact = 1e-12;
    double worst_ratio_to_bound = 0.0;
    double min_ratio = INFINITY;
    for (const auto& [a, f] : cases) {
        for (BinaryOp op : {BinaryOp::sum, BinaryOp::product}) {
            const auto fine = oracle::check(a, f, op, 2001);
            const auto coarse = oracle::check(a, f, op, 501);
            const std::string label = f.name() + " " + to_string(op) + " on " + fmt(a.support());
            const double bound = oracle::convergence_constant * fine.support_width / 2001;
            o.require(fine.max_hausdorff <= bound + exact, label + ": " + fmt(fine.max_hausdorff) + " > " + fmt(bound));
            worst_ratio_to_bound = std::max(worst_ratio_to_bound, fine.max_hausdorff / bound);
            if (fine.max_hausdorff > exact || coarse.max_hausdorff > exact) {
                const double ratio = coarse.max_hausdorff / fine.max_hausdorff;
                min_ratio = std::min(min_ratio, ratio);
                o.require(ratio >= 2.0, label + ": reduction " + fmt(ratio));
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(cases.size() * 2) + " cases, max distance " + fmt(worst_ratio_to_bound) +
                   " of 5w/N, min reduction 501->2001 " + fmt(min_ratio) + "x";
    }
    return o;
}

Outcome structural_invariants() {
    Outcome o;
    fcorr_test::Generator gen(1007);
    for (int c = 0; c < 1000; ++c) {
        const auto [a, f] = random_case(gen);
        const FuzzyNumber b = induced_number(a, f);
        FuzzyNumber x = a;
        switch (gen.integer(0, 5)) {
            case 0: x = correlated_sum(a, f); break;
            case 1: x = correlated_product(a, f); break;
            case 2: x = standard_sum(a, b); break;
            case 3: x = standard_product(a, b); break;
            case 4: x = b; break;
            default: x = oracle::evaluate(a, f, gen.coin() ? BinaryOp::sum : BinaryOp::product, 201); break;
        }
        const auto levels = x.levels();
        bool valid = is_nested(levels);
        try {
            (void)FuzzyNumber::from_levels({levels.begin(), levels.end()});
        } catch (const std::invalid_argument&) {
            valid = false;
        }
        o.require(valid, "case " + std::to_string(c) + " (" + f.name() + ")");
    }
    if (o.ok) {
        o.detail = "1000 cases nested";
    }
    return o;
}

Outcome cli_conformance() {
    Outcome o;
    const auto run = [](std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
    };
    const auto neg = run({"eval", "-e", "corr_sum(tri(1,2,3), negation)", "--alphas", "0,0.5,1"});
    o.require(neg.first == 0 && neg.second == "alpha\tlevel\n0\t[0, 0]\n0.5\t[0, 0]\n1\t[0, 0]\n",
              "negation rows: " + neg.second);
    const auto table = run({"table", "-e", "corr_prod(tri(-2,0,1), identity)", "--alphas", "0"});
    o.require(table.first == 0 && table.second == "alpha\tengine\tclosed_form\tstandard\n0\t[0, 4]\t[0, 4]\t[-2, 4]\n",
              "table rows: " + table.second);
    const auto csv = run({"eval", "-e", "corr_sum(tri(1,2,3), linear(2,1))", "--alphas", "0", "--format", "csv"});
    o.require(csv.first == 0 && csv.second == "alpha,lo,hi\n0,4,10\n", "csv rows: " + csv.second);

    for (const char* bad : {"tri(3,2,1)", "tri(1,2", "gauss(1)", "corr_sum(tri(1,2,3))"}) {
        o.require(run({"eval", "-e", bad}).first == 1, std::string("exit for ") + bad);
    }
    o.require(run({"eval", "-e", "corr_sum(tri(-1,0,1), hyperbolic(1,0))"}).first == 2, "hyperbolic over 0");
    if (o.ok) {
        o.detail = "3 example invocations, exit 1 on invalid input, exit 2 on domain error";
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_ms;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "example reproduction", 1, example_reproduction},
        {2, "correlated product inside standard product", 1000, product_subset},
        {3, "sum coincidence for increasing f", 1000, sum_coincidence},
        {4, "exact inverses", 100, inverses},
        {5, "closed-form agreement", 2000, closed_form_agreement},
        {6, "oracle convergence", 5000, oracle_convergence},
        {7, "structural invariants", 1000, structural_invariants},
        {8, "cli conformance", INFINITY, cli_conformance},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && ms > c.budget_ms) {
            outcome = {false, "took " + fmt(ms) + " ms, budget " + fmt(c.budget_ms) + " ms"};
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("%s criterion %d %-44s %8.3f ms  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, ms,
                    outcome.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
