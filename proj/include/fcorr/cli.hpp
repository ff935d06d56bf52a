#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcorr/arithmetic.hpp"
#include "fcorr/closed_form.hpp"
#include "fcorr/expression.hpp"
#include "fcorr/oracle.hpp"
#include "fcorr/serialization.hpp"

namespace fcorr::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,  // parse or validation error
    exit_domain = 2,   // domain violation (e.g. hyperbolic across 0)
    exit_oracle = 3,   // oracle distance above tolerance
};

/// 12 significant digits, no signed zero.
inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", unsigned_zero(x));
    return buf;
}

inline std::string format_interval(const Interval& i) {
    return "[" + format_number(i.lo()) + ", " + format_number(i.hi()) + "]";
}

inline std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string_view token(text.data() + start, comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw std::invalid_argument("malformed alpha '" + std::string(token) + "'");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw std::invalid_argument("alpha " + std::string(token) + " lies outside [0, 1]");
        }
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

struct Options {
    std::string expression;
    int grid = AlphaGrid::default_subdivisions;
    std::string alphas;
    std::string format = "text";
    int oracle_n = oracle::default_samples;
};

namespace detail {

inline std::vector<double> selected_alphas(const Options& o, AlphaGrid grid) {
    if (!o.alphas.empty()) {
        return parse_alphas(o.alphas);
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.push_back(grid.alpha(i));
    }
    return out;
}

inline int run_eval(const Options& o, std::ostream& out) {
    const AlphaGrid grid(o.grid);
    const auto alphas = selected_alphas(o, grid);
    const FuzzyNumber result = expr::evaluate(expr::parse(o.expression), grid);

    if (o.format == "csv") {
        out << "alpha,lo,hi\n";
        for (double a : alphas) {
            const Interval cut = result.alpha_cut(a);
            out << format_number(a) << ',' << format_number(cut.lo()) << ',' << format_number(cut.hi()) << '\n';
        }
    } else if (o.format == "json") {
        json levels = json::array();
        for (double a : alphas) {
            const Interval cut = result.alpha_cut(a);
            levels.push_back({{"alpha", a}, {"lo", unsigned_zero(cut.lo())}, {"hi", unsigned_zero(cut.hi())}});
        }
        out << json{{"expr", o.expression}, {"K", grid.subdivisions()}, {"levels", levels}}.dump(2) << '\n';
    } else {
        out << "alpha\tlevel\n";
        for (double a : alphas) {
            out << format_number(a) << '\t' << format_interval(result.alpha_cut(a)) << '\n';
        }
    }
    return exit_ok;
}

/// Columns of the side-by-side table.
struct TableColumns {
    FuzzyNumber engine;
    std::optional<FuzzyNumber> closed;
    std::optional<std::string> closed_id;
    std::optional<FuzzyNumber> standard;
};

inline std::optional<AffineParams> params_of(const CorrelationFunction& f) {
    if (auto p = f.linear_params()) return p;
    return f.hyperbolic_params();
}

inline TableColumns table_columns(const expr::Expression& e, AlphaGrid grid) {
    if (const auto* c = std::get_if<expr::CorrelatedOp>(&e)) {
        const FuzzyNumber a = expr::evaluate(c->operand, grid);
        const CorrelationFunction f = expr::to_function(c->f);
        TableColumns cols{correlated(c->op, a, f), std::nullopt, std::nullopt,
                          standard(c->op, a, induced_number(a, f))};
        if (const auto kind = closed_form_for(true, c->op, f)) {
            const auto p = *params_of(f);
            cols.closed = closed_form(*kind, a, p.q, p.r);
            cols.closed_id = std::string(to_string(*kind));
        }
        return cols;
    }
    if (const auto* s = std::get_if<expr::StandardOp>(&e)) {
        TableColumns cols{expr::evaluate(e, grid), std::nullopt, std::nullopt, std::nullopt};
        cols.standard = cols.engine;
        // Closed forms exist when the right operand is f(A) for the left literal A.
        const auto* lhs = std::get_if<expr::FuzzyLiteral>(&s->lhs);
        const auto* rhs = std::get_if<expr::Induced>(&s->rhs);
        if (lhs && rhs && rhs->operand == *lhs) {
            const CorrelationFunction f = expr::to_function(rhs->f);
            if (const auto kind = closed_form_for(false, s->op, f)) {
                const auto p = *params_of(f);
                cols.closed = closed_form(*kind, expr::evaluate(*lhs, grid), p.q, p.r);
                cols.closed_id = std::string(to_string(*kind));
            }
        }
        return cols;
    }
    return TableColumns{expr::evaluate(e, grid), std::nullopt, std::nullopt, std::nullopt};
}

inline int run_table(const Options& o, std::ostream& out) {
    const AlphaGrid grid(o.grid);
    const auto alphas = selected_alphas(o, grid);
    const TableColumns cols = table_columns(expr::parse(o.expression), grid);
    const auto cut = [](const std::optional<FuzzyNumber>& x, double a) -> std::optional<Interval> {
        if (!x) return std::nullopt;
        return x->alpha_cut(a);
    };

    if (o.format == "csv") {
        out << "alpha,engine_lo,engine_hi,closed_form_lo,closed_form_hi,standard_lo,standard_hi\n";
        const auto pair = [](const std::optional<Interval>& i) {
            return i ? format_number(i->lo()) + "," + format_number(i->hi()) : std::string(",");
        };
        for (double a : alphas) {
            out << format_number(a) << ',' << pair(cols.engine.alpha_cut(a)) << ',' << pair(cut(cols.closed, a))
                << ',' << pair(cut(cols.standard, a)) << '\n';
        }
    } else if (o.format == "json") {
        const auto value = [](const std::optional<Interval>& i) { return i ? to_json_value(*i) : json(nullptr); };
        json levels = json::array();
        for (double a : alphas) {
            levels.push_back({{"alpha", a},
                              {"engine", to_json_value(cols.engine.alpha_cut(a))},
                              {"closed_form", value(cut(cols.closed, a))},
                              {"standard", value(cut(cols.standard, a))}});
        }
        out << json{{"expr", o.expression},
                    {"K", grid.subdivisions()},
                    {"closed_form_id", cols.closed_id ? json(*cols.closed_id) : json(nullptr)},
                    {"levels", levels}}
                   .dump(2)
            << '\n';
    } else {
        const auto text = [](const std::optional<Interval>& i) { return i ? format_interval(*i) : std::string("n/a"); };
        out << "alpha\tengine\tclosed_form\tstandard\n";
        for (double a : alphas) {
            out << format_number(a) << '\t' << format_interval(cols.engine.alpha_cut(a)) << '\t'
                << text(cut(cols.closed, a)) << '\t' << text(cut(cols.standard, a)) << '\n';
        }
    }
    return exit_ok;
}

inline int run_check(const Options& o, std::ostream& out) {
    const AlphaGrid grid(o.grid);
    const expr::Expression e = expr::parse(o.expression);
    const auto* c = std::get_if<expr::CorrelatedOp>(&e);
    if (c == nullptr) {
        throw std::invalid_argument("check needs a corr_sum or corr_prod expression");
    }
    if (o.oracle_n < 2) {
        throw std::invalid_argument("--oracle-n must be at least 2");
    }
    const auto report =
        oracle::check(expr::evaluate(c->operand, grid), expr::to_function(c->f), c->op, o.oracle_n, grid);

    if (o.format == "json") {
        json j = to_json_value(report);
        j["expr"] = o.expression;
        j["K"] = grid.subdivisions();
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "alpha,engine_lo,engine_hi,oracle_lo,oracle_hi,hausdorff\n";
        for (const auto& l : report.levels) {
            out << format_number(l.alpha) << ',' << format_number(l.engine.lo()) << ','
                << format_number(l.engine.hi()) << ',' << format_number(l.oracle.lo()) << ','
                << format_number(l.oracle.hi()) << ',' << format_number(l.hausdorff) << '\n';
        }
    } else {
        out << "alpha\tengine\toracle\thausdorff\n";
        for (const auto& l : report.levels) {
            out << format_number(l.alpha) << '\t' << format_interval(l.engine) << '\t' << format_interval(l.oracle)
                << '\t' << format_number(l.hausdorff) << '\n';
        }
        out << "max_hausdorff " << format_number(report.max_hausdorff) << " tolerance "
            << format_number(report.tolerance) << (report.passed() ? " PASS" : " FAIL") << '\n';
    }
    return report.passed() ? exit_ok : exit_oracle;
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Standard and f-correlated arithmetic on fuzzy numbers", "fcorr"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"text", "csv", "json"};

    const auto common = [&](CLI::App* sub) {
        sub->add_option("-e,--expr", o.expression, "expression, e.g. corr_sum(tri(1,2,3), linear(2,1))")
            ->required();
        sub->add_option("--grid", o.grid, "alpha-grid subdivisions K")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    };
    CLI::App* eval = app.add_subcommand("eval", "print the alpha-levels of an expression");
    common(eval);
    eval->add_option("--alphas", o.alphas, "comma-separated alpha values (default: grid nodes)");
    CLI::App* check = app.add_subcommand("check", "compare a correlated operation against the oracle");
    common(check);
    check->add_option("--oracle-n", o.oracle_n, "oracle sample count N");
    CLI::App* table = app.add_subcommand("table", "engine, closed-form and standard columns side by side");
    common(table);
    table->add_option("--alphas", o.alphas, "comma-separated alpha values (default: grid nodes)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (eval->parsed()) return detail::run_eval(o, out);
        if (check->parsed()) return detail::run_check(o, out);
        return detail::run_table(o, out);
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::overflow_error& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}

}  // namespace fcorr::cli
