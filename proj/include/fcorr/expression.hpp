#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "fcorr/arithmetic.hpp"
#include "fcorr/correlation.hpp"
#include "fcorr/fuzzy_number.hpp"

// Grammar (whitespace is insignificant):
//
//   expr   := name [ "(" [ arg { "," arg } ] ")" ]
//   arg    := number | expr
//   number := [+-] digits [ "." digits ] [ (e|E) [+-] digits ]   (also ".5")
//
// Names: tri trap crisp | linear hyperbolic identity negation reciprocal |
//        std_sum std_prod corr_sum corr_prod induced
//
// Operators take literals (or, for std_*, an induced literal) as operands;
// deeper nesting is rejected.

namespace fcorr::expr {

/// Syntax, arity or typing error, with the byte offset where it was detected.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class Shape { tri, trap, crisp };

struct FuzzyLiteral {
    Shape shape = Shape::crisp;
    std::vector<double> params;
    friend bool operator==(const FuzzyLiteral&, const FuzzyLiteral&) = default;
};

/// Built-in correlation; q and r are meaningful for linear and hyperbolic only.
struct CorrelationSpec {
    Family family = Family::identity;
    double q = 0.0;
    double r = 0.0;
    friend bool operator==(const CorrelationSpec&, const CorrelationSpec&) = default;
};

struct Induced {
    FuzzyLiteral operand;
    CorrelationSpec f;
    friend bool operator==(const Induced&, const Induced&) = default;
};

using Operand = std::variant<FuzzyLiteral, Induced>;

struct StandardOp {
    BinaryOp op = BinaryOp::sum;
    Operand lhs;
    Operand rhs;
    friend bool operator==(const StandardOp&, const StandardOp&) = default;
};

struct CorrelatedOp {
    BinaryOp op = BinaryOp::sum;
    FuzzyLiteral operand;
    CorrelationSpec f;
    friend bool operator==(const CorrelatedOp&, const CorrelatedOp&) = default;
};

using Expression = std::variant<FuzzyLiteral, CorrelationSpec, Induced, StandardOp, CorrelatedOp>;

namespace detail {

struct Call;

struct Arg {
    std::size_t pos = 0;
    std::variant<double, std::vector<Call>> value;  // vector holds exactly one Call
    [[nodiscard]] bool is_number() const noexcept { return value.index() == 0; }
};

struct Call {
    std::string name;
    std::size_t pos = 0;
    std::vector<Arg> args;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Call parse_all() {
        Call call = parse_call();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
        }
        return call;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    Call parse_call() {
        skip_ws();
        Call call;
        call.pos = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            call.name.push_back(text_[pos_++]);
        }
        if (call.name.empty()) {
            throw ParseError(pos_ < text_.size() ? "expected a function name" : "unexpected end of input", pos_);
        }
        if (!at('(')) {
            return call;
        }
        ++pos_;
        if (at(')')) {
            ++pos_;
            return call;
        }
        while (true) {
            call.args.push_back(parse_arg());
            if (at(',')) {
                ++pos_;
                continue;
            }
            expect(')');
            return call;
        }
    }

    Arg parse_arg() {
        skip_ws();
        Arg arg;
        arg.pos = pos_;
        if (pos_ < text_.size() && is_number_start(text_[pos_])) {
            arg.value = parse_number();
        } else {
            arg.value = std::vector<Call>{parse_call()};
        }
        return arg;
    }

    static bool is_number_start(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
    }

    double parse_number() {
        const std::size_t start = pos_;
        const auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        if (text_[pos_] == '+' || text_[pos_] == '-') {
            ++pos_;
        }
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            throw ParseError("malformed number", start);
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            if (digits() == 0) {
                throw ParseError("malformed exponent", start);
            }
        }
        std::string_view token = text_.substr(start, pos_ - start);
        if (token.front() == '+') {
            token.remove_prefix(1);
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size()) {
            throw ParseError("number out of range", start);
        }
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::vector<double> numeric_args(const Call& call, std::size_t arity) {
    if (call.args.size() != arity) {
        throw ParseError(call.name + " expects " + std::to_string(arity) + " argument(s), got " +
                             std::to_string(call.args.size()),
                         call.pos);
    }
    std::vector<double> out;
    for (const auto& a : call.args) {
        if (!a.is_number()) {
            throw ParseError(call.name + " expects numeric arguments", a.pos);
        }
        out.push_back(std::get<double>(a.value));
    }
    return out;
}

inline const Call& nested(const Arg& arg, const std::string& owner) {
    if (arg.is_number()) {
        throw ParseError(owner + " expects a function-call argument, not a number", arg.pos);
    }
    return std::get<std::vector<Call>>(arg.value).front();
}

inline Expression lower(const Call& call);

inline FuzzyLiteral as_literal(const Call& call, const std::string& owner) {
    const Expression e = lower(call);
    if (const auto* lit = std::get_if<FuzzyLiteral>(&e)) {
        return *lit;
    }
    throw ParseError(owner + " expects a fuzzy literal (tri, trap, crisp) here, got " + call.name, call.pos);
}

inline CorrelationSpec as_correlation(const Call& call, const std::string& owner) {
    const Expression e = lower(call);
    if (const auto* spec = std::get_if<CorrelationSpec>(&e)) {
        return *spec;
    }
    throw ParseError(owner + " expects a correlation function here, got " + call.name, call.pos);
}

inline Operand as_operand(const Call& call, const std::string& owner) {
    const Expression e = lower(call);
    if (const auto* lit = std::get_if<FuzzyLiteral>(&e)) {
        return *lit;
    }
    if (const auto* ind = std::get_if<Induced>(&e)) {
        return *ind;
    }
    throw ParseError(owner + " expects a fuzzy literal or induced(...) operand, got " + call.name, call.pos);
}

inline void require_arity(const Call& call, std::size_t arity) {
    if (call.args.size() != arity) {
        throw ParseError(call.name + " expects " + std::to_string(arity) + " argument(s), got " +
                             std::to_string(call.args.size()),
                         call.pos);
    }
}

inline Expression lower(const Call& call) {
    const std::string& n = call.name;
    if (n == "tri") return FuzzyLiteral{Shape::tri, numeric_args(call, 3)};
    if (n == "trap") return FuzzyLiteral{Shape::trap, numeric_args(call, 4)};
    if (n == "crisp") return FuzzyLiteral{Shape::crisp, numeric_args(call, 1)};
    if (n == "linear" || n == "hyperbolic") {
        const auto v = numeric_args(call, 2);
        return CorrelationSpec{n == "linear" ? Family::linear : Family::hyperbolic, v[0], v[1]};
    }
    if (n == "identity" || n == "negation" || n == "reciprocal") {
        require_arity(call, 0);
        const Family family = n == "identity" ? Family::identity
                              : n == "negation" ? Family::negation
                                                : Family::reciprocal;
        return CorrelationSpec{family, 0.0, 0.0};
    }
    if (n == "induced") {
        require_arity(call, 2);
        return Induced{as_literal(nested(call.args[0], n), n), as_correlation(nested(call.args[1], n), n)};
    }
    if (n == "std_sum" || n == "std_prod") {
        require_arity(call, 2);
        return StandardOp{n == "std_sum" ? BinaryOp::sum : BinaryOp::product,
                          as_operand(nested(call.args[0], n), n), as_operand(nested(call.args[1], n), n)};
    }
    if (n == "corr_sum" || n == "corr_prod") {
        require_arity(call, 2);
        return CorrelatedOp{n == "corr_sum" ? BinaryOp::sum : BinaryOp::product,
                            as_literal(nested(call.args[0], n), n), as_correlation(nested(call.args[1], n), n)};
    }
    throw ParseError("unknown function '" + n + "'", call.pos);
}

inline std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

inline std::string join(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + number(xs[i]);
    }
    return out;
}

inline const char* shape_name(Shape s) {
    switch (s) {
        case Shape::tri: return "tri";
        case Shape::trap: return "trap";
        case Shape::crisp: return "crisp";
    }
    return "?";
}

}  // namespace detail

inline Expression parse(std::string_view text) { return detail::lower(detail::Parser(text).parse_all()); }

inline std::string print(const FuzzyLiteral& lit) {
    return std::string(detail::shape_name(lit.shape)) + "(" + detail::join(lit.params) + ")";
}

inline std::string print(const CorrelationSpec& f) {
    if (f.family == Family::linear || f.family == Family::hyperbolic) {
        return std::string(to_string(f.family)) + "(" + detail::join({f.q, f.r}) + ")";
    }
    return to_string(f.family);
}

inline std::string print(const Induced& e) { return "induced(" + print(e.operand) + ", " + print(e.f) + ")"; }

inline std::string print(const Operand& o) {
    return std::visit([](const auto& v) { return print(v); }, o);
}

inline std::string print(const StandardOp& e) {
    return std::string(e.op == BinaryOp::sum ? "std_sum(" : "std_prod(") + print(e.lhs) + ", " + print(e.rhs) + ")";
}

inline std::string print(const CorrelatedOp& e) {
    return std::string(e.op == BinaryOp::sum ? "corr_sum(" : "corr_prod(") + print(e.operand) + ", " + print(e.f) +
           ")";
}

inline std::string print(const Expression& e) {
    return std::visit([](const auto& v) { return print(v); }, e);
}

inline CorrelationFunction to_function(const CorrelationSpec& f) {
    switch (f.family) {
        case Family::linear: return CorrelationFunction::linear(f.q, f.r);
        case Family::hyperbolic: return CorrelationFunction::hyperbolic(f.q, f.r);
        case Family::identity: return CorrelationFunction::identity();
        case Family::negation: return CorrelationFunction::negation();
        case Family::reciprocal: return CorrelationFunction::reciprocal();
        case Family::custom: break;
    }
    throw std::invalid_argument("expressions cannot name custom correlations");
}

inline FuzzyNumber evaluate(const FuzzyLiteral& lit, AlphaGrid grid) {
    const auto& p = lit.params;
    switch (lit.shape) {
        case Shape::tri: return FuzzyNumber::triangular(p.at(0), p.at(1), p.at(2), grid);
        case Shape::trap: return FuzzyNumber::trapezoidal(p.at(0), p.at(1), p.at(2), p.at(3), grid);
        case Shape::crisp: return FuzzyNumber::crisp(p.at(0), grid);
    }
    throw std::invalid_argument("unknown literal shape");
}

inline FuzzyNumber evaluate(const Induced& e, AlphaGrid grid) {
    return induced_number(evaluate(e.operand, grid), to_function(e.f));
}

inline FuzzyNumber evaluate(const Operand& o, AlphaGrid grid) {
    return std::visit([grid](const auto& v) { return evaluate(v, grid); }, o);
}

/// Evaluates an expression that denotes a fuzzy number on the given grid.
/// Ordering/validation problems throw std::invalid_argument; domain
/// violations throw std::domain_error.
inline FuzzyNumber evaluate(const Expression& e, AlphaGrid grid = {},
                            const RangeMethod& method = RangeMethod::automatic()) {
    return std::visit(
        [&](const auto& v) -> FuzzyNumber {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CorrelationSpec>) {
                throw std::invalid_argument("'" + print(v) + "' is a correlation function, not a fuzzy number");
            } else if constexpr (std::is_same_v<T, StandardOp>) {
                return standard(v.op, evaluate(v.lhs, grid), evaluate(v.rhs, grid));
            } else if constexpr (std::is_same_v<T, CorrelatedOp>) {
                return correlated(v.op, evaluate(v.operand, grid), to_function(v.f), method);
            } else {
                return evaluate(v, grid);
            }
        },
        e);
}

}  // namespace fcorr::expr
