#include "dcalc/potential_expr.hpp"

#include "dcalc/errors.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <functional>

namespace dcalc {

enum class NodeKind { number, variable, negate, add, subtract, multiply, divide, power, call };

struct PotentialExpr::Node {
    NodeKind kind;
    std::string text;  // literal digits or function name
    double value = 0.0;
    NodePtr lhs;
    NodePtr rhs;
};

namespace {

using Node = PotentialExpr::Node;
using NodePtr = PotentialExpr::NodePtr;

constexpr std::array<std::string_view, 5> kFunctions{"sqrt", "sin", "cos", "exp", "log"};

bool is_function(std::string_view name) {
    for (auto f : kFunctions) {
        if (f == name) return true;
    }
    return false;
}

NodePtr make(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, std::string text = {},
             double value = 0.0) {
    return std::make_shared<const Node>(Node{kind, std::move(text), value, std::move(lhs), std::move(rhs)});
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        skip_space();
        auto root = expr();
        skip_space();
        if (pos_ != text_.size()) fail({"operator", "end of input"});
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string found() const {
        if (pos_ >= text_.size()) return "end of input";
        return std::string("'") + text_[pos_] + "'";
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(pos_, std::move(expected), found());
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make(NodeKind::add, lhs, term());
            } else if (accept('-')) {
                lhs = make(NodeKind::subtract, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = make(NodeKind::multiply, lhs, unary());
            } else if (accept('/')) {
                lhs = make(NodeKind::divide, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(NodeKind::negate, unary());
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make(NodeKind::power, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail({"number", "'n'", "function", "'('", "'-'"});
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            if (name == "n") return make(NodeKind::variable);
            if (!is_function(name)) {
                pos_ = start;
                fail({"'n'", "function (sqrt, sin, cos, exp, log)"});
            }
            if (!accept('(')) fail({"'('"});
            auto arg = expr();
            if (!accept(')')) fail({"')'", "operator"});
            return make(NodeKind::call, arg, nullptr, std::string(name));
        }
        if (accept('(')) {
            auto inner = expr();
            if (!accept(')')) fail({"')'", "operator"});
            return inner;
        }
        fail({"number", "'n'", "function", "'('", "'-'"});
    }

    NodePtr number() {
        const auto start = pos_;
        auto digits = [&] {
            const auto from = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ - from;
        };
        auto count = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) fail({"digit"});
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail({"exponent digits"});
        }
        std::string literal(text_.substr(start, pos_ - start));
        const double value = std::strtod(literal.c_str(), nullptr);
        return make(NodeKind::number, nullptr, nullptr, std::move(literal), value);
    }
};

// Exact value of a decimal literal such as "12.5e-3".
Rational literal_to_rational(const std::string& literal) {
    using boost::multiprecision::cpp_int;
    cpp_int mantissa = 0;
    long exponent = 0;
    std::size_t i = 0;
    bool fraction = false;
    for (; i < literal.size(); ++i) {
        const char c = literal[i];
        if (c == '.') {
            fraction = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (fraction) --exponent;
        } else {
            break;
        }
    }
    if (i < literal.size()) exponent += std::stol(literal.substr(i + 1));
    Rational r{mantissa};
    const cpp_int scale = boost::multiprecision::pow(cpp_int{10}, static_cast<unsigned>(std::labs(exponent)));
    if (exponent > 0) r *= Rational{scale};
    if (exponent < 0) r /= Rational{scale};
    return r;
}

double checked(double value, const char* what) {
    if (!std::isfinite(value)) throw EvalError(std::string("non-finite result in ") + what);
    return value;
}

double eval_node(const Node& node, double n) {
    switch (node.kind) {
    case NodeKind::number:
        return node.value;
    case NodeKind::variable:
        return n;
    case NodeKind::negate:
        return -eval_node(*node.lhs, n);
    case NodeKind::add:
        return checked(eval_node(*node.lhs, n) + eval_node(*node.rhs, n), "addition");
    case NodeKind::subtract:
        return checked(eval_node(*node.lhs, n) - eval_node(*node.rhs, n), "subtraction");
    case NodeKind::multiply:
        return checked(eval_node(*node.lhs, n) * eval_node(*node.rhs, n), "multiplication");
    case NodeKind::divide: {
        const double den = eval_node(*node.rhs, n);
        if (den == 0.0) throw EvalError("division by zero");
        return checked(eval_node(*node.lhs, n) / den, "division");
    }
    case NodeKind::power: {
        const double base = eval_node(*node.lhs, n);
        const double exponent = eval_node(*node.rhs, n);
        if (base == 0.0 && exponent < 0.0) throw EvalError("division by zero in power");
        if (base < 0.0 && exponent != std::trunc(exponent)) {
            throw EvalError("negative base raised to a non-integer power");
        }
        return checked(std::pow(base, exponent), "power");
    }
    case NodeKind::call: {
        const double x = eval_node(*node.lhs, n);
        if (node.text == "sqrt") {
            if (x < 0.0) throw EvalError("sqrt of a negative number");
            return std::sqrt(x);
        }
        if (node.text == "log") {
            if (x <= 0.0) throw EvalError("log of a non-positive number");
            return std::log(x);
        }
        if (node.text == "sin") return std::sin(x);
        if (node.text == "cos") return std::cos(x);
        return checked(std::exp(x), "exp");
    }
    }
    throw EvalError("corrupt expression tree");
}

std::optional<Rational> exact_node(const Node& node, long n) {
    auto both = [&](auto op) -> std::optional<Rational> {
        auto a = exact_node(*node.lhs, n);
        if (!a) return std::nullopt;
        auto b = exact_node(*node.rhs, n);
        if (!b) return std::nullopt;
        return op(*a, *b);
    };
    switch (node.kind) {
    case NodeKind::number:
        return literal_to_rational(node.text);
    case NodeKind::variable:
        return Rational{n};
    case NodeKind::negate: {
        auto a = exact_node(*node.lhs, n);
        if (!a) return std::nullopt;
        return Rational{-*a};
    }
    case NodeKind::add:
        return both([](const Rational& a, const Rational& b) { return Rational{a + b}; });
    case NodeKind::subtract:
        return both([](const Rational& a, const Rational& b) { return Rational{a - b}; });
    case NodeKind::multiply:
        return both([](const Rational& a, const Rational& b) { return Rational{a * b}; });
    case NodeKind::divide:
        return both([](const Rational& a, const Rational& b) {
            if (b == 0) throw EvalError("division by zero");
            return Rational{a / b};
        });
    case NodeKind::power: {
        auto base = exact_node(*node.lhs, n);
        auto exponent = exact_node(*node.rhs, n);
        if (!base || !exponent || denominator(*exponent) != 1) return std::nullopt;
        const auto k = numerator(*exponent);
        if (abs(k) > 4096) return std::nullopt;
        auto e = k.convert_to<long>();
        if (*base == 0 && e < 0) throw EvalError("division by zero in power");
        Rational result{1};
        for (long i = 0; i < std::labs(e); ++i) result *= *base;
        if (e < 0) result = Rational{1} / result;
        return result;
    }
    case NodeKind::call:
        return std::nullopt;
    }
    return std::nullopt;
}

int precedence(const Node& node) {
    switch (node.kind) {
    case NodeKind::add:
    case NodeKind::subtract:
        return 1;
    case NodeKind::multiply:
    case NodeKind::divide:
        return 2;
    case NodeKind::negate:
        return 3;
    case NodeKind::power:
        return 4;
    default:
        return 5;
    }
}

void print_node(const Node& node, std::string& out);

void print_child(const Node& child, int min_precedence, std::string& out) {
    if (precedence(child) < min_precedence) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

void print_node(const Node& node, std::string& out) {
    const int p = precedence(node);
    switch (node.kind) {
    case NodeKind::number:
        out += node.text;
        return;
    case NodeKind::variable:
        out += 'n';
        return;
    case NodeKind::negate:
        out += '-';
        print_child(*node.lhs, p, out);
        return;
    case NodeKind::power:
        print_child(*node.lhs, p + 1, out);
        out += '^';
        print_child(*node.rhs, 3, out);
        return;
    case NodeKind::call:
        out += node.text;
        out += '(';
        print_node(*node.lhs, out);
        out += ')';
        return;
    default:
        break;
    }
    static constexpr std::string_view ops[] = {"", "", "", " + ", " - ", "*", "/"};
    print_child(*node.lhs, p, out);
    out += ops[static_cast<int>(node.kind)];
    print_child(*node.rhs, p + 1, out);
}

bool equal_nodes(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    if (a->kind == NodeKind::number && a->value != b->value) return false;
    if (a->kind == NodeKind::call && a->text != b->text) return false;
    return equal_nodes(a->lhs.get(), b->lhs.get()) && equal_nodes(a->rhs.get(), b->rhs.get());
}

}  // namespace

PotentialExpr::PotentialExpr(NodePtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

PotentialExpr PotentialExpr::parse(std::string_view text) {
    Parser parser(text);
    return PotentialExpr(parser.parse(), std::string(text));
}

double PotentialExpr::evaluate(double n) const { return eval_node(*root_, n); }

std::optional<Rational> PotentialExpr::evaluate_exact(long n) const { return exact_node(*root_, n); }

std::string PotentialExpr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool operator==(const PotentialExpr& a, const PotentialExpr& b) {
    return equal_nodes(a.root_.get(), b.root_.get());
}

}  // namespace dcalc
