#ifndef GREENREC_EXPR_HPP
#define GREENREC_EXPR_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "greenrec/errors.hpp"
#include "greenrec/rational.hpp"
#include "greenrec/scalar.hpp"

namespace greenrec {

/// Arithmetic expressions in one integer variable `n`, used for recurrence
/// coefficients and forcing terms.
///
/// Grammar (whitespace insignificant):
///
///     sum     := product (('+' | '-') product)*
///     product := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := integer | 'n' | '(' sum ')'
///
/// `+ - * /` associate left, `^` associates right and binds tighter than
/// unary minus, so `-2^2` means `-(2^2)`. An exponent must be either a
/// literal integer (optionally negated) or, when the base does not mention
/// `n`, any integer-valued expression. This admits `2^n` and `(n+1)^2`
/// while rejecting `n^n`.
class expr final {
public:
    /// Parses `text`; throws parse_error (with character offset) on bad
    /// syntax or an exponent violating the rule above.
    static expr parse(std::string_view text) {
        parser p{text, 0};
        node_ptr root = p.parse_sum();
        p.skip_ws();
        if (p.pos != text.size())
            throw parse_error("unexpected trailing characters", p.pos);
        return expr(std::move(root));
    }

    /// Evaluates at integer n. Exponents are always evaluated in exact
    /// rational arithmetic and must come out integral.
    template <scalar_type S>
    S eval(std::int64_t n) const {
        return eval_node<S>(*root_, n);
    }

    rational eval_exact(std::int64_t n) const { return eval<rational>(n); }

    /// True when the tree references the variable `n`.
    bool mentions_n() const noexcept { return root_->has_n; }
    bool is_constant() const noexcept { return !mentions_n(); }

    /// Renders to text that reparses to a structurally identical tree.
    std::string str() const {
        std::string out;
        render(*root_, out);
        return out;
    }

    friend bool operator==(const expr& a, const expr& b) {
        return structurally_equal(*a.root_, *b.root_);
    }

private:
    enum class op : unsigned char { literal, variable, negate, add, sub, mul, div, pow };

    struct node;
    using node_ptr = std::shared_ptr<const node>;

    struct node {
        op kind;
        rational value;     // literal only; a nonnegative integer by grammar
        node_ptr lhs, rhs;  // negate uses lhs alone
        bool has_n;
    };

    explicit expr(node_ptr root) : root_(std::move(root)) {}

    static node_ptr make_literal(rational v) {
        return std::make_shared<node>(node{op::literal, std::move(v), nullptr, nullptr, false});
    }

    static node_ptr make_variable() {
        return std::make_shared<node>(node{op::variable, rational(), nullptr, nullptr, true});
    }

    static node_ptr make_unary(op kind, node_ptr child) {
        bool has_n = child->has_n;
        return std::make_shared<node>(node{kind, rational(), std::move(child), nullptr, has_n});
    }

    static node_ptr make_binary(op kind, node_ptr lhs, node_ptr rhs) {
        bool has_n = lhs->has_n || rhs->has_n;
        return std::make_shared<node>(
            node{kind, rational(), std::move(lhs), std::move(rhs), has_n});
    }

    // A literal integer, possibly under a chain of unary minuses.
    static bool is_signed_literal(const node& nd) {
        const node* cur = &nd;
        while (cur->kind == op::negate) cur = cur->lhs.get();
        return cur->kind == op::literal;
    }

    struct parser {
        std::string_view text;
        std::size_t pos;

        void skip_ws() {
            while (pos < text.size() &&
                   (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                    text[pos] == '\r'))
                ++pos;
        }

        bool accept(char c) {
            skip_ws();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        char peek() {
            skip_ws();
            return pos < text.size() ? text[pos] : '\0';
        }

        node_ptr parse_sum() {
            node_ptr lhs = parse_product();
            for (;;) {
                if (accept('+'))
                    lhs = make_binary(op::add, std::move(lhs), parse_product());
                else if (accept('-'))
                    lhs = make_binary(op::sub, std::move(lhs), parse_product());
                else
                    return lhs;
            }
        }

        node_ptr parse_product() {
            node_ptr lhs = parse_unary();
            for (;;) {
                if (accept('*'))
                    lhs = make_binary(op::mul, std::move(lhs), parse_unary());
                else if (accept('/'))
                    lhs = make_binary(op::div, std::move(lhs), parse_unary());
                else
                    return lhs;
            }
        }

        node_ptr parse_unary() {
            if (accept('-')) return make_unary(op::negate, parse_unary());
            return parse_power();
        }

        node_ptr parse_power() {
            node_ptr base = parse_primary();
            skip_ws();
            std::size_t caret = pos;
            if (!accept('^')) return base;
            node_ptr exponent = parse_unary();
            if (!is_signed_literal(*exponent) && base->has_n)
                throw parse_error(
                    "exponent must be a literal integer unless the base is free of n", caret);
            return make_binary(op::pow, std::move(base), std::move(exponent));
        }

        node_ptr parse_primary() {
            skip_ws();
            if (pos >= text.size()) throw parse_error("unexpected end of expression", pos);
            char c = text[pos];
            if (c == '(') {
                ++pos;
                node_ptr inner = parse_sum();
                if (!accept(')')) throw parse_error("expected ')'", pos);
                return inner;
            }
            if (c == 'n') {
                ++pos;
                return make_variable();
            }
            if (c >= '0' && c <= '9') {
                std::size_t start = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                rational::int_type v(std::string(text.substr(start, pos - start)));
                return make_literal(rational(std::move(v)));
            }
            throw parse_error(std::string("unexpected character '") + c + "'", pos);
        }
    };

    template <scalar_type S>
    static S eval_node(const node& nd, std::int64_t n) {
        using traits = scalar_traits<S>;
        switch (nd.kind) {
        case op::literal: return traits::from_rational(nd.value);
        case op::variable: return traits::from_int(n);
        case op::negate: return traits::from_int(0) - eval_node<S>(*nd.lhs, n);
        case op::add: return eval_node<S>(*nd.lhs, n) + eval_node<S>(*nd.rhs, n);
        case op::sub: return eval_node<S>(*nd.lhs, n) - eval_node<S>(*nd.rhs, n);
        case op::mul: return eval_node<S>(*nd.lhs, n) * eval_node<S>(*nd.rhs, n);
        case op::div: {
            S denominator = eval_node<S>(*nd.rhs, n);
            if (traits::is_zero(denominator)) throw eval_error("division by zero", n);
            return eval_node<S>(*nd.lhs, n) / denominator;
        }
        case op::pow: {
            rational exponent = eval_node<rational>(*nd.rhs, n);
            if (!exponent.is_integer()) throw eval_error("non-integer exponent", n);
            const auto& num = exponent.numerator();
            if (num > std::numeric_limits<std::int64_t>::max() ||
                num < std::numeric_limits<std::int64_t>::min())
                throw eval_error("exponent out of range", n);
            return pow_integer(eval_node<S>(*nd.lhs, n), num.convert_to<std::int64_t>());
        }
        }
        throw error("corrupt expression node");
    }

    static int precedence(op kind) {
        switch (kind) {
        case op::add:
        case op::sub: return 1;
        case op::mul:
        case op::div: return 2;
        case op::negate: return 3;
        case op::pow: return 4;
        default: return 5;
        }
    }

    static void render_child(const node& child, std::string& out, bool parens) {
        if (parens) {
            out += '(';
            render(child, out);
            out += ')';
        } else {
            render(child, out);
        }
    }

    static void render(const node& nd, std::string& out) {
        switch (nd.kind) {
        case op::literal: out += nd.value.str(); return;
        case op::variable: out += 'n'; return;
        case op::negate:
            out += '-';
            render_child(*nd.lhs, out,
                         precedence(nd.lhs->kind) < precedence(op::negate) ||
                             nd.lhs->kind == op::negate);
            return;
        case op::pow:
            // Right-associative; a base at or below power precedence and any
            // non-primary exponent get parenthesized.
            render_child(*nd.lhs, out, precedence(nd.lhs->kind) <= precedence(op::pow));
            out += '^';
            render_child(*nd.rhs, out, precedence(nd.rhs->kind) < precedence(op::pow));
            return;
        case op::add:
        case op::sub:
        case op::mul:
        case op::div: {
            const int p = precedence(nd.kind);
            render_child(*nd.lhs, out, precedence(nd.lhs->kind) < p);
            switch (nd.kind) {
            case op::add: out += " + "; break;
            case op::sub: out += " - "; break;
            case op::mul: out += " * "; break;
            default: out += " / "; break;
            }
            render_child(*nd.rhs, out, precedence(nd.rhs->kind) <= p);
            return;
        }
        }
    }

    static bool structurally_equal(const node& a, const node& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
        case op::literal: return a.value == b.value;
        case op::variable: return true;
        case op::negate: return structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
        }
    }

    node_ptr root_;
};

} // namespace greenrec

#endif // GREENREC_EXPR_HPP
