#include "hahn/expr.hpp"

#include <cctype>
#include <climits>

namespace hahn {

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::number: return a.number == b.number;
        case Expr::Kind::monomial: return a.exponent.depth() == b.exponent.depth() && a.exponent == b.exponent;
        case Expr::Kind::variable: return true;
        case Expr::Kind::pow: return a.integer == b.integer && a.args == b.args;
        case Expr::Kind::mod:
            return a.exponent.depth() == b.exponent.depth() && a.exponent == b.exponent && a.args == b.args;
        case Expr::Kind::call:
            return a.name == b.name && a.integer == b.integer && a.exponent.depth() == b.exponent.depth() &&
                   a.exponent == b.exponent && a.args == b.args;
        default: return a.args == b.args;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_top() {
        Expr e = parse_expr();
        skip_space();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        std::size_t end = pos_ + word.size();
        return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
    }

    Expr node(Expr::Kind kind, int line, int column) const {
        Expr e;
        e.kind = kind;
        e.line = line;
        e.column = column;
        return e;
    }

    Integer parse_digits() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Integer(digits, 10);
    }

    long parse_signed_long() {
        bool negative = accept('-');
        Integer n = parse_digits();
        if (!n.fits_slong_p()) fail("integer out of range");
        long v = n.get_si();
        return negative ? -v : v;
    }

    Rational parse_signed_rational() {
        bool negative = accept('-');
        Integer num = parse_digits();
        Integer den(1);
        if (accept('/')) den = parse_digits();
        if (den == 0) fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    Exponent parse_exponent_list() {
        expect('[');
        std::vector<Rational> coords;
        if (!accept(']')) {
            do {
                coords.push_back(parse_signed_rational());
            } while (accept(','));
            expect(']');
        }
        return Exponent(std::move(coords));
    }

    // `t^[..]`, depth-1 `t^q` or `t`, or `[..]`
    Exponent parse_bound() {
        skip_space();
        if (peek() == 't') {
            advance();
            return parse_monomial(line_, column_).exponent;
        }
        return parse_exponent_list();
    }

    Expr parse_expr() {
        Expr e = parse_additive();
        if (peek_word("mod")) {
            int line = line_, column = column_;
            for (int i = 0; i < 3; ++i) advance();
            Expr m = node(Expr::Kind::mod, line, column);
            m.exponent = parse_bound();
            m.args.push_back(std::move(e));
            return m;
        }
        return e;
    }

    Expr parse_additive() {
        Expr lhs = parse_term();
        for (;;) {
            skip_space();
            int line = line_, column = column_;
            Expr::Kind kind;
            if (accept('+')) kind = Expr::Kind::add;
            else if (accept('-')) kind = Expr::Kind::sub;
            else return lhs;
            Expr n = node(kind, line, column);
            n.args.push_back(std::move(lhs));
            n.args.push_back(parse_term());
            lhs = std::move(n);
        }
    }

    Expr parse_term() {
        Expr lhs = parse_unary();
        for (;;) {
            skip_space();
            int line = line_, column = column_;
            Expr::Kind kind;
            if (accept('*')) kind = Expr::Kind::mul;
            else if (accept('/')) kind = Expr::Kind::div;
            else return lhs;
            Expr n = node(kind, line, column);
            n.args.push_back(std::move(lhs));
            n.args.push_back(parse_unary());
            lhs = std::move(n);
        }
    }

    Expr parse_unary() {
        skip_space();
        int line = line_, column = column_;
        if (accept('-')) {
            Expr n = node(Expr::Kind::neg, line, column);
            n.args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        skip_space();
        int line = line_, column = column_;
        if (accept('^')) {
            Expr n = node(Expr::Kind::pow, line, column);
            if (accept('(')) {
                n.integer = parse_signed_long();
                expect(')');
            } else {
                n.integer = parse_signed_long();
            }
            n.args.push_back(std::move(base));
            return n;
        }
        return base;
    }

    Expr parse_primary() {
        skip_space();
        int line = line_, column = column_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr n = node(Expr::Kind::number, line, column);
            n.number = parse_digits();
            return n;
        }
        if (c == '(') {
            advance();
            Expr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                word += peek();
                advance();
            }
            if (word == "t") return parse_monomial(line, column);
            if (word == "X") return node(Expr::Kind::variable, line, column);
            return parse_call(word, line, column);
        }
        if (at_end()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr parse_monomial(int line, int column) {
        Expr n = node(Expr::Kind::monomial, line, column);
        skip_space();
        if (!accept('^')) {
            n.exponent = Exponent::of({1});
            return n;
        }
        skip_space();
        if (peek() == '[') {
            n.exponent = parse_exponent_list();
        } else if (accept('(')) {
            n.exponent = Exponent{parse_signed_rational()};
            expect(')');
        } else {
            n.exponent = Exponent{Rational(parse_signed_long())};
        }
        return n;
    }

    Expr parse_call(const std::string& name, int line, int column) {
        Expr n = node(Expr::Kind::call, line, column);
        n.name = name;
        expect('(');
        if (name == "root" || name == "res" || name == "coarsen") {
            n.integer = parse_signed_long();
            expect(',');
            n.args.push_back(parse_expr());
        } else if (name == "floor" || name == "val") {
            n.args.push_back(parse_expr());
        } else if (name == "truncate") {
            n.args.push_back(parse_expr());
            expect(',');
            n.exponent = parse_bound();
        } else {
            throw ParseError("unknown function '" + name + "'", line, column);
        }
        expect(')');
        return n;
    }
};

void collect_depth(const Expr& e, std::optional<std::size_t>& depth) {
    auto note = [&](const Exponent& g) {
        if (!depth) depth = g.depth();
        else if (*depth != g.depth())
            throw ParseError("exponent depth " + std::to_string(g.depth()) + " conflicts with depth " +
                                 std::to_string(*depth),
                             e.line, e.column);
    };
    if (e.kind == Expr::Kind::monomial || e.kind == Expr::Kind::mod ||
        (e.kind == Expr::Kind::call && e.name == "truncate"))
        note(e.exponent);
    // residues live in a smaller group; their operands still share the outer depth
    for (const auto& a : e.args) collect_depth(a, depth);
}

}  // namespace

Expr parse(std::string_view text) {
    Expr e = Parser(text).parse_top();
    expression_depth(e);
    return e;
}

std::optional<std::size_t> expression_depth(const Expr& e) {
    std::optional<std::size_t> depth;
    collect_depth(e, depth);
    return depth;
}

std::string print(const Expr& e) {
    using K = Expr::Kind;
    auto bin = [&](const char* op) { return "(" + print(e.args[0]) + " " + op + " " + print(e.args[1]) + ")"; };
    switch (e.kind) {
        case K::number: return e.number.get_str();
        case K::monomial: return "t^" + to_string(e.exponent);
        case K::variable: return "X";
        case K::neg: return "(-" + print(e.args[0]) + ")";
        case K::add: return bin("+");
        case K::sub: return bin("-");
        case K::mul: return bin("*");
        case K::div: return bin("/");
        case K::pow: return "(" + print(e.args[0]) + ")^(" + std::to_string(e.integer) + ")";
        case K::mod: return "(" + print(e.args[0]) + " mod t^" + to_string(e.exponent) + ")";
        case K::call:
            if (e.name == "truncate") return "truncate(" + print(e.args[0]) + ", t^" + to_string(e.exponent) + ")";
            if (e.name == "floor" || e.name == "val") return e.name + "(" + print(e.args[0]) + ")";
            return e.name + "(" + std::to_string(e.integer) + ", " + print(e.args[0]) + ")";
    }
    return {};
}

}  // namespace hahn
