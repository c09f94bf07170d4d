#pragma once

#include "hahn/errors.hpp"
#include "hahn/exponent.hpp"
#include "hahn/hensel.hpp"
#include "hahn/rational.hpp"
#include "hahn/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hahn {

/// Syntax tree of the workbench expression language.
///
///     expr     := additive ['mod' bound]
///     additive := term (('+' | '-') term)*
///     term     := unary (('*' | '/') unary)*
///     unary    := '-' unary | power
///     power    := primary ['^' int]
///     primary  := INT | 't' ['^' (exponent | int | '(' rational ')')] | 'X'
///               | '(' expr ')' | name '(' args ')'
///     bound    := 't^' exponent | exponent
///
/// Calls: root(q, e), floor(e), val(e), res(j, e), coarsen(j, e),
/// truncate(e, bound). Bare `t` and `t^q` are depth-1 sugar.
struct Expr {
    enum class Kind { number, monomial, variable, neg, add, sub, mul, div, pow, mod, call };

    Kind kind = Kind::number;
    Integer number;         // number literal (non-negative)
    Exponent exponent;      // monomial exponent, mod bound, truncate bound
    long integer = 0;       // pow exponent; q of root; j of res/coarsen
    std::string name;       // call name
    std::vector<Expr> args;
    int line = 1;
    int column = 1;

    friend bool operator==(const Expr& a, const Expr& b);
};

Expr parse(std::string_view text);

/// Fully parenthesized text that parses back to a structurally equal tree.
std::string print(const Expr& e);

/// Depth of the exponents mentioned in e, if any. Throws ParseError on mixed depths.
std::optional<std::size_t> expression_depth(const Expr& e);

struct EvalContext {
    std::size_t depth = 1;
    /// Result precision for divisions and roots of exact operands.
    Exponent default_prec = Exponent::of({8});

    /// Context of the given depth with default precision t^[8,...,8].
    static EvalContext with_depth(std::size_t depth);
};

/// A series, or a value (full or coarse) produced by val / coarsen.
using Value = std::variant<Series, ValResult>;

std::string to_string(const Value& v);

/// Evaluation failure; the message names the innermost failing subexpression.
class EvalError : public Error {
public:
    using Error::Error;
};

Value eval(const Expr& e, const EvalContext& ctx);
/// Evaluates an expression that must produce a series.
Series eval_series(const Expr& e, const EvalContext& ctx);
/// Context for e: depth from its exponents, else `depth`, else 1; precision
/// `prec` or t^[8,...,8]. Throws ParseError when `depth` contradicts e.
EvalContext context_for(const Expr& e, std::optional<std::size_t> depth, std::optional<Exponent> prec);

/// Evaluates an expression polynomial in X with series coefficients.
Poly eval_poly(const Expr& e, const EvalContext& ctx);

}  // namespace hahn
