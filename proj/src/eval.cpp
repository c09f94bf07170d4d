#include "hahn/expr.hpp"

#include "hahn/order.hpp"
#include "hahn/valuation.hpp"

namespace hahn {

EvalContext EvalContext::with_depth(std::size_t depth) {
    return {depth, Exponent(std::vector<Rational>(depth, Rational(8)))};
}

EvalContext context_for(const Expr& e, std::optional<std::size_t> depth, std::optional<Exponent> prec) {
    auto found = expression_depth(e);
    if (found && depth && *found != *depth)
        throw ParseError("expression has depth " + std::to_string(*found) + " but --depth is " + std::to_string(*depth),
                         e.line, e.column);
    EvalContext ctx = EvalContext::with_depth(found ? *found : depth ? *depth : 1);
    if (prec) {
        if (prec->depth() != ctx.depth) throw DepthMismatch("precision depth does not match expression depth");
        ctx.default_prec = *prec;
    }
    return ctx;
}

std::string to_string(const Value& v) {
    if (const auto* s = std::get_if<Series>(&v)) return to_string(*s);
    return to_string(std::get<ValResult>(v));
}

namespace {

Value eval_node(const Expr& e, const EvalContext& ctx);

Series as_series(const Value& v, const Expr& e) {
    if (const auto* s = std::get_if<Series>(&v)) return *s;
    throw EvalError("expected a series but " + print(e) + " is a value");
}

Series series_arg(const Expr& e, const EvalContext& ctx) { return as_series(eval_node(e, ctx), e); }

ConvexLevel level_arg(const Expr& e, std::size_t depth) {
    if (e.integer < 0 || static_cast<std::size_t>(e.integer) > depth)
        throw DomainError("level " + std::to_string(e.integer) + " outside 0.." + std::to_string(depth));
    return {static_cast<std::size_t>(e.integer)};
}

Value eval_call(const Expr& e, const EvalContext& ctx) {
    if (e.name == "root") {
        if (e.integer < 1) throw DomainError("root index must be positive");
        return unit_root(series_arg(e.args[0], ctx), e.integer, ctx.default_prec);
    }
    if (e.name == "floor") return floor(series_arg(e.args[0], ctx)).as_series();
    if (e.name == "val") return val(series_arg(e.args[0], ctx));
    if (e.name == "res") {
        Series a = series_arg(e.args[0], ctx);
        return residue(a, level_arg(e, a.depth()));
    }
    if (e.name == "coarsen") {
        Series a = series_arg(e.args[0], ctx);
        CoarseValue cv = coarsen(a, level_arg(e, a.depth()));
        return cv.is_infinite() ? ValResult::infinity() : ValResult(*cv.value);
    }
    if (e.name == "truncate") return truncate(series_arg(e.args[0], ctx), e.exponent);
    throw EvalError("unknown function " + e.name);
}

Value eval_inner(const Expr& e, const EvalContext& ctx) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return Series::constant(Rational(e.number), ctx.depth);
        case K::monomial:
            if (e.exponent.depth() != ctx.depth)
                throw DepthMismatch("monomial of depth " + std::to_string(e.exponent.depth()) + " in a depth " +
                                    std::to_string(ctx.depth) + " context");
            return Series::monomial(Rational(1), e.exponent);
        case K::variable: throw EvalError("X is only meaningful in a polynomial");
        case K::neg: return s_neg(series_arg(e.args[0], ctx));
        case K::add: return s_add(series_arg(e.args[0], ctx), series_arg(e.args[1], ctx));
        case K::sub: return s_sub(series_arg(e.args[0], ctx), series_arg(e.args[1], ctx));
        case K::mul: return s_mul(series_arg(e.args[0], ctx), series_arg(e.args[1], ctx));
        case K::div: return s_div(series_arg(e.args[0], ctx), series_arg(e.args[1], ctx), ctx.default_prec);
        case K::pow: return s_pow(series_arg(e.args[0], ctx), e.integer, ctx.default_prec);
        case K::mod: {
            // the bound also serves as the horizon for exact divisions inside
            EvalContext inner = ctx;
            inner.default_prec = e.exponent;
            return truncate(series_arg(e.args[0], inner), e.exponent);
        }
        case K::call: return eval_call(e, ctx);
    }
    throw EvalError("malformed expression");
}

Value eval_node(const Expr& e, const EvalContext& ctx) {
    try {
        return eval_inner(e, ctx);
    } catch (const EvalError&) {
        throw;
    } catch (const Error& err) {
        throw EvalError(std::string(err.what()) + " (in " + print(e) + ")");
    }
}

// Polynomials in X, coefficient index = degree.
using Coeffs = std::vector<Series>;

Coeffs poly_add(const Coeffs& a, const Coeffs& b, std::size_t d) {
    Coeffs out(std::max(a.size(), b.size()), Series::zero(d));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s_add(out[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = s_add(out[i], b[i]);
    return out;
}

Coeffs poly_scale(const Coeffs& a, const Series& c) {
    Coeffs out;
    for (const auto& x : a) out.push_back(s_mul(x, c));
    return out;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::size_t d) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, Series::zero(d));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = s_add(out[i + j], s_mul(a[i], b[j]));
    return out;
}

bool mentions_x(const Expr& e) {
    if (e.kind == Expr::Kind::variable) return true;
    for (const auto& a : e.args)
        if (mentions_x(a)) return true;
    return false;
}

Coeffs poly_node(const Expr& e, const EvalContext& ctx) {
    using K = Expr::Kind;
    const std::size_t d = ctx.depth;
    if (!mentions_x(e)) return {series_arg(e, ctx)};
    switch (e.kind) {
        case K::variable: return {Series::zero(d), Series::constant(Rational(1), d)};
        case K::neg: return poly_scale(poly_node(e.args[0], ctx), Series::constant(Rational(-1), d));
        case K::add: return poly_add(poly_node(e.args[0], ctx), poly_node(e.args[1], ctx), d);
        case K::sub:
            return poly_add(poly_node(e.args[0], ctx),
                            poly_scale(poly_node(e.args[1], ctx), Series::constant(Rational(-1), d)), d);
        case K::mul: return poly_mul(poly_node(e.args[0], ctx), poly_node(e.args[1], ctx), d);
        case K::div:
            if (mentions_x(e.args[1])) throw EvalError("division by a polynomial in X");
            return poly_scale(poly_node(e.args[0], ctx), s_invert(series_arg(e.args[1], ctx), ctx.default_prec));
        case K::pow: {
            if (e.integer < 0) throw EvalError("negative power of a polynomial in X");
            Coeffs base = poly_node(e.args[0], ctx);
            Coeffs out = {Series::constant(Rational(1), d)};
            for (long i = 0; i < e.integer; ++i) out = poly_mul(out, base, d);
            return out;
        }
        default: throw EvalError("X may only appear under +, -, *, / and integer powers: " + print(e));
    }
}

}  // namespace

Value eval(const Expr& e, const EvalContext& ctx) { return eval_node(e, ctx); }

Series eval_series(const Expr& e, const EvalContext& ctx) { return as_series(eval_node(e, ctx), e); }

Poly eval_poly(const Expr& e, const EvalContext& ctx) { return Poly(poly_node(e, ctx)); }

}  // namespace hahn
