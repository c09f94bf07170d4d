#pragma once

#include "hahn/expr.hpp"
#include "hahn/sampling.hpp"
#include "hahn/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hahn::testing {

inline Series S(const std::string& text, std::optional<std::size_t> depth = std::nullopt) {
    Expr e = parse(text);
    return eval_series(e, context_for(e, depth, std::nullopt));
}

inline Exponent E(const std::string& text) { return parse_exponent(text); }

inline std::optional<Exponent> min_prec(const Series& a, const Series& b) {
    if (!a.prec()) return b.prec();
    if (!b.prec()) return a.prec();
    return std::min(*a.prec(), *b.prec());
}

/// a and b agree below the smaller of their precisions.
inline bool agree_mod(const Series& a, const Series& b) {
    auto p = min_prec(a, b);
    if (!p) return a.terms() == b.terms();
    return truncate(a, *p).terms() == truncate(b, *p).terms();
}

/// Replaces the unknown tail of a by explicit random terms at and beyond its
/// precision, giving an EXACT series that a could stand for.
inline Series widen(const Series& a, sampling::Rng& rng) {
    if (a.is_exact()) return a;
    std::vector<Term> terms = a.terms();
    const std::size_t d = a.depth();
    terms.push_back({*a.prec(), sampling::nonzero_rational(rng)});
    for (int i = 0; i < 3; ++i)
        terms.push_back({*a.prec() + sampling::positive_in(rng, d, 0, 4), sampling::nonzero_rational(rng)});
    return Series(d, std::move(terms));
}

/// Schoolbook product of EXACT series, no precision logic.
inline Series naive_mul(const Series& a, const Series& b) {
    std::vector<Term> out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) out.push_back({x.exp + y.exp, x.coeff * y.coeff});
    return Series(a.depth(), std::move(out));
}

inline Series naive_add(const Series& a, const Series& b) {
    std::vector<Term> out = a.terms();
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return Series(a.depth(), std::move(out));
}

/// The expected prefix: exact result cut at the claimed precision.
inline bool matches_widened(const Series& claimed, const Series& exact) {
    if (claimed.is_exact()) return claimed.terms() == exact.terms();
    return truncate(exact, *claimed.prec()).terms() == claimed.terms();
}

}  // namespace hahn::testing
