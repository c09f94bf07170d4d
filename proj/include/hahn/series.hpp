#pragma once

#include "hahn/exponent.hpp"
#include "hahn/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

struct Term {
    Exponent exp;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

/// Truncated generalized power series sum c_i t^{g_i} with rational
/// coefficients and exponents in Q^d (lex).
///
/// `prec` is the first unknown exponent: terms at or beyond it are unknown,
/// not zero. An absent prec marks the series as EXACT, i.e. equal to the
/// finite sum of its stored terms. Stored terms are sorted strictly
/// increasing, have nonzero coefficients and lie below prec.
class Series {
public:
    /// Exact zero of the given depth.
    explicit Series(std::size_t depth = 1) : depth_(depth) {}

    /// Normalizes: sorts, merges equal exponents, drops zero coefficients and
    /// terms at or beyond prec.
    Series(std::size_t depth, std::vector<Term> terms, std::optional<Exponent> prec = std::nullopt);

    static Series zero(std::size_t depth) { return Series(depth); }
    /// Zero modulo t^prec: nothing known below prec apart from zeros.
    static Series zero_mod(const Exponent& prec) { return Series(prec.depth(), {}, prec); }
    static Series constant(const Rational& c, std::size_t depth);
    static Series monomial(const Rational& c, const Exponent& g);

    std::size_t depth() const noexcept { return depth_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::optional<Exponent>& prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return !prec_.has_value(); }
    bool is_exact_zero() const noexcept { return terms_.empty() && is_exact(); }
    /// True when the leading term is known: some stored term, or exact zero.
    bool has_known_leading() const noexcept { return !terms_.empty(); }

    /// Coefficient at g; throws Indeterminate when g is at or beyond prec.
    Rational coefficient(const Exponent& g) const;

    /// Smallest exponent that may carry a nonzero coefficient: the leading
    /// exponent, else prec, else infinity for exact zero.
    ValResult lower_bound() const;

    /// Sub-series of terms satisfying pred, same prec.
    Series filter(const std::function<bool(const Exponent&)>& pred) const;
    /// Multiplication by the monomial t^g (exact shift of terms and prec).
    Series shifted(const Exponent& g) const;
    Series scaled(const Rational& c) const;
    /// Same terms, precision replaced (nullopt: declare EXACT).
    Series with_prec(std::optional<Exponent> prec) const;

    friend bool operator==(const Series& a, const Series& b);

private:
    std::size_t depth_;
    std::vector<Term> terms_;
    std::optional<Exponent> prec_;
};

Series s_add(const Series& a, const Series& b);
Series s_neg(const Series& a);
Series s_sub(const Series& a, const Series& b);
Series s_mul(const Series& a, const Series& b);

/// Multiplicative inverse by factoring the leading monomial and expanding
/// the geometric series of the remaining 1-unit.
///
/// Result precision is prec(a) - 2 v(a). EXACT inputs that are not monomials
/// need `target` as the result precision; exact monomials invert exactly.
/// Throws DomainError on exact zero, Indeterminate on an unknown leading term
/// and PrecisionError when the expansion would have to sum infinitely many
/// terms below the precision (the correction's value sits in a less
/// significant archimedean class than the precision).
Series s_invert(const Series& a, const std::optional<Exponent>& target = std::nullopt);

/// a * b^{-1}; `target` as for s_invert.
Series s_div(const Series& a, const Series& b, const std::optional<Exponent>& target = std::nullopt);

/// a^n for integer n; negative n inverts first.
Series s_pow(const Series& a, long n, const std::optional<Exponent>& target = std::nullopt);

inline Series operator+(const Series& a, const Series& b) { return s_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return s_sub(a, b); }
inline Series operator-(const Series& a) { return s_neg(a); }
inline Series operator*(const Series& a, const Series& b) { return s_mul(a, b); }

/// Minimal-exponent term. DomainError on exact zero, Indeterminate when no
/// term is known below the precision.
Term leading(const Series& a);

/// Terms with exponent < bound; prec becomes min(prec, bound).
Series truncate(const Series& a, const Exponent& bound);

/// True when every possibly nonzero exponent of a is >= bound.
bool val_at_least(const Series& a, const ValResult& bound);

struct SupportProfile {
    /// Leading exponent; infinity for exact zero; prec for a series with no
    /// known terms.
    ValResult min_exponent;
    /// Indices j with some support exponent in Gamma_j minus Gamma_{j+1};
    /// the zero exponent counts as level d.
    std::set<std::size_t> levels_touched;
};

SupportProfile support_profile(const Series& a);

/// Canonical text: terms ascending, `c*t^[..]`, optional ` mod t^[..]`.
std::string to_string(const Series& a);

}  // namespace hahn
