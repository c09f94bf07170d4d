#pragma once

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

// The ordering of Q((G)) compatible with the valuation: the sign of a series
// is the sign of its leading coefficient, so t^g with g > 0 is a positive
// infinitesimal.

enum class Sign { negative, zero, positive };

/// Throws Indeterminate when a vanishes modulo its precision without being exact.
Sign sign(const Series& a);
std::strong_ordering compare(const Series& a, const Series& b);

/// Sub-series of negative exponents, EXACT. Needs every negative term known
/// (prec >= 0 or EXACT).
Series neg_part(const Series& a);

/// Element of the integer part I = Q[G^{<0}] + Z.
struct IntegerPartElement {
    Series neg;
    Integer constant;

    Series as_series() const;
};

/// The unique r in I with r <= a < r + 1.
///
/// r is neg_part(a) plus the floor of the coefficient at exponent 0. When
/// that coefficient is an integer the positive tail decides: a negative tail
/// lowers r by one; an unknown tail of a non-exact series is an error.
IntegerPartElement floor(const Series& a);

/// Structural membership in I: EXACT, negative exponents plus an integer constant.
bool in_integer_part(const Series& a);

struct Witness {
    std::size_t index;
    std::string input;
    std::string detail;
};

struct ComplementReport {
    std::string axiom;
    std::size_t sample_count = 0;
    std::vector<Witness> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// r <= a < r + 1, r in I, r + 1 not <= a, and floor idempotent on r.
ComplementReport check_integer_part(const std::vector<Series>& samples);

/// vr <= 0 on the ring samples; v(a - floor(a)) >= 0 on the field samples.
ComplementReport check_weak_complement(const std::vector<Series>& ring_samples,
                                       const std::vector<Series>& field_samples);

/// Nonzero ring samples have negative value; field samples split as
/// neg_part(a) + rest with v(rest) >= 0.
ComplementReport check_additive_complement(const std::vector<Series>& ring_samples,
                                           const std::vector<Series>& field_samples);

/// 0 < x <= y implies v(x) >= v(y), over consecutive sample pairs.
ComplementReport check_order_compatibility(const std::vector<Series>& samples);

/// No sample of I lies strictly between 0 and 1.
ComplementReport check_least_positive(const std::vector<Series>& ring_samples);

/// R_Gamma: ring samples whose value lies in Gamma_j or is infinite.
std::vector<Series> r_gamma_filter(const std::vector<Series>& ring_samples, ConvexLevel level);

/// Closure of the filtered set under +, -, * on sampled pairs, and
/// attainment of each negative value in `coverage` (all inside Gamma_j) by
/// an element of R_Gamma.
ComplementReport check_r_gamma(const std::vector<Series>& ring_samples, ConvexLevel level,
                               const std::vector<Exponent>& coverage);

struct DensityTrace {
    Series c;  // t^{-gamma}
    Series r;  // weak-complement witness for a*c, inside R_Gamma
    Series b;  // r / c
};

/// Approximates a (with v(a) in Gamma_j) by b in K_Gamma with v(a - b) >= gamma.
DensityTrace embdsrf_trace(const Series& a, const Exponent& gamma, ConvexLevel level);
Series embdsrf_density(const Series& a, const Exponent& gamma, ConvexLevel level);

/// For a supported in the chain member C_nu = Gamma_{d-nu}, returns
/// (a t^alpha, t^alpha) with alpha = -e_{d-nu} negative in C_{nu+1}; both
/// parts have only negative exponents and their quotient is a.
std::pair<Series, Series> quotient_field_witness(const Series& a, std::size_t nu);

/// Chain member C_nu as a convex level.
ConvexLevel chain_level(std::size_t depth, std::size_t nu);

using FloorFn = std::function<Series(const Series&)>;

/// For samples of I1: a' = floor2(a) satisfies a' <= a < a' + 1; the
/// preimage a'' in I1 with a'' < a' <= a'' + 1 satisfies a'' + 1 = a; and
/// a -> a' is strictly increasing.
ComplementReport floor_bijection_probe(const std::vector<Series>& samples, const FloorFn& floor1,
                                       const FloorFn& floor2);

}  // namespace hahn
