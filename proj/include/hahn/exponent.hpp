#pragma once

#include "hahn/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hahn {

/// Element of the value group G = Q^d under the lexicographic order, first
/// coordinate most significant. Depth 0 is the trivial group.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Exponent(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Exponent zero(std::size_t depth) { return Exponent(std::vector<Rational>(depth)); }
    /// Unit vector e_i, coordinates numbered from 1.
    static Exponent unit(std::size_t depth, std::size_t i);
    /// Integer convenience constructor.
    static Exponent of(std::initializer_list<long> coords);

    std::size_t depth() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// Index (0-based) of the first nonzero coordinate; depth() for zero.
    /// The element lies in Gamma_k minus Gamma_{k+1} for k = leading_zeros().
    std::size_t leading_zeros() const;

    friend bool operator==(const Exponent& a, const Exponent& b);
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    std::vector<Rational> coords_;
};

std::strong_ordering exp_compare(const Exponent& a, const Exponent& b);
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);
Exponent exp_neg(const Exponent& a);
Exponent exp_scale(const Exponent& a, long n);
Exponent exp_div(const Exponent& a, long n);

inline Exponent operator+(const Exponent& a, const Exponent& b) { return exp_add(a, b); }
inline Exponent operator-(const Exponent& a, const Exponent& b) { return exp_sub(a, b); }
inline Exponent operator-(const Exponent& a) { return exp_neg(a); }

std::string to_string(const Exponent& g);
/// Parses `[q1,...,qd]`; whitespace is allowed around entries.
Exponent parse_exponent(std::string_view text);

/// Index j of the convex subgroup Gamma_j = {g : g_1 = ... = g_j = 0}.
struct ConvexLevel {
    std::size_t j = 0;
};

bool in_subgroup(const Exponent& g, ConvexLevel level);
/// First j coordinates: the canonical representative of g + Gamma_j in G / Gamma_j.
Exponent project(const Exponent& g, ConvexLevel level);
/// Coordinates j+1..d: the component of g inside Gamma_j, re-indexed.
Exponent tail(const Exponent& g, ConvexLevel level);
/// Zero-padded section G / Gamma_j -> G.
Exponent lift(const Exponent& coarse, std::size_t depth);

/// Smallest positive integer n with n*step >= bound, if one exists. `step`
/// must be positive; std::nullopt when bound sits in a strictly more
/// significant archimedean class than step.
std::optional<Integer> multiples_to_reach(const Exponent& step, const Exponent& bound);

/// An Exponent or infinity (the value of zero).
class ValResult {
public:
    ValResult() = default;  // infinity
    ValResult(Exponent g) : value_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

    static ValResult infinity() { return {}; }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    const Exponent& exponent() const;

    friend bool operator==(const ValResult& a, const ValResult& b);
    friend std::strong_ordering operator<=>(const ValResult& a, const ValResult& b);

private:
    std::optional<Exponent> value_;
};

ValResult operator+(const ValResult& a, const ValResult& b);
std::string to_string(const ValResult& v);

}  // namespace hahn
