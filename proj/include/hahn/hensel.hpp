#pragma once

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hahn {

/// Univariate polynomial in X with Series coefficients, index = degree.
class Poly {
public:
    Poly() = default;
    /// Trailing exact zeros are dropped; all coefficients share one depth.
    explicit Poly(std::vector<Series> coeffs);

    std::size_t depth() const noexcept { return depth_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Series>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::size_t depth_ = 1;
    std::vector<Series> coeffs_;
};

Series poly_eval(const Poly& f, const Series& z);
Poly poly_derive(const Poly& f);
std::string to_string(const Poly& f);

struct LiftResult {
    Series root;
    int iterations = 0;
    ValResult achieved;  // val of f(root), a lower bound when f(root) is zero mod precision
};

/// Newton lifting of a simple residue root zeta of f to a root modulo t^target.
///
/// Preconditions: every coefficient of f has value >= 0; the residue
/// polynomial (constant coefficients) vanishes at zeta with nonzero
/// derivative; target > 0. Throws DomainError on a violated precondition and
/// PrecisionError when the coefficients are too coarse to reach target or the
/// target lies beyond the archimedean class the iteration can climb.
LiftResult hensel_lift(const Poly& f, const Rational& zeta, const Exponent& target);

/// Newton iteration from an arbitrary approximation z0 (no residue checks).
LiftResult hensel_refine(const Poly& f, const Series& z0, const Exponent& target);

/// q-th root of a 1-unit u (value 0, residue 1), lifted from 1.
Series unit_root(const Series& u, long q, const Exponent& target);

/// Value of any q-th root of an element of value y_val.
Exponent root_value(const Exponent& y_val, long q);

/// Membership of g in the subgroup of G generated by `generators`
/// (integer combinations).
bool in_generated_subgroup(const Exponent& g, const std::vector<Exponent>& generators);

}  // namespace hahn
