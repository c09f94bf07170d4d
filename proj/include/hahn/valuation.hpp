#pragma once

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

#include <optional>

namespace hahn {

/// Value under the coarsening w_j with valuation ring containing that of v:
/// the projection of v(a) to G / Gamma_j. Empty `value` means infinity.
struct CoarseValue {
    std::optional<Exponent> value;
    ConvexLevel level;

    bool is_infinite() const noexcept { return !value.has_value(); }
};

/// Canonical valuation: minimum of the support, infinity for exact zero.
/// Throws Indeterminate when no term is known below the precision.
ValResult val(const Series& a);

CoarseValue coarsen(const Series& a, ConvexLevel level);

/// Residue under w_j: the part of the support inside Gamma_j, re-indexed to
/// depth d - j. Elements of positive coarse value map to exact zero.
/// Throws DomainError when a lies outside the w_j-valuation ring.
Series residue(const Series& a, ConvexLevel level);

/// Checks v = w_j o (residue valuation) on a: the coarse value, lifted by
/// zero-padding, plus the value of the residue of the shifted element must
/// reproduce v(a). Returns false on any mismatch or failure.
bool compose_check(const Series& a, ConvexLevel level);

/// v(a - b).
ValResult density_gap(const Series& a, const Series& b);

}  // namespace hahn
