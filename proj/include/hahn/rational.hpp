#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hahn {

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every constructor path goes through make_rational/parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses `p`, `-p` or `p/q`. Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Largest integer not exceeding q.
Integer floor_of(const Rational& q);

int sign_of(const Rational& q);

}  // namespace hahn
