#pragma once

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace hahn::sampling {

// Seeded generators for replayable property checks. Each sample draws from
// its own engine keyed by (seed, stream, index), so samples can be produced
// in any order or in parallel without changing their values.

constexpr long kHeight = 16;
constexpr std::size_t kMaxTerms = 12;
/// Bound on the geometric-series length of invertible samples.
constexpr long kMaxPowers = 6;

class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    long uniform(long lo, long hi);
    bool chance(double p);

private:
    std::mt19937_64 engine_;
};

/// num/den with |num| <= height, 1 <= den <= height.
Rational rational(Rng& rng, long height = kHeight);
Rational nonzero_rational(Rng& rng, long height = kHeight);

/// Exponent whose first `level` coordinates are zero (an element of Gamma_level).
Exponent exponent_in(Rng& rng, std::size_t depth, std::size_t level, long height = kHeight);
/// Positive element of Gamma_level.
Exponent positive_in(Rng& rng, std::size_t depth, std::size_t level, long height = kHeight);
/// Positive element whose first nonzero coordinate is exactly `level` (0-based).
Exponent positive_of_class(Rng& rng, std::size_t depth, std::size_t level, long height = kHeight);

/// Up to kMaxTerms terms with arbitrary exponents; EXACT with probability
/// 1/2, otherwise truncated at a random precision.
Series series(Rng& rng, std::size_t depth);

/// Invertible sample whose geometric expansion terminates after at most
/// kMaxPowers powers of the correction: up to 5 correction terms, relative
/// precision in a class no finer than theirs. Returns the sample and, for
/// EXACT samples, the inversion target.
struct InvertibleSample {
    Series value;
    Exponent target;
};
InvertibleSample invertible(Rng& rng, std::size_t depth);

/// Element of Q((t^{1/n})) for a random n <= n_max, depth 1; floor is
/// always determinate.
struct PsfSample {
    Series value;
    long denominator;
};
PsfSample psf(Rng& rng, long n_max, std::size_t max_terms = kMaxTerms);

/// Depth-d field element with determinate floor: EXACT, or truncated above
/// a known positive term.
Series field_element(Rng& rng, std::size_t depth);

/// Element of Q[G^{<0}] (no constant term), EXACT. With `denominator` > 0
/// the exponents are restricted to (1/denominator) Z at depth 1.
Series negative_polynomial(Rng& rng, std::size_t depth, long denominator = 0);
/// Element of the integer part Q[G^{<0}] + Z.
Series integer_part_element(Rng& rng, std::size_t depth, long denominator = 0);

}  // namespace hahn::sampling
