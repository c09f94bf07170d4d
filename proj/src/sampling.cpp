#include "hahn/sampling.hpp"

#include <algorithm>

namespace hahn::sampling {

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32U)};
    engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
    // explicit reduction keeps sequences identical across standard libraries
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

bool Rng::chance(double p) { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53 < p; }

Rational rational(Rng& rng, long height) { return make_rational(rng.uniform(-height, height), rng.uniform(1, height)); }

Rational nonzero_rational(Rng& rng, long height) {
    long num = rng.uniform(1, height);
    if (rng.chance(0.5)) num = -num;
    return make_rational(num, rng.uniform(1, height));
}

Exponent exponent_in(Rng& rng, std::size_t depth, std::size_t level, long height) {
    std::vector<Rational> coords(depth);
    for (std::size_t i = level; i < depth; ++i) coords[i] = rational(rng, height);
    return Exponent(std::move(coords));
}

Exponent positive_in(Rng& rng, std::size_t depth, std::size_t level, long height) {
    std::size_t cls = static_cast<std::size_t>(rng.uniform(static_cast<long>(level), static_cast<long>(depth) - 1));
    return positive_of_class(rng, depth, cls, height);
}

Exponent positive_of_class(Rng& rng, std::size_t depth, std::size_t level, long height) {
    std::vector<Rational> coords(depth);
    coords[level] = make_rational(rng.uniform(1, height), rng.uniform(1, height));
    for (std::size_t i = level + 1; i < depth; ++i) coords[i] = rational(rng, height);
    return Exponent(std::move(coords));
}

Series series(Rng& rng, std::size_t depth) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(kMaxTerms)));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Exponent g = rng.chance(0.15) ? Exponent::zero(depth) : exponent_in(rng, depth, 0, 8);
        terms.push_back({g, nonzero_rational(rng)});
    }
    std::optional<Exponent> prec;
    if (rng.chance(0.5)) prec = exponent_in(rng, depth, 0, 8);
    Series s(depth, std::move(terms), prec);
    // keep samples with a known leading term most of the time
    if (!s.has_known_leading() && !s.is_exact_zero() && rng.chance(0.8))
        s = Series(depth, {Term{*prec - Exponent::unit(depth, depth), nonzero_rational(rng)}}, prec);
    return s;
}

InvertibleSample invertible(Rng& rng, std::size_t depth) {
    const auto cls = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(depth) - 1));
    const Exponent h = exponent_in(rng, depth, 0, 8);
    Exponent rel = positive_of_class(rng, depth, cls, 8);
    std::vector<Term> terms{{h, nonzero_rational(rng)}};
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    for (std::size_t i = 0; i < n; ++i) {
        // corrections of class <= cls reach the relative precision in finitely many powers
        auto c = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cls)));
        Exponent step = positive_of_class(rng, depth, c, 8);
        // at most kMaxPowers powers of the smallest correction stay below rel
        rel = std::min(rel, exp_scale(step, kMaxPowers));
        terms.push_back({h + step, nonzero_rational(rng)});
    }
    if (rng.chance(0.5)) return {Series(depth, std::move(terms)), rel - h};
    return {Series(depth, std::move(terms), h + rel), rel - h};
}

PsfSample psf(Rng& rng, long n_max, std::size_t max_terms) {
    const long n = rng.uniform(1, n_max);
    const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_terms)));
    std::vector<Term> terms;
    long top = -kHeight;
    for (std::size_t i = 0; i < count; ++i) {
        long k = rng.uniform(-kHeight, kHeight);
        if (rng.chance(0.1)) k = 0;
        top = std::max(top, k);
        terms.push_back({Exponent{make_rational(k, n)}, nonzero_rational(rng)});
    }
    std::optional<Exponent> prec;
    if (rng.chance(0.25)) {
        // a known positive top term keeps the floor determinate
        top = std::max(top, 0L) + rng.uniform(1, 4);
        terms.push_back({Exponent{make_rational(top, n)}, nonzero_rational(rng)});
        prec = Exponent{make_rational(top + rng.uniform(1, kHeight), n)};
    }
    return {Series(1, std::move(terms), std::move(prec)), n};
}

Series field_element(Rng& rng, std::size_t depth) {
    const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(kMaxTerms)));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < count; ++i) {
        Exponent g = rng.chance(0.15) ? Exponent::zero(depth) : exponent_in(rng, depth, 0, 8);
        terms.push_back({g, nonzero_rational(rng)});
    }
    if (!rng.chance(0.25)) return Series(depth, std::move(terms));
    Exponent top = Exponent::zero(depth);
    for (const auto& t : terms) top = std::max(top, t.exp);
    top = top + positive_in(rng, depth, 0, 8);
    terms.push_back({top, nonzero_rational(rng)});
    return Series(depth, std::move(terms), top + positive_in(rng, depth, 0, 8));
}

Series negative_polynomial(Rng& rng, std::size_t depth, long denominator) {
    const auto count = static_cast<std::size_t>(rng.uniform(0, 4));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < count; ++i) {
        Exponent g;
        if (denominator > 0) {
            g = Exponent{make_rational(-rng.uniform(1, kHeight), denominator)};
        } else {
            g = -positive_in(rng, depth, 0, 8);
        }
        terms.push_back({g, nonzero_rational(rng)});
    }
    return Series(depth, std::move(terms));
}

Series integer_part_element(Rng& rng, std::size_t depth, long denominator) {
    return s_add(negative_polynomial(rng, depth, denominator),
                 Series::constant(Rational(rng.uniform(-kHeight, kHeight)), depth));
}

}  // namespace hahn::sampling
