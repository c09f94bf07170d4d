#include "hahn/order.hpp"

#include "hahn/errors.hpp"
#include "hahn/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace hahn {

namespace {

bool le(const Series& a, const Series& b) { return compare(a, b) <= 0; }
bool lt(const Series& a, const Series& b) { return compare(a, b) < 0; }

Series one(std::size_t d) { return Series::constant(Rational(1), d); }

// Runs `body` per sample; an exception or a returned message becomes a
// failure witness.
template <typename Body>
void for_each_sample(ComplementReport& report, const std::vector<Series>& samples, Body body) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        ++report.sample_count;
        std::string detail;
        try {
            detail = body(samples[i]);
        } catch (const Error& e) {
            detail = std::string("error: ") + e.what();
        }
        if (!detail.empty()) report.failures.push_back({i, to_string(samples[i]), detail});
    }
}

}  // namespace

Sign sign(const Series& a) {
    if (a.is_exact_zero()) return Sign::zero;
    if (!a.has_known_leading()) throw Indeterminate("sign undetermined: " + to_string(a));
    return sgn(a.terms().front().coeff) < 0 ? Sign::negative : Sign::positive;
}

std::strong_ordering compare(const Series& a, const Series& b) {
    switch (sign(s_sub(a, b))) {
        case Sign::negative: return std::strong_ordering::less;
        case Sign::zero: return std::strong_ordering::equal;
        default: return std::strong_ordering::greater;
    }
}

Series neg_part(const Series& a) {
    const Exponent zero = Exponent::zero(a.depth());
    if (a.prec() && *a.prec() < zero)
        throw Indeterminate("negative support unknown beyond precision " + to_string(*a.prec()));
    return a.filter([&](const Exponent& g) { return g < zero; }).with_prec(std::nullopt);
}

Series IntegerPartElement::as_series() const {
    return s_add(neg, Series::constant(Rational(constant), neg.depth()));
}

IntegerPartElement floor(const Series& a) {
    const Exponent zero = Exponent::zero(a.depth());
    if (a.prec() && *a.prec() <= zero) throw Indeterminate("floor: constant coefficient unknown in " + to_string(a));
    Series neg = neg_part(a);
    Rational c0 = a.coefficient(zero);
    Integer n = floor_of(c0);
    if (is_integer(c0)) {
        auto it = std::find_if(a.terms().begin(), a.terms().end(), [&](const Term& t) { return t.exp > zero; });
        if (it != a.terms().end()) {
            if (sgn(it->coeff) < 0) n -= 1;
        } else if (!a.is_exact()) {
            throw Indeterminate("floor: sign of the infinitesimal tail unknown in " + to_string(a));
        }
    }
    return {std::move(neg), std::move(n)};
}

bool in_integer_part(const Series& a) {
    if (!a.is_exact()) return false;
    const Exponent zero = Exponent::zero(a.depth());
    for (const auto& t : a.terms()) {
        if (t.exp > zero) return false;
        if (t.exp == zero && !is_integer(t.coeff)) return false;
    }
    return true;
}

ComplementReport check_integer_part(const std::vector<Series>& samples) {
    ComplementReport report{"integer-part", 0, {}};
    for_each_sample(report, samples, [](const Series& a) -> std::string {
        Series r = floor(a).as_series();
        Series r1 = s_add(r, one(a.depth()));
        if (!in_integer_part(r)) return "floor " + to_string(r) + " not in I";
        if (!le(r, a)) return "floor " + to_string(r) + " exceeds the sample";
        if (!lt(a, r1)) return "sample not below floor + 1 = " + to_string(r1);
        if (le(r1, a)) return "floor + 1 also lies below the sample";
        if (floor(r).as_series() != r) return "floor not idempotent on " + to_string(r);
        return {};
    });
    return report;
}

ComplementReport check_weak_complement(const std::vector<Series>& ring_samples,
                                       const std::vector<Series>& field_samples) {
    ComplementReport report{"weak-complement", 0, {}};
    for_each_sample(report, ring_samples, [](const Series& r) -> std::string {
        if (r.is_exact_zero()) return {};
        ValResult v = val(r);
        if (v > Exponent::zero(r.depth())) return "ring element of positive value " + to_string(v);
        return {};
    });
    const std::size_t offset = ring_samples.size();
    ComplementReport field{"", 0, {}};
    for_each_sample(field, field_samples, [](const Series& a) -> std::string {
        Series r = floor(a).as_series();
        Series diff = s_sub(a, r);
        if (!val_at_least(diff, Exponent::zero(a.depth())))
            return "v(a - r) = " + to_string(diff.lower_bound()) + " is negative for r = " + to_string(r);
        return {};
    });
    report.sample_count += field.sample_count;
    for (auto& w : field.failures) {
        w.index += offset;
        report.failures.push_back(std::move(w));
    }
    return report;
}

ComplementReport check_additive_complement(const std::vector<Series>& ring_samples,
                                           const std::vector<Series>& field_samples) {
    ComplementReport report{"additive-complement", 0, {}};
    for_each_sample(report, ring_samples, [](const Series& r) -> std::string {
        if (r.is_exact_zero()) return {};
        if (!r.is_exact()) return "ring sample is not a finite sum";
        if (!(val(r) < Exponent::zero(r.depth()))) return "nonzero ring element of value " + to_string(val(r)) + " >= 0";
        if (neg_part(r) != r) return "ring sample has non-negative exponents";
        return {};
    });
    const std::size_t offset = ring_samples.size();
    ComplementReport field{"", 0, {}};
    for_each_sample(field, field_samples, [](const Series& a) -> std::string {
        Series neg = neg_part(a);
        Series rest = s_sub(a, neg);
        if (!val_at_least(rest, Exponent::zero(a.depth())))
            return "remainder " + to_string(rest) + " has negative value";
        if (s_add(neg, rest) != a) return "decomposition does not recompose";
        return {};
    });
    report.sample_count += field.sample_count;
    for (auto& w : field.failures) {
        w.index += offset;
        report.failures.push_back(std::move(w));
    }
    return report;
}

ComplementReport check_order_compatibility(const std::vector<Series>& samples) {
    ComplementReport report{"order-compatibility", 0, {}};
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        ++report.sample_count;
        try {
            Series x = samples[i];
            Series y = samples[i + 1];
            if (sign(x) == Sign::zero || sign(y) == Sign::zero) continue;
            if (sign(x) == Sign::negative) x = s_neg(x);
            if (sign(y) == Sign::negative) y = s_neg(y);
            if (compare(x, y) > 0) std::swap(x, y);
            if (val(x) < val(y))
                report.failures.push_back({i, to_string(samples[i]) + "; " + to_string(samples[i + 1]),
                                           "0 < x <= y but v(x) < v(y)"});
        } catch (const Error& e) {
            report.failures.push_back({i, to_string(samples[i]) + "; " + to_string(samples[i + 1]),
                                       std::string("error: ") + e.what()});
        }
    }
    return report;
}

ComplementReport check_least_positive(const std::vector<Series>& ring_samples) {
    ComplementReport report{"least-positive", 0, {}};
    for_each_sample(report, ring_samples, [](const Series& r) -> std::string {
        if (!in_integer_part(r)) return "sample not in I";
        if (compare(r, Series::zero(r.depth())) > 0 && compare(r, one(r.depth())) < 0)
            return "element of I strictly between 0 and 1";
        return {};
    });
    return report;
}

std::vector<Series> r_gamma_filter(const std::vector<Series>& ring_samples, ConvexLevel level) {
    std::vector<Series> kept;
    for (const auto& r : ring_samples) {
        ValResult v = val(r);
        if (v.is_infinite() || in_subgroup(v.exponent(), level)) kept.push_back(r);
    }
    return kept;
}

ComplementReport check_r_gamma(const std::vector<Series>& ring_samples, ConvexLevel level,
                               const std::vector<Exponent>& coverage) {
    ComplementReport report{"r-gamma", 0, {}};
    auto in_r_gamma = [&](const Series& s) {
        if (!in_integer_part(s)) return false;
        ValResult v = val(s);
        return v.is_infinite() || in_subgroup(v.exponent(), level);
    };
    std::vector<Series> kept;
    try {
        kept = r_gamma_filter(ring_samples, level);
    } catch (const Error& e) {
        report.failures.push_back({0, "", std::string("error: ") + e.what()});
        return report;
    }
    const std::size_t n = kept.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : {i + 1, n - 1 - i}) {
            if (j >= n) continue;
            ++report.sample_count;
            const Series& r = kept[i];
            const Series& s = kept[j];
            std::string input = to_string(r) + "; " + to_string(s);
            if (!in_r_gamma(r) || !in_r_gamma(s)) {
                report.failures.push_back({i, input, "filtered element outside R_Gamma"});
                continue;
            }
            if (!in_r_gamma(s_add(r, s))) report.failures.push_back({i, input, "sum leaves R_Gamma"});
            if (!in_r_gamma(s_sub(r, s))) report.failures.push_back({i, input, "difference leaves R_Gamma"});
            if (!in_r_gamma(s_mul(r, s))) report.failures.push_back({i, input, "product leaves R_Gamma"});
        }
    }
    for (std::size_t i = 0; i < coverage.size(); ++i) {
        ++report.sample_count;
        const Exponent& g = coverage[i];
        if (!in_subgroup(g, level) || !(g < Exponent::zero(g.depth()))) {
            report.failures.push_back({i, to_string(g), "coverage value not negative in Gamma_j"});
            continue;
        }
        Series witness = Series::monomial(Rational(1), g);
        if (!in_r_gamma(witness) || val(witness) != ValResult(g))
            report.failures.push_back({i, to_string(g), "value not attained in R_Gamma"});
    }
    return report;
}

DensityTrace embdsrf_trace(const Series& a, const Exponent& gamma, ConvexLevel level) {
    const std::size_t d = a.depth();
    if (gamma.depth() != d) throw DepthMismatch("embdsrf: gamma depth does not match series");
    const Exponent zero = Exponent::zero(d);
    if (!in_subgroup(gamma, level) || !(gamma > zero))
        throw DomainError("embdsrf: gamma must be positive in Gamma_" + std::to_string(level.j));
    ValResult v = val(a);
    Series c = Series::monomial(Rational(1), -gamma);
    if (v.is_infinite()) return {c, Series::zero(d), Series::zero(d)};
    if (!in_subgroup(v.exponent(), level))
        throw DomainError("embdsrf: v(a) = " + to_string(v) + " not in Gamma_" + std::to_string(level.j));
    if (!(gamma > v.exponent())) throw DomainError("embdsrf: gamma must exceed v(a)");
    if (a.prec() && *a.prec() < gamma)
        throw PrecisionError("embdsrf: precision " + to_string(*a.prec()) + " below gamma " + to_string(gamma));
    // v(a c - r) >= 0 for the negative part r; its terms lie between
    // v(a) - gamma and 0, hence inside Gamma_j.
    Series r = neg_part(s_mul(a, c));
    Series b = s_mul(r, s_invert(c));
    return {std::move(c), std::move(r), std::move(b)};
}

Series embdsrf_density(const Series& a, const Exponent& gamma, ConvexLevel level) {
    return embdsrf_trace(a, gamma, level).b;
}

ConvexLevel chain_level(std::size_t depth, std::size_t nu) {
    if (nu > depth) throw DomainError("chain index exceeds depth");
    return {depth - nu};
}

std::pair<Series, Series> quotient_field_witness(const Series& a, std::size_t nu) {
    const std::size_t d = a.depth();
    if (nu >= d) throw DomainError("quotient_field_witness: chain index must be below the depth");
    if (!a.is_exact()) throw Indeterminate("quotient_field_witness: support of a not fully known");
    const ConvexLevel member = chain_level(d, nu);
    for (const auto& t : a.terms())
        if (!in_subgroup(t.exp, member))
            throw DomainError("quotient_field_witness: exponent " + to_string(t.exp) + " outside C_" +
                              std::to_string(nu));
    Series shift = Series::monomial(Rational(1), -Exponent::unit(d, d - nu));
    return {s_mul(a, shift), shift};
}

ComplementReport floor_bijection_probe(const std::vector<Series>& samples, const FloorFn& floor1,
                                       const FloorFn& floor2) {
    ComplementReport report{"floor-bijection", 0, {}};
    std::vector<Series> images(samples.size());
    std::vector<bool> ok(samples.size(), false);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        ++report.sample_count;
        const Series& a = samples[i];
        try {
            const Series one_d = one(a.depth());
            Series image = floor2(a);
            if (!le(image, a) || !lt(a, s_add(image, one_d))) {
                report.failures.push_back({i, to_string(a), "a' = " + to_string(image) + " violates a' <= a < a'+1"});
                continue;
            }
            // a'' in I1 with a'' < a' <= a'' + 1, i.e. a'' = ceil1(a') - 1.
            Series pre = s_sub(s_neg(floor1(s_neg(image))), one_d);
            if (!lt(pre, image) || !le(image, s_add(pre, one_d))) {
                report.failures.push_back({i, to_string(a), "a'' = " + to_string(pre) + " violates a'' < a' <= a''+1"});
                continue;
            }
            if (s_add(pre, one_d) != a) {
                report.failures.push_back({i, to_string(a), "a'' + 1 = " + to_string(s_add(pre, one_d)) + " differs from a"});
                continue;
            }
            images[i] = std::move(image);
            ok[i] = true;
        } catch (const Error& e) {
            report.failures.push_back({i, to_string(a), std::string("error: ") + e.what()});
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (ok[i]) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return compare(samples[x], samples[y]) < 0; });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        std::size_t x = order[k];
        std::size_t y = order[k + 1];
        auto c = compare(samples[x], samples[y]);
        auto ci = compare(images[x], images[y]);
        if ((c == 0) != (ci == 0) || (c < 0 && ci >= 0))
            report.failures.push_back({y, to_string(samples[x]) + "; " + to_string(samples[y]),
                                       "map not injective or not order preserving"});
    }
    return report;
}

}  // namespace hahn
