#include "hahn/scenario.hpp"

#include "hahn/errors.hpp"
#include "hahn/sampling.hpp"
#include "hahn/valuation.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>

namespace hahn {

namespace {

using sampling::Rng;
using Clock = std::chrono::steady_clock;

// Sample streams, one per generator role.
enum Stream : std::uint64_t {
    kFieldStream = 1,
    kRingStream,
    kNegStream,
    kInverseStream,
    kBoundStream,
    kChainSampleStream,
    kDensityStream,
    kCoverageStream,
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// Runs body over indices; a returned message or a library error becomes a witness.
Assertion assert_each(const std::string& name, std::size_t count,
                      const std::function<std::pair<std::string, std::string>(std::size_t)>& body) {
    Assertion a{name, 0, {}};
    for (std::size_t i = 0; i < count; ++i) {
        ++a.checked;
        try {
            auto [input, detail] = body(i);
            if (!detail.empty()) a.witnesses.push_back({i, input, detail});
        } catch (const Error& e) {
            a.witnesses.push_back({i, "", std::string("error: ") + e.what()});
        }
    }
    return a;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_negative(const Series& s) {
    const Exponent zero = Exponent::zero(s.depth());
    return s.is_exact() && std::all_of(s.terms().begin(), s.terms().end(), [&](const Term& t) { return t.exp < zero; });
}

}  // namespace

bool ScenarioReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed(); });
}

Assertion from_report(const ComplementReport& report) {
    return {report.axiom, report.sample_count, report.failures};
}

ScenarioReport scenario_psf_integer_part(long n_max, std::size_t samples, std::uint64_t seed) {
    if (n_max < 1) throw DomainError("psf-integer-part: n-max must be at least 1");
    const auto start = Clock::now();
    ScenarioReport report;
    report.id = "psf-integer-part";
    report.parameters = {{"n_max", std::to_string(n_max)}, {"samples", str(samples)}, {"seed", str(seed)}};
    report.note = "finite-precision samples of the Puiseux series field; completion elements are not represented";

    std::vector<sampling::PsfSample> field;
    std::vector<Series> field_values;
    std::vector<Series> ring;
    std::vector<Series> neg_ring;
    std::vector<Series> inverted;
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(seed, kFieldStream, i);
        field.push_back(sampling::psf(rng, n_max));
        field_values.push_back(field.back().value);

        Rng rrng(seed, kRingStream, i);
        const long n = rrng.uniform(1, n_max);
        Series r = sampling::integer_part_element(rrng, 1, n);
        if (i % 2 == 1) r = (i % 4 == 1) ? s_mul(ring.back(), r) : s_add(ring.back(), r);
        ring.push_back(r);

        Rng nrng(seed, kNegStream, i);
        neg_ring.push_back(sampling::negative_polynomial(nrng, 1, nrng.uniform(1, n_max)));

        // geometric-series path: inverses carry finitely many negative terms
        Rng irng(seed, kInverseStream, i);
        Series b = sampling::psf(irng, n_max, 6).value;
        if (!b.has_known_leading()) b = s_add(b, Series::constant(Rational(1), 1));
        // keep the negative part of the inverse fully known
        if (b.prec() && *b.prec() - exp_scale(val(b).exponent(), 2) < Exponent::zero(1)) b = b.with_prec(std::nullopt);
        inverted.push_back(s_invert(b, Exponent::of({8})));
    }
    // integer constants are their own floor
    for (long k : {-3L, 0L, 1L, 7L}) field_values.push_back(Series::constant(Rational(k), 1));

    std::vector<Series> complement_field = field_values;
    complement_field.insert(complement_field.end(), inverted.begin(), inverted.end());

    report.assertions.push_back(from_report(check_integer_part(field_values)));
    report.assertions.push_back(from_report(check_weak_complement(ring, field_values)));
    report.assertions.push_back(from_report(check_additive_complement(neg_ring, complement_field)));
    report.assertions.push_back(from_report(check_order_compatibility(field_values)));
    report.assertions.push_back(from_report(check_least_positive(ring)));
    report.assertions.push_back(assert_each("decomposition", field.size(), [&](std::size_t i) {
        const auto& [a, n] = field[i];
        Series neg = neg_part(a);
        Series rest = s_sub(a, neg);
        const Exponent zero = Exponent::zero(1);
        auto negative = static_cast<std::size_t>(
            std::count_if(a.terms().begin(), a.terms().end(), [&](const Term& t) { return t.exp < zero; }));
        std::pair<std::string, std::string> out{to_string(a), {}};
        if (neg.terms().size() != negative || rest.terms().size() != a.terms().size() - negative)
            out.second = "term counts do not split by exponent sign";
        // after t -> t^{1/n} the negative part is a polynomial in t^{-1}
        for (const auto& t : neg.terms())
            if (!is_integer(t.exp[0] * Rational(n))) out.second = "negative exponent outside (1/n)Z";
        return out;
    }));
    report.duration_seconds = seconds_since(start);
    return report;
}

ScenarioReport scenario_chain_counterexample(std::size_t depth, std::size_t samples, std::uint64_t seed) {
    if (depth < 2) throw DomainError("chain-counterexample: depth must be at least 2");
    const auto start = Clock::now();
    const std::size_t d = depth;
    ScenarioReport report;
    report.id = "chain-counterexample";
    report.parameters = {{"depth", str(d)}, {"samples", str(samples)}, {"seed", str(seed)}};
    report.note = "chain C_i = Gamma_{d-i}, alpha_i = e_{d-i+1}; x is the depth-d partial sum";

    auto alpha = [&](std::size_t i) { return Exponent::unit(d, d - i + 1); };
    // partial sums x_m = sum_{i<=m} t^{alpha_i}; x = x_d
    auto partial = [&](std::size_t m) {
        std::vector<Term> terms;
        for (std::size_t i = 1; i <= m; ++i) terms.push_back({alpha(i), Rational(1)});
        return Series(d, std::move(terms));
    };
    const Series x = partial(d);

    report.assertions.push_back(assert_each("escape", d, [&](std::size_t j) {
        // j = 0..d-1: x lies outside the chain member C_j; it touches every level
        std::pair<std::string, std::string> out{to_string(x), {}};
        SupportProfile p = support_profile(x);
        std::set<std::size_t> all;
        for (std::size_t k = 0; k < d; ++k) all.insert(k);
        if (p.levels_touched != all) out.second = "support does not touch all levels";
        const ConvexLevel member = chain_level(d, j);
        bool inside = std::all_of(x.terms().begin(), x.terms().end(),
                                  [&](const Term& t) { return in_subgroup(t.exp, member); });
        if (inside) out.second = "x lies in chain member C_" + std::to_string(j);
        return out;
    }));

    report.assertions.push_back(assert_each("truncation-in-chain", d, [&](std::size_t k) {
        const std::size_t m = k + 1;
        const ConvexLevel member = chain_level(d, m);
        Series xm = partial(m);
        std::pair<std::string, std::string> out{to_string(xm), {}};
        if (x.filter([&](const Exponent& g) { return in_subgroup(g, member); }) != xm)
            out.second = "partial sum differs from the support filter of x";
        for (const auto& t : xm.terms())
            if (!in_subgroup(t.exp, member)) out.second = "partial sum leaves C_" + std::to_string(m);
        return out;
    }));

    report.assertions.push_back(assert_each("gap-values", d, [&](std::size_t k) {
        const std::size_t m = k + 1;
        ValResult gap = density_gap(x, partial(m));
        ValResult expected = m < d ? ValResult(alpha(m + 1)) : ValResult::infinity();
        std::pair<std::string, std::string> out{to_string(partial(m)), {}};
        if (gap != expected) out.second = "gap " + to_string(gap) + " expected " + to_string(expected);
        return out;
    }));

    // For every coarsening level j and sampled coarse bound beta, the lifted
    // bound yields a witness b with w_j(x - b) >= beta.
    report.assertions.push_back(assert_each("coarse-density", (d - 1) * samples, [&](std::size_t i) {
        const ConvexLevel level{1 + i / samples};
        Rng rng(seed, kBoundStream, i);
        Exponent beta = sampling::exponent_in(rng, level.j, 0);
        Series b = truncate(x, lift(beta, d)).with_prec(std::nullopt);
        ValResult gap = density_gap(x, b);
        std::pair<std::string, std::string> out{to_string(b), {}};
        if (!gap.is_infinite() && project(gap.exponent(), level) < beta)
            out.second = "coarse gap below bound " + to_string(beta) + " at level " + std::to_string(level.j);
        return out;
    }));
    report.duration_seconds = seconds_since(start);
    return report;
}

ScenarioReport scenario_quotient_field(std::size_t depth, std::size_t samples, std::uint64_t seed) {
    if (depth < 2) throw DomainError("quotient-field: depth must be at least 2");
    const auto start = Clock::now();
    const std::size_t d = depth;
    ScenarioReport report;
    report.id = "quotient-field";
    report.parameters = {{"depth", str(d)}, {"samples", str(samples)}, {"seed", str(seed)}};

    struct Case {
        Series a;
        std::size_t nu;
    };
    std::vector<Case> cases;
    cases.push_back({s_add(Series::constant(Rational(3), d), Series::monomial(Rational(1), exp_scale(Exponent::unit(d, d), 2))), 1});
    cases.push_back({Series::zero(d), 1});
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(seed, kChainSampleStream, i);
        const auto nu = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(d) - 1));
        const ConvexLevel member = chain_level(d, nu);
        std::vector<Term> terms;
        const auto n = static_cast<std::size_t>(rng.uniform(1, 10));
        for (std::size_t k = 0; k < n; ++k)
            terms.push_back({sampling::exponent_in(rng, d, member.j), sampling::nonzero_rational(rng)});
        cases.push_back({Series(d, std::move(terms)), nu});
    }

    std::vector<std::pair<Series, Series>> witnesses(cases.size(), {Series(d), Series(d)});
    report.assertions.push_back(assert_each("neg-support", cases.size(), [&](std::size_t i) {
        witnesses[i] = quotient_field_witness(cases[i].a, cases[i].nu);
        std::pair<std::string, std::string> out{to_string(cases[i].a), {}};
        if (!all_negative(witnesses[i].first) || !all_negative(witnesses[i].second))
            out.second = "witness has non-negative exponents";
        return out;
    }));
    report.assertions.push_back(assert_each("division-back", cases.size(), [&](std::size_t i) {
        const auto& [num, den] = witnesses[i];
        std::pair<std::string, std::string> out{to_string(cases[i].a), {}};
        if (s_mul(num, s_invert(den)) != cases[i].a) out.second = "quotient differs from a";
        return out;
    }));
    report.assertions.push_back(assert_each("r-membership", cases.size(), [&](std::size_t i) {
        std::pair<std::string, std::string> out{to_string(cases[i].a), {}};
        for (const Series* s : {&witnesses[i].first, &witnesses[i].second}) {
            ValResult v = val(*s);
            if (!v.is_infinite() && v > Exponent::zero(d)) out.second = "witness of positive value";
        }
        return out;
    }));
    report.duration_seconds = seconds_since(start);
    return report;
}

ScenarioReport scenario_embdsrf(std::size_t depth, std::size_t samples, std::uint64_t seed) {
    if (depth < 2) throw DomainError("embdsrf: depth must be at least 2");
    const auto start = Clock::now();
    const std::size_t d = depth;
    ScenarioReport report;
    report.id = "embdsrf";
    report.parameters = {{"depth", str(d)}, {"samples", str(samples)}, {"seed", str(seed)}};

    struct Case {
        Series a;
        Exponent gamma;
        ConvexLevel level;
    };
    std::vector<Case> cases;
    const Exponent ed = Exponent::unit(d, d);
    // a = t^{-e_d} + t^{6 e_d}, gamma = 5 e_d: b = t^{-e_d}
    cases.push_back({s_add(Series::monomial(Rational(1), -ed), Series::monomial(Rational(1), exp_scale(ed, 6))),
                     exp_scale(ed, 5), ConvexLevel{d - 1}});
    // already in K_Gamma below gamma: b = a
    cases.push_back({s_add(Series::monomial(Rational(2), -ed), Series::constant(Rational(1), d)), exp_scale(ed, 3),
                     ConvexLevel{d - 1}});
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < samples; ++i) {
            Rng rng(seed, kDensityStream, j * samples + i);
            const ConvexLevel level{j};
            const Exponent lead = sampling::exponent_in(rng, d, j, 8);
            Exponent gamma = sampling::positive_in(rng, d, j, 8);
            if (gamma <= lead) gamma = lead + gamma;
            if (gamma <= Exponent::zero(d)) gamma = sampling::positive_in(rng, d, j, 8);
            std::vector<Term> terms{{lead, sampling::nonzero_rational(rng)}};
            const auto n = static_cast<std::size_t>(rng.uniform(0, 10));
            for (std::size_t k = 0; k < n; ++k) {
                // above the leading term, inside Gamma_j or in a coarser class
                Exponent g = rng.chance(0.7) || j == 0 ? lead + sampling::positive_in(rng, d, j, 8)
                                                       : lead + sampling::positive_of_class(rng, d, rng.uniform(0, static_cast<long>(j) - 1), 8);
                terms.push_back({g, sampling::nonzero_rational(rng)});
            }
            std::optional<Exponent> prec;
            if (rng.chance(0.3)) prec = gamma + sampling::positive_in(rng, d, 0, 8);
            cases.push_back({Series(d, std::move(terms), prec), gamma, level});
        }
    }

    std::vector<Series> results(cases.size(), Series(d));
    report.assertions.push_back(assert_each("density-gap", cases.size(), [&](std::size_t i) {
        const Case& c = cases[i];
        results[i] = embdsrf_density(c.a, c.gamma, c.level);
        std::pair<std::string, std::string> out{to_string(c.a) + "; gamma=" + to_string(c.gamma) +
                                                    "; level=" + std::to_string(c.level.j),
                                                {}};
        if (!val_at_least(s_sub(c.a, results[i]), c.gamma)) out.second = "v(a - b) below gamma";
        return out;
    }));
    report.assertions.push_back(assert_each("support-in-gamma", cases.size(), [&](std::size_t i) {
        const Series& b = results[i];
        std::pair<std::string, std::string> out{to_string(b), {}};
        if (!b.is_exact()) out.second = "b is not a finite sum";
        for (const auto& t : b.terms())
            if (!in_subgroup(t.exp, cases[i].level)) out.second = "b leaves Gamma_" + std::to_string(cases[i].level.j);
        return out;
    }));
    report.assertions.push_back(assert_each("worked-example", 2, [&](std::size_t i) {
        std::pair<std::string, std::string> out{to_string(cases[i].a), {}};
        Series expected = i == 0 ? Series::monomial(Rational(1), -ed) : cases[i].a;
        if (results[i] != expected) out.second = "b = " + to_string(results[i]) + ", expected " + to_string(expected);
        if (i == 1 && density_gap(cases[i].a, results[i]) != ValResult::infinity()) out.second = "gap not infinite";
        return out;
    }));

    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Series> ring;
        std::vector<Exponent> coverage;
        for (std::size_t i = 0; i < samples; ++i) {
            Rng rng(seed, kCoverageStream, j * samples + i);
            Series r = sampling::integer_part_element(rng, d);
            // products and sums of generators stay inside I
            if (i % 3 == 2) r = s_mul(ring.back(), r);
            ring.push_back(r);
            coverage.push_back(-sampling::positive_in(rng, d, j, 8));
        }
        Assertion a = from_report(check_r_gamma(ring, ConvexLevel{j}, coverage));
        a.name = "r-gamma-level-" + std::to_string(j);
        report.assertions.push_back(std::move(a));
    }
    report.duration_seconds = seconds_since(start);
    return report;
}

ComplementReport run_check(const std::string& kind, std::size_t samples, std::uint64_t seed, std::size_t depth) {
    if (depth < 1) throw DomainError("check: depth must be at least 1");
    std::vector<Series> field;
    std::vector<Series> ring;
    for (std::size_t i = 0; i < samples; ++i) {
        Rng frng(seed, kFieldStream, i);
        field.push_back(sampling::field_element(frng, depth));
        Rng rrng(seed, kRingStream, i);
        ring.push_back(kind == "additive-complement" ? sampling::negative_polynomial(rrng, depth)
                                                     : sampling::integer_part_element(rrng, depth));
    }
    if (kind == "integer-part") return check_integer_part(field);
    if (kind == "weak-complement") return check_weak_complement(ring, field);
    if (kind == "additive-complement") return check_additive_complement(ring, field);
    throw DomainError("unknown check kind '" + kind + "'");
}

namespace {

nlohmann::ordered_json witnesses_json(const std::vector<Witness>& ws) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& w : ws) arr.push_back({{"index", w.index}, {"input", w.input}, {"detail", w.detail}});
    return arr;
}

nlohmann::ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& ps) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : ps) p[k] = v;
    return p;
}

}  // namespace

std::string to_json(const ScenarioReport& report) {
    nlohmann::ordered_json j;
    j["scenario"] = report.id;
    j["parameters"] = params_json(report.parameters);
    if (!report.note.empty()) j["note"] = report.note;
    j["passed"] = report.passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : report.assertions)
        arr.push_back({{"name", a.name}, {"checked", a.checked}, {"passed", a.passed()},
                       {"witnesses", witnesses_json(a.witnesses)}});
    j["assertions"] = std::move(arr);
    return j.dump();
}

std::string to_json(const ComplementReport& report, const std::vector<std::pair<std::string, std::string>>& parameters) {
    nlohmann::ordered_json j;
    j["check"] = report.axiom;
    j["parameters"] = params_json(parameters);
    j["passed"] = report.passed();
    j["samples"] = report.sample_count;
    j["witnesses"] = witnesses_json(report.failures);
    return j.dump();
}

}  // namespace hahn
