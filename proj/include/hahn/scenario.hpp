#pragma once

#include "hahn/order.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

struct Assertion {
    std::string name;
    std::size_t checked = 0;
    std::vector<Witness> witnesses;

    bool passed() const noexcept { return witnesses.empty(); }
};

struct ScenarioReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string note;
    std::vector<Assertion> assertions;
    /// Wall-clock seconds; kept out of the JSON so reruns stay byte-identical.
    double duration_seconds = 0.0;

    bool passed() const;
};

Assertion from_report(const ComplementReport& report);

/// Integer-part, weak- and additive-complement axioms over Puiseux samples
/// Q((t^{1/n})), n <= n_max, plus the sign-split decomposition identity.
ScenarioReport scenario_psf_integer_part(long n_max, std::size_t samples, std::uint64_t seed);

/// x = sum_{i=1..d} t^{alpha_i} with alpha_i = e_{d-i+1} positive in
/// C_i \ C_{i-1}, C_i = Gamma_{d-i}: escape from every proper chain member
/// and density of its truncations under every coarsening.
ScenarioReport scenario_chain_counterexample(std::size_t depth, std::size_t samples, std::uint64_t seed);

/// Elements of a chain member written as quotients of Neg elements.
ScenarioReport scenario_quotient_field(std::size_t depth, std::size_t samples, std::uint64_t seed);

/// Density of K_Gamma in the residue field of the coarsening, and the
/// subring R_Gamma, for every level j < depth.
ScenarioReport scenario_embdsrf(std::size_t depth, std::size_t samples, std::uint64_t seed);

/// Standalone checker run for the `check` command: integer-part,
/// weak-complement or additive-complement over seeded depth-d samples.
ComplementReport run_check(const std::string& kind, std::size_t samples, std::uint64_t seed, std::size_t depth);

/// Compact single-line JSON.
std::string to_json(const ScenarioReport& report);
std::string to_json(const ComplementReport& report, const std::vector<std::pair<std::string, std::string>>& parameters);

}  // namespace hahn
