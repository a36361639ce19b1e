#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rdh/instance.hpp"
#include "rdh/rng.hpp"

namespace rdh {

/// Least fixed point of the compromise rules, flag-vector form.
///
/// A component falls to the instance rule when enough of its deployed
/// instances are vulnerable (all of them under stealthy attacks, at least
/// half under non-stealthy ones); a component with no instances falls
/// unconditionally. Non-sensor components with a non-empty input set
/// additionally fall to the input rule once enough of their inputs are
/// compromised, with the same all/majority thresholds. `initial` marks
/// components treated as compromised from the start.
std::vector<std::uint8_t> propagate_flags(
    const Instance& instance, const DesignVec& design,
    const std::vector<std::uint8_t>& vulnerable_types, AttackModel attack,
    const std::vector<std::uint8_t>* initial = nullptr);

CompromisedSet propagate(const Instance& instance, const Design& design,
                         const VulnerableSet& vulnerable, AttackModel attack);

/// Propagation seeded with components already under attacker control.
CompromisedSet propagate_from(const Instance& instance, const Design& design,
                              const VulnerableSet& vulnerable, AttackModel attack,
                              const CompromisedSet& initial);

/// Draws the vulnerable type set: each deployed type independently with
/// probability 1 - S at its chosen level, in catalog order. Types deployed
/// nowhere are never drawn.
std::vector<std::uint8_t> sample_vulnerable_flags(const Instance& instance,
                                                  const DesignVec& design,
                                                  SplitMix64& rng);

VulnerableSet sample_vulnerable(const Instance& instance, const Design& design,
                                SplitMix64& rng);

/// Probability of exactly this vulnerable set over the deployed types.
/// Throws ValidationError when the set contains an undeployed type.
double outcome_probability_flags(const Instance& instance, const DesignVec& design,
                                 const std::vector<std::uint8_t>& vulnerable_types);

double outcome_probability(const Instance& instance, const Design& design,
                           const VulnerableSet& vulnerable);

/// Type indices deployed at one component or more, sorted ascending.
std::vector<std::uint32_t> deployed_types(const DesignVec& design,
                                          std::size_t type_count);

}  // namespace rdh
