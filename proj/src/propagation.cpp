#include "rdh/propagation.hpp"

#include <algorithm>

namespace rdh {

std::vector<std::uint32_t> deployed_types(const DesignVec& design,
                                          std::size_t type_count) {
  std::vector<std::uint8_t> seen(type_count, 0);
  for (const auto& slot : design.deployed) {
    for (const auto t : slot) seen[t] = 1;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < type_count; ++t) {
    if (seen[t]) out.push_back(t);
  }
  return out;
}

std::vector<std::uint8_t> propagate_flags(
    const Instance& instance, const DesignVec& design,
    const std::vector<std::uint8_t>& vulnerable_types, AttackModel attack,
    const std::vector<std::uint8_t>* initial) {
  const auto n = instance.component_count();
  std::vector<std::uint8_t> compromised(n, 0);
  std::vector<std::uint32_t> worklist;
  worklist.reserve(n);
  auto mark = [&](std::uint32_t c) {
    if (!compromised[c]) {
      compromised[c] = 1;
      worklist.push_back(c);
    }
  };

  if (initial != nullptr) {
    for (std::uint32_t c = 0; c < n; ++c) {
      if ((*initial)[c]) mark(c);
    }
  }

  // Instance rule fires once per component, independent of the fixed point.
  for (std::uint32_t c = 0; c < n; ++c) {
    const auto& deployed = design.deployed[c];
    std::size_t vulnerable = 0;
    for (const auto t : deployed) {
      if (vulnerable_types[t]) ++vulnerable;
    }
    const bool fires = attack == AttackModel::Stealthy
                           ? vulnerable == deployed.size()
                           : 2 * vulnerable >= deployed.size();
    if (fires) mark(c);
  }

  // Input rule: worklist over successors, counting compromised inputs.
  std::vector<std::uint32_t> compromised_inputs(n, 0);
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const auto c = worklist[head];
    for (const auto successor : instance.successors(c)) {
      ++compromised_inputs[successor];
      if (compromised[successor]) continue;
      if (instance.kind(successor) == ComponentKind::Sensor) continue;
      const auto fan_in = instance.inputs(successor).size();
      if (fan_in == 0) continue;
      const bool fires = attack == AttackModel::Stealthy
                             ? compromised_inputs[successor] == fan_in
                             : 2 * compromised_inputs[successor] >= fan_in;
      if (fires) mark(successor);
    }
  }
  return compromised;
}

namespace {

std::vector<std::uint8_t> vulnerable_to_flags(const Instance& instance,
                                              const VulnerableSet& vulnerable) {
  std::vector<std::uint8_t> flags(instance.type_count(), 0);
  for (const auto& id : vulnerable) {
    flags[instance.type_index(id)] = 1;
  }
  return flags;
}

CompromisedSet flags_to_components(const Instance& instance,
                                   const std::vector<std::uint8_t>& flags) {
  CompromisedSet out;
  for (std::uint32_t c = 0; c < flags.size(); ++c) {
    if (flags[c]) out.insert(instance.component_id(c));
  }
  return out;
}

}  // namespace

CompromisedSet propagate(const Instance& instance, const Design& design,
                         const VulnerableSet& vulnerable, AttackModel attack) {
  const auto compiled = instance.compile(design);
  const auto flags =
      propagate_flags(instance, compiled, vulnerable_to_flags(instance, vulnerable), attack);
  return flags_to_components(instance, flags);
}

CompromisedSet propagate_from(const Instance& instance, const Design& design,
                              const VulnerableSet& vulnerable, AttackModel attack,
                              const CompromisedSet& initial) {
  const auto compiled = instance.compile(design);
  std::vector<std::uint8_t> seed(instance.component_count(), 0);
  for (const auto& id : initial) {
    seed[instance.component_index(id)] = 1;
  }
  const auto flags = propagate_flags(
      instance, compiled, vulnerable_to_flags(instance, vulnerable), attack, &seed);
  return flags_to_components(instance, flags);
}

std::vector<std::uint8_t> sample_vulnerable_flags(const Instance& instance,
                                                  const DesignVec& design,
                                                  SplitMix64& rng) {
  std::vector<std::uint8_t> deployed(instance.type_count(), 0);
  for (const auto& slot : design.deployed) {
    for (const auto t : slot) deployed[t] = 1;
  }
  std::vector<std::uint8_t> vulnerable(instance.type_count(), 0);
  for (std::uint32_t t = 0; t < instance.type_count(); ++t) {
    if (!deployed[t]) continue;
    const double secure = instance.secure_prob(t, design.level[t]);
    if (rng.next_double() < 1.0 - secure) vulnerable[t] = 1;
  }
  return vulnerable;
}

VulnerableSet sample_vulnerable(const Instance& instance, const Design& design,
                                SplitMix64& rng) {
  const auto compiled = instance.compile(design);
  const auto flags = sample_vulnerable_flags(instance, compiled, rng);
  VulnerableSet out;
  for (std::uint32_t t = 0; t < flags.size(); ++t) {
    if (flags[t]) out.insert(instance.type_id(t));
  }
  return out;
}

double outcome_probability_flags(const Instance& instance, const DesignVec& design,
                                 const std::vector<std::uint8_t>& vulnerable_types) {
  std::vector<std::uint8_t> deployed(instance.type_count(), 0);
  for (const auto& slot : design.deployed) {
    for (const auto t : slot) deployed[t] = 1;
  }
  double probability = 1.0;
  for (std::uint32_t t = 0; t < instance.type_count(); ++t) {
    if (!deployed[t]) {
      if (vulnerable_types[t]) {
        throw ValidationError("vulnerable set contains undeployed type '" +
                              instance.type_id(t) + "'");
      }
      continue;
    }
    const double secure = instance.secure_prob(t, design.level[t]);
    probability *= vulnerable_types[t] ? 1.0 - secure : secure;
  }
  return probability;
}

double outcome_probability(const Instance& instance, const Design& design,
                           const VulnerableSet& vulnerable) {
  return outcome_probability_flags(instance, instance.compile(design),
                                   vulnerable_to_flags(instance, vulnerable));
}

}  // namespace rdh
