#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately reimplement behavior with the dumbest possible algorithms so
// they cannot share bugs with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdh/generator.hpp"
#include "rdh/instance.hpp"
#include "rdh/optimizer.hpp"
#include "rdh/propagation.hpp"
#include "rdh/rng.hpp"
#include "rdh/water.hpp"

namespace rdhtest {

inline rdh::ImplementationDef make_type(std::string id, rdh::Money deploy,
                                        rdh::Money adopt,
                                        std::vector<rdh::LevelDef> levels) {
  rdh::ImplementationDef type;
  type.id = std::move(id);
  type.deploy_cost = deploy;
  type.adoption_cost = adopt;
  type.levels = std::move(levels);
  return type;
}

inline rdh::ComponentDef make_component(std::string id, rdh::ComponentKind kind,
                                        std::vector<std::string> inputs,
                                        std::vector<std::string> allowed) {
  rdh::ComponentDef component;
  component.id = std::move(id);
  component.kind = kind;
  component.inputs = std::move(inputs);
  component.allowed = std::move(allowed);
  return component;
}

/// Ten levels priced 4*l^2 with the standard secure-probability ladder.
inline std::vector<rdh::LevelDef> standard_levels() {
  std::vector<rdh::LevelDef> levels;
  for (int l = 1; l <= 10; ++l) {
    levels.push_back({1.0 - std::pow(0.5, 0.5 * l + 1.0),
                      static_cast<rdh::Money>(4 * l * l)});
  }
  return levels;
}

/// One sensor deploying two single-level types with S = 0.6 and 0.5. Under
/// stealthy attacks and counting impact the exact risk is 0.4 * 0.5 = 0.2,
/// under non-stealthy attacks 1 - 0.6 * 0.5 = 0.7.
struct HandFixture {
  rdh::SystemModel model;
  rdh::ImplementationCatalog catalog;
  rdh::Design design;
};

inline HandFixture hand_fixture() {
  HandFixture fixture;
  fixture.catalog.types = {make_type("i1", 0, 0, {{0.6, 0}}),
                           make_type("i2", 0, 0, {{0.5, 0}})};
  fixture.model.components = {
      make_component("s1", rdh::ComponentKind::Sensor, {}, {"i1", "i2"})};
  fixture.design = rdh::Design::empty(fixture.catalog);
  fixture.design.deployed["s1"] = {"i1", "i2"};
  return fixture;
}

/// Full-sweep fixed point over string sets; no worklist, no indices.
inline rdh::CompromisedSet naive_propagate(const rdh::SystemModel& model,
                                           const rdh::Design& design,
                                           const rdh::VulnerableSet& vulnerable,
                                           rdh::AttackModel attack,
                                           rdh::CompromisedSet compromised = {}) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& component : model.components) {
      if (compromised.count(component.id)) continue;
      std::set<std::string> deployed;
      if (const auto it = design.deployed.find(component.id);
          it != design.deployed.end()) {
        deployed = it->second;
      }
      std::size_t hit = 0;
      for (const auto& type : deployed) {
        if (vulnerable.count(type)) ++hit;
      }
      bool falls = attack == rdh::AttackModel::Stealthy
                       ? hit == deployed.size()
                       : 2 * hit >= deployed.size();
      if (!falls && component.kind != rdh::ComponentKind::Sensor &&
          !component.inputs.empty()) {
        std::size_t fallen_inputs = 0;
        for (const auto& input : component.inputs) {
          if (compromised.count(input)) ++fallen_inputs;
        }
        falls = attack == rdh::AttackModel::Stealthy
                    ? fallen_inputs == component.inputs.size()
                    : 2 * fallen_inputs >= component.inputs.size();
      }
      if (falls) {
        compromised.insert(component.id);
        changed = true;
      }
    }
  }
  return compromised;
}

/// Exhaustive set-cover decision: does any union of at most k families
/// cover the universe?
inline bool has_cover(const rdh::SetCoverInstance& instance) {
  const auto families = instance.families.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << families); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) > instance.k) {
      continue;
    }
    std::set<std::string> covered;
    for (std::size_t f = 0; f < families; ++f) {
      if ((mask >> f) & 1) {
        covered.insert(instance.families[f].begin(), instance.families[f].end());
      }
    }
    bool all = true;
    for (const auto& element : instance.universe) {
      if (!covered.count(element)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct RandomInstance {
  rdh::SystemModel model;
  rdh::ImplementationCatalog catalog;
};

/// Small random model/catalog pair that always validates. Non-sensor
/// components may form cycles; sensors never have inputs.
inline RandomInstance random_instance(rdh::SplitMix64& rng,
                                      std::uint32_t max_components = 6,
                                      std::uint32_t types = 4,
                                      std::uint32_t max_levels = 3,
                                      bool fixed_levels = false) {
  RandomInstance out;
  for (std::uint32_t t = 0; t < types; ++t) {
    std::vector<rdh::LevelDef> levels;
    const auto count = fixed_levels ? max_levels : 1 + rng.next_below(max_levels);
    rdh::Money cost = static_cast<rdh::Money>(rng.next_below(3));
    double secure = 0.1 + 0.8 * rng.next_double();
    for (std::uint64_t l = 0; l < count; ++l) {
      levels.push_back({std::min(secure, 1.0), cost});
      cost += 1 + static_cast<rdh::Money>(rng.next_below(5));
      secure += (1.0 - secure) * 0.5 * rng.next_double();
    }
    out.catalog.types.push_back(
        make_type("i" + std::to_string(t + 1),
                  static_cast<rdh::Money>(rng.next_below(3)),
                  static_cast<rdh::Money>(rng.next_below(3)), std::move(levels)));
  }

  const auto components = 1 + rng.next_below(max_components);
  const rdh::ComponentKind kinds[] = {
      rdh::ComponentKind::Sensor, rdh::ComponentKind::Actuator,
      rdh::ComponentKind::Processing, rdh::ComponentKind::Interface};
  for (std::uint64_t c = 0; c < components; ++c) {
    const auto kind = kinds[rng.next_below(4)];
    std::vector<std::string> inputs;
    if (kind != rdh::ComponentKind::Sensor) {
      for (std::uint64_t other = 0; other < components; ++other) {
        if (other != c && rng.next_double() < 0.4) {
          inputs.push_back("c" + std::to_string(other + 1));
        }
      }
    }
    std::vector<std::string> allowed;
    for (std::uint32_t t = 0; t < types; ++t) {
      if (rng.next_double() < 0.6) allowed.push_back("i" + std::to_string(t + 1));
    }
    if (allowed.empty()) {
      allowed.push_back("i" + std::to_string(rng.next_below(types) + 1));
    }
    out.model.components.push_back(make_component(
        "c" + std::to_string(c + 1), kind, std::move(inputs), std::move(allowed)));
  }
  return out;
}

/// Random design valid against the model: per-component subsets of the
/// allowed sets plus uniformly chosen levels.
inline rdh::Design random_design(const RandomInstance& instance,
                                 rdh::SplitMix64& rng) {
  rdh::Design design = rdh::Design::empty(instance.catalog);
  for (const auto& component : instance.model.components) {
    for (const auto& type : component.allowed) {
      if (rng.next_double() < 0.5) design.deployed[component.id].insert(type);
    }
    if (design.deployed.count(component.id) &&
        design.deployed[component.id].empty()) {
      design.deployed.erase(component.id);
    }
  }
  for (const auto& type : instance.catalog.types) {
    design.level[type.id] =
        static_cast<std::uint32_t>(rng.next_below(type.levels.size()));
  }
  return design;
}

inline rdh::VulnerableSet random_vulnerable(const RandomInstance& instance,
                                            rdh::SplitMix64& rng) {
  rdh::VulnerableSet out;
  for (const auto& type : instance.catalog.types) {
    if (rng.next_double() < 0.4) out.insert(type.id);
  }
  return out;
}

/// Random, structurally valid scenario over a fresh line-plus-shortcuts pipe
/// graph. Pass the cyber model so sensor placements stay consistent.
inline rdh::WaterScenario random_scenario(const rdh::SystemModel& model,
                                          rdh::SplitMix64& rng,
                                          std::uint32_t nodes = 8) {
  rdh::WaterScenario scenario;
  for (std::uint32_t n = 0; n < nodes; ++n) {
    rdh::WaterNode node;
    node.id = "n" + std::to_string(n + 1);
    for (auto& demand : node.demand) {
      demand = rng.next_double() < 0.3 ? 0.0 : 0.5 * rng.next_double();
    }
    scenario.nodes.push_back(std::move(node));
  }
  std::vector<std::uint32_t> fanout(nodes, 0);
  for (std::uint32_t from = 0; from + 1 < nodes; ++from) {
    const auto links = 1 + rng.next_below(2);
    for (std::uint64_t l = 0; l < links; ++l) {
      const auto to = from + 1 + rng.next_below(nodes - from - 1);
      scenario.pipes.push_back({"n" + std::to_string(from + 1),
                                "n" + std::to_string(to + 1),
                                1 + static_cast<std::uint32_t>(rng.next_below(3)),
                                0.0});
      ++fanout[from];
    }
  }
  for (auto& pipe : scenario.pipes) {
    const auto from = std::stoul(pipe.from.substr(1)) - 1;
    pipe.fraction = 0.9 / fanout[from];
  }
  std::vector<std::uint32_t> shuffled(nodes);
  for (std::uint32_t n = 0; n < nodes; ++n) shuffled[n] = n;
  rdh::shuffle(shuffled, rng);
  std::size_t next_node = 0;
  for (const auto& component : model.components) {
    if (component.kind == rdh::ComponentKind::Sensor && next_node < nodes) {
      scenario.sensors[component.id] =
          "n" + std::to_string(shuffled[next_node++] + 1);
    }
  }
  scenario.injections = {"n1"};
  if (nodes > 2) scenario.injections.push_back("n2");
  scenario.theta = 0.05 * rng.next_double();
  scenario.horizon = 16 + static_cast<std::uint32_t>(rng.next_below(16));
  scenario.dt = 1.0;
  return scenario;
}

}  // namespace rdhtest
