#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rdh/types.hpp"

namespace rdh {

struct ComponentDef {
  std::string id;
  ComponentKind kind = ComponentKind::Sensor;
  std::vector<std::string> inputs;   // upstream component ids
  std::vector<std::string> allowed;  // implementation type ids usable here
};

/// The cyber layer: components plus the data/control edges between them,
/// encoded as per-component input lists.
struct SystemModel {
  std::vector<ComponentDef> components;

  const ComponentDef* find(const std::string& id) const;
};

struct LevelDef {
  double secure_prob = 0.0;  // chance that no zero-day is found at this level
  Money cost = 0;            // price of attaining the level
};

struct ImplementationDef {
  std::string id;
  Money deploy_cost = 0;          // per deployed instance
  Money adoption_cost = 0;        // once, when the first instance is deployed
  std::vector<LevelDef> levels;   // ordered cheapest first
};

struct ImplementationCatalog {
  std::vector<ImplementationDef> types;

  const ImplementationDef* find(const std::string& id) const;
};

/// A concrete deployment: the implementation types running at each component
/// and the hardening level bought for every catalog type.
struct Design {
  std::map<std::string, std::set<std::string>> deployed;  // component -> types
  std::map<std::string, std::uint32_t> level;             // type -> level index

  /// No instances anywhere, every type at its cheapest level.
  static Design empty(const ImplementationCatalog& catalog);
};

using VulnerableSet = std::set<std::string>;   // implementation type ids
using CompromisedSet = std::set<std::string>;  // component ids

struct Violation {
  std::string subject;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

std::string describe(const ValidationReport& report);

/// Checks every structural invariant of the model/catalog pair. Violations
/// come back as data; an empty report means the pair is well formed.
ValidationReport validate_model(const SystemModel& model,
                                const ImplementationCatalog& catalog);

/// Sum of per-instance deployment costs over all components.
Money redundancy_cost(const Design& design, const ImplementationCatalog& catalog);

/// Sum of adoption costs over the distinct types deployed anywhere; instance
/// multiplicity does not matter.
Money diversity_cost(const Design& design, const ImplementationCatalog& catalog);

/// Hardening spend above each type's cheapest level, so a design that buys
/// nothing always costs zero.
Money hardening_cost(const Design& design, const ImplementationCatalog& catalog);

struct CostTriple {
  Money redundancy = 0;
  Money diversity = 0;
  Money hardening = 0;

  Money total() const { return redundancy + diversity + hardening; }
};

CostTriple design_costs(const Design& design, const ImplementationCatalog& catalog);

bool within_budget(const CostTriple& costs, const BudgetConfig& budgets);

bool is_feasible(const Design& design, const BudgetConfig& budgets,
                 const ImplementationCatalog& catalog);

}  // namespace rdh
