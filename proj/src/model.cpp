#include "rdh/model.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rdh {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Sensor: return "sensor";
    case ComponentKind::Actuator: return "actuator";
    case ComponentKind::Processing: return "processing";
    case ComponentKind::Interface: return "interface";
  }
  return "unknown";
}

std::string to_string(AttackModel attack) {
  return attack == AttackModel::Stealthy ? "stealthy" : "nonstealthy";
}

ComponentKind component_kind_from_string(const std::string& text) {
  if (text == "sensor") return ComponentKind::Sensor;
  if (text == "actuator") return ComponentKind::Actuator;
  if (text == "processing") return ComponentKind::Processing;
  if (text == "interface") return ComponentKind::Interface;
  throw ValidationError("unknown component kind '" + text + "'");
}

AttackModel attack_model_from_string(const std::string& text) {
  if (text == "stealthy") return AttackModel::Stealthy;
  if (text == "nonstealthy" || text == "non-stealthy") return AttackModel::NonStealthy;
  throw ValidationError("unknown attack model '" + text + "'");
}

void validate_budget(const BudgetConfig& budgets) {
  if (const auto* split = std::get_if<SplitBudget>(&budgets)) {
    if (split->redundancy < 0 || split->diversity < 0 || split->hardening < 0) {
      throw ValidationError("budget amounts must be non-negative");
    }
  } else {
    if (std::get<CombinedBudget>(budgets).total < 0) {
      throw ValidationError("budget amounts must be non-negative");
    }
  }
}

const ComponentDef* SystemModel::find(const std::string& id) const {
  for (const auto& component : components) {
    if (component.id == id) return &component;
  }
  return nullptr;
}

const ImplementationDef* ImplementationCatalog::find(const std::string& id) const {
  for (const auto& type : types) {
    if (type.id == id) return &type;
  }
  return nullptr;
}

Design Design::empty(const ImplementationCatalog& catalog) {
  Design design;
  for (const auto& type : catalog.types) {
    design.level[type.id] = 0;
  }
  return design;
}

std::string describe(const ValidationReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (i > 0) out << '\n';
    out << report[i].subject << ": " << report[i].message;
  }
  return out.str();
}

namespace {

template <typename T>
bool has_duplicates(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

}  // namespace

ValidationReport validate_model(const SystemModel& model,
                                const ImplementationCatalog& catalog) {
  ValidationReport report;
  auto add = [&report](const std::string& subject, const std::string& message) {
    report.push_back({subject, message});
  };

  std::unordered_set<std::string> type_ids;
  for (const auto& type : catalog.types) {
    if (!type_ids.insert(type.id).second) {
      add(type.id, "duplicate implementation type id");
      continue;
    }
    if (type.deploy_cost < 0) add(type.id, "negative deployment cost");
    if (type.adoption_cost < 0) add(type.id, "negative adoption cost");
    if (type.levels.empty()) {
      add(type.id, "implementation type has no hardening levels");
      continue;
    }
    for (std::size_t l = 0; l < type.levels.size(); ++l) {
      const auto& level = type.levels[l];
      if (level.secure_prob < 0.0 || level.secure_prob > 1.0) {
        add(type.id, "secure probability of level " + std::to_string(l) +
                         " outside [0, 1]");
      }
      if (level.cost < 0) {
        add(type.id, "negative cost at level " + std::to_string(l));
      }
      if (l > 0) {
        if (level.cost <= type.levels[l - 1].cost) {
          add(type.id, "non-increasing level cost at level " + std::to_string(l));
        }
        if (level.secure_prob < type.levels[l - 1].secure_prob) {
          add(type.id, "decreasing secure probability at level " + std::to_string(l));
        }
      }
    }
  }

  std::unordered_set<std::string> component_ids;
  for (const auto& component : model.components) {
    if (!component_ids.insert(component.id).second) {
      add(component.id, "duplicate component id");
    }
  }
  for (const auto& component : model.components) {
    if (has_duplicates(component.inputs)) {
      add(component.id, "duplicate entries in input set");
    }
    for (const auto& input : component.inputs) {
      if (input == component.id) {
        add(component.id, "self-loop in input set");
      } else if (component_ids.count(input) == 0) {
        add(component.id, "dangling input '" + input + "'");
      }
    }
    if (component.kind == ComponentKind::Sensor && !component.inputs.empty()) {
      add(component.id, "sensor has a non-empty input set");
    }
    if (component.allowed.empty()) {
      add(component.id, "empty allowed implementation set");
    }
    if (has_duplicates(component.allowed)) {
      add(component.id, "duplicate entries in allowed set");
    }
    for (const auto& type : component.allowed) {
      if (type_ids.count(type) == 0) {
        add(component.id, "allowed implementation '" + type + "' not in catalog");
      }
    }
  }
  return report;
}

namespace {

const ImplementationDef& require_type(const ImplementationCatalog& catalog,
                                      const std::string& id) {
  const auto* type = catalog.find(id);
  if (type == nullptr) {
    throw ValidationError("unknown implementation type '" + id + "'");
  }
  return *type;
}

}  // namespace

Money redundancy_cost(const Design& design, const ImplementationCatalog& catalog) {
  Money total = 0;
  for (const auto& [component, types] : design.deployed) {
    for (const auto& type : types) {
      total += require_type(catalog, type).deploy_cost;
    }
  }
  return total;
}

Money diversity_cost(const Design& design, const ImplementationCatalog& catalog) {
  std::set<std::string> adopted;
  for (const auto& [component, types] : design.deployed) {
    adopted.insert(types.begin(), types.end());
  }
  Money total = 0;
  for (const auto& type : adopted) {
    total += require_type(catalog, type).adoption_cost;
  }
  return total;
}

Money hardening_cost(const Design& design, const ImplementationCatalog& catalog) {
  Money total = 0;
  for (const auto& type : catalog.types) {
    const auto chosen = design.level.find(type.id);
    if (chosen == design.level.end()) {
      throw ValidationError("design assigns no hardening level to type '" +
                            type.id + "'");
    }
    if (chosen->second >= type.levels.size()) {
      throw ValidationError("hardening level " + std::to_string(chosen->second) +
                            " out of range for type '" + type.id + "'");
    }
    total += type.levels[chosen->second].cost - type.levels.front().cost;
  }
  return total;
}

CostTriple design_costs(const Design& design, const ImplementationCatalog& catalog) {
  return CostTriple{redundancy_cost(design, catalog),
                    diversity_cost(design, catalog),
                    hardening_cost(design, catalog)};
}

bool within_budget(const CostTriple& costs, const BudgetConfig& budgets) {
  if (const auto* split = std::get_if<SplitBudget>(&budgets)) {
    return costs.redundancy <= split->redundancy &&
           costs.diversity <= split->diversity &&
           costs.hardening <= split->hardening;
  }
  return costs.total() <= std::get<CombinedBudget>(budgets).total;
}

bool is_feasible(const Design& design, const BudgetConfig& budgets,
                 const ImplementationCatalog& catalog) {
  return within_budget(design_costs(design, catalog), budgets);
}

}  // namespace rdh
