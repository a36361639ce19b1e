#include "rdh/instance.hpp"

#include <algorithm>
#include <utility>

namespace rdh {

Instance::Instance(SystemModel model, ImplementationCatalog catalog)
    : model_(std::move(model)), catalog_(std::move(catalog)) {
  const auto report = validate_model(model_, catalog_);
  if (!report.empty()) {
    throw ValidationError(describe(report));
  }
  for (std::uint32_t i = 0; i < model_.components.size(); ++i) {
    component_index_.emplace(model_.components[i].id, i);
  }
  for (std::uint32_t i = 0; i < catalog_.types.size(); ++i) {
    type_index_.emplace(catalog_.types[i].id, i);
  }
  components_.resize(model_.components.size());
  for (std::uint32_t i = 0; i < model_.components.size(); ++i) {
    const auto& def = model_.components[i];
    auto& indexed = components_[i];
    for (const auto& input : def.inputs) {
      indexed.inputs.push_back(component_index_.at(input));
    }
    for (const auto& type : def.allowed) {
      indexed.allowed.push_back(type_index_.at(type));
    }
    std::sort(indexed.allowed.begin(), indexed.allowed.end());
  }
  for (std::uint32_t i = 0; i < components_.size(); ++i) {
    for (const auto input : components_[i].inputs) {
      components_[input].successors.push_back(i);
    }
  }
}

std::uint32_t Instance::component_index(const std::string& id) const {
  const auto it = component_index_.find(id);
  if (it == component_index_.end()) {
    throw ValidationError("unknown component '" + id + "'");
  }
  return it->second;
}

std::uint32_t Instance::type_index(const std::string& id) const {
  const auto it = type_index_.find(id);
  if (it == type_index_.end()) {
    throw ValidationError("unknown implementation type '" + id + "'");
  }
  return it->second;
}

const std::string& Instance::component_id(std::uint32_t index) const {
  return model_.components[index].id;
}

const std::string& Instance::type_id(std::uint32_t index) const {
  return catalog_.types[index].id;
}

DesignVec Instance::empty_design() const {
  DesignVec design;
  design.deployed.resize(component_count());
  design.level.assign(type_count(), 0);
  return design;
}

DesignVec Instance::compile(const Design& design) const {
  DesignVec out = empty_design();
  for (const auto& [component, types] : design.deployed) {
    const auto c = component_index(component);
    auto& slot = out.deployed[c];
    for (const auto& type : types) {
      const auto t = type_index(type);
      if (!std::binary_search(components_[c].allowed.begin(),
                              components_[c].allowed.end(), t)) {
        throw ValidationError("type '" + type + "' not allowed at component '" +
                              component + "'");
      }
      slot.push_back(t);
    }
    std::sort(slot.begin(), slot.end());
  }
  for (std::uint32_t t = 0; t < type_count(); ++t) {
    const auto it = design.level.find(catalog_.types[t].id);
    if (it == design.level.end()) {
      throw ValidationError("design assigns no hardening level to type '" +
                            catalog_.types[t].id + "'");
    }
    if (it->second >= catalog_.types[t].levels.size()) {
      throw ValidationError("hardening level " + std::to_string(it->second) +
                            " out of range for type '" + catalog_.types[t].id +
                            "'");
    }
    out.level[t] = it->second;
  }
  for (const auto& [type, level] : design.level) {
    type_index(type);  // reject unknown ids even though they carry no cost
  }
  return out;
}

Design Instance::decompile(const DesignVec& design) const {
  Design out;
  for (std::uint32_t c = 0; c < design.deployed.size(); ++c) {
    if (design.deployed[c].empty()) continue;
    auto& slot = out.deployed[component_id(c)];
    for (const auto t : design.deployed[c]) {
      slot.insert(type_id(t));
    }
  }
  for (std::uint32_t t = 0; t < design.level.size(); ++t) {
    out.level[type_id(t)] = design.level[t];
  }
  return out;
}

CostTriple Instance::costs(const DesignVec& design) const {
  CostTriple total;
  std::vector<std::uint8_t> adopted(type_count(), 0);
  for (const auto& slot : design.deployed) {
    for (const auto t : slot) {
      total.redundancy += catalog_.types[t].deploy_cost;
      adopted[t] = 1;
    }
  }
  for (std::uint32_t t = 0; t < type_count(); ++t) {
    if (adopted[t]) total.diversity += catalog_.types[t].adoption_cost;
    const auto& levels = catalog_.types[t].levels;
    total.hardening += levels[design.level[t]].cost - levels.front().cost;
  }
  return total;
}

bool Instance::feasible(const DesignVec& design, const BudgetConfig& budgets) const {
  return within_budget(costs(design), budgets);
}

}  // namespace rdh
