#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdh/model.hpp"

namespace rdh {

/// Compiled design: per-component deployed type indices (sorted ascending)
/// plus a hardening level index per catalog type.
struct DesignVec {
  std::vector<std::vector<std::uint32_t>> deployed;
  std::vector<std::uint32_t> level;
};

/// A validated model/catalog pair with dense indices; the working
/// representation behind propagation, risk evaluation, and search.
/// Immutable after construction.
class Instance {
 public:
  /// Throws ValidationError when validate_model() reports anything.
  Instance(SystemModel model, ImplementationCatalog catalog);

  const SystemModel& model() const { return model_; }
  const ImplementationCatalog& catalog() const { return catalog_; }

  std::size_t component_count() const { return components_.size(); }
  std::size_t type_count() const { return catalog_.types.size(); }

  std::uint32_t component_index(const std::string& id) const;
  std::uint32_t type_index(const std::string& id) const;
  const std::string& component_id(std::uint32_t index) const;
  const std::string& type_id(std::uint32_t index) const;

  ComponentKind kind(std::uint32_t component) const {
    return model_.components[component].kind;
  }
  std::span<const std::uint32_t> inputs(std::uint32_t component) const {
    return components_[component].inputs;
  }
  std::span<const std::uint32_t> successors(std::uint32_t component) const {
    return components_[component].successors;
  }
  std::span<const std::uint32_t> allowed(std::uint32_t component) const {
    return components_[component].allowed;
  }

  const std::vector<LevelDef>& levels(std::uint32_t type) const {
    return catalog_.types[type].levels;
  }
  Money deploy_cost(std::uint32_t type) const {
    return catalog_.types[type].deploy_cost;
  }
  Money adoption_cost(std::uint32_t type) const {
    return catalog_.types[type].adoption_cost;
  }
  double secure_prob(std::uint32_t type, std::uint32_t level) const {
    return catalog_.types[type].levels[level].secure_prob;
  }

  DesignVec empty_design() const;

  /// Indexes a string-keyed design; throws ValidationError on unknown ids,
  /// instances outside a component's allowed set, missing level assignments,
  /// or level indices out of range.
  DesignVec compile(const Design& design) const;
  Design decompile(const DesignVec& design) const;

  CostTriple costs(const DesignVec& design) const;
  bool feasible(const DesignVec& design, const BudgetConfig& budgets) const;

 private:
  struct IndexedComponent {
    std::vector<std::uint32_t> inputs;
    std::vector<std::uint32_t> successors;
    std::vector<std::uint32_t> allowed;
  };

  SystemModel model_;
  ImplementationCatalog catalog_;
  std::vector<IndexedComponent> components_;
  std::unordered_map<std::string, std::uint32_t> component_index_;
  std::unordered_map<std::string, std::uint32_t> type_index_;
};

}  // namespace rdh
