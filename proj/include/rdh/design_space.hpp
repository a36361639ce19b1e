#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rdh/instance.hpp"
#include "rdh/rng.hpp"

namespace rdh {

/// Priority orderings that stand in for a design during search: `ro` ranks
/// every valid (component, type) pair, `lo` ranks level raises with one slot
/// per raisable step of every type. The greedy mapping below turns any plan
/// into a feasible design, which gives the annealer a space where every
/// neighbor is legal.
struct DesignPlan {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ro;  // (component, type)
  std::vector<std::uint32_t> lo;                            // type per raise
};

/// Uniformly random orderings; deterministic for a given stream state.
DesignPlan random_plan(const Instance& instance, SplitMix64& rng);

/// Throws ValidationError unless the plan covers exactly the valid pairs and
/// exactly |levels|-1 slots per type.
void validate_plan(const Instance& instance, const DesignPlan& plan);

/// Greedy translation: start from the empty design at cheapest levels, add
/// deployments in `ro` order when the budget allows, then raise levels in
/// `lo` order, skipping raises that would bust the budget or run past a
/// type's top level. The result is always feasible.
DesignVec map_to_design(const Instance& instance, const DesignPlan& plan,
                        const BudgetConfig& budgets);

/// Swaps two random positions of `ro` and two of `lo` (lists shorter than
/// two entries are left alone). The input plan is not modified.
DesignPlan perturb(const DesignPlan& plan, SplitMix64& rng);

}  // namespace rdh
