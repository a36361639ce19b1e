#include "rdh/design_space.hpp"

#include <algorithm>

namespace rdh {

DesignPlan random_plan(const Instance& instance, SplitMix64& rng) {
  DesignPlan plan;
  for (std::uint32_t c = 0; c < instance.component_count(); ++c) {
    for (const auto t : instance.allowed(c)) {
      plan.ro.emplace_back(c, t);
    }
  }
  for (std::uint32_t t = 0; t < instance.type_count(); ++t) {
    for (std::size_t raise = 1; raise < instance.levels(t).size(); ++raise) {
      plan.lo.push_back(t);
    }
  }
  shuffle(plan.ro, rng);
  shuffle(plan.lo, rng);
  return plan;
}

void validate_plan(const Instance& instance, const DesignPlan& plan) {
  std::vector<std::vector<std::uint8_t>> pair_seen(instance.component_count());
  std::size_t expected_pairs = 0;
  for (std::uint32_t c = 0; c < instance.component_count(); ++c) {
    pair_seen[c].assign(instance.type_count(), 0);
    expected_pairs += instance.allowed(c).size();
  }
  if (plan.ro.size() != expected_pairs) {
    throw ValidationError("plan lists " + std::to_string(plan.ro.size()) +
                          " pairs, expected " + std::to_string(expected_pairs));
  }
  for (const auto& [c, t] : plan.ro) {
    if (c >= instance.component_count() || t >= instance.type_count()) {
      throw ValidationError("plan pair indices out of range");
    }
    if (!std::binary_search(instance.allowed(c).begin(), instance.allowed(c).end(), t)) {
      throw ValidationError("plan pairs type '" + instance.type_id(t) +
                            "' with component '" + instance.component_id(c) +
                            "' outside its allowed set");
    }
    if (pair_seen[c][t]++) {
      throw ValidationError("plan repeats the pair (" + instance.component_id(c) +
                            ", " + instance.type_id(t) + ")");
    }
  }
  std::vector<std::size_t> raises(instance.type_count(), 0);
  for (const auto t : plan.lo) {
    if (t >= instance.type_count()) {
      throw ValidationError("plan level entry out of range");
    }
    ++raises[t];
  }
  for (std::uint32_t t = 0; t < instance.type_count(); ++t) {
    if (raises[t] != instance.levels(t).size() - 1) {
      throw ValidationError("plan lists " + std::to_string(raises[t]) +
                            " raises for type '" + instance.type_id(t) +
                            "', expected " +
                            std::to_string(instance.levels(t).size() - 1));
    }
  }
}

namespace {

bool fits(const BudgetConfig& budgets, const CostTriple& spent, Money extra_r,
          Money extra_d, Money extra_h) {
  if (const auto* split = std::get_if<SplitBudget>(&budgets)) {
    return spent.redundancy + extra_r <= split->redundancy &&
           spent.diversity + extra_d <= split->diversity &&
           spent.hardening + extra_h <= split->hardening;
  }
  return spent.total() + extra_r + extra_d + extra_h <=
         std::get<CombinedBudget>(budgets).total;
}

}  // namespace

DesignVec map_to_design(const Instance& instance, const DesignPlan& plan,
                        const BudgetConfig& budgets) {
  DesignVec design = instance.empty_design();
  CostTriple spent;
  std::vector<std::uint8_t> adopted(instance.type_count(), 0);

  for (const auto& [component, type] : plan.ro) {
    const Money extra_r = instance.deploy_cost(type);
    const Money extra_d = adopted[type] ? 0 : instance.adoption_cost(type);
    if (!fits(budgets, spent, extra_r, extra_d, 0)) continue;
    auto& slot = design.deployed[component];
    slot.insert(std::upper_bound(slot.begin(), slot.end(), type), type);
    spent.redundancy += extra_r;
    spent.diversity += extra_d;
    adopted[type] = 1;
  }

  for (const auto type : plan.lo) {
    const auto& levels = instance.levels(type);
    const auto current = design.level[type];
    if (current + 1 >= levels.size()) continue;  // already at the top
    const Money extra_h = levels[current + 1].cost - levels[current].cost;
    if (!fits(budgets, spent, 0, 0, extra_h)) continue;
    design.level[type] = current + 1;
    spent.hardening += extra_h;
  }
  return design;
}

DesignPlan perturb(const DesignPlan& plan, SplitMix64& rng) {
  DesignPlan next = plan;
  if (next.ro.size() >= 2) {
    const auto i = rng.next_below(next.ro.size());
    auto j = rng.next_below(next.ro.size() - 1);
    if (j >= i) ++j;
    std::swap(next.ro[i], next.ro[j]);
  }
  if (next.lo.size() >= 2) {
    const auto i = rng.next_below(next.lo.size());
    auto j = rng.next_below(next.lo.size() - 1);
    if (j >= i) ++j;
    std::swap(next.lo[i], next.lo[j]);
  }
  return next;
}

}  // namespace rdh
