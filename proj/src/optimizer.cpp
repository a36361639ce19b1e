#include "rdh/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

namespace rdh {

double acceptance_probability(double current_risk, double proposed_risk, double t,
                              bool inverted_acceptance) {
  if (proposed_risk < current_risk) return 1.0;
  const double delta = proposed_risk - current_risk;
  const double exponent = inverted_acceptance ? delta / t : -delta / t;
  return std::min(1.0, std::exp(exponent));
}

double default_initial_temperature(const Instance& instance, AttackModel attack,
                                   const ImpactEvaluator& impact,
                                   const RiskOptions& risk) {
  const auto empty = instance.empty_design();
  double baseline = 0.0;
  if (risk.engine == RiskOptions::Engine::MonteCarlo) {
    baseline = risk_monte_carlo(instance, empty, attack, impact, risk.mc_samples, 0).mean;
  } else {
    baseline = risk_exact(instance, empty, attack, impact, risk.limits).mean;
  }
  const double t0 = 0.1 * baseline;
  return t0 > 0.0 ? t0 : 1.0;
}

namespace {

class RiskEvaluator {
 public:
  RiskEvaluator(const Instance& instance, AttackModel attack,
                const ImpactEvaluator& impact, const RiskOptions& options,
                std::uint64_t seed)
      : instance_(instance), attack_(attack), impact_(impact), options_(options),
        seed_(seed) {}

  double operator()(const DesignVec& design) {
    switch (options_.engine) {
      case RiskOptions::Engine::Exact:
        return risk_exact(instance_, design, attack_, impact_, options_.limits).mean;
      case RiskOptions::Engine::MonteCarlo:
        return monte_carlo(design);
      case RiskOptions::Engine::Auto:
        break;
    }
    const auto deployed = deployed_types(design, instance_.type_count());
    if (deployed.size() <= options_.limits.max_enumerated_types) {
      return risk_exact(instance_, design, attack_, impact_, options_.limits).mean;
    }
    return monte_carlo(design);
  }

 private:
  double monte_carlo(const DesignVec& design) {
    // One stream per evaluation keeps the whole run reproducible.
    const auto stream = derive_seed(seed_, evaluations_++);
    return risk_monte_carlo(instance_, design, attack_, impact_,
                            options_.mc_samples, stream)
        .mean;
  }

  const Instance& instance_;
  AttackModel attack_;
  const ImpactEvaluator& impact_;
  RiskOptions options_;
  std::uint64_t seed_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

OptimizationResult simulated_annealing(const Instance& instance,
                                       const BudgetConfig& budgets,
                                       AttackModel attack,
                                       const ImpactEvaluator& impact,
                                       const AnnealingParams& params,
                                       std::uint64_t seed,
                                       const RiskOptions& risk) {
  validate_budget(budgets);
  if (params.iterations < 1) {
    throw ValidationError("annealing needs at least one iteration");
  }
  if (params.restarts < 1) {
    throw ValidationError("annealing needs at least one restart");
  }
  const double t0 = params.initial_temperature > 0.0
                        ? params.initial_temperature
                        : default_initial_temperature(instance, attack, impact, risk);
  const double beta = params.cooling > 0.0
                          ? params.cooling
                          : std::log(100.0) / static_cast<double>(params.iterations);

  RiskEvaluator evaluate(instance, attack, impact, risk,
                         derive_seed(seed, 0x9e3779b9));

  OptimizationResult result;
  result.trace.reserve(static_cast<std::size_t>(params.iterations) * params.restarts);
  bool have_best = false;
  DesignVec best_design;

  const auto started = std::chrono::steady_clock::now();
  for (std::uint32_t restart = 0; restart < params.restarts; ++restart) {
    SplitMix64 rng(derive_seed(seed, restart));
    DesignPlan plan = random_plan(instance, rng);
    DesignVec design = map_to_design(instance, plan, budgets);
    double current = evaluate(design);
    if (restart == 0) result.initial_risk = current;
    if (!have_best || current < result.best_risk) {
      have_best = true;
      result.best_risk = current;
      best_design = design;
    }

    for (std::uint32_t k = 1; k <= params.iterations; ++k) {
      DesignPlan proposed_plan = perturb(plan, rng);
      DesignVec proposed = map_to_design(instance, proposed_plan, budgets);
      const double proposed_risk = evaluate(proposed);
      if (proposed_risk < result.best_risk) {
        result.best_risk = proposed_risk;
        best_design = proposed;
      }
      const double temperature = t0 * std::exp(-beta * static_cast<double>(k));
      bool accept = proposed_risk < current;
      if (!accept) {
        const double pr = acceptance_probability(current, proposed_risk, temperature,
                                                 params.inverted_acceptance);
        accept = rng.next_double() <= pr;
      }
      if (accept) {
        plan = std::move(proposed_plan);
        design = std::move(proposed);
        current = proposed_risk;
      }
      result.trace.push_back({current, result.best_risk});
    }
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  const auto total_iterations =
      static_cast<double>(params.iterations) * params.restarts;
  result.iterations_per_second = elapsed > 0.0 ? total_iterations / elapsed : 0.0;
  result.best_design = instance.decompile(best_design);
  result.best_costs = instance.costs(best_design);
  return result;
}

BruteForceResult brute_force_design(const Instance& instance,
                                    const BudgetConfig& budgets, AttackModel attack,
                                    const ImpactEvaluator& impact,
                                    const BruteForceOptions& options) {
  validate_budget(budgets);
  double space = 1.0;
  for (std::uint32_t c = 0; c < instance.component_count(); ++c) {
    space *= std::pow(2.0, static_cast<double>(instance.allowed(c).size()));
  }
  for (std::uint32_t t = 0; t < instance.type_count(); ++t) {
    space *= static_cast<double>(instance.levels(t).size());
  }
  if (space > options.max_designs) {
    throw CapacityError("design space holds about " + std::to_string(space) +
                        " designs, above the exhaustive limit of " +
                        std::to_string(options.max_designs));
  }

  const auto components = instance.component_count();
  const auto types = instance.type_count();
  std::vector<std::uint64_t> masks(components, 0);
  DesignVec design = instance.empty_design();

  bool have_best = false;
  double best_risk = 0.0;
  DesignVec best_design;

  auto rebuild_component = [&](std::size_t c) {
    design.deployed[c].clear();
    const auto allowed = instance.allowed(c);
    for (std::size_t bit = 0; bit < allowed.size(); ++bit) {
      if ((masks[c] >> bit) & 1) design.deployed[c].push_back(allowed[bit]);
    }
  };

  // Odometer over (deployment masks, level indices); the last position
  // spins fastest, so designs appear in lexicographic encoding order and
  // keeping the first strict minimum breaks ties deterministically.
  bool done = false;
  while (!done) {
    if (instance.feasible(design, budgets)) {
      const double risk =
          risk_exact(instance, design, attack, impact, options.limits).mean;
      if (!have_best || risk < best_risk) {
        have_best = true;
        best_risk = risk;
        best_design = design;
        if (risk == 0.0) break;  // nothing can beat zero, ties keep the first
      }
    }

    // Advance: levels first (they sit last in the encoding).
    std::size_t position = types;
    while (position > 0) {
      const auto t = position - 1;
      if (design.level[t] + 1 < instance.levels(t).size()) {
        ++design.level[t];
        break;
      }
      design.level[t] = 0;
      --position;
    }
    if (position > 0) continue;

    std::size_t component = components;
    while (component > 0) {
      const auto c = component - 1;
      const std::uint64_t limit = std::uint64_t{1} << instance.allowed(c).size();
      if (masks[c] + 1 < limit) {
        ++masks[c];
        rebuild_component(c);
        break;
      }
      masks[c] = 0;
      rebuild_component(c);
      --component;
    }
    done = component == 0;
  }

  if (!have_best) {
    // Cannot happen: the empty design costs nothing and budgets are >= 0.
    throw ValidationError("no feasible design found");
  }
  return BruteForceResult{instance.decompile(best_design), best_risk};
}

OdpInstance setcover_to_odp(const SetCoverInstance& setcover) {
  std::unordered_set<std::string> universe(setcover.universe.begin(),
                                           setcover.universe.end());
  if (universe.size() != setcover.universe.size()) {
    throw ValidationError("duplicate universe elements");
  }

  OdpInstance odp;
  for (std::size_t f = 0; f < setcover.families.size(); ++f) {
    ImplementationDef type;
    type.id = "f" + std::to_string(f + 1);
    type.deploy_cost = 0;
    type.adoption_cost = 0;
    type.levels = {{0.0, 0}, {1.0, 1}};
    odp.catalog.types.push_back(std::move(type));
  }
  for (const auto& element : setcover.universe) {
    ComponentDef component;
    component.id = element;
    component.kind = ComponentKind::Sensor;
    for (std::size_t f = 0; f < setcover.families.size(); ++f) {
      const auto& family = setcover.families[f];
      if (std::find(family.begin(), family.end(), element) != family.end()) {
        component.allowed.push_back("f" + std::to_string(f + 1));
      }
    }
    if (component.allowed.empty()) {
      throw ValidationError("universe element '" + element +
                            "' is not covered by any family");
    }
    odp.model.components.push_back(std::move(component));
  }
  odp.budgets = CombinedBudget{static_cast<Money>(setcover.k)};
  odp.target_risk = 0.0;
  return odp;
}

}  // namespace rdh
