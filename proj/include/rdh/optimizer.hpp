#pragma once

#include <cstdint>
#include <vector>

#include "rdh/design_space.hpp"
#include "rdh/risk.hpp"

namespace rdh {

struct RiskOptions {
  enum class Engine { Auto, Exact, MonteCarlo };

  Engine engine = Engine::Auto;       // Auto: exact while it fits, else MC
  std::uint64_t mc_samples = 10000;
  RiskLimits limits;
};

struct AnnealingParams {
  std::uint32_t iterations = 2000;
  double initial_temperature = 0.0;  // <= 0: a tenth of the empty-design risk
  double cooling = 0.0;              // <= 0: ln(100) / iterations
  std::uint32_t restarts = 3;
  // Acceptance rule with the exponent sign flipped, which takes every
  // worsening move; kept selectable for auditing only.
  bool inverted_acceptance = false;
};

struct IterationRecord {
  double current = 0.0;
  double best = 0.0;
};

struct OptimizationResult {
  Design best_design;
  CostTriple best_costs;
  double best_risk = 0.0;
  double initial_risk = 0.0;  // first restart's starting point
  std::vector<IterationRecord> trace;  // iterations 1..k per restart, concatenated
  double iterations_per_second = 0.0;
};

/// Metropolis acceptance for a proposed move at temperature `t`; strict
/// improvements always pass. Exposed for direct testing.
double acceptance_probability(double current_risk, double proposed_risk, double t,
                              bool inverted_acceptance = false);

/// Simulated annealing over design plans. Each restart draws a fresh random
/// plan from a stream derived from (seed, restart), walks `iterations`
/// perturbations under the exponential cooling schedule, and the best design
/// ever evaluated across all restarts wins. Deterministic per seed.
OptimizationResult simulated_annealing(const Instance& instance,
                                       const BudgetConfig& budgets,
                                       AttackModel attack,
                                       const ImpactEvaluator& impact,
                                       const AnnealingParams& params,
                                       std::uint64_t seed,
                                       const RiskOptions& risk = {});

/// Used as the automatic initial temperature.
double default_initial_temperature(const Instance& instance, AttackModel attack,
                                   const ImpactEvaluator& impact,
                                   const RiskOptions& risk = {});

struct BruteForceOptions {
  double max_designs = 1e6;
  RiskLimits limits;
};

struct BruteForceResult {
  Design design;
  double risk = 0.0;
};

/// Exhaustive minimizer over all valid (deployment, level) combinations.
/// Ties go to the design met first in enumeration order, i.e. the
/// lexicographically smallest encoding (per-component deployment masks in
/// component order, then level indices in type order). Throws CapacityError
/// when the space exceeds max_designs.
BruteForceResult brute_force_design(const Instance& instance,
                                    const BudgetConfig& budgets, AttackModel attack,
                                    const ImpactEvaluator& impact,
                                    const BruteForceOptions& options = {});

struct SetCoverInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> families;
  std::uint32_t k = 0;
};

struct OdpInstance {
  SystemModel model;
  ImplementationCatalog catalog;
  BudgetConfig budgets;
  double target_risk = 0.0;
};

/// Embeds a set-cover instance into an optimal-design instance: one sensor
/// per element, one free implementation type per family with an insecure
/// and a unit-cost secure level, and budget k. Under stealthy attacks with
/// counting impact, risk 0 is reachable exactly when a cover of size <= k
/// exists. Throws ValidationError when some element is not covered.
OdpInstance setcover_to_odp(const SetCoverInstance& setcover);

}  // namespace rdh
