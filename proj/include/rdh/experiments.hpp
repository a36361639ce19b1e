#pragma once

#include <string>
#include <vector>

#include "rdh/optimizer.hpp"

namespace rdh {

enum class SweepMode { RedundancyOnly, DiversityOnly, HardeningOnly, Combination };

std::string to_string(SweepMode mode);
SweepMode sweep_mode_from_string(const std::string& text);

struct SweepConfig {
  std::vector<Money> budgets;  // ascending
  SweepMode mode = SweepMode::Combination;
  AnnealingParams params;
  AttackModel attack = AttackModel::Stealthy;
  std::uint64_t seed = 0;
  RiskOptions risk;
};

struct SweepRow {
  Money budget = 0;
  double risk = 0.0;
  double std_error = 0.0;
  CostTriple spend;
};

/// One annealing run per budget point. Single-approach modes place the whole
/// budget on that category and zero on the others; combination mode uses one
/// shared cap. Each point gets its own seed derived from (seed, index), so
/// points are independent of evaluation order.
std::vector<SweepRow> run_sweep(const Instance& instance,
                                const ImpactEvaluator& impact,
                                const SweepConfig& config);

/// Header: budget,risk,redundancy,diversity,hardening
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct ConvergenceRow {
  std::uint32_t iteration = 0;
  double current = 0.0;
  double best = 0.0;
};

/// Full trace of a single annealing execution (restarts forced to one).
std::vector<ConvergenceRow> run_convergence(const Instance& instance,
                                            const ImpactEvaluator& impact,
                                            const BudgetConfig& budgets,
                                            const AnnealingParams& params,
                                            AttackModel attack, std::uint64_t seed,
                                            const RiskOptions& risk = {});

/// Header: iteration,current,best
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace rdh
