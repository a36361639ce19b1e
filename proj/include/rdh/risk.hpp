#pragma once

#include <cstdint>

#include "rdh/impact.hpp"
#include "rdh/propagation.hpp"

namespace rdh {

enum class RiskMethod { Exact, MonteCarlo };

struct RiskEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // always 0 for exact evaluation
  std::uint64_t samples = 0;
  RiskMethod method = RiskMethod::Exact;
};

struct RiskLimits {
  std::size_t max_enumerated_types = 20;
};

/// Expected impact by full enumeration of vulnerable-type subsets. Only
/// deployed types are enumerated; undeployed ones cannot change the outcome.
/// Throws CapacityError when the deployed-type count exceeds the limit.
RiskEstimate risk_exact(const Instance& instance, const DesignVec& design,
                        AttackModel attack, const ImpactEvaluator& impact,
                        const RiskLimits& limits = {});

/// Monte Carlo estimate over `samples` independent draws. Each draw uses its
/// own stream derived from (seed, sample index), so the estimate is
/// reproducible and independent of evaluation order.
RiskEstimate risk_monte_carlo(const Instance& instance, const DesignVec& design,
                              AttackModel attack, const ImpactEvaluator& impact,
                              std::uint64_t samples, std::uint64_t seed);

RiskEstimate risk_exact(const Instance& instance, const Design& design,
                        AttackModel attack, const ImpactEvaluator& impact,
                        const RiskLimits& limits = {});

RiskEstimate risk_monte_carlo(const Instance& instance, const Design& design,
                              AttackModel attack, const ImpactEvaluator& impact,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace rdh
