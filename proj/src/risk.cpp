#include "rdh/risk.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace rdh {

namespace {

std::string flags_key(const std::vector<std::uint8_t>& flags) {
  return std::string(reinterpret_cast<const char*>(flags.data()), flags.size());
}

// Many vulnerable sets collapse to the same compromised set, so impact
// evaluations are memoized per compromised set within one estimate.
class MemoizedImpact {
 public:
  MemoizedImpact(const Instance& instance, const ImpactEvaluator& impact)
      : instance_(instance), impact_(impact) {}

  double operator()(const std::vector<std::uint8_t>& compromised) {
    const auto key = flags_key(compromised);
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double value = impact_.evaluate(instance_, compromised);
    cache_.emplace(key, value);
    return value;
  }

 private:
  const Instance& instance_;
  const ImpactEvaluator& impact_;
  std::unordered_map<std::string, double> cache_;
};

}  // namespace

RiskEstimate risk_exact(const Instance& instance, const DesignVec& design,
                        AttackModel attack, const ImpactEvaluator& impact,
                        const RiskLimits& limits) {
  const auto deployed = deployed_types(design, instance.type_count());
  if (deployed.size() > limits.max_enumerated_types) {
    throw CapacityError("design deploys " + std::to_string(deployed.size()) +
                        " types, above the exact enumeration limit of " +
                        std::to_string(limits.max_enumerated_types) +
                        "; use the Monte Carlo engine");
  }

  MemoizedImpact memo(instance, impact);
  std::vector<std::uint8_t> vulnerable(instance.type_count(), 0);
  double total = 0.0;
  const std::uint64_t outcomes = std::uint64_t{1} << deployed.size();
  for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
    double probability = 1.0;
    for (std::size_t bit = 0; bit < deployed.size(); ++bit) {
      const auto type = deployed[bit];
      const double secure = instance.secure_prob(type, design.level[type]);
      const bool hit = (mask >> bit) & 1;
      vulnerable[type] = hit ? 1 : 0;
      probability *= hit ? 1.0 - secure : secure;
    }
    if (probability == 0.0) continue;
    const auto compromised = propagate_flags(instance, design, vulnerable, attack);
    total += probability * memo(compromised);
  }
  return RiskEstimate{total, 0.0, 0, RiskMethod::Exact};
}

RiskEstimate risk_monte_carlo(const Instance& instance, const DesignVec& design,
                              AttackModel attack, const ImpactEvaluator& impact,
                              std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw ValidationError("Monte Carlo estimation needs at least one sample");
  }
  MemoizedImpact memo(instance, impact);
  double sum = 0.0;
  double sum_squares = 0.0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    SplitMix64 rng(derive_seed(seed, k));
    const auto vulnerable = sample_vulnerable_flags(instance, design, rng);
    const auto compromised = propagate_flags(instance, design, vulnerable, attack);
    const double value = memo(compromised);
    sum += value;
    sum_squares += value * value;
  }
  const auto n = static_cast<double>(samples);
  const double mean = sum / n;
  double std_error = 0.0;
  if (samples > 1) {
    const double variance = std::max(0.0, (sum_squares - n * mean * mean) / (n - 1.0));
    std_error = std::sqrt(variance / n);
  }
  return RiskEstimate{mean, std_error, samples, RiskMethod::MonteCarlo};
}

RiskEstimate risk_exact(const Instance& instance, const Design& design,
                        AttackModel attack, const ImpactEvaluator& impact,
                        const RiskLimits& limits) {
  return risk_exact(instance, instance.compile(design), attack, impact, limits);
}

RiskEstimate risk_monte_carlo(const Instance& instance, const Design& design,
                              AttackModel attack, const ImpactEvaluator& impact,
                              std::uint64_t samples, std::uint64_t seed) {
  return risk_monte_carlo(instance, instance.compile(design), attack, impact,
                          samples, seed);
}

}  // namespace rdh
