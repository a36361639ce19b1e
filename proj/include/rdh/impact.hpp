#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdh/instance.hpp"

namespace rdh {

/// Loss caused by a compromised component set. Implementations are
/// deterministic; ones that can only grow with the compromised set report
/// themselves monotone so property checks know what to expect.
class ImpactEvaluator {
 public:
  virtual ~ImpactEvaluator() = default;

  virtual double evaluate(const Instance& instance,
                          const std::vector<std::uint8_t>& compromised) const = 0;
  virtual bool is_monotone() const { return true; }
};

/// Impact = number of compromised components.
class CountImpact final : public ImpactEvaluator {
 public:
  double evaluate(const Instance&,
                  const std::vector<std::uint8_t>& compromised) const override;
};

/// String-level form of CountImpact.
double impact_count(const CompromisedSet& compromised);

struct ImpactTableData {
  std::map<std::set<std::string>, double> entries;
  std::optional<double> fallback;
};

/// Exact-match lookup of precomputed impacts, e.g. from an external
/// simulator, with an optional default for unlisted sets.
class TableImpact final : public ImpactEvaluator {
 public:
  TableImpact(const Instance& instance, ImpactTableData data);

  double evaluate(const Instance& instance,
                  const std::vector<std::uint8_t>& compromised) const override;
  bool is_monotone() const override { return false; }

 private:
  std::unordered_map<std::string, double> by_key_;
  std::optional<double> fallback_;
};

/// Throws ValidationError when the set is unlisted and no default exists.
double impact_table(const CompromisedSet& compromised, const ImpactTableData& table);

}  // namespace rdh
