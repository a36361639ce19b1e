#include "rdh/impact.hpp"

#include <utility>

namespace rdh {

namespace {

// Compromised flag vectors double as cache/lookup keys.
std::string flags_key(const std::vector<std::uint8_t>& flags) {
  return std::string(reinterpret_cast<const char*>(flags.data()), flags.size());
}

}  // namespace

double CountImpact::evaluate(const Instance&,
                             const std::vector<std::uint8_t>& compromised) const {
  double count = 0.0;
  for (const auto flag : compromised) {
    if (flag) count += 1.0;
  }
  return count;
}

double impact_count(const CompromisedSet& compromised) {
  return static_cast<double>(compromised.size());
}

TableImpact::TableImpact(const Instance& instance, ImpactTableData data)
    : fallback_(data.fallback) {
  for (const auto& [components, value] : data.entries) {
    std::vector<std::uint8_t> flags(instance.component_count(), 0);
    for (const auto& id : components) {
      flags[instance.component_index(id)] = 1;
    }
    by_key_[flags_key(flags)] = value;
  }
}

double TableImpact::evaluate(const Instance&,
                             const std::vector<std::uint8_t>& compromised) const {
  const auto it = by_key_.find(flags_key(compromised));
  if (it != by_key_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw ValidationError("impact table has no entry for the queried set and no default");
}

double impact_table(const CompromisedSet& compromised, const ImpactTableData& table) {
  const auto it = table.entries.find(compromised);
  if (it != table.entries.end()) return it->second;
  if (table.fallback) return *table.fallback;
  throw ValidationError("impact table has no entry for the queried set and no default");
}

}  // namespace rdh
