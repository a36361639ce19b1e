#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "rdh/impact.hpp"
#include "rdh/model.hpp"
#include "rdh/optimizer.hpp"
#include "rdh/water.hpp"

namespace rdh {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

struct InstanceFile {
  SystemModel model;
  ImplementationCatalog catalog;
  std::optional<BudgetConfig> budgets;
};

// Parsers check JSON shape strictly: wrong types, missing keys, and unknown
// keys all raise ValidationError. Domain invariants stay with
// validate_model / validate_scenario, which report violations as data.

InstanceFile parse_instance(const std::string& text);
std::string render_instance(const SystemModel& model,
                            const ImplementationCatalog& catalog,
                            const std::optional<BudgetConfig>& budgets = {});
InstanceFile load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const SystemModel& model,
                   const ImplementationCatalog& catalog,
                   const std::optional<BudgetConfig>& budgets = {});

WaterScenario parse_scenario(const std::string& text);
std::string render_scenario(const WaterScenario& scenario);
WaterScenario load_scenario(const std::filesystem::path& path);
void save_scenario(const std::filesystem::path& path, const WaterScenario& scenario);

Design parse_design(const std::string& text);
std::string render_design(const Design& design);
Design load_design(const std::filesystem::path& path);
void save_design(const std::filesystem::path& path, const Design& design);

/// Table keys are the compromised component ids, sorted and joined with
/// commas; the empty string keys the empty set.
ImpactTableData parse_impact_table(const std::string& text);
ImpactTableData load_impact_table(const std::filesystem::path& path);

SetCoverInstance parse_setcover(const std::string& text);
SetCoverInstance load_setcover(const std::filesystem::path& path);

}  // namespace rdh
