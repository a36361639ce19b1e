#include "rdh/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rdh {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ValidationError("cannot open '" + path.string() + "'");
  }
  std::ostringstream out;
  out << stream.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw ValidationError("cannot write '" + path.string() + "'");
  }
  stream << text;
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ValidationError(std::string("malformed JSON: ") + error.what());
  }
}

void check_keys(const ordered_json& object, const std::string& context,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!object.is_object()) {
    throw ValidationError(context + " must be a JSON object");
  }
  for (const auto* key : required) {
    if (!object.contains(key)) {
      throw ValidationError(context + " is missing key '" + key + "'");
    }
  }
  for (const auto& [key, value] : object.items()) {
    const auto known = [&](std::initializer_list<const char*> keys) {
      for (const auto* candidate : keys) {
        if (key == candidate) return true;
      }
      return false;
    };
    if (!known(required) && !known(optional)) {
      throw ValidationError(context + " has unknown key '" + key + "'");
    }
  }
}

std::string parse_string_value(const ordered_json& value, const std::string& context) {
  if (!value.is_string()) {
    throw ValidationError(context + " must be a string");
  }
  return value.get<std::string>();
}

Money parse_money_value(const ordered_json& value, const std::string& context) {
  if (!value.is_number_integer()) {
    throw ValidationError(context + " must be an integer amount");
  }
  return value.get<Money>();
}

double parse_number_value(const ordered_json& value, const std::string& context) {
  if (!value.is_number()) {
    throw ValidationError(context + " must be a number");
  }
  return value.get<double>();
}

std::uint32_t parse_count_value(const ordered_json& value, const std::string& context) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ValidationError(context + " must be a non-negative integer");
  }
  return value.get<std::uint32_t>();
}

std::vector<std::string> parse_string_list(const ordered_json& value,
                                         const std::string& context) {
  if (!value.is_array()) {
    throw ValidationError(context + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    out.push_back(parse_string_value(item, context + " entry"));
  }
  return out;
}

BudgetConfig parse_budgets(const ordered_json& object) {
  if (!object.is_object()) {
    throw ValidationError("budgets must be a JSON object");
  }
  BudgetConfig budgets;
  if (object.contains("B")) {
    check_keys(object, "budgets", {"B"});
    budgets = CombinedBudget{parse_money_value(object.at("B"), "budget B")};
  } else {
    check_keys(object, "budgets", {"R", "D", "H"});
    budgets = SplitBudget{parse_money_value(object.at("R"), "budget R"),
                          parse_money_value(object.at("D"), "budget D"),
                          parse_money_value(object.at("H"), "budget H")};
  }
  validate_budget(budgets);
  return budgets;
}

ordered_json render_budgets(const BudgetConfig& budgets) {
  ordered_json out;
  if (const auto* split = std::get_if<SplitBudget>(&budgets)) {
    out["R"] = split->redundancy;
    out["D"] = split->diversity;
    out["H"] = split->hardening;
  } else {
    out["B"] = std::get<CombinedBudget>(budgets).total;
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  const auto root = parse_json(text);
  check_keys(root, "instance", {"components", "catalog"}, {"budgets"});

  InstanceFile file;
  if (!root.at("components").is_array()) {
    throw ValidationError("'components' must be an array");
  }
  for (const auto& entry : root.at("components")) {
    check_keys(entry, "component", {"id", "kind", "inputs", "allowed"});
    ComponentDef component;
    component.id = parse_string_value(entry.at("id"), "component id");
    component.kind = component_kind_from_string(
        parse_string_value(entry.at("kind"), "component kind"));
    component.inputs = parse_string_list(entry.at("inputs"), "component inputs");
    component.allowed = parse_string_list(entry.at("allowed"), "component allowed");
    file.model.components.push_back(std::move(component));
  }

  if (!root.at("catalog").is_array()) {
    throw ValidationError("'catalog' must be an array");
  }
  for (const auto& entry : root.at("catalog")) {
    check_keys(entry, "catalog entry", {"id", "R", "D", "levels"});
    ImplementationDef type;
    type.id = parse_string_value(entry.at("id"), "type id");
    type.deploy_cost = parse_money_value(entry.at("R"), "deployment cost R");
    type.adoption_cost = parse_money_value(entry.at("D"), "adoption cost D");
    if (!entry.at("levels").is_array()) {
      throw ValidationError("'levels' must be an array");
    }
    for (const auto& level : entry.at("levels")) {
      check_keys(level, "level", {"S", "H"});
      type.levels.push_back({parse_number_value(level.at("S"), "secure probability S"),
                             parse_money_value(level.at("H"), "level cost H")});
    }
    file.catalog.types.push_back(std::move(type));
  }

  if (root.contains("budgets")) {
    file.budgets = parse_budgets(root.at("budgets"));
  }
  return file;
}

std::string render_instance(const SystemModel& model,
                            const ImplementationCatalog& catalog,
                            const std::optional<BudgetConfig>& budgets) {
  ordered_json root;
  root["components"] = ordered_json::array();
  for (const auto& component : model.components) {
    ordered_json entry;
    entry["id"] = component.id;
    entry["kind"] = to_string(component.kind);
    entry["inputs"] = component.inputs;
    entry["allowed"] = component.allowed;
    root["components"].push_back(std::move(entry));
  }
  root["catalog"] = ordered_json::array();
  for (const auto& type : catalog.types) {
    ordered_json entry;
    entry["id"] = type.id;
    entry["R"] = type.deploy_cost;
    entry["D"] = type.adoption_cost;
    entry["levels"] = ordered_json::array();
    for (const auto& level : type.levels) {
      entry["levels"].push_back({{"S", level.secure_prob}, {"H", level.cost}});
    }
    root["catalog"].push_back(std::move(entry));
  }
  if (budgets) {
    root["budgets"] = render_budgets(*budgets);
  }
  return root.dump(2) + "\n";
}

InstanceFile load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}

void save_instance(const std::filesystem::path& path, const SystemModel& model,
                   const ImplementationCatalog& catalog,
                   const std::optional<BudgetConfig>& budgets) {
  write_file(path, render_instance(model, catalog, budgets));
}

WaterScenario parse_scenario(const std::string& text) {
  const auto root = parse_json(text);
  check_keys(root, "scenario",
             {"nodes", "pipes", "sensors", "injections", "theta", "horizon", "dt"});

  WaterScenario scenario;
  if (!root.at("nodes").is_array()) {
    throw ValidationError("'nodes' must be an array");
  }
  for (const auto& entry : root.at("nodes")) {
    check_keys(entry, "node", {"id", "demand"});
    WaterNode node;
    node.id = parse_string_value(entry.at("id"), "node id");
    const auto& demand = entry.at("demand");
    if (!demand.is_array() || demand.size() != 24) {
      throw ValidationError("node '" + node.id + "' demand must hold 24 numbers");
    }
    for (std::size_t hour = 0; hour < 24; ++hour) {
      node.demand[hour] = parse_number_value(demand.at(hour), "demand value");
    }
    scenario.nodes.push_back(std::move(node));
  }
  if (!root.at("pipes").is_array()) {
    throw ValidationError("'pipes' must be an array");
  }
  for (const auto& entry : root.at("pipes")) {
    check_keys(entry, "pipe", {"from", "to", "travel", "fraction"});
    WaterPipe pipe;
    pipe.from = parse_string_value(entry.at("from"), "pipe source");
    pipe.to = parse_string_value(entry.at("to"), "pipe target");
    pipe.travel = parse_count_value(entry.at("travel"), "pipe travel time");
    pipe.fraction = parse_number_value(entry.at("fraction"), "pipe fraction");
    scenario.pipes.push_back(std::move(pipe));
  }
  if (!root.at("sensors").is_object()) {
    throw ValidationError("'sensors' must map components to nodes");
  }
  for (const auto& [component, node] : root.at("sensors").items()) {
    scenario.sensors[component] = parse_string_value(node, "sensor placement");
  }
  scenario.injections = parse_string_list(root.at("injections"), "injections");
  scenario.theta = parse_number_value(root.at("theta"), "theta");
  scenario.horizon = parse_count_value(root.at("horizon"), "horizon");
  scenario.dt = parse_number_value(root.at("dt"), "dt");
  return scenario;
}

std::string render_scenario(const WaterScenario& scenario) {
  ordered_json root;
  root["nodes"] = ordered_json::array();
  for (const auto& node : scenario.nodes) {
    ordered_json entry;
    entry["id"] = node.id;
    entry["demand"] = node.demand;
    root["nodes"].push_back(std::move(entry));
  }
  root["pipes"] = ordered_json::array();
  for (const auto& pipe : scenario.pipes) {
    root["pipes"].push_back({{"from", pipe.from},
                             {"to", pipe.to},
                             {"travel", pipe.travel},
                             {"fraction", pipe.fraction}});
  }
  root["sensors"] = ordered_json::object();
  for (const auto& [component, node] : scenario.sensors) {
    root["sensors"][component] = node;
  }
  root["injections"] = scenario.injections;
  root["theta"] = scenario.theta;
  root["horizon"] = scenario.horizon;
  root["dt"] = scenario.dt;
  return root.dump(2) + "\n";
}

WaterScenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path));
}

void save_scenario(const std::filesystem::path& path, const WaterScenario& scenario) {
  write_file(path, render_scenario(scenario));
}

Design parse_design(const std::string& text) {
  const auto root = parse_json(text);
  check_keys(root, "design", {"deployed", "level"});
  Design design;
  if (!root.at("deployed").is_object()) {
    throw ValidationError("'deployed' must map components to type arrays");
  }
  for (const auto& [component, types] : root.at("deployed").items()) {
    const auto list = parse_string_list(types, "deployed types");
    auto& slot = design.deployed[component];
    for (const auto& type : list) {
      if (!slot.insert(type).second) {
        throw ValidationError("component '" + component +
                              "' lists type '" + type + "' twice");
      }
    }
  }
  if (!root.at("level").is_object()) {
    throw ValidationError("'level' must map types to level indices");
  }
  for (const auto& [type, level] : root.at("level").items()) {
    design.level[type] = parse_count_value(level, "level index");
  }
  return design;
}

std::string render_design(const Design& design) {
  ordered_json root;
  root["deployed"] = ordered_json::object();
  for (const auto& [component, types] : design.deployed) {
    root["deployed"][component] = types;
  }
  root["level"] = ordered_json::object();
  for (const auto& [type, level] : design.level) {
    root["level"][type] = level;
  }
  return root.dump(2) + "\n";
}

Design load_design(const std::filesystem::path& path) {
  return parse_design(read_file(path));
}

void save_design(const std::filesystem::path& path, const Design& design) {
  write_file(path, render_design(design));
}

ImpactTableData parse_impact_table(const std::string& text) {
  const auto root = parse_json(text);
  check_keys(root, "impact table", {"table"}, {"default"});
  ImpactTableData data;
  if (root.contains("default")) {
    data.fallback = parse_number_value(root.at("default"), "default impact");
  }
  if (!root.at("table").is_object()) {
    throw ValidationError("'table' must map component lists to impacts");
  }
  for (const auto& [key, value] : root.at("table").items()) {
    std::set<std::string> components;
    std::string current;
    for (const char c : key) {
      if (c == ',') {
        if (!current.empty()) components.insert(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) components.insert(current);
    data.entries[components] = parse_number_value(value, "impact value");
  }
  return data;
}

ImpactTableData load_impact_table(const std::filesystem::path& path) {
  return parse_impact_table(read_file(path));
}

SetCoverInstance parse_setcover(const std::string& text) {
  const auto root = parse_json(text);
  check_keys(root, "set cover", {"universe", "families", "k"});
  SetCoverInstance instance;
  instance.universe = parse_string_list(root.at("universe"), "universe");
  if (!root.at("families").is_array()) {
    throw ValidationError("'families' must be an array of arrays");
  }
  for (const auto& family : root.at("families")) {
    instance.families.push_back(parse_string_list(family, "family"));
  }
  instance.k = parse_count_value(root.at("k"), "k");
  return instance;
}

SetCoverInstance load_setcover(const std::filesystem::path& path) {
  return parse_setcover(read_file(path));
}

}  // namespace rdh
