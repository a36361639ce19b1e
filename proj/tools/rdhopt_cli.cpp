// Command-line front end: validation, risk evaluation, design optimization,
// experiment sweeps, and instance generation over the JSON formats described
// in the README.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rdh/experiments.hpp"
#include "rdh/generator.hpp"
#include "rdh/json_io.hpp"

namespace {

using rdh::Money;

struct BudgetFlags {
  Money combined = -1;
  std::string split;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--budget", combined, "Combined budget B");
    auto* s = cmd->add_option("--budgets", split,
                              "Split budgets as R,D,H (e.g. --budgets 10,100,100)");
    b->excludes(s);
    s->excludes(b);
  }

  std::optional<rdh::BudgetConfig> resolve() const {
    if (combined >= 0) return rdh::CombinedBudget{combined};
    if (!split.empty()) {
      std::istringstream stream(split);
      rdh::SplitBudget budget;
      char c1 = 0, c2 = 0;
      if (!(stream >> budget.redundancy >> c1 >> budget.diversity >> c2 >>
            budget.hardening) ||
          c1 != ',' || c2 != ',' || !stream.eof()) {
        throw rdh::ValidationError("--budgets expects three integers R,D,H");
      }
      rdh::validate_budget(rdh::BudgetConfig{budget});
      return budget;
    }
    return std::nullopt;
  }
};

struct AnnealFlags {
  rdh::AnnealingParams params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--iterations", params.iterations, "Annealing iterations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--t0", params.initial_temperature,
                    "Initial temperature (default: 10% of the empty-design risk)");
    cmd->add_option("--beta", params.cooling,
                    "Cooling rate (default: ln(100)/iterations)");
    cmd->add_option("--restarts", params.restarts, "Independent restarts")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--inverted-acceptance", params.inverted_acceptance,
                  "Use the inverted acceptance exponent (for auditing)");
  }
};

struct ImpactFlags {
  std::string kind = "count";
  std::string scenario_path;
  std::string table_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--impact", kind, "Impact evaluator: count, table, or water")
        ->check(CLI::IsMember({"count", "table", "water"}));
    cmd->add_option("--scenario", scenario_path, "Water scenario JSON (impact water)");
    cmd->add_option("--table", table_path, "Impact table JSON (impact table)");
  }

  std::unique_ptr<rdh::ImpactEvaluator> build(const rdh::Instance& instance) const {
    if (kind == "count") return std::make_unique<rdh::CountImpact>();
    if (kind == "table") {
      if (table_path.empty()) {
        throw rdh::ValidationError("--impact table requires --table FILE");
      }
      return std::make_unique<rdh::TableImpact>(instance,
                                                rdh::load_impact_table(table_path));
    }
    if (scenario_path.empty()) {
      throw rdh::ValidationError("--impact water requires --scenario FILE");
    }
    return std::make_unique<rdh::WaterImpact>(instance,
                                              rdh::load_scenario(scenario_path));
  }
};

rdh::AttackModel attack_flag_value(const std::string& text) {
  return rdh::attack_model_from_string(text);
}

rdh::Instance make_instance(const rdh::InstanceFile& file) {
  return rdh::Instance(file.model, file.catalog);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream stream(out_path, std::ios::binary);
  if (!stream) {
    throw rdh::ValidationError("cannot write '" + out_path + "'");
  }
  stream << text;
}

std::vector<Money> parse_budget_list(const std::string& text) {
  std::vector<Money> out;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw rdh::ValidationError("bad budget value '" + item + "'");
    }
  }
  if (out.empty()) {
    throw rdh::ValidationError("--budget-list expects comma-separated integers");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-constrained redundancy/diversity/hardening design"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "Check instance (and scenario) files");
  std::string v_instance, v_scenario;
  validate->add_option("instance", v_instance, "Instance JSON")->required();
  validate->add_option("--scenario", v_scenario, "Water scenario JSON");
  validate->callback([&] {
    const auto file = rdh::load_instance(v_instance);
    auto report = rdh::validate_model(file.model, file.catalog);
    if (!v_scenario.empty()) {
      const auto scenario = rdh::load_scenario(v_scenario);
      const auto more = rdh::validate_scenario(scenario, file.model);
      report.insert(report.end(), more.begin(), more.end());
    }
    if (!report.empty()) {
      throw rdh::ValidationError(rdh::describe(report));
    }
  });

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Risk of a given design");
  std::string e_instance, e_design, e_attack = "stealthy";
  ImpactFlags e_impact;
  std::uint64_t e_samples = 0, e_seed = 0;
  std::size_t e_enum_limit = 20;
  evaluate->add_option("instance", e_instance, "Instance JSON")->required();
  evaluate->add_option("--design", e_design,
                       "Design JSON (default: the empty design)");
  evaluate->add_option("--attack", e_attack, "Attack model")
      ->check(CLI::IsMember({"stealthy", "nonstealthy"}));
  e_impact.attach(evaluate);
  evaluate->add_option("--samples", e_samples,
                       "Monte Carlo sample count (0 = exact enumeration)");
  evaluate->add_option("--seed", e_seed, "Random seed");
  evaluate->add_option("--enum-limit", e_enum_limit,
                       "Deployed-type cap for exact enumeration");
  evaluate->callback([&] {
    const auto file = rdh::load_instance(e_instance);
    const auto instance = make_instance(file);
    const auto impact = e_impact.build(instance);
    const auto design = e_design.empty() ? rdh::Design::empty(file.catalog)
                                         : rdh::load_design(e_design);
    const auto attack = attack_flag_value(e_attack);
    rdh::RiskEstimate estimate;
    if (e_samples > 0) {
      estimate = rdh::risk_monte_carlo(instance, design, attack, *impact,
                                       e_samples, e_seed);
    } else {
      estimate = rdh::risk_exact(instance, design, attack, *impact,
                                 rdh::RiskLimits{e_enum_limit});
    }
    std::cout << rdh::format_double(estimate.mean) << "\n";
  });

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Search for a low-risk design");
  std::string o_instance, o_attack = "stealthy", o_save;
  BudgetFlags o_budget;
  AnnealFlags o_anneal;
  ImpactFlags o_impact;
  std::uint64_t o_samples = 0, o_seed = 0;
  bool o_exhaustive = false;
  optimize->add_option("instance", o_instance, "Instance JSON")->required();
  o_budget.attach(optimize);
  optimize->add_option("--attack", o_attack, "Attack model")
      ->check(CLI::IsMember({"stealthy", "nonstealthy"}));
  o_impact.attach(optimize);
  o_anneal.attach(optimize);
  optimize->add_option("--samples", o_samples,
                       "Monte Carlo samples per risk evaluation (0 = exact)");
  optimize->add_option("--seed", o_seed, "Random seed");
  optimize->add_flag("--exhaustive", o_exhaustive,
                     "Enumerate every design instead of annealing");
  optimize->add_option("--save-design", o_save, "Write the best design JSON here");
  optimize->callback([&] {
    const auto file = rdh::load_instance(o_instance);
    const auto instance = make_instance(file);
    const auto impact = o_impact.build(instance);
    const auto attack = attack_flag_value(o_attack);
    auto budgets = o_budget.resolve();
    if (!budgets) budgets = file.budgets;
    if (!budgets) {
      throw rdh::ValidationError(
          "no budgets: pass --budget/--budgets or store them in the instance");
    }
    rdh::RiskOptions risk;
    if (o_samples > 0) {
      risk.engine = rdh::RiskOptions::Engine::MonteCarlo;
      risk.mc_samples = o_samples;
    }
    double best_risk = 0.0;
    rdh::Design best_design;
    if (o_exhaustive) {
      auto result = rdh::brute_force_design(instance, *budgets, attack, *impact);
      best_risk = result.risk;
      best_design = std::move(result.design);
    } else {
      auto result = rdh::simulated_annealing(instance, *budgets, attack, *impact,
                                             o_anneal.params, o_seed, risk);
      best_risk = result.best_risk;
      best_design = std::move(result.best_design);
      std::cerr << "throughput: " << result.iterations_per_second
                << " iterations/s\n";
    }
    if (!o_save.empty()) {
      rdh::save_design(o_save, best_design);
    }
    std::cout << rdh::format_double(best_risk) << "\n";
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Risk across a budget sweep (CSV)");
  std::string s_instance, s_attack = "stealthy", s_mode = "combination";
  std::string s_budget_list, s_out;
  AnnealFlags s_anneal;
  ImpactFlags s_impact;
  std::uint64_t s_samples = 0, s_seed = 0;
  sweep->add_option("instance", s_instance, "Instance JSON")->required();
  sweep->add_option("--mode", s_mode,
                    "redundancy, diversity, hardening, or combination")
      ->check(CLI::IsMember({"redundancy", "diversity", "hardening", "combination"}));
  sweep->add_option("--budget-list", s_budget_list,
                    "Comma-separated budgets, ascending")
      ->required();
  sweep->add_option("--attack", s_attack, "Attack model")
      ->check(CLI::IsMember({"stealthy", "nonstealthy"}));
  s_impact.attach(sweep);
  s_anneal.attach(sweep);
  sweep->add_option("--samples", s_samples,
                    "Monte Carlo samples per risk evaluation (0 = exact)");
  sweep->add_option("--seed", s_seed, "Random seed");
  sweep->add_option("--out", s_out, "Output CSV path (default stdout)");
  sweep->callback([&] {
    const auto file = rdh::load_instance(s_instance);
    const auto instance = make_instance(file);
    const auto impact = s_impact.build(instance);
    rdh::SweepConfig config;
    config.budgets = parse_budget_list(s_budget_list);
    config.mode = rdh::sweep_mode_from_string(s_mode);
    config.params = s_anneal.params;
    config.attack = attack_flag_value(s_attack);
    config.seed = s_seed;
    if (s_samples > 0) {
      config.risk.engine = rdh::RiskOptions::Engine::MonteCarlo;
      config.risk.mc_samples = s_samples;
    }
    emit(s_out, rdh::sweep_csv(rdh::run_sweep(instance, *impact, config)));
  });

  // convergence
  auto* convergence =
      app.add_subcommand("convergence", "Per-iteration trace of one run (CSV)");
  std::string c_instance, c_attack = "stealthy", c_out;
  BudgetFlags c_budget;
  AnnealFlags c_anneal;
  ImpactFlags c_impact;
  std::uint64_t c_samples = 0, c_seed = 0;
  convergence->add_option("instance", c_instance, "Instance JSON")->required();
  c_budget.attach(convergence);
  convergence->add_option("--attack", c_attack, "Attack model")
      ->check(CLI::IsMember({"stealthy", "nonstealthy"}));
  c_impact.attach(convergence);
  c_anneal.attach(convergence);
  convergence->add_option("--samples", c_samples,
                          "Monte Carlo samples per risk evaluation (0 = exact)");
  convergence->add_option("--seed", c_seed, "Random seed");
  convergence->add_option("--out", c_out, "Output CSV path (default stdout)");
  convergence->callback([&] {
    const auto file = rdh::load_instance(c_instance);
    const auto instance = make_instance(file);
    const auto impact = c_impact.build(instance);
    auto budgets = c_budget.resolve();
    if (!budgets) budgets = file.budgets;
    if (!budgets) {
      throw rdh::ValidationError(
          "no budgets: pass --budget/--budgets or store them in the instance");
    }
    rdh::RiskOptions risk;
    if (c_samples > 0) {
      risk.engine = rdh::RiskOptions::Engine::MonteCarlo;
      risk.mc_samples = c_samples;
    }
    const auto rows =
        rdh::run_convergence(instance, *impact, *budgets, c_anneal.params,
                             attack_flag_value(c_attack), c_seed, risk);
    emit(c_out, rdh::convergence_csv(rows));
  });

  // generate
  auto* generate = app.add_subcommand("generate", "Create a synthetic instance");
  rdh::GeneratorSpec g_spec;
  std::string g_instance_out, g_scenario_out;
  generate->add_option("--sensors", g_spec.sensors, "Sensor components");
  generate->add_option("--processing", g_spec.processing, "Processing components");
  generate->add_option("--interfaces", g_spec.interfaces, "Interface components");
  generate->add_option("--fan-in", g_spec.fan_in, "Sensors per processing component");
  generate->add_option("--nodes", g_spec.hydraulic_nodes, "Hydraulic nodes");
  generate->add_option("--pipe-density", g_spec.pipe_density,
                       "Extra pipes beyond the backbone, per node");
  generate->add_option("--injections", g_spec.injection_candidates,
                       "Injection candidate count");
  generate->add_option("--seed", g_spec.seed, "Random seed");
  generate->add_option("--out-instance", g_instance_out, "Instance JSON path")
      ->required();
  generate->add_option("--out-scenario", g_scenario_out, "Scenario JSON path")
      ->required();
  generate->callback([&] {
    const auto generated = rdh::generate_instance(g_spec);
    rdh::save_instance(g_instance_out, generated.model, generated.catalog);
    rdh::save_scenario(g_scenario_out, generated.scenario);
  });

  // reduce-setcover
  auto* reduce = app.add_subcommand(
      "reduce-setcover", "Embed a set-cover instance as a design instance");
  std::string r_setcover, r_out;
  reduce->add_option("setcover", r_setcover, "Set cover JSON")->required();
  reduce->add_option("--out", r_out, "Instance JSON path (default stdout)");
  reduce->callback([&] {
    const auto setcover = rdh::load_setcover(r_setcover);
    const auto odp = rdh::setcover_to_odp(setcover);
    emit(r_out, rdh::render_instance(odp.model, odp.catalog, odp.budgets));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 1;
  } catch (const rdh::CapacityError& error) {
    std::cerr << "capacity error: " << error.what() << "\n";
    return 2;
  } catch (const rdh::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
