// Python bindings over the core library: model construction, validation,
// propagation, risk estimation, design search, and the JSON formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdh/experiments.hpp"
#include "rdh/generator.hpp"
#include "rdh/json_io.hpp"

namespace py = pybind11;
using namespace rdh;

PYBIND11_MODULE(rdhopt, m) {
  m.doc() = "Budget-constrained redundancy/diversity/hardening design";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<CapacityError>(m, "CapacityError");

  py::enum_<ComponentKind>(m, "ComponentKind")
      .value("SENSOR", ComponentKind::Sensor)
      .value("ACTUATOR", ComponentKind::Actuator)
      .value("PROCESSING", ComponentKind::Processing)
      .value("INTERFACE", ComponentKind::Interface);

  py::enum_<AttackModel>(m, "AttackModel")
      .value("STEALTHY", AttackModel::Stealthy)
      .value("NON_STEALTHY", AttackModel::NonStealthy);

  py::enum_<RiskMethod>(m, "RiskMethod")
      .value("EXACT", RiskMethod::Exact)
      .value("MONTE_CARLO", RiskMethod::MonteCarlo);

  py::enum_<SweepMode>(m, "SweepMode")
      .value("REDUNDANCY_ONLY", SweepMode::RedundancyOnly)
      .value("DIVERSITY_ONLY", SweepMode::DiversityOnly)
      .value("HARDENING_ONLY", SweepMode::HardeningOnly)
      .value("COMBINATION", SweepMode::Combination);

  py::class_<SplitBudget>(m, "SplitBudget")
      .def(py::init<Money, Money, Money>(), py::arg("redundancy") = 0,
           py::arg("diversity") = 0, py::arg("hardening") = 0)
      .def_readwrite("redundancy", &SplitBudget::redundancy)
      .def_readwrite("diversity", &SplitBudget::diversity)
      .def_readwrite("hardening", &SplitBudget::hardening);

  py::class_<CombinedBudget>(m, "CombinedBudget")
      .def(py::init<Money>(), py::arg("total") = 0)
      .def_readwrite("total", &CombinedBudget::total);

  py::class_<ComponentDef>(m, "ComponentDef")
      .def(py::init([](std::string id, ComponentKind kind,
                       std::vector<std::string> inputs,
                       std::vector<std::string> allowed) {
             return ComponentDef{std::move(id), kind, std::move(inputs),
                                 std::move(allowed)};
           }),
           py::arg("id"), py::arg("kind"),
           py::arg("inputs") = std::vector<std::string>{},
           py::arg("allowed") = std::vector<std::string>{})
      .def_readwrite("id", &ComponentDef::id)
      .def_readwrite("kind", &ComponentDef::kind)
      .def_readwrite("inputs", &ComponentDef::inputs)
      .def_readwrite("allowed", &ComponentDef::allowed);

  py::class_<SystemModel>(m, "SystemModel")
      .def(py::init<>())
      .def(py::init([](std::vector<ComponentDef> components) {
             return SystemModel{std::move(components)};
           }),
           py::arg("components"))
      .def_readwrite("components", &SystemModel::components);

  py::class_<LevelDef>(m, "LevelDef")
      .def(py::init<double, Money>(), py::arg("secure_prob"), py::arg("cost"))
      .def_readwrite("secure_prob", &LevelDef::secure_prob)
      .def_readwrite("cost", &LevelDef::cost);

  py::class_<ImplementationDef>(m, "ImplementationDef")
      .def(py::init([](std::string id, Money deploy_cost, Money adoption_cost,
                       std::vector<LevelDef> levels) {
             return ImplementationDef{std::move(id), deploy_cost, adoption_cost,
                                      std::move(levels)};
           }),
           py::arg("id"), py::arg("deploy_cost") = 0, py::arg("adoption_cost") = 0,
           py::arg("levels") = std::vector<LevelDef>{})
      .def_readwrite("id", &ImplementationDef::id)
      .def_readwrite("deploy_cost", &ImplementationDef::deploy_cost)
      .def_readwrite("adoption_cost", &ImplementationDef::adoption_cost)
      .def_readwrite("levels", &ImplementationDef::levels);

  py::class_<ImplementationCatalog>(m, "ImplementationCatalog")
      .def(py::init<>())
      .def(py::init([](std::vector<ImplementationDef> types) {
             return ImplementationCatalog{std::move(types)};
           }),
           py::arg("types"))
      .def_readwrite("types", &ImplementationCatalog::types);

  py::class_<Design>(m, "Design")
      .def(py::init<>())
      .def_static("empty", &Design::empty, py::arg("catalog"))
      .def_readwrite("deployed", &Design::deployed)
      .def_readwrite("level", &Design::level);

  py::class_<Violation>(m, "Violation")
      .def_readonly("subject", &Violation::subject)
      .def_readonly("message", &Violation::message)
      .def("__repr__", [](const Violation& violation) {
        return violation.subject + ": " + violation.message;
      });

  py::class_<CostTriple>(m, "CostTriple")
      .def_readonly("redundancy", &CostTriple::redundancy)
      .def_readonly("diversity", &CostTriple::diversity)
      .def_readonly("hardening", &CostTriple::hardening)
      .def("total", &CostTriple::total);

  py::class_<Instance>(m, "Instance")
      .def(py::init<SystemModel, ImplementationCatalog>(), py::arg("model"),
           py::arg("catalog"))
      .def_property_readonly("model", &Instance::model)
      .def_property_readonly("catalog", &Instance::catalog)
      .def("component_count", &Instance::component_count)
      .def("type_count", &Instance::type_count);

  m.def("validate_model", &validate_model, py::arg("model"), py::arg("catalog"));
  m.def("redundancy_cost", &redundancy_cost, py::arg("design"), py::arg("catalog"));
  m.def("diversity_cost", &diversity_cost, py::arg("design"), py::arg("catalog"));
  m.def("hardening_cost", &hardening_cost, py::arg("design"), py::arg("catalog"));
  m.def("design_costs", &design_costs, py::arg("design"), py::arg("catalog"));
  m.def("is_feasible", &is_feasible, py::arg("design"), py::arg("budgets"),
        py::arg("catalog"));

  py::class_<SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def("next_double", &SplitMix64::next_double)
      .def("next_below", &SplitMix64::next_below, py::arg("n"));

  m.def("propagate", &propagate, py::arg("instance"), py::arg("design"),
        py::arg("vulnerable"), py::arg("attack"));
  m.def("propagate_from", &propagate_from, py::arg("instance"), py::arg("design"),
        py::arg("vulnerable"), py::arg("attack"), py::arg("initial"));
  m.def("sample_vulnerable", &sample_vulnerable, py::arg("instance"),
        py::arg("design"), py::arg("rng"));
  m.def("outcome_probability", &outcome_probability, py::arg("instance"),
        py::arg("design"), py::arg("vulnerable"));

  py::class_<ImpactEvaluator>(m, "ImpactEvaluator");
  py::class_<CountImpact, ImpactEvaluator>(m, "CountImpact").def(py::init<>());
  py::class_<ImpactTableData>(m, "ImpactTableData")
      .def(py::init<>())
      .def_readwrite("entries", &ImpactTableData::entries)
      .def_readwrite("fallback", &ImpactTableData::fallback);
  py::class_<TableImpact, ImpactEvaluator>(m, "TableImpact")
      .def(py::init<const Instance&, ImpactTableData>(), py::arg("instance"),
           py::arg("data"));
  m.def("impact_count", &impact_count, py::arg("compromised"));
  m.def("impact_table", &impact_table, py::arg("compromised"), py::arg("table"));

  py::class_<WaterNode>(m, "WaterNode")
      .def(py::init<>())
      .def_readwrite("id", &WaterNode::id)
      .def_readwrite("demand", &WaterNode::demand);

  py::class_<WaterPipe>(m, "WaterPipe")
      .def(py::init<>())
      .def_readwrite("from_node", &WaterPipe::from)
      .def_readwrite("to_node", &WaterPipe::to)
      .def_readwrite("travel", &WaterPipe::travel)
      .def_readwrite("fraction", &WaterPipe::fraction);

  py::class_<WaterScenario>(m, "WaterScenario")
      .def(py::init<>())
      .def_readwrite("nodes", &WaterScenario::nodes)
      .def_readwrite("pipes", &WaterScenario::pipes)
      .def_readwrite("sensors", &WaterScenario::sensors)
      .def_readwrite("injections", &WaterScenario::injections)
      .def_readwrite("theta", &WaterScenario::theta)
      .def_readwrite("horizon", &WaterScenario::horizon)
      .def_readwrite("dt", &WaterScenario::dt);

  py::class_<ContaminationTraces>(m, "ContaminationTraces")
      .def_readonly("node_ids", &ContaminationTraces::node_ids)
      .def_readonly("arriving", &ContaminationTraces::arriving)
      .def_readonly("consumed", &ContaminationTraces::consumed)
      .def_readonly("held", &ContaminationTraces::held)
      .def_readonly("in_transit", &ContaminationTraces::in_transit);

  m.def("validate_scenario", &validate_scenario, py::arg("scenario"),
        py::arg("model"));
  m.def("simulate_contamination", &simulate_contamination, py::arg("scenario"),
        py::arg("injection"));
  m.def("detection_time", &detection_time, py::arg("scenario"), py::arg("traces"),
        py::arg("compromised"), py::arg("model"));
  m.def("water_impact", &water_impact, py::arg("scenario"), py::arg("model"),
        py::arg("compromised"));
  py::class_<WaterImpact, ImpactEvaluator>(m, "WaterImpact")
      .def(py::init<const Instance&, WaterScenario>(), py::arg("instance"),
           py::arg("scenario"));

  py::class_<RiskEstimate>(m, "RiskEstimate")
      .def_readonly("mean", &RiskEstimate::mean)
      .def_readonly("std_error", &RiskEstimate::std_error)
      .def_readonly("samples", &RiskEstimate::samples)
      .def_readonly("method", &RiskEstimate::method);

  m.def(
      "risk_exact",
      [](const Instance& instance, const Design& design, AttackModel attack,
         const ImpactEvaluator& impact, std::size_t enum_limit) {
        return risk_exact(instance, design, attack, impact,
                          RiskLimits{enum_limit});
      },
      py::arg("instance"), py::arg("design"), py::arg("attack"), py::arg("impact"),
      py::arg("enum_limit") = 20);
  m.def(
      "risk_monte_carlo",
      [](const Instance& instance, const Design& design, AttackModel attack,
         const ImpactEvaluator& impact, std::uint64_t samples, std::uint64_t seed) {
        return risk_monte_carlo(instance, design, attack, impact, samples, seed);
      },
      py::arg("instance"), py::arg("design"), py::arg("attack"), py::arg("impact"),
      py::arg("samples"), py::arg("seed") = 0);

  py::class_<DesignPlan>(m, "DesignPlan")
      .def(py::init<>())
      .def_readwrite("ro", &DesignPlan::ro)
      .def_readwrite("lo", &DesignPlan::lo);

  m.def("random_plan", &random_plan, py::arg("instance"), py::arg("rng"));
  m.def(
      "map_to_design",
      [](const Instance& instance, const DesignPlan& plan,
         const BudgetConfig& budgets) {
        validate_plan(instance, plan);
        return instance.decompile(map_to_design(instance, plan, budgets));
      },
      py::arg("instance"), py::arg("plan"), py::arg("budgets"));
  m.def("perturb", &perturb, py::arg("plan"), py::arg("rng"));

  py::class_<RiskOptions> risk_options(m, "RiskOptions");
  py::enum_<RiskOptions::Engine>(risk_options, "Engine")
      .value("AUTO", RiskOptions::Engine::Auto)
      .value("EXACT", RiskOptions::Engine::Exact)
      .value("MONTE_CARLO", RiskOptions::Engine::MonteCarlo);
  risk_options.def(py::init<>())
      .def_readwrite("engine", &RiskOptions::engine)
      .def_readwrite("mc_samples", &RiskOptions::mc_samples);

  py::class_<AnnealingParams>(m, "AnnealingParams")
      .def(py::init<>())
      .def_readwrite("iterations", &AnnealingParams::iterations)
      .def_readwrite("initial_temperature", &AnnealingParams::initial_temperature)
      .def_readwrite("cooling", &AnnealingParams::cooling)
      .def_readwrite("restarts", &AnnealingParams::restarts)
      .def_readwrite("inverted_acceptance", &AnnealingParams::inverted_acceptance);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("current", &IterationRecord::current)
      .def_readonly("best", &IterationRecord::best);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best_design", &OptimizationResult::best_design)
      .def_readonly("best_costs", &OptimizationResult::best_costs)
      .def_readonly("best_risk", &OptimizationResult::best_risk)
      .def_readonly("initial_risk", &OptimizationResult::initial_risk)
      .def_readonly("trace", &OptimizationResult::trace)
      .def_readonly("iterations_per_second",
                    &OptimizationResult::iterations_per_second);

  m.def("simulated_annealing", &simulated_annealing, py::arg("instance"),
        py::arg("budgets"), py::arg("attack"), py::arg("impact"), py::arg("params"),
        py::arg("seed") = 0, py::arg("risk") = RiskOptions{});
  m.def("default_initial_temperature", &default_initial_temperature,
        py::arg("instance"), py::arg("attack"), py::arg("impact"),
        py::arg("risk") = RiskOptions{});

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("design", &BruteForceResult::design)
      .def_readonly("risk", &BruteForceResult::risk);
  m.def(
      "brute_force_design",
      [](const Instance& instance, const BudgetConfig& budgets, AttackModel attack,
         const ImpactEvaluator& impact, double max_designs) {
        BruteForceOptions options;
        options.max_designs = max_designs;
        return brute_force_design(instance, budgets, attack, impact, options);
      },
      py::arg("instance"), py::arg("budgets"), py::arg("attack"), py::arg("impact"),
      py::arg("max_designs") = 1e6);

  py::class_<SetCoverInstance>(m, "SetCoverInstance")
      .def(py::init([](std::vector<std::string> universe,
                       std::vector<std::vector<std::string>> families,
                       std::uint32_t k) {
             return SetCoverInstance{std::move(universe), std::move(families), k};
           }),
           py::arg("universe"), py::arg("families"), py::arg("k"))
      .def_readwrite("universe", &SetCoverInstance::universe)
      .def_readwrite("families", &SetCoverInstance::families)
      .def_readwrite("k", &SetCoverInstance::k);

  py::class_<OdpInstance>(m, "OdpInstance")
      .def_readonly("model", &OdpInstance::model)
      .def_readonly("catalog", &OdpInstance::catalog)
      .def_readonly("budgets", &OdpInstance::budgets)
      .def_readonly("target_risk", &OdpInstance::target_risk);
  m.def("setcover_to_odp", &setcover_to_odp, py::arg("setcover"));

  py::class_<GeneratorSpec>(m, "GeneratorSpec")
      .def(py::init<>())
      .def_readwrite("sensors", &GeneratorSpec::sensors)
      .def_readwrite("processing", &GeneratorSpec::processing)
      .def_readwrite("interfaces", &GeneratorSpec::interfaces)
      .def_readwrite("fan_in", &GeneratorSpec::fan_in)
      .def_readwrite("hydraulic_nodes", &GeneratorSpec::hydraulic_nodes)
      .def_readwrite("pipe_density", &GeneratorSpec::pipe_density)
      .def_readwrite("injection_candidates", &GeneratorSpec::injection_candidates)
      .def_readwrite("seed", &GeneratorSpec::seed);

  py::class_<GeneratedInstance>(m, "GeneratedInstance")
      .def_readonly("model", &GeneratedInstance::model)
      .def_readonly("catalog", &GeneratedInstance::catalog)
      .def_readonly("scenario", &GeneratedInstance::scenario);
  m.def("generate_instance", &generate_instance, py::arg("spec"));
  m.def("reference_spec", &reference_spec);

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("budgets", &SweepConfig::budgets)
      .def_readwrite("mode", &SweepConfig::mode)
      .def_readwrite("params", &SweepConfig::params)
      .def_readwrite("attack", &SweepConfig::attack)
      .def_readwrite("seed", &SweepConfig::seed)
      .def_readwrite("risk", &SweepConfig::risk);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("budget", &SweepRow::budget)
      .def_readonly("risk", &SweepRow::risk)
      .def_readonly("std_error", &SweepRow::std_error)
      .def_readonly("spend", &SweepRow::spend);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("iteration", &ConvergenceRow::iteration)
      .def_readonly("current", &ConvergenceRow::current)
      .def_readonly("best", &ConvergenceRow::best);

  m.def("run_sweep", &run_sweep, py::arg("instance"), py::arg("impact"),
        py::arg("config"));
  m.def("sweep_csv", &sweep_csv, py::arg("rows"));
  m.def("run_convergence", &run_convergence, py::arg("instance"), py::arg("impact"),
        py::arg("budgets"), py::arg("params"), py::arg("attack"),
        py::arg("seed") = 0, py::arg("risk") = RiskOptions{});
  m.def("convergence_csv", &convergence_csv, py::arg("rows"));

  // JSON formats
  m.def("parse_instance", [](const std::string& text) {
    const auto file = parse_instance(text);
    return py::make_tuple(file.model, file.catalog, file.budgets);
  });
  m.def("render_instance", &render_instance, py::arg("model"), py::arg("catalog"),
        py::arg("budgets") = std::optional<BudgetConfig>{});
  m.def("load_instance", [](const std::string& path) {
    const auto file = load_instance(path);
    return py::make_tuple(file.model, file.catalog, file.budgets);
  });
  m.def("parse_scenario", &parse_scenario, py::arg("text"));
  m.def("render_scenario", &render_scenario, py::arg("scenario"));
  m.def("load_scenario",
        [](const std::string& path) { return load_scenario(path); });
  m.def("parse_design", &parse_design, py::arg("text"));
  m.def("render_design", &render_design, py::arg("design"));
  m.def("format_double", &format_double, py::arg("value"));
}
