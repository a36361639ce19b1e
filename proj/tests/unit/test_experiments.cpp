#include "doctest.h"
#include "rdh/experiments.hpp"
#include "rdh/json_io.hpp"
#include "support.hpp"

using namespace rdh;

namespace {

GeneratedInstance small_generated() {
  GeneratorSpec spec;
  spec.sensors = 3;
  spec.processing = 2;
  spec.interfaces = 1;
  spec.hydraulic_nodes = 8;
  spec.injection_candidates = 2;
  spec.seed = 3;
  return generate_instance(spec);
}

}  // namespace

TEST_CASE("a zero budget sweeps to the free design's risk") {
  const auto generated = small_generated();
  const Instance instance(generated.model, generated.catalog);
  const CountImpact count;

  SweepConfig config;
  config.budgets = {0};
  config.mode = SweepMode::Combination;
  config.params.iterations = 50;
  config.params.restarts = 1;
  const auto rows = run_sweep(instance, count, config);
  REQUIRE(rows.size() == 1);

  // with no money only i1 deploys (free R and D); every plan maps there
  auto free_design = Design::empty(generated.catalog);
  for (const auto& component : generated.model.components) {
    free_design.deployed[component.id] = {"i1"};
  }
  const auto expected =
      risk_exact(instance, free_design, AttackModel::Stealthy, count);
  CHECK(rows[0].risk == expected.mean);
  CHECK(rows[0].spend.redundancy == 0);
  CHECK(rows[0].spend.diversity == 0);
  CHECK(rows[0].spend.hardening == 0);
}

TEST_CASE("sweep rows respect their budgets and the CSV stays stable") {
  const auto generated = small_generated();
  const Instance instance(generated.model, generated.catalog);
  const CountImpact count;

  SweepConfig config;
  config.budgets = {0, 4, 8};
  config.mode = SweepMode::Combination;
  config.params.iterations = 120;
  config.params.restarts = 2;
  config.seed = 17;

  const auto rows = run_sweep(instance, count, config);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].budget == config.budgets[i]);
    CHECK(rows[i].spend.total() <= rows[i].budget);
    CHECK(rows[i].std_error == 0.0);  // exact engine on five types
  }

  const auto csv = sweep_csv(rows);
  CHECK(csv.rfind("budget,risk,redundancy,diversity,hardening\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(sweep_csv(run_sweep(instance, count, config)) == csv);

  // descending budgets violate the config invariant
  config.budgets = {8, 4};
  CHECK_THROWS_AS(run_sweep(instance, count, config), ValidationError);
}

TEST_CASE("single-approach modes cap the other two categories at zero") {
  const auto generated = small_generated();
  const Instance instance(generated.model, generated.catalog);
  const CountImpact count;

  SweepConfig config;
  config.budgets = {6};
  config.params.iterations = 150;
  config.params.restarts = 2;
  config.seed = 4;

  config.mode = SweepMode::RedundancyOnly;
  for (const auto& row : run_sweep(instance, count, config)) {
    CHECK(row.spend.diversity == 0);
    CHECK(row.spend.hardening == 0);
    CHECK(row.spend.redundancy <= 6);
  }
  config.mode = SweepMode::HardeningOnly;
  for (const auto& row : run_sweep(instance, count, config)) {
    CHECK(row.spend.redundancy == 0);
    CHECK(row.spend.diversity == 0);
    CHECK(row.spend.hardening <= 6);
  }
}

TEST_CASE("convergence emits one row per iteration with a sinking best") {
  const auto generated = small_generated();
  const Instance instance(generated.model, generated.catalog);
  const CountImpact count;

  AnnealingParams params;
  params.iterations = 300;
  params.restarts = 5;  // forced down to one execution
  const auto rows = run_convergence(instance, count, CombinedBudget{6}, params,
                                    AttackModel::Stealthy, 2);
  REQUIRE(rows.size() == 300);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].iteration == k + 1);
    if (k > 0) CHECK(rows[k].best <= rows[k - 1].best + 1e-15);
    CHECK(rows[k].best <= rows[k].current + 1e-15);
  }

  const auto csv = convergence_csv(rows);
  CHECK(csv.rfind("iteration,current,best\n", 0) == 0);
  const auto repeat = run_convergence(instance, count, CombinedBudget{6}, params,
                                      AttackModel::Stealthy, 2);
  CHECK(convergence_csv(repeat) == csv);
}

TEST_CASE("format_double prints shortest round-trip forms") {
  CHECK(format_double(0.2) == "0.2");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.1 + 0.2) != "0.3");  // stays faithful to the bits
}
