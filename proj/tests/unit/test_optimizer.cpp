#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace rdh;
using namespace rdhtest;

TEST_CASE("a singleton search space returns its only design") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 0, 0, {{0.5, 0}})};
  SystemModel model;
  model.components = {make_component("c", ComponentKind::Sensor, {}, {"i1"})};
  const Instance instance(model, catalog);
  const CountImpact count;

  AnnealingParams params;
  params.iterations = 50;
  params.restarts = 2;
  const auto result = simulated_annealing(instance, CombinedBudget{0},
                                          AttackModel::Stealthy, count, params, 1);
  CHECK(result.best_risk == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(result.best_design.deployed.at("c") == std::set<std::string>{"i1"});
  CHECK(result.trace.size() == 100);
  for (const auto& record : result.trace) {
    CHECK(record.current == result.best_risk);
    CHECK(record.best == result.best_risk);
  }
}

TEST_CASE("annealing is deterministic per seed and tracks its own best") {
  SplitMix64 rng(51);
  const auto raw = random_instance(rng, 4, 3, 2);
  const Instance instance(raw.model, raw.catalog);
  const CountImpact count;
  AnnealingParams params;
  params.iterations = 200;
  params.restarts = 2;

  const auto a = simulated_annealing(instance, CombinedBudget{4},
                                     AttackModel::NonStealthy, count, params, 9);
  const auto b = simulated_annealing(instance, CombinedBudget{4},
                                     AttackModel::NonStealthy, count, params, 9);
  CHECK(a.best_risk == b.best_risk);
  CHECK(a.best_design.deployed == b.best_design.deployed);
  CHECK(a.best_design.level == b.best_design.level);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    CHECK(a.trace[k].current == b.trace[k].current);
    CHECK(a.trace[k].best == b.trace[k].best);
  }

  // best-so-far is non-increasing and closes on the reported best
  double previous = a.initial_risk;
  double lowest_current = a.initial_risk;
  for (const auto& record : a.trace) {
    CHECK(record.best <= previous + 1e-15);
    previous = record.best;
    lowest_current = std::min(lowest_current, record.current);
  }
  CHECK(a.trace.back().best == a.best_risk);
  // every evaluated design is tracked, so the best can only undercut the
  // recorded currents (a restart's opening design may never reappear there)
  CHECK(a.best_risk <= lowest_current + 1e-15);
  CHECK(a.best_risk <= a.initial_risk + 1e-15);
}

TEST_CASE("acceptance probabilities behave like a cooling minimizer") {
  CHECK(acceptance_probability(1.0, 0.5, 0.1) == 1.0);

  // worsening moves decay with the gap and with lower temperature
  const double small_gap = acceptance_probability(1.0, 1.1, 0.5);
  const double large_gap = acceptance_probability(1.0, 1.6, 0.5);
  CHECK(small_gap < 1.0);
  CHECK(large_gap < small_gap);
  CHECK(acceptance_probability(1.0, 1.1, 0.05) < small_gap);

  // the printed rule accepts every worsening move
  CHECK(acceptance_probability(1.0, 5.0, 0.5, true) == 1.0);
}

TEST_CASE("annealing lands near the exhaustive optimum on tiny instances") {
  SplitMix64 rng(52);
  int hits = 0;
  const int rounds = 5;
  for (int round = 0; round < rounds; ++round) {
    const auto raw = random_instance(rng, 4, 3, 3);
    const Instance instance(raw.model, raw.catalog);
    const CountImpact count;
    const BudgetConfig budgets = CombinedBudget{static_cast<Money>(3 + round)};

    const auto oracle =
        brute_force_design(instance, budgets, AttackModel::Stealthy, count);
    AnnealingParams params;
    params.iterations = 1500;
    params.restarts = 3;
    const auto annealed = simulated_annealing(instance, budgets,
                                              AttackModel::Stealthy, count,
                                              params, 100 + round);
    CHECK(annealed.best_risk >= oracle.risk - 1e-12);
    if (annealed.best_risk <= 1.05 * oracle.risk + 1e-12) ++hits;
  }
  CHECK(hits >= rounds - 1);
}

TEST_CASE("unbounded budgets drive the exhaustive optimum into the corner") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 1, 1, {{0.3, 0}, {0.6, 1}}),
                   make_type("i2", 1, 1, {{0.4, 0}, {0.7, 2}})};
  SystemModel model;
  model.components = {
      make_component("c1", ComponentKind::Sensor, {}, {"i1", "i2"}),
      make_component("c2", ComponentKind::Sensor, {}, {"i1", "i2"})};
  const Instance instance(model, catalog);
  const CountImpact count;

  const auto result = brute_force_design(instance, CombinedBudget{1000},
                                         AttackModel::Stealthy, count);
  for (const auto& component : model.components) {
    CHECK(result.design.deployed.at(component.id) ==
          std::set<std::string>{"i1", "i2"});
  }
  CHECK(result.design.level.at("i1") == 1);
  CHECK(result.design.level.at("i2") == 1);
}

TEST_CASE("zero budgets leave the zero-cost design") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 1, 1, {{0.3, 0}, {0.6, 1}})};
  SystemModel model;
  model.components = {make_component("c1", ComponentKind::Sensor, {}, {"i1"})};
  const Instance instance(model, catalog);
  const CountImpact count;

  const auto result = brute_force_design(instance, CombinedBudget{0},
                                         AttackModel::Stealthy, count);
  CHECK(result.design.deployed.empty());
  CHECK(result.design.level.at("i1") == 0);
  CHECK(result.risk == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exhaustive search matches hand enumeration of a pick-two budget") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 1, 0, {{0.6, 0}}),
                   make_type("i2", 1, 0, {{0.5, 0}}),
                   make_type("i3", 1, 0, {{0.9, 0}})};
  SystemModel model;
  model.components = {
      make_component("s", ComponentKind::Sensor, {}, {"i1", "i2", "i3"})};
  const Instance instance(model, catalog);
  const CountImpact count;

  // two deployments affordable; {i1, i3} minimizes 0.4*0.1 over all pairs
  const auto result = brute_force_design(instance, CombinedBudget{2},
                                         AttackModel::Stealthy, count);
  CHECK(result.design.deployed.at("s") == std::set<std::string>{"i1", "i3"});
  CHECK(result.risk == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("the exhaustive limit trips a capacity error") {
  SplitMix64 rng(53);
  const auto raw = random_instance(rng, 5, 4, 3);
  const Instance instance(raw.model, raw.catalog);
  const CountImpact count;
  BruteForceOptions options;
  options.max_designs = 4;
  CHECK_THROWS_AS(brute_force_design(instance, CombinedBudget{2},
                                     AttackModel::Stealthy, count, options),
                  CapacityError);
}

TEST_CASE("the set-cover embedding follows the construction") {
  const auto odp = setcover_to_odp({{"a", "b"}, {{"a"}, {"a", "b"}}, 1});
  CHECK(odp.model.components.size() == 2);
  CHECK(odp.catalog.types.size() == 2);
  for (const auto& type : odp.catalog.types) {
    CHECK(type.deploy_cost == 0);
    CHECK(type.adoption_cost == 0);
    REQUIRE(type.levels.size() == 2);
    CHECK(type.levels[0].secure_prob == 0.0);
    CHECK(type.levels[0].cost == 0);
    CHECK(type.levels[1].secure_prob == 1.0);
    CHECK(type.levels[1].cost == 1);
  }
  CHECK(odp.model.components[0].allowed == std::vector<std::string>{"f1", "f2"});
  CHECK(odp.model.components[1].allowed == std::vector<std::string>{"f2"});
  CHECK(std::get<CombinedBudget>(odp.budgets).total == 1);
  CHECK(odp.target_risk == 0.0);

  CHECK_THROWS_AS(setcover_to_odp({{"a", "b"}, {{"a"}}, 1}), ValidationError);
}

TEST_CASE("zero risk is reachable exactly when a small cover exists") {
  struct Case {
    SetCoverInstance setcover;
    bool solvable;
  };
  const Case cases[] = {
      {{{"u"}, {{"u"}}, 1}, true},
      {{{"a", "b"}, {{"a"}, {"b"}}, 1}, false},
      {{{"a", "b"}, {{"a", "b"}, {"a"}}, 1}, true},
  };
  for (const auto& [setcover, solvable] : cases) {
    const auto odp = setcover_to_odp(setcover);
    const Instance instance(odp.model, odp.catalog);
    const CountImpact count;
    const auto result =
        brute_force_design(instance, odp.budgets, AttackModel::Stealthy, count);
    CHECK((result.risk == 0.0) == solvable);
    CHECK(has_cover(setcover) == solvable);
  }
}

TEST_CASE("reduction equivalence on every small covered instance") {
  // universe {a, b, c}; families drawn from its non-empty subsets
  const std::vector<std::string> universe = {"a", "b", "c"};
  std::vector<std::vector<std::string>> subsets;
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    std::vector<std::string> subset;
    for (std::size_t bit = 0; bit < 3; ++bit) {
      if ((mask >> bit) & 1) subset.push_back(universe[bit]);
    }
    subsets.push_back(std::move(subset));
  }
  const CountImpact count;
  int checked = 0;
  for (std::uint32_t f1 = 0; f1 < subsets.size(); ++f1) {
    for (std::uint32_t f2 = f1 + 1; f2 < subsets.size(); ++f2) {
      SetCoverInstance setcover;
      setcover.universe = universe;
      setcover.families = {subsets[f1], subsets[f2]};
      std::set<std::string> covered;
      for (const auto& family : setcover.families) {
        covered.insert(family.begin(), family.end());
      }
      if (covered.size() != universe.size()) continue;
      for (std::uint32_t k = 0; k <= 2; ++k) {
        setcover.k = k;
        const auto odp = setcover_to_odp(setcover);
        const Instance instance(odp.model, odp.catalog);
        const auto result = brute_force_design(instance, odp.budgets,
                                               AttackModel::Stealthy, count);
        CHECK((result.risk == 0.0) == has_cover(setcover));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}
