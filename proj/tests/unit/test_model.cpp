#include "doctest.h"
#include "support.hpp"

using namespace rdh;
using namespace rdhtest;

namespace {

ImplementationCatalog chain_catalog() {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 0, 0, {{0.5, 0}}),
                   make_type("i2", 1, 1, {{0.5, 0}, {0.7, 2}})};
  return catalog;
}

SystemModel chain_model() {
  SystemModel model;
  model.components = {
      make_component("s1", ComponentKind::Sensor, {}, {"i1", "i2"}),
      make_component("p1", ComponentKind::Processing, {"s1"}, {"i1"}),
      make_component("h1", ComponentKind::Interface, {"p1"}, {"i2"})};
  return model;
}

}  // namespace

TEST_CASE("validate_model accepts a well-formed chain") {
  CHECK(validate_model(chain_model(), chain_catalog()).empty());
}

TEST_CASE("validate_model reports a dangling input") {
  auto model = chain_model();
  model.components[1].inputs = {"ghost"};
  const auto report = validate_model(model, chain_catalog());
  REQUIRE(report.size() == 1);
  CHECK(report[0].subject == "p1");
  CHECK(report[0].message.find("dangling") != std::string::npos);
}

TEST_CASE("validate_model reports non-increasing level costs") {
  auto catalog = chain_catalog();
  catalog.types[1].levels = {{0.5, 4}, {0.7, 4}};
  const auto report = validate_model(chain_model(), catalog);
  REQUIRE(report.size() == 1);
  CHECK(report[0].message.find("non-increasing level cost") != std::string::npos);
}

TEST_CASE("validate_model rejects structural breakage") {
  auto model = chain_model();
  model.components[0].inputs = {"p1"};             // sensor with inputs
  model.components[1].inputs = {"p1", "s1"};       // self-loop
  model.components[2].allowed = {};                // empty allowed set
  model.components.push_back(
      make_component("x1", ComponentKind::Actuator, {}, {"nope"}));
  model.components.push_back(
      make_component("x1", ComponentKind::Actuator, {}, {"i1"}));
  const auto report = validate_model(model, chain_catalog());
  auto has = [&](const std::string& needle) {
    for (const auto& violation : report) {
      if (violation.message.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  CHECK(has("sensor has a non-empty input set"));
  CHECK(has("self-loop"));
  CHECK(has("empty allowed"));
  CHECK(has("not in catalog"));
  CHECK(has("duplicate component id"));
}

TEST_CASE("validate_model flags bad catalog data") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", -1, 0, {{1.5, 0}}),
                   make_type("i2", 0, 0, {})};
  SystemModel model;
  model.components = {make_component("c1", ComponentKind::Sensor, {}, {"i1"})};
  const auto report = validate_model(model, catalog);
  auto has = [&](const std::string& needle) {
    for (const auto& violation : report) {
      if (violation.message.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  CHECK(has("negative deployment cost"));
  CHECK(has("outside [0, 1]"));
  CHECK(has("no hardening levels"));
}

TEST_CASE("redundancy cost sums deployment costs per instance") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 0, 0, {{0.5, 0}}),
                   make_type("i4", 1, 1, {{0.5, 0}})};

  auto design = Design::empty(catalog);
  CHECK(redundancy_cost(design, catalog) == 0);

  design.deployed["a"] = {"i4"};
  design.deployed["b"] = {"i4"};
  CHECK(redundancy_cost(design, catalog) == 2);

  design.deployed.clear();
  design.deployed["a"] = {"i1", "i4"};
  CHECK(redundancy_cost(design, catalog) == 1);

  design.deployed["a"].insert("mystery");
  CHECK_THROWS_AS(redundancy_cost(design, catalog), ValidationError);
}

TEST_CASE("diversity cost counts each adopted type once") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 0, 0, {{0.5, 0}}),
                   make_type("i2", 0, 1, {{0.5, 0}}),
                   make_type("i3", 0, 1, {{0.5, 0}})};

  auto design = Design::empty(catalog);
  for (int c = 0; c < 5; ++c) {
    design.deployed["c" + std::to_string(c)] = {"i2"};
  }
  CHECK(diversity_cost(design, catalog) == 1);

  design.deployed.clear();
  design.deployed["a"] = {"i1"};
  CHECK(diversity_cost(design, catalog) == 0);

  design.deployed["a"] = {"i2", "i3"};
  CHECK(diversity_cost(design, catalog) == 2);
}

TEST_CASE("hardening cost is charged above each type's cheapest level") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("i1", 0, 0, standard_levels()),
                   make_type("i2", 0, 0, standard_levels())};

  auto design = Design::empty(catalog);
  CHECK(hardening_cost(design, catalog) == 0);

  design.level["i1"] = 2;  // third level, priced 4 * 3^2
  CHECK(hardening_cost(design, catalog) == 32);

  design.level["i1"] = 9;
  design.level["i2"] = 9;
  CHECK(hardening_cost(design, catalog) == 792);

  design.level["i1"] = 10;
  CHECK_THROWS_AS(hardening_cost(design, catalog), ValidationError);
  design.level.erase("i1");
  CHECK_THROWS_AS(hardening_cost(design, catalog), ValidationError);
}

TEST_CASE("is_feasible matches the budget variants") {
  ImplementationCatalog catalog;
  catalog.types = {make_type("ia", 1, 1, {{0.5, 0}, {0.6, 3}})};

  CHECK(is_feasible(Design::empty(catalog), SplitBudget{0, 0, 0}, catalog));

  auto design = Design::empty(catalog);
  design.deployed["c1"] = {"ia"};
  design.deployed["c2"] = {"ia"};
  // costs (2, 1, 0)
  CHECK_FALSE(is_feasible(design, SplitBudget{1, 5, 5}, catalog));
  CHECK(is_feasible(design, SplitBudget{2, 1, 0}, catalog));

  design.level["ia"] = 1;  // costs (2, 1, 3)
  CHECK(is_feasible(design, CombinedBudget{6}, catalog));
  CHECK_FALSE(is_feasible(design, CombinedBudget{5}, catalog));
}

TEST_CASE("cost functions are monotone under growth") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 50; ++round) {
    const auto instance = random_instance(rng);
    auto design = random_design(instance, rng);
    const auto base = design_costs(design, instance.catalog);

    // add one instance somewhere legal
    for (const auto& component : instance.model.components) {
      for (const auto& type : component.allowed) {
        if (!design.deployed[component.id].count(type)) {
          auto grown = design;
          grown.deployed[component.id].insert(type);
          const auto next = design_costs(grown, instance.catalog);
          CHECK(next.redundancy >= base.redundancy);
          CHECK(next.diversity >= base.diversity);
          CHECK(next.hardening == base.hardening);
        }
      }
    }
    // raise one level where possible
    for (const auto& type : instance.catalog.types) {
      if (design.level[type.id] + 1 < type.levels.size()) {
        auto grown = design;
        grown.level[type.id] += 1;
        CHECK(hardening_cost(grown, instance.catalog) >=
              hardening_cost(design, instance.catalog));
      }
    }
    // diversity ignores multiplicity
    for (const auto& [component, types] : design.deployed) {
      for (const auto& other : instance.model.components) {
        if (other.id == component) continue;
        for (const auto& type : types) {
          if (std::find(other.allowed.begin(), other.allowed.end(), type) !=
              other.allowed.end()) {
            auto grown = design;
            grown.deployed[other.id].insert(type);
            CHECK(diversity_cost(grown, instance.catalog) ==
                  diversity_cost(design, instance.catalog));
          }
        }
      }
    }
  }
}

TEST_CASE("compiled costs agree with the string-level cost functions") {
  SplitMix64 rng(77);
  for (int round = 0; round < 30; ++round) {
    const auto raw = random_instance(rng);
    const Instance instance(raw.model, raw.catalog);
    const auto design = random_design(raw, rng);
    const auto direct = design_costs(design, raw.catalog);
    const auto compiled = instance.costs(instance.compile(design));
    CHECK(direct.redundancy == compiled.redundancy);
    CHECK(direct.diversity == compiled.diversity);
    CHECK(direct.hardening == compiled.hardening);
  }
}

TEST_CASE("compile rejects invalid designs") {
  const auto raw = chain_model();
  const Instance instance(raw, chain_catalog());

  auto design = Design::empty(chain_catalog());
  design.deployed["p1"] = {"i2"};  // i2 not allowed at p1
  CHECK_THROWS_AS(instance.compile(design), ValidationError);

  design = Design::empty(chain_catalog());
  design.deployed["nope"] = {"i1"};
  CHECK_THROWS_AS(instance.compile(design), ValidationError);

  design = Design::empty(chain_catalog());
  design.level["i2"] = 9;
  CHECK_THROWS_AS(instance.compile(design), ValidationError);
}
