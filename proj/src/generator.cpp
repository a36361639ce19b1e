#include "rdh/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "rdh/rng.hpp"

namespace rdh {

namespace {

double round6(double value) { return std::round(value * 1e6) / 1e6; }

void check_spec(const GeneratorSpec& spec) {
  if (spec.sensors < 1 || spec.processing < 1 || spec.interfaces < 1) {
    throw ValidationError("component counts must be at least 1");
  }
  if (spec.fan_in < 1) throw ValidationError("fan-in must be at least 1");
  if (spec.hydraulic_nodes < 1) {
    throw ValidationError("hydraulic node count must be at least 1");
  }
  if (spec.hydraulic_nodes < spec.sensors) {
    throw ValidationError("need at least one hydraulic node per sensor");
  }
  if (!(spec.pipe_density >= 0.0 && spec.pipe_density <= 1.0)) {
    throw ValidationError("pipe density must lie in [0, 1]");
  }
  if (spec.injection_candidates < 1 ||
      spec.injection_candidates > spec.hydraulic_nodes) {
    throw ValidationError("injection candidate count must lie in [1, nodes]");
  }
}

ImplementationCatalog standard_catalog() {
  ImplementationCatalog catalog;
  const Money deploy[5] = {0, 0, 0, 1, 1};
  const Money adopt[5] = {0, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i) {
    ImplementationDef type;
    type.id = "i" + std::to_string(i + 1);
    type.deploy_cost = deploy[i];
    type.adoption_cost = adopt[i];
    for (int l = 1; l <= 10; ++l) {
      const double secure = 1.0 - std::pow(0.5, 0.5 * l + 1.0);
      type.levels.push_back({secure, static_cast<Money>(4 * l * l)});
    }
    catalog.types.push_back(std::move(type));
  }
  return catalog;
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  check_spec(spec);

  GeneratedInstance out;
  out.catalog = standard_catalog();
  std::vector<std::string> all_types;
  for (const auto& type : out.catalog.types) all_types.push_back(type.id);

  // Cyber layer: sensors feed processing round-robin (topped up to the
  // requested fan-in), every interface listens to all processing.
  SplitMix64 rng_model(derive_seed(spec.seed, 1));
  std::vector<std::string> sensor_ids, processing_ids;
  for (std::uint32_t s = 0; s < spec.sensors; ++s) {
    ComponentDef component;
    component.id = "s" + std::to_string(s + 1);
    component.kind = ComponentKind::Sensor;
    component.allowed = all_types;
    sensor_ids.push_back(component.id);
    out.model.components.push_back(std::move(component));
  }
  for (std::uint32_t p = 0; p < spec.processing; ++p) {
    ComponentDef component;
    component.id = "p" + std::to_string(p + 1);
    component.kind = ComponentKind::Processing;
    component.allowed = all_types;
    std::set<std::string> feeds;
    for (std::uint32_t s = p; s < spec.sensors; s += spec.processing) {
      feeds.insert(sensor_ids[s]);
    }
    while (feeds.size() < std::min<std::size_t>(spec.fan_in, spec.sensors)) {
      feeds.insert(sensor_ids[rng_model.next_below(spec.sensors)]);
    }
    component.inputs.assign(feeds.begin(), feeds.end());
    processing_ids.push_back(component.id);
    out.model.components.push_back(std::move(component));
  }
  for (std::uint32_t h = 0; h < spec.interfaces; ++h) {
    ComponentDef component;
    component.id = "h" + std::to_string(h + 1);
    component.kind = ComponentKind::Interface;
    component.allowed = all_types;
    component.inputs = processing_ids;
    out.model.components.push_back(std::move(component));
  }

  // Hydraulic layer: a random backbone tree ordered upstream to downstream
  // plus density-controlled shortcut pipes.
  auto& scenario = out.scenario;
  const auto n = spec.hydraulic_nodes;
  SplitMix64 rng_water(derive_seed(spec.seed, 2));
  for (std::uint32_t i = 0; i < n; ++i) {
    WaterNode node;
    node.id = "n" + std::to_string(i + 1);
    if (rng_water.next_double() >= 0.3) {
      const double base = 0.05 + 0.2 * rng_water.next_double();
      for (int hour = 0; hour < 24; ++hour) {
        const double shape = std::sin(3.14159265358979323846 * hour / 24.0);
        node.demand[hour] = round6(base * (0.5 + 0.5 * shape * shape));
      }
    }
    scenario.nodes.push_back(std::move(node));
  }

  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng_water);

  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t k = 1; k < n; ++k) {
    const auto parent = order[rng_water.next_below(k)];
    edges.emplace(parent, order[k]);
  }
  const auto extras = static_cast<std::uint32_t>(std::lround(spec.pipe_density * n));
  for (std::uint32_t e = 0; e < extras && n >= 2; ++e) {
    const auto a = rng_water.next_below(n - 1);
    const auto b = a + 1 + rng_water.next_below(n - 1 - a);
    edges.emplace(order[a], order[b]);
  }

  std::vector<std::vector<std::size_t>> outgoing(n);
  for (const auto& [from, to] : edges) {
    WaterPipe pipe;
    pipe.from = scenario.nodes[from].id;
    pipe.to = scenario.nodes[to].id;
    pipe.travel = 1 + static_cast<std::uint32_t>(rng_water.next_below(3));
    outgoing[from].push_back(scenario.pipes.size());
    scenario.pipes.push_back(std::move(pipe));
  }
  for (std::uint32_t node = 0; node < n; ++node) {
    if (outgoing[node].empty()) continue;
    std::vector<double> weights;
    double total = 0.0;
    for (std::size_t i = 0; i < outgoing[node].size(); ++i) {
      weights.push_back(0.5 + 0.5 * rng_water.next_double());
      total += weights.back();
    }
    for (std::size_t i = 0; i < outgoing[node].size(); ++i) {
      scenario.pipes[outgoing[node][i]].fraction =
          round6(0.85 * weights[i] / total);
    }
  }

  // Injection candidates are source-like nodes: upstream in the backbone,
  // at least one outgoing pipe where possible, and no demand of their own
  // (they model tanks and reservoirs, not consumers).
  std::vector<std::uint32_t> candidates;
  for (const auto node : order) {
    if (candidates.size() == spec.injection_candidates) break;
    if (!outgoing[node].empty()) candidates.push_back(node);
  }
  for (const auto node : order) {
    if (candidates.size() == spec.injection_candidates) break;
    if (std::find(candidates.begin(), candidates.end(), node) == candidates.end()) {
      candidates.push_back(node);
    }
  }
  for (const auto candidate : candidates) {
    scenario.injections.push_back(scenario.nodes[candidate].id);
    scenario.nodes[candidate].demand.fill(0.0);
  }

  // Every candidate gets a sensor one hop downstream when placements allow,
  // so an intact detection chain sees an injection at pipe-travel delay; the
  // remaining sensors land on unused random nodes.
  SplitMix64 rng_place(derive_seed(spec.seed, 3));
  std::set<std::uint32_t> used;
  auto place = [&](std::uint32_t sensor, std::uint32_t node) {
    scenario.sensors[sensor_ids[sensor]] = scenario.nodes[node].id;
    used.insert(node);
  };
  std::unordered_map<std::string, std::uint32_t> node_index;
  for (std::uint32_t node = 0; node < n; ++node) {
    node_index.emplace(scenario.nodes[node].id, node);
  }
  std::uint32_t sensor = 0;
  for (const auto candidate : candidates) {
    if (sensor == spec.sensors) break;
    bool placed = false;
    for (const auto pipe_index : outgoing[candidate]) {
      const auto target = node_index.at(scenario.pipes[pipe_index].to);
      if (used.count(target) == 0) {
        place(sensor++, target);
        placed = true;
        break;
      }
    }
    if (!placed && used.count(candidate) == 0) {
      place(sensor++, candidate);  // alarms the moment mass appears
    }
  }
  while (sensor < spec.sensors) {
    const auto node = static_cast<std::uint32_t>(rng_place.next_below(n));
    if (used.count(node)) continue;
    place(sensor++, node);
  }

  scenario.theta = 0.02;
  scenario.horizon = 48;
  scenario.dt = 1.0;
  return out;
}

GeneratorSpec reference_spec() {
  GeneratorSpec spec;
  spec.sensors = 6;
  spec.processing = 3;
  spec.interfaces = 2;
  spec.fan_in = 2;
  spec.hydraulic_nodes = 25;
  spec.pipe_density = 0.3;
  spec.injection_candidates = 4;
  spec.seed = 42;
  return spec;
}

}  // namespace rdh
