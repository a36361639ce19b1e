#include "rdh/water.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

namespace rdh {

const WaterNode* WaterScenario::find(const std::string& id) const {
  for (const auto& node : nodes) {
    if (node.id == id) return &node;
  }
  return nullptr;
}

ValidationReport validate_scenario(const WaterScenario& scenario,
                                   const SystemModel& model) {
  ValidationReport report;
  auto add = [&report](const std::string& subject, const std::string& message) {
    report.push_back({subject, message});
  };

  std::unordered_map<std::string, double> outgoing;
  std::unordered_map<std::string, int> node_seen;
  for (const auto& node : scenario.nodes) {
    if (++node_seen[node.id] > 1) add(node.id, "duplicate hydraulic node id");
    for (const auto demand : node.demand) {
      if (!(demand >= 0.0) || !std::isfinite(demand)) {
        add(node.id, "demand values must be finite and non-negative");
        break;
      }
    }
  }
  for (const auto& pipe : scenario.pipes) {
    const auto subject = pipe.from + "->" + pipe.to;
    if (node_seen.count(pipe.from) == 0) add(subject, "unknown source node");
    if (node_seen.count(pipe.to) == 0) add(subject, "unknown target node");
    if (pipe.travel < 1) add(subject, "travel time must be at least one step");
    if (!(pipe.fraction >= 0.0 && pipe.fraction <= 1.0)) {
      add(subject, "flow fraction outside [0, 1]");
    } else {
      outgoing[pipe.from] += pipe.fraction;
    }
  }
  for (const auto& [node, total] : outgoing) {
    if (total > 1.0 + 1e-9) {
      add(node, "outgoing flow fractions sum above 1");
    }
  }
  for (const auto& [component, node] : scenario.sensors) {
    const auto* def = model.find(component);
    if (def == nullptr) {
      add(component, "sensor placement references unknown component");
    } else if (def->kind != ComponentKind::Sensor) {
      add(component, "sensor placement references a non-sensor component");
    }
    if (node_seen.count(node) == 0) {
      add(component, "sensor placement references unknown node '" + node + "'");
    }
  }
  for (const auto& injection : scenario.injections) {
    if (node_seen.count(injection) == 0) {
      add(injection, "injection candidate is not a hydraulic node");
    }
  }
  if (!(scenario.theta >= 0.0) || !std::isfinite(scenario.theta)) {
    add("theta", "detection threshold must be finite and non-negative");
  }
  if (scenario.horizon < 1) add("horizon", "horizon must be at least one step");
  if (!(scenario.dt > 0.0) || !std::isfinite(scenario.dt)) {
    add("dt", "step length must be positive");
  }
  return report;
}

namespace {

std::unordered_map<std::string, std::uint32_t> node_indices(
    const WaterScenario& scenario) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < scenario.nodes.size(); ++i) {
    index.emplace(scenario.nodes[i].id, i);
  }
  return index;
}

std::size_t hour_of_step(std::uint32_t step, double dt) {
  return static_cast<std::size_t>(std::floor(step * dt)) % 24;
}

// Reverse reachability from uncompromised interfaces along input edges,
// restricted to uncompromised components. kinds/inputs are indexed alike.
std::vector<std::uint8_t> functional_sensor_flags(
    const std::vector<ComponentKind>& kinds,
    const std::vector<std::vector<std::uint32_t>>& inputs,
    const std::vector<std::uint8_t>& compromised) {
  const auto n = kinds.size();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (kinds[c] == ComponentKind::Interface && !compromised[c]) {
      visited[c] = 1;
      queue.push_back(c);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto input : inputs[queue[head]]) {
      if (!visited[input] && !compromised[input]) {
        visited[input] = 1;
        queue.push_back(input);
      }
    }
  }
  std::vector<std::uint8_t> functional(n, 0);
  for (std::uint32_t c = 0; c < n; ++c) {
    functional[c] = visited[c] && kinds[c] == ComponentKind::Sensor;
  }
  return functional;
}

std::vector<std::uint8_t> functional_sensor_flags(const Instance& instance,
                                                  const std::vector<std::uint8_t>& compromised) {
  std::vector<ComponentKind> kinds(instance.component_count());
  std::vector<std::vector<std::uint32_t>> inputs(instance.component_count());
  for (std::uint32_t c = 0; c < instance.component_count(); ++c) {
    kinds[c] = instance.kind(c);
    inputs[c].assign(instance.inputs(c).begin(), instance.inputs(c).end());
  }
  return functional_sensor_flags(kinds, inputs, compromised);
}

// Per-node earliest alarm step; horizon + 1 stands for "never".
std::vector<std::uint32_t> first_alarm_steps(const ContaminationTraces& traces,
                                             double theta, std::uint32_t horizon) {
  std::vector<std::uint32_t> first(traces.arriving.size(), horizon + 1);
  for (std::uint32_t node = 0; node < traces.arriving.size(); ++node) {
    for (std::uint32_t t = 0; t <= horizon; ++t) {
      if (traces.arriving[node][t] >= theta) {
        first[node] = t;
        break;
      }
    }
  }
  return first;
}

// Cumulative mass consumed strictly before each step; index horizon + 1
// holds the total over the whole run.
std::vector<double> consumed_prefix(const ContaminationTraces& traces,
                                    std::uint32_t horizon) {
  std::vector<double> prefix(horizon + 2, 0.0);
  for (std::uint32_t t = 0; t <= horizon; ++t) {
    double step_total = 0.0;
    for (const auto& row : traces.consumed) {
      step_total += row[t];
    }
    prefix[t + 1] = prefix[t] + step_total;
  }
  return prefix;
}

}  // namespace

ContaminationTraces simulate_contamination(const WaterScenario& scenario,
                                           const std::string& injection) {
  const auto index = node_indices(scenario);
  const auto injection_it = index.find(injection);
  if (injection_it == index.end() ||
      std::find(scenario.injections.begin(), scenario.injections.end(),
                injection) == scenario.injections.end()) {
    throw ValidationError("'" + injection + "' is not an injection candidate");
  }

  const auto n = scenario.nodes.size();
  const auto horizon = scenario.horizon;

  struct Outlet {
    std::uint32_t to;
    std::uint32_t travel;
    double fraction;
  };
  std::vector<std::vector<Outlet>> outlets(n);
  for (const auto& pipe : scenario.pipes) {
    outlets[index.at(pipe.from)].push_back(
        {index.at(pipe.to), pipe.travel, pipe.fraction});
  }

  ContaminationTraces traces;
  traces.node_ids.reserve(n);
  for (const auto& node : scenario.nodes) traces.node_ids.push_back(node.id);
  traces.arriving.assign(n, std::vector<double>(horizon + 1, 0.0));
  traces.consumed.assign(n, std::vector<double>(horizon + 1, 0.0));
  traces.held.assign(n, std::vector<double>(horizon + 1, 0.0));
  traces.in_transit.assign(horizon + 1, 0.0);

  std::vector<std::vector<double>> scheduled(horizon + 1,
                                             std::vector<double>(n, 0.0));
  scheduled[0][injection_it->second] = 1.0;
  double pending = 1.0;  // scheduled but not yet delivered, incl. past horizon
  std::vector<double> held(n, 0.0);

  for (std::uint32_t t = 0; t <= horizon; ++t) {
    for (std::uint32_t node = 0; node < n; ++node) {
      const double delivered = scheduled[t][node];
      pending -= delivered;
      traces.arriving[node][t] = delivered;
      held[node] += delivered;
    }
    for (std::uint32_t node = 0; node < n; ++node) {
      const double share =
          std::min(1.0, scenario.nodes[node].demand[hour_of_step(t, scenario.dt)]);
      const double consumed = held[node] * share;
      traces.consumed[node][t] = consumed;
      held[node] -= consumed;

      const double rest = held[node];
      double sent = 0.0;
      for (const auto& outlet : outlets[node]) {
        const double amount = rest * outlet.fraction;
        sent += amount;
        pending += amount;
        const std::uint64_t due = static_cast<std::uint64_t>(t) + outlet.travel;
        if (due <= horizon) {
          scheduled[due][outlet.to] += amount;
        }
        // Later arrivals stay in `pending`; they never materialize in the
        // traces but still count as in-transit mass.
      }
      held[node] = rest - sent;
      traces.held[node][t] = held[node];
    }
    traces.in_transit[t] = pending;
  }
  return traces;
}

std::optional<std::uint32_t> detection_time(const WaterScenario& scenario,
                                            const ContaminationTraces& traces,
                                            const CompromisedSet& compromised,
                                            const SystemModel& model) {
  std::unordered_map<std::string, std::uint32_t> component_index;
  for (std::uint32_t c = 0; c < model.components.size(); ++c) {
    component_index.emplace(model.components[c].id, c);
  }
  std::vector<ComponentKind> kinds(model.components.size());
  std::vector<std::vector<std::uint32_t>> inputs(model.components.size());
  std::vector<std::uint8_t> flags(model.components.size(), 0);
  for (std::uint32_t c = 0; c < model.components.size(); ++c) {
    kinds[c] = model.components[c].kind;
    for (const auto& input : model.components[c].inputs) {
      inputs[c].push_back(component_index.at(input));
    }
  }
  for (const auto& id : compromised) {
    const auto it = component_index.find(id);
    if (it == component_index.end()) {
      throw ValidationError("compromised set names unknown component '" + id + "'");
    }
    flags[it->second] = 1;
  }
  const auto functional = functional_sensor_flags(kinds, inputs, flags);

  std::unordered_map<std::string, std::uint32_t> trace_row;
  for (std::uint32_t i = 0; i < traces.node_ids.size(); ++i) {
    trace_row.emplace(traces.node_ids[i], i);
  }
  const auto alarms = first_alarm_steps(traces, scenario.theta, scenario.horizon);

  std::uint32_t earliest = scenario.horizon + 1;
  for (const auto& [component, node] : scenario.sensors) {
    const auto c = component_index.find(component);
    if (c == component_index.end() || !functional[c->second]) continue;
    earliest = std::min(earliest, alarms[trace_row.at(node)]);
  }
  if (earliest > scenario.horizon) return std::nullopt;
  return earliest;
}

double water_impact(const WaterScenario& scenario, const SystemModel& model,
                    const CompromisedSet& compromised) {
  if (scenario.injections.empty()) {
    throw ValidationError("scenario has no injection candidates");
  }
  double worst = 0.0;
  for (const auto& injection : scenario.injections) {
    const auto traces = simulate_contamination(scenario, injection);
    const auto prefix = consumed_prefix(traces, scenario.horizon);
    const auto detected = detection_time(scenario, traces, compromised, model);
    const auto bound = detected ? *detected : scenario.horizon + 1;
    worst = std::max(worst, prefix[bound]);
  }
  return worst;
}

WaterImpact::WaterImpact(const Instance& instance, WaterScenario scenario)
    : scenario_(std::move(scenario)) {
  const auto report = validate_scenario(scenario_, instance.model());
  if (!report.empty()) {
    throw ValidationError(describe(report));
  }
  if (scenario_.injections.empty()) {
    throw ValidationError("scenario has no injection candidates");
  }
  const auto index = node_indices(scenario_);
  for (const auto& injection : scenario_.injections) {
    const auto traces = simulate_contamination(scenario_, injection);
    candidates_.push_back({first_alarm_steps(traces, scenario_.theta, scenario_.horizon),
                           consumed_prefix(traces, scenario_.horizon)});
  }
  for (const auto& [component, node] : scenario_.sensors) {
    placements_.emplace_back(instance.component_index(component), index.at(node));
  }
}

double WaterImpact::evaluate(const Instance& instance,
                             const std::vector<std::uint8_t>& compromised) const {
  const auto functional = functional_sensor_flags(instance, compromised);
  double worst = 0.0;
  for (const auto& candidate : candidates_) {
    std::uint32_t earliest = scenario_.horizon + 1;
    for (const auto& [sensor, node] : placements_) {
      if (functional[sensor]) {
        earliest = std::min(earliest, candidate.first_alarm[node]);
      }
    }
    worst = std::max(worst, candidate.consumed_before[earliest]);
  }
  return worst;
}

}  // namespace rdh
