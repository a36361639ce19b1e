#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdh/impact.hpp"

namespace rdh {

struct WaterNode {
  std::string id;
  // Fraction of the mass held at this node that consumers draw per step,
  // by hour of day. Values above 1 clamp to 1.
  std::array<double, 24> demand{};
};

struct WaterPipe {
  std::string from;
  std::string to;
  std::uint32_t travel = 1;  // whole steps in transit
  double fraction = 0.0;     // share of the node's outgoing mass
};

struct WaterScenario {
  std::vector<WaterNode> nodes;
  std::vector<WaterPipe> pipes;
  std::map<std::string, std::string> sensors;  // sensor component -> node
  std::vector<std::string> injections;         // candidate injection nodes
  double theta = 0.0;                          // alarm threshold, mass per step
  std::uint32_t horizon = 24;                  // simulated steps beyond step 0
  double dt = 1.0;                             // hours per step

  const WaterNode* find(const std::string& id) const;
};

ValidationReport validate_scenario(const WaterScenario& scenario,
                                   const SystemModel& model);

/// Mass traces of one injection, rows in scenario node order, steps
/// 0..horizon inclusive.
struct ContaminationTraces {
  std::vector<std::string> node_ids;
  std::vector<std::vector<double>> arriving;  // [node][step]
  std::vector<std::vector<double>> consumed;  // [node][step]
  std::vector<std::vector<double>> held;      // [node][step], after the split
  std::vector<double> in_transit;             // [step], scheduled beyond it
};

/// Unit mass enters at `injection` at step 0 and then walks the pipe graph:
/// each step a node consumes a demand share of what it holds and forwards
/// the rest along its pipes by flow fraction, arriving travel steps later.
/// Whatever the fractions do not cover stays at the node. Mass is conserved
/// at every step.
ContaminationTraces simulate_contamination(const WaterScenario& scenario,
                                           const std::string& injection);

/// Earliest step at which a functional sensor's node sees arriving mass at
/// or above theta. A sensor is functional when it is uncompromised and some
/// compromise-free directed path links it to an uncompromised interface.
std::optional<std::uint32_t> detection_time(const WaterScenario& scenario,
                                            const ContaminationTraces& traces,
                                            const CompromisedSet& compromised,
                                            const SystemModel& model);

/// Worst case over injection candidates of the mass consumed strictly before
/// detection (all of it when no functional sensor ever alarms).
double water_impact(const WaterScenario& scenario, const SystemModel& model,
                    const CompromisedSet& compromised);

/// Evaluator form of water_impact. Simulates every injection candidate once
/// at construction; evaluation only recomputes detection, so it is cheap
/// enough for risk enumeration loops.
class WaterImpact final : public ImpactEvaluator {
 public:
  /// Throws ValidationError when the scenario does not fit the instance.
  WaterImpact(const Instance& instance, WaterScenario scenario);

  double evaluate(const Instance& instance,
                  const std::vector<std::uint8_t>& compromised) const override;

  const WaterScenario& scenario() const { return scenario_; }

 private:
  struct CandidatePrecompute {
    std::vector<std::uint32_t> first_alarm;   // per node; horizon+1 = never
    std::vector<double> consumed_before;      // per step bound, cumulative
  };

  WaterScenario scenario_;
  std::vector<CandidatePrecompute> candidates_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> placements_;  // sensor, node
};

}  // namespace rdh
