#pragma once

#include <cstdint>

#include "rdh/instance.hpp"
#include "rdh/water.hpp"

namespace rdh {

/// Knobs for the synthetic water-utility generator: a layered
/// sensor/processing/interface cyber graph over a random pipe network.
struct GeneratorSpec {
  std::uint32_t sensors = 6;
  std::uint32_t processing = 3;
  std::uint32_t interfaces = 2;
  std::uint32_t fan_in = 2;  // sensors feeding each processing component
  std::uint32_t hydraulic_nodes = 25;
  double pipe_density = 0.3;  // extra edges beyond the backbone, per node
  std::uint32_t injection_candidates = 4;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  SystemModel model;
  ImplementationCatalog catalog;
  WaterScenario scenario;
};

/// Deterministic per seed; the result always passes validate_model and
/// validate_scenario. The catalog carries five types with the standard
/// cost ladder (ten levels each).
GeneratedInstance generate_instance(const GeneratorSpec& spec);

/// The spec behind data/reference_instance.json; regenerating with it must
/// reproduce the committed files byte for byte.
GeneratorSpec reference_spec();

}  // namespace rdh
