#ifndef ADRCSIM_SCENARIO_HPP_
#define ADRCSIM_SCENARIO_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adrcsim/controller.hpp"
#include "adrcsim/noise.hpp"
#include "adrcsim/plants.hpp"
#include "adrcsim/signals.hpp"

namespace adrcsim
{

/// Fully declarative closed-loop experiment: plant, one controller block per
/// channel, per-channel reference and disturbance signals, seeded measurement
/// noise, and timing. A scenario plus its seed determines a run bit for bit.
struct Scenario
{
  std::string name;
  std::shared_ptr<const PlantModel> plant;
  std::vector<AdrcConfig> controllers;
  std::vector<ReferenceSignal> references;
  std::vector<DisturbanceSignal> disturbances;
  NoiseModel noise;
  double duration = 1.0;          // [s]
  double sample_time = 0.01;      // controller update period [s]
  double integrator_dt = 0.01;    // plant integration step [s]
  Eigen::VectorXd initial_state;  // empty = zeros
  std::vector<Eigen::VectorXd> initial_observer_states;  // empty entries = zeros
  std::uint64_t seed = 0;

  /// Parameter path -> "paper" or "default (not in paper)". Carried through
  /// serialization so sourced and invented numbers are never conflated.
  std::map<std::string, std::string> provenance;

  int channels() const { return static_cast<int>(controllers.size()); }

  /// Checks every invariant (positive durations, sample_time an integer
  /// multiple of integrator_dt, channel-count agreement, per-block rules,
  /// seed mirroring) and normalizes the empty initial-state shorthand.
  /// Throws ConfigError naming the violated rule.
  void validate();

  /// Number of controller steps in the run.
  std::size_t step_count() const;
  /// Integrator micro-steps per controller step.
  int substeps() const;
};

}  // namespace adrcsim

#endif  // ADRCSIM_SCENARIO_HPP_
