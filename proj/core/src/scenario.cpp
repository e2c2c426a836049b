#include "adrcsim/scenario.hpp"

#include <cmath>
#include <string>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

void Scenario::validate()
{
  if (!plant) {
    throw ConfigError("scenario: a plant is required");
  }
  if (!(duration > 0.0)) {
    throw ConfigError("scenario: duration must be > 0");
  }
  if (!(sample_time > 0.0) || !(integrator_dt > 0.0)) {
    throw ConfigError("scenario: sample_time and integrator_dt must be > 0");
  }
  if (integrator_dt > sample_time) {
    throw ConfigError("scenario: integrator_dt must not exceed sample_time");
  }
  const double ratio = sample_time / integrator_dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
    throw ConfigError("scenario: sample_time must be an integer multiple of integrator_dt");
  }

  const int ch = channels();
  if (ch < 1) {
    throw ConfigError("scenario: at least one controller channel required");
  }
  if (ch != plant->input_dim() || ch != plant->output_dim()) {
    throw ConfigError("scenario: controller count must match plant input/output channels (" +
                      std::to_string(plant->input_dim()) + ")");
  }
  if (static_cast<int>(references.size()) != ch) {
    throw ConfigError("scenario: one reference signal per channel required");
  }
  if (static_cast<int>(disturbances.size()) != ch) {
    throw ConfigError("scenario: one disturbance signal per channel required");
  }
  if (static_cast<int>(noise.variances.size()) != ch) {
    throw ConfigError("scenario: one noise variance per channel required");
  }
  for (double v : noise.variances) {
    if (!(v >= 0.0)) {
      throw ConfigError("scenario: noise variances must be >= 0");
    }
  }

  for (auto & c : controllers) {
    c.validate();
    if (c.sample_time != sample_time) {
      throw ConfigError("scenario: controller sample_time must equal the scenario sample_time");
    }
  }

  if (initial_state.size() == 0) {
    initial_state = Eigen::VectorXd::Zero(plant->state_dim());
  } else if (initial_state.size() != plant->state_dim()) {
    throw ConfigError("scenario: initial_state length must match the plant state dimension");
  }

  if (initial_observer_states.empty()) {
    initial_observer_states.resize(static_cast<std::size_t>(ch));
  } else if (static_cast<int>(initial_observer_states.size()) != ch) {
    throw ConfigError("scenario: one initial observer state per channel (or none)");
  }
  for (int i = 0; i < ch; ++i) {
    auto & z0 = initial_observer_states[static_cast<std::size_t>(i)];
    if (z0.size() != 0 && z0.size() != controllers[static_cast<std::size_t>(i)].order + 1) {
      throw ConfigError("scenario: initial observer state must have length n + 1");
    }
  }

  // One seed governs the run; the noise model mirrors it.
  noise.seed = seed;
}

std::size_t Scenario::step_count() const
{
  return static_cast<std::size_t>(std::llround(duration / sample_time));
}

int Scenario::substeps() const
{
  return static_cast<int>(std::llround(sample_time / integrator_dt));
}

}  // namespace adrcsim
