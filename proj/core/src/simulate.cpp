#include "adrcsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

Eigen::VectorXd rk4_plant_step(const PlantModel & plant, const Eigen::VectorXd & x,
                               const Eigen::VectorXd & u_held,
                               const std::vector<DisturbanceSignal> & disturbances,
                               double t, double dt)
{
  if (!(dt > 0.0)) {
    throw ConfigError("rk4_plant_step: dt must be > 0");
  }
  auto disturbance_at = [&](double tau) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(disturbances.size()));
    for (std::size_t i = 0; i < disturbances.size(); ++i) {
      d(static_cast<Eigen::Index>(i)) = disturbances[i](tau);
    }
    return d;
  };

  const Eigen::VectorXd k1 = plant.derivative(x, u_held, disturbance_at(t), t);
  const Eigen::VectorXd k2 =
    plant.derivative(x + 0.5 * dt * k1, u_held, disturbance_at(t + 0.5 * dt), t + 0.5 * dt);
  const Eigen::VectorXd k3 =
    plant.derivative(x + 0.5 * dt * k2, u_held, disturbance_at(t + 0.5 * dt), t + 0.5 * dt);
  const Eigen::VectorXd k4 =
    plant.derivative(x + dt * k3, u_held, disturbance_at(t + dt), t + dt);

  Eigen::VectorXd next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!next.allFinite()) {
    throw DivergenceError(t + dt, "plant state");
  }
  return next;
}

bool supports_true_disturbance(const PlantModel & plant)
{
  return dynamic_cast<const AnalyticSisoPlant *>(&plant) != nullptr;
}

double true_total_disturbance(const PlantModel & plant, const Eigen::VectorXd & x, double u,
                              double d_star, double b_hat_user, double t)
{
  const auto * analytic = dynamic_cast<const AnalyticSisoPlant *>(&plant);
  if (analytic == nullptr) {
    throw UnsupportedError("true_total_disturbance: plant '" + plant.name() +
                           "' has no closed-form f*, b*");
  }
  // Error-domain convention: f = -f*, b = -b*, and the block's error-domain
  // gain estimate is -b̂; d = -d* + f + (b - (-b̂))·u collapses to the form
  // below.
  return -d_star - analytic->f_star(x, t) + (b_hat_user - analytic->b_star()) * u;
}

Trace run(Scenario scenario)
{
  scenario.validate();
  const PlantModel & plant = *scenario.plant;
  const int ch = scenario.channels();
  const std::size_t steps = scenario.step_count();
  const int substeps = scenario.substeps();

  std::vector<AdrcBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(ch));
  for (int i = 0; i < ch; ++i) {
    blocks.emplace_back(scenario.controllers[static_cast<std::size_t>(i)]);
    const auto & z0 = scenario.initial_observer_states[static_cast<std::size_t>(i)];
    if (z0.size() != 0) {
      blocks.back().set_initial_state(z0);
    }
  }

  const bool with_true_disturbance = (ch == 1) && supports_true_disturbance(plant);

  Trace trace;
  trace.time.reserve(steps);
  trace.channels.resize(static_cast<std::size_t>(ch));
  for (auto & c : trace.channels) {
    c.reference.reserve(steps);
    c.output.reserve(steps);
    c.error.reserve(steps);
    c.control.reserve(steps);
    c.observer_state.reserve(steps);
    if (with_true_disturbance) c.true_disturbance.reserve(steps);
  }

  Eigen::VectorXd x = scenario.initial_state;
  Eigen::VectorXd w(ch), u(ch);

  for (std::size_t k = 0; k < steps; ++k) {
    const double t_k = static_cast<double>(k) * scenario.sample_time;
    try {
      for (int i = 0; i < ch; ++i) {
        w(i) = gaussian_sample(scenario.noise, i, k);
      }
      const Eigen::VectorXd y = plant.output(x, w);
      if (!y.allFinite()) {
        throw DivergenceError(t_k, "plant output");
      }

      trace.time.push_back(t_k);
      for (int i = 0; i < ch; ++i) {
        auto & c = trace.channels[static_cast<std::size_t>(i)];
        const double reference = scenario.references[static_cast<std::size_t>(i)](t_k);
        const double error = reference - y(i);
        c.reference.push_back(reference);
        c.output.push_back(y(i));
        c.error.push_back(error);
        // Snapshot before the update: the estimate the control decision uses.
        c.observer_state.push_back(blocks[static_cast<std::size_t>(i)].eso().z_hat);
        u(i) = blocks[static_cast<std::size_t>(i)].update(error, t_k);
        c.control.push_back(u(i));
      }
      if (with_true_disturbance) {
        const double d_star = scenario.disturbances[0](t_k);
        const double b_hat = scenario.controllers[0].input_gain(t_k);
        trace.channels[0].true_disturbance.push_back(
          true_total_disturbance(plant, x, u(0), d_star, b_hat, t_k));
      }

      // Zero-order hold: u stays fixed while the plant runs at the fine step.
      double t_sub = t_k;
      for (int s = 0; s < substeps; ++s) {
        x = rk4_plant_step(plant, x, u, scenario.disturbances, t_sub, scenario.integrator_dt);
        plant.project_state(x);
        t_sub += scenario.integrator_dt;
      }
    } catch (const DivergenceError & err) {
      trace.diverged = true;
      trace.divergence_time = err.time();
      trace.divergence_signal = err.signal();
      // Drop any half-recorded row so the partial trace stays rectangular.
      std::size_t rows = trace.time.size();
      for (const auto & c : trace.channels) {
        rows = std::min({rows, c.reference.size(), c.output.size(), c.error.size(),
                         c.control.size(), c.observer_state.size()});
        if (with_true_disturbance) rows = std::min(rows, c.true_disturbance.size());
      }
      trace.time.resize(rows);
      for (auto & c : trace.channels) {
        c.reference.resize(rows);
        c.output.resize(rows);
        c.error.resize(rows);
        c.control.resize(rows);
        c.observer_state.resize(rows);
        if (with_true_disturbance) c.true_disturbance.resize(rows);
      }
      return trace;
    }
  }
  return trace;
}

}  // namespace adrcsim
