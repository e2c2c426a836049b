#ifndef ADRCSIM_SIMULATE_HPP_
#define ADRCSIM_SIMULATE_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adrcsim/scenario.hpp"

namespace adrcsim
{

/// Time series of one loop channel, one entry per controller step. The
/// control value at index k is the one applied over [t_k, t_{k+1}) and the
/// observer state is the one the control decision was computed from.
struct ChannelTrace
{
  std::vector<double> reference;
  std::vector<double> output;   // measured (noisy) output
  std::vector<double> error;    // reference - output
  std::vector<double> control;
  std::vector<Eigen::VectorXd> observer_state;
  /// Analytic total disturbance in the error-domain convention; empty when
  /// the plant has no closed-form decomposition.
  std::vector<double> true_disturbance;

  bool has_true_disturbance() const { return !true_disturbance.empty(); }
};

struct Trace
{
  std::vector<double> time;
  std::vector<ChannelTrace> channels;

  bool diverged = false;
  double divergence_time = 0.0;
  std::string divergence_signal;

  std::size_t rows() const { return time.size(); }
};

/// One classical RK4 step of the plant with the input held constant and the
/// disturbance signals evaluated at the stage times. Throws DivergenceError
/// on non-finite states.
Eigen::VectorXd rk4_plant_step(const PlantModel & plant, const Eigen::VectorXd & x,
                               const Eigen::VectorXd & u_held,
                               const std::vector<DisturbanceSignal> & disturbances,
                               double t, double dt);

/// Lumped total disturbance d = -d* - f*(x,t) + (b̂ - b*)·u in the
/// error-domain sign convention, for plants exposing f*, b* analytically.
/// Throws UnsupportedError otherwise.
double true_total_disturbance(const PlantModel & plant, const Eigen::VectorXd & x, double u,
                              double d_star, double b_hat_user, double t);

/// Whether true_total_disturbance is defined for this plant.
bool supports_true_disturbance(const PlantModel & plant);

/// Runs the closed loop: per controller step, sample noise, form the measured
/// outputs, update every block, then integrate the plant under zero-order
/// hold. Deterministic given the scenario seed. A divergence aborts the run
/// and returns the partial trace with the diagnostic filled in; configuration
/// errors throw.
Trace run(Scenario scenario);

}  // namespace adrcsim

#endif  // ADRCSIM_SIMULATE_HPP_
