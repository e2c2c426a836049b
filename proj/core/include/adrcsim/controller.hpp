#ifndef ADRCSIM_CONTROLLER_HPP_
#define ADRCSIM_CONTROLLER_HPP_

#include <optional>

#include <Eigen/Dense>

#include "adrcsim/parameter_source.hpp"

namespace adrcsim
{

struct Saturation
{
  double lower = 0.0;
  double upper = 0.0;
};

/// Configuration of one controller block. The input gain estimate uses the
/// plant-gain sign convention: supply an estimate of the gain from u to the
/// controlled variable's n-th derivative, as in the worked examples. The
/// error-domain negation is internal.
struct AdrcConfig
{
  int order = 1;                                  // n
  ParameterSource input_gain{1.0};                // b̂, nonzero at every instant
  ParameterSource observer_bandwidth{10.0};       // ω_o [rad/s]
  ParameterSource controller_bandwidth{1.0};      // ω_c [rad/s]
  std::optional<Saturation> saturation;           // off by default
  std::optional<double> anti_peaking_window;      // T_d [s], off by default
  double sample_time = 0.01;                      // [s]

  /// Throws ConfigError naming the violated rule.
  void validate() const;
};

/// Extended state estimate: [ê_1 ... ê_n, d̂], where the last entry estimates
/// the lumped total disturbance.
struct EsoState
{
  Eigen::VectorXd z_hat;
  double t = 0.0;

  double disturbance_estimate() const { return z_hat(z_hat.size() - 1); }
};

/// Right-hand side of the extended state observer for measurement y, applied
/// input u, error-domain input gain b_hat, and gain vector l (length n+1):
///   z_dot = A*z + d*b_hat*u + l*(y - z_1)
/// with A, d the canonical matrices of dimension n+1.
Eigen::VectorXd eso_derivative(const Eigen::VectorXd & z_hat, double y, double u_applied,
                               double b_hat, const Eigen::VectorXd & l);

/// Advances the observer one classical RK4 step of length dt with y, u, and
/// b_hat held constant over the step. Throws DivergenceError when the state
/// or inputs leave the finite domain.
EsoState eso_step(const EsoState & state, double y, double u_applied, double b_hat,
                  const Eigen::VectorXd & l, double dt);

/// Control law before saturation and anti-peaking:
///   u* = (k·ê + d̂) / b_hat_user
/// with b_hat_user in the plant-gain convention. Throws ConfigError for a
/// zero gain estimate.
double raw_control(const Eigen::VectorXd & z_hat, const Eigen::VectorXd & k, double b_hat_user);

/// Clamp to [lower, upper]; identity when no limits are configured.
double apply_saturation(double u_star, const std::optional<Saturation> & limits);

/// Zero for 0 <= t <= T_d, the post-saturation signal afterwards; identity
/// when the window is not configured.
double apply_anti_peaking(double u_sat, double t, const std::optional<double> & window);

/// One controller channel: sequential state machine owning the observer state
/// and the gain cache. Parameter sources are re-evaluated on every update and
/// gains recomputed whenever a bandwidth value changes; the observer state is
/// carried across gain switches.
class AdrcBlock
{
public:
  explicit AdrcBlock(AdrcConfig config);

  /// One sample-by-sample update at time t (a multiple of sample_time) with
  /// the measured control error. Returns the control value applied to the
  /// plant over the coming sample interval; internally the observer is
  /// advanced one step using exactly that applied value.
  double update(double error_measurement, double t);

  void set_initial_state(const Eigen::VectorXd & z0);
  void reset();

  const AdrcConfig & config() const { return config_; }
  const EsoState & eso() const { return eso_; }
  const Eigen::VectorXd & observer_gain() const { return l_; }
  const Eigen::VectorXd & controller_gain() const { return k_; }
  double disturbance_estimate() const { return eso_.disturbance_estimate(); }

private:
  AdrcConfig config_;
  Eigen::VectorXd l_;
  Eigen::VectorXd k_;
  EsoState eso_;
  double cached_omega_o_ = 0.0;
  double cached_omega_c_ = 0.0;
};

}  // namespace adrcsim

#endif  // ADRCSIM_CONTROLLER_HPP_
