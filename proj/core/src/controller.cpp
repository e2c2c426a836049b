#include "adrcsim/controller.hpp"

#include <cmath>

#include "adrcsim/errors.hpp"
#include "adrcsim/gains.hpp"

namespace adrcsim
{

namespace
{

bool all_finite(const Eigen::VectorXd & v)
{
  return v.allFinite();
}

}  // namespace

void AdrcConfig::validate() const
{
  if (order < 1) {
    throw ConfigError("adrc: order n must be >= 1");
  }
  if (!(sample_time > 0.0)) {
    throw ConfigError("adrc: sample_time must be > 0");
  }
  if (input_gain.is_constant() && input_gain.constant_value() == 0.0) {
    throw ConfigError("adrc: input gain estimate must be nonzero");
  }
  if (observer_bandwidth.is_constant() && !(observer_bandwidth.constant_value() > 0.0)) {
    throw ConfigError("adrc: observer bandwidth must be > 0");
  }
  if (controller_bandwidth.is_constant() && !(controller_bandwidth.constant_value() > 0.0)) {
    throw ConfigError("adrc: controller bandwidth must be > 0");
  }
  if (saturation && !(saturation->lower < saturation->upper)) {
    throw ConfigError("adrc: saturation requires u_min < u_max");
  }
  if (anti_peaking_window && !(*anti_peaking_window > 0.0)) {
    throw ConfigError("adrc: anti-peaking requires T_d > 0");
  }
}

Eigen::VectorXd eso_derivative(const Eigen::VectorXd & z_hat, double y, double u_applied,
                               double b_hat, const Eigen::VectorXd & l)
{
  const Eigen::Index m = z_hat.size();
  if (m < 2) {
    throw ConfigError("eso_derivative: extended state must have dimension >= 2");
  }
  if (l.size() != m) {
    throw ConfigError("eso_derivative: gain vector length must match the extended state");
  }
  const double innovation = y - z_hat(0);
  Eigen::VectorXd z_dot(m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    z_dot(i) = z_hat(i + 1) + l(i) * innovation;
  }
  z_dot(m - 2) += b_hat * u_applied;  // the scaled input enters row n
  z_dot(m - 1) = l(m - 1) * innovation;
  return z_dot;
}

EsoState eso_step(const EsoState & state, double y, double u_applied, double b_hat,
                  const Eigen::VectorXd & l, double dt)
{
  if (!(dt > 0.0)) {
    throw ConfigError("eso_step: dt must be > 0");
  }
  if (!std::isfinite(y)) {
    throw DivergenceError(state.t, "measurement y");
  }
  if (!std::isfinite(u_applied)) {
    throw DivergenceError(state.t, "control u");
  }
  if (!all_finite(state.z_hat)) {
    throw DivergenceError(state.t, "observer state z_hat");
  }

  const Eigen::VectorXd & z = state.z_hat;
  const Eigen::VectorXd k1 = eso_derivative(z, y, u_applied, b_hat, l);
  const Eigen::VectorXd k2 = eso_derivative(z + 0.5 * dt * k1, y, u_applied, b_hat, l);
  const Eigen::VectorXd k3 = eso_derivative(z + 0.5 * dt * k2, y, u_applied, b_hat, l);
  const Eigen::VectorXd k4 = eso_derivative(z + dt * k3, y, u_applied, b_hat, l);

  EsoState next;
  next.z_hat = z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  next.t = state.t + dt;
  if (!all_finite(next.z_hat)) {
    throw DivergenceError(next.t, "observer state z_hat");
  }
  return next;
}

double raw_control(const Eigen::VectorXd & z_hat, const Eigen::VectorXd & k, double b_hat_user)
{
  if (b_hat_user == 0.0) {
    throw ConfigError("raw_control: input gain estimate must be nonzero");
  }
  const Eigen::Index n = k.size();
  if (z_hat.size() != n + 1) {
    throw ConfigError("raw_control: state length must be gain length + 1");
  }
  const double feedback = k.dot(z_hat.head(n));
  const double d_hat = z_hat(n);
  return (feedback + d_hat) / b_hat_user;
}

double apply_saturation(double u_star, const std::optional<Saturation> & limits)
{
  if (!limits) return u_star;
  if (u_star < limits->lower) return limits->lower;
  if (u_star > limits->upper) return limits->upper;
  return u_star;
}

double apply_anti_peaking(double u_sat, double t, const std::optional<double> & window)
{
  if (!window) return u_sat;
  return (t <= *window) ? 0.0 : u_sat;
}

AdrcBlock::AdrcBlock(AdrcConfig config) : config_(std::move(config))
{
  config_.validate();
  eso_.z_hat = Eigen::VectorXd::Zero(config_.order + 1);
  eso_.t = 0.0;
}

void AdrcBlock::set_initial_state(const Eigen::VectorXd & z0)
{
  if (z0.size() != config_.order + 1) {
    throw ConfigError("adrc: initial observer state must have length n + 1");
  }
  eso_.z_hat = z0;
}

void AdrcBlock::reset()
{
  eso_.z_hat.setZero();
  eso_.t = 0.0;
  cached_omega_o_ = 0.0;
  cached_omega_c_ = 0.0;
  l_.resize(0);
  k_.resize(0);
}

double AdrcBlock::update(double error_measurement, double t)
{
  const double b_hat = config_.input_gain(t);
  if (!std::isfinite(b_hat) || b_hat == 0.0) {
    throw ConfigError("adrc: input gain estimate must be finite and nonzero at every instant");
  }
  const double omega_o = config_.observer_bandwidth(t);
  const double omega_c = config_.controller_bandwidth(t);
  if (omega_o != cached_omega_o_) {
    l_ = observer_gains(config_.order, omega_o);
    cached_omega_o_ = omega_o;
  }
  if (omega_c != cached_omega_c_) {
    k_ = controller_gains(config_.order, omega_c);
    cached_omega_c_ = omega_c;
  }

  const double u_star = raw_control(eso_.z_hat, k_, b_hat);
  const double u_sat = apply_saturation(u_star, config_.saturation);
  const double u_out = apply_anti_peaking(u_sat, t, config_.anti_peaking_window);

  // The observer sees the value actually applied to the plant; with the
  // plant-gain convention the error-domain input gain is -b̂.
  eso_ = eso_step(eso_, error_measurement, u_out, -b_hat, l_, config_.sample_time);
  return u_out;
}

}  // namespace adrcsim
