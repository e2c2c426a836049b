#include "adrcsim/plants.hpp"

#include <cmath>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

namespace
{

void check_dims(const PlantModel & plant, const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                const Eigen::VectorXd & d_star, double t)
{
  if (x.size() != plant.state_dim()) {
    throw ConfigError(plant.name() + ": state dimension mismatch");
  }
  if (u.size() != plant.input_dim()) {
    throw ConfigError(plant.name() + ": input dimension mismatch");
  }
  if (d_star.size() != plant.output_dim()) {
    throw ConfigError(plant.name() + ": disturbance dimension mismatch");
  }
  if (!x.allFinite() || !u.allFinite() || !d_star.allFinite()) {
    throw DivergenceError(t, plant.name() + " derivative input");
  }
}

void check_output_dims(const PlantModel & plant, const Eigen::VectorXd & x,
                       const Eigen::VectorXd & w)
{
  if (x.size() != plant.state_dim()) {
    throw ConfigError(plant.name() + ": state dimension mismatch");
  }
  if (w.size() != plant.output_dim()) {
    throw ConfigError(plant.name() + ": noise dimension mismatch");
  }
}

double sign(double v)
{
  if (v > 0.0) return 1.0;
  if (v < 0.0) return -1.0;
  return 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------
// GenericLinearPlant

GenericLinearPlant::GenericLinearPlant(std::vector<double> coefficients, double gain)
: coefficients_(std::move(coefficients)), gain_(gain)
{
  if (coefficients_.empty()) {
    throw ConfigError("generic_linear: at least one coefficient required");
  }
  if (gain_ == 0.0) {
    throw ConfigError("generic_linear: gain must be nonzero");
  }
}

Eigen::VectorXd GenericLinearPlant::derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                               const Eigen::VectorXd & d_star, double t) const
{
  check_dims(*this, x, u, d_star, t);
  const int n = state_dim();
  Eigen::VectorXd dx(n);
  for (int i = 0; i + 1 < n; ++i) {
    dx(i) = x(i + 1);
  }
  dx(n - 1) = f_star(x, t) + gain_ * u(0) + d_star(0);
  return dx;
}

Eigen::VectorXd GenericLinearPlant::output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const
{
  check_output_dims(*this, x, w);
  Eigen::VectorXd y(1);
  y(0) = x(0) + w(0);
  return y;
}

double GenericLinearPlant::f_star(const Eigen::VectorXd & x, double) const
{
  double acc = 0.0;
  for (int i = 0; i < state_dim(); ++i) {
    acc -= coefficients_[static_cast<std::size_t>(i)] * x(i);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// CoupledTanks

CoupledTanks::CoupledTanks(double pipe_area, double tank_area, double gravity)
: pipe_area_(pipe_area), tank_area_(tank_area), gravity_(gravity)
{
  if (!(pipe_area_ > 0.0) || !(tank_area_ > 0.0) || !(gravity_ > 0.0)) {
    throw ConfigError("coupled_tanks: areas and gravity must be > 0");
  }
}

Eigen::VectorXd CoupledTanks::derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                         const Eigen::VectorXd & d_star, double t) const
{
  check_dims(*this, x, u, d_star, t);
  const double ratio = pipe_area_ / tank_area_;
  // Levels below zero have no outflow; the square root sees the clamped level.
  const double h1 = std::max(x(0), 0.0);
  const double h2 = std::max(x(1), 0.0);
  const double eps_h = h1 - h2;
  const double channel_flow = ratio * sign(eps_h) * std::sqrt(2.0 * gravity_ * std::abs(eps_h));

  Eigen::VectorXd dx(2);
  dx(0) = -ratio * std::sqrt(2.0 * gravity_ * h1) - channel_flow + u(0) / tank_area_ + d_star(0);
  dx(1) = -ratio * std::sqrt(2.0 * gravity_ * h2) + channel_flow + u(1) / tank_area_ + d_star(1);
  return dx;
}

Eigen::VectorXd CoupledTanks::output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const
{
  check_output_dims(*this, x, w);
  return x + w;
}

void CoupledTanks::project_state(Eigen::VectorXd & x) const
{
  x(0) = std::max(x(0), 0.0);
  x(1) = std::max(x(1), 0.0);
}

// ---------------------------------------------------------------------------
// BuckConverter

LoadProfile LoadProfile::constant(double resistance)
{
  LoadProfile p;
  p.kind = Kind::kConstant;
  p.resistance = resistance;
  return p;
}

LoadProfile LoadProfile::harmonic(double amplitude, double angular_frequency, double offset)
{
  LoadProfile p;
  p.kind = Kind::kHarmonic;
  p.amplitude = amplitude;
  p.angular_frequency = angular_frequency;
  p.offset = offset;
  return p;
}

double LoadProfile::operator()(double t) const
{
  switch (kind) {
    case Kind::kConstant:
      return resistance;
    case Kind::kHarmonic:
      return amplitude * std::sin(angular_frequency * t) + offset;
    case Kind::kNone:
      break;
  }
  throw ConfigError("load profile: inactive profile has no resistance value");
}

BuckConverter::BuckConverter(double input_voltage, double inductance, double capacitance,
                             double load_resistance, LoadProfile external_load)
: input_voltage_(input_voltage),
  inductance_(inductance),
  capacitance_(capacitance),
  load_resistance_(load_resistance),
  external_load_(external_load)
{
  if (!(inductance_ > 0.0) || !(capacitance_ > 0.0) || !(load_resistance_ > 0.0)) {
    throw ConfigError("buck_converter: L, C, R must be > 0");
  }
}

double BuckConverter::nominal_input_gain() const
{
  return input_voltage_ / (capacitance_ * inductance_);
}

Eigen::VectorXd BuckConverter::derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                          const Eigen::VectorXd & d_star, double t) const
{
  check_dims(*this, x, u, d_star, t);
  const double v_o = x(0);
  // Capacitor equation: v̇_o = i_L/C - v_o/(R C) - i_ext/C. The external
  // load current is what realizes the time-varying disturbance physically.
  double external_current = 0.0;
  if (external_load_.active()) {
    external_current = buck_load_disturbance(*this, v_o, t);
  }
  Eigen::VectorXd dx(2);
  dx(0) = x(1) - v_o / (load_resistance_ * capacitance_) - external_current / capacitance_;
  // Inductor equation scaled by 1/C: d(i_L/C)/dt = (V_in u - v_o)/(L C).
  dx(1) = (input_voltage_ * u(0) - v_o) / (inductance_ * capacitance_) + d_star(0);
  return dx;
}

Eigen::VectorXd BuckConverter::output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const
{
  check_output_dims(*this, x, w);
  Eigen::VectorXd y(1);
  y(0) = x(0) + w(0);
  return y;
}

double buck_load_disturbance(const BuckConverter & plant, double v_o, double t)
{
  if (!plant.external_load().active()) {
    throw ConfigError("buck_converter: no external load profile configured");
  }
  const double resistance = plant.external_load()(t);
  if (!(resistance > 0.0)) {
    throw ConfigError("buck_converter: external load resistance must be > 0");
  }
  return v_o / resistance;
}

// ---------------------------------------------------------------------------
// DcMotor

DcMotor::DcMotor(double armature_resistance, double armature_inductance, double inertia,
                 double friction, double motor_constant)
: armature_resistance_(armature_resistance),
  armature_inductance_(armature_inductance),
  inertia_(inertia),
  friction_(friction),
  motor_constant_(motor_constant)
{
  if (!(armature_inductance_ > 0.0) || !(inertia_ > 0.0)) {
    throw ConfigError("dc_motor: armature inductance and inertia must be > 0");
  }
}

double DcMotor::f_star(const Eigen::VectorXd & x, double) const
{
  const double la_j = armature_inductance_ * inertia_;
  const double a1 = (armature_resistance_ * inertia_ + armature_inductance_ * friction_) / la_j;
  const double a0 =
    (armature_resistance_ * friction_ + motor_constant_ * motor_constant_) / la_j;
  return -a1 * x(1) - a0 * x(0);
}

double DcMotor::b_star() const
{
  return motor_constant_ / (armature_inductance_ * inertia_);
}

Eigen::VectorXd DcMotor::derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                    const Eigen::VectorXd & d_star, double t) const
{
  check_dims(*this, x, u, d_star, t);
  Eigen::VectorXd dx(2);
  dx(0) = x(1);
  dx(1) = f_star(x, t) + b_star() * u(0) + d_star(0);
  return dx;
}

Eigen::VectorXd DcMotor::output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const
{
  check_output_dims(*this, x, w);
  Eigen::VectorXd y(1);
  y(0) = x(0) + w(0);
  return y;
}

// ---------------------------------------------------------------------------
// TcLabThermal

double TcLabThermal::exchange_heat(double t1, double t2) const
{
  const double convective =
    params_.heat_transfer_coeff * params_.area_between * (t2 - t1);
  const double radiative =
    params_.emissivity * params_.stefan_boltzmann * params_.area *
    (t2 * t2 * t2 * t2 - t1 * t1 * t1 * t1);
  return convective + radiative;
}

double TcLabThermal::input_gain(int channel) const
{
  const double alpha = (channel == 0) ? params_.heater_factor_1 : params_.heater_factor_2;
  return alpha / (params_.mass * params_.heat_capacity);
}

Eigen::VectorXd TcLabThermal::derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                         const Eigen::VectorXd & d_star, double t) const
{
  check_dims(*this, x, u, d_star, t);
  const Params & p = params_;
  const double heat_capacity = p.mass * p.heat_capacity;
  const double t_inf = p.ambient_temperature;
  const double q12 = exchange_heat(x(0), x(1));

  auto ambient_losses = [&](double temp) {
    const double conv = p.heat_transfer_coeff * p.area * (t_inf - temp);
    const double rad = p.emissivity * p.stefan_boltzmann * p.area *
                       (t_inf * t_inf * t_inf * t_inf - temp * temp * temp * temp);
    return conv + rad;
  };

  Eigen::VectorXd dx(2);
  dx(0) = (ambient_losses(x(0)) + q12) / heat_capacity + input_gain(0) * u(0) + d_star(0);
  dx(1) = (ambient_losses(x(1)) - q12) / heat_capacity + input_gain(1) * u(1) + d_star(1);
  return dx;
}

Eigen::VectorXd TcLabThermal::output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const
{
  check_output_dims(*this, x, w);
  return x + w;
}

}  // namespace adrcsim
