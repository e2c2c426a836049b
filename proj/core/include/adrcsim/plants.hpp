#ifndef ADRCSIM_PLANTS_HPP_
#define ADRCSIM_PLANTS_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace adrcsim
{

/// Continuous-time state-space plant with per-channel disturbance and
/// measurement-noise injection ports. derivative() and output() are pure;
/// parameter sets are immutable after construction.
class PlantModel
{
public:
  virtual ~PlantModel() = default;

  virtual int state_dim() const = 0;
  virtual int input_dim() const = 0;
  virtual int output_dim() const = 0;
  virtual std::string name() const = 0;

  /// Right-hand side with the external disturbance d_star entering additively
  /// in each channel's matched position. Throws DivergenceError on non-finite
  /// inputs.
  virtual Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                                     const Eigen::VectorXd & d_star, double t) const = 0;

  /// Controlled variable(s) plus additive measurement noise w.
  virtual Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const = 0;

  /// Projects a state back into the admissible domain after an integration
  /// step (e.g. nonnegative tank levels). Default: no-op.
  virtual void project_state(Eigen::VectorXd & x) const { (void)x; }
};

/// Plants with a closed-form scalar decomposition x^(n) = f*(x,t) + b*·u + d*;
/// needed by the analytic total-disturbance evaluation.
class AnalyticSisoPlant
{
public:
  virtual ~AnalyticSisoPlant() = default;
  virtual double f_star(const Eigen::VectorXd & x, double t) const = 0;
  virtual double b_star() const = 0;
};

/// Linear SISO plant in phase-variable form:
///   x^(n) = -(a_0 x + a_1 x' + ... + a_{n-1} x^(n-1)) + gain·u + d*
/// with the first phase variable as output.
class GenericLinearPlant final : public PlantModel, public AnalyticSisoPlant
{
public:
  GenericLinearPlant(std::vector<double> coefficients, double gain);
  /// The fourth-order benchmark: coefficients {1, 4, 6, 4}, unit gain, i.e.
  /// transfer function 1 / (s^4 + 4 s^3 + 6 s^2 + 4 s + 1).
  GenericLinearPlant() : GenericLinearPlant({1.0, 4.0, 6.0, 4.0}, 1.0) {}

  int state_dim() const override { return static_cast<int>(coefficients_.size()); }
  int input_dim() const override { return 1; }
  int output_dim() const override { return 1; }
  std::string name() const override { return "generic_linear"; }

  Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                             const Eigen::VectorXd & d_star, double t) const override;
  Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const override;

  double f_star(const Eigen::VectorXd & x, double t) const override;
  double b_star() const override { return gain_; }

  const std::vector<double> & coefficients() const { return coefficients_; }

private:
  std::vector<double> coefficients_;
  double gain_;
};

/// Two tanks joined by a flow channel, each with an independent inlet flow.
/// States are the two levels [m]; levels are clamped nonnegative with zero
/// outflow at the bottom.
class CoupledTanks final : public PlantModel
{
public:
  CoupledTanks(double pipe_area, double tank_area, double gravity);
  CoupledTanks() : CoupledTanks(7.5e-5, 1.2e-2, 9.81) {}

  int state_dim() const override { return 2; }
  int input_dim() const override { return 2; }
  int output_dim() const override { return 2; }
  std::string name() const override { return "coupled_tanks"; }

  Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                             const Eigen::VectorXd & d_star, double t) const override;
  Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const override;
  void project_state(Eigen::VectorXd & x) const override;

  double pipe_area() const { return pipe_area_; }
  double tank_area() const { return tank_area_; }
  double gravity() const { return gravity_; }

private:
  double pipe_area_;
  double tank_area_;
  double gravity_;
};

/// Time-varying load resistance profile for the buck converter.
struct LoadProfile
{
  enum class Kind { kNone, kConstant, kHarmonic };

  Kind kind = Kind::kNone;
  double resistance = 0.0;         // constant profile [Ω]
  double amplitude = 0.0;          // harmonic: amplitude·sin(Ω t) + offset
  double angular_frequency = 0.0;
  double offset = 0.0;

  static LoadProfile none() { return {}; }
  static LoadProfile constant(double resistance);
  static LoadProfile harmonic(double amplitude, double angular_frequency, double offset);

  bool active() const { return kind != Kind::kNone; }
  /// Resistance at time t; only valid when active().
  double operator()(double t) const;
};

/// Average model of a DC-DC buck converter. States are [v_o, i_L/C]
/// ([V], [V/s]): the second state is the inductor-current-derived rate, so
/// the time-varying load current is subtracted inside the capacitor equation
/// and the model reduces exactly to the nominal second-order dynamics as the
/// external load resistance goes to infinity.
class BuckConverter final : public PlantModel
{
public:
  BuckConverter(double input_voltage, double inductance, double capacitance,
                double load_resistance, LoadProfile external_load);
  BuckConverter() : BuckConverter(20.0, 0.01, 0.001, 50.0, LoadProfile::none()) {}

  int state_dim() const override { return 2; }
  int input_dim() const override { return 1; }
  int output_dim() const override { return 1; }
  std::string name() const override { return "buck_converter"; }

  Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                             const Eigen::VectorXd & d_star, double t) const override;
  Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const override;

  double input_voltage() const { return input_voltage_; }
  double inductance() const { return inductance_; }
  double capacitance() const { return capacitance_; }
  double load_resistance() const { return load_resistance_; }
  const LoadProfile & external_load() const { return external_load_; }

  /// Nominal input gain V_in/(C·L) from duty ratio to the second derivative
  /// of the output voltage.
  double nominal_input_gain() const;

private:
  double input_voltage_;
  double inductance_;
  double capacitance_;
  double load_resistance_;
  LoadProfile external_load_;
};

/// Additional load current v_o / R_L(t) [A] drawn by the time-varying
/// external load. Throws ConfigError when the profile is inactive or the
/// resistance is not positive at t.
double buck_load_disturbance(const BuckConverter & plant, double v_o, double t);

/// Second-order model of a brushed DC gearmotor in the velocity channel.
/// States are [ω, ω̇] ([rad/s], [rad/s²]). Default parameters are documented
/// placeholders, not measured values.
class DcMotor final : public PlantModel, public AnalyticSisoPlant
{
public:
  DcMotor(double armature_resistance, double armature_inductance, double inertia,
          double friction, double motor_constant);
  DcMotor() : DcMotor(2.4, 0.0024, 6.67e-2, 1e-5, 0.12) {}

  int state_dim() const override { return 2; }
  int input_dim() const override { return 1; }
  int output_dim() const override { return 1; }
  std::string name() const override { return "dc_motor"; }

  Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                             const Eigen::VectorXd & d_star, double t) const override;
  Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const override;

  double f_star(const Eigen::VectorXd & x, double t) const override;
  double b_star() const override;

  double armature_resistance() const { return armature_resistance_; }
  double armature_inductance() const { return armature_inductance_; }
  double inertia() const { return inertia_; }
  double friction() const { return friction_; }
  double motor_constant() const { return motor_constant_; }

private:
  double armature_resistance_;
  double armature_inductance_;
  double inertia_;
  double friction_;
  double motor_constant_;
};

/// Two-heater thermal rig: energy balance between heater power, ambient
/// losses, and convective plus radiative exchange between the units. States
/// are the two sensed temperatures [°C]. Default parameters are documented
/// placeholders, not measured values.
class TcLabThermal final : public PlantModel
{
public:
  struct Params
  {
    double mass = 0.004;                 // [kg]
    double heat_capacity = 500.0;        // [J/kg-K]
    double heat_transfer_coeff = 10.0;   // [W/m²-K]
    double area = 1.2e-3;                // [m²], not between heaters
    double area_between = 2e-4;          // [m²], between heaters
    double emissivity = 0.9;
    double stefan_boltzmann = 5.67e-8;   // [W/m²-K⁴]
    double heater_factor_1 = 0.01;       // [W/% heater]
    double heater_factor_2 = 0.0075;     // [W/% heater]
    double ambient_temperature = 23.0;   // [°C]
  };

  explicit TcLabThermal(Params params) : params_(params) {}
  TcLabThermal() : TcLabThermal(Params{}) {}

  int state_dim() const override { return 2; }
  int input_dim() const override { return 2; }
  int output_dim() const override { return 2; }
  std::string name() const override { return "tclab"; }

  Eigen::VectorXd derivative(const Eigen::VectorXd & x, const Eigen::VectorXd & u,
                             const Eigen::VectorXd & d_star, double t) const override;
  Eigen::VectorXd output(const Eigen::VectorXd & x, const Eigen::VectorXd & w) const override;

  const Params & params() const { return params_; }

  /// Heat exchanged between the units at temperatures T1, T2 [W]; enters the
  /// first channel with + and the second with -.
  double exchange_heat(double t1, double t2) const;

  /// Per-channel input gain α_i/(m·C_p).
  double input_gain(int channel) const;

private:
  Params params_;
};

}  // namespace adrcsim

#endif  // ADRCSIM_PLANTS_HPP_
