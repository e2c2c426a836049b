#ifndef ADRCSIM_SIGNALS_HPP_
#define ADRCSIM_SIGNALS_HPP_

#include <utility>
#include <vector>

namespace adrcsim
{

/// Reference trajectory for one channel. Evaluable at any t >= 0; only the
/// value itself is ever needed by the controller (error-domain design).
class ReferenceSignal
{
public:
  enum class Kind { kConstant, kStep, kSmoothStep, kSine, kComposite };

  static ReferenceSignal constant(double value);
  /// amplitude · 1(t - start_time), right-continuous.
  static ReferenceSignal step(double amplitude, double start_time);
  /// Cubic ease from 0 to amplitude over [start_time, start_time + rise_time].
  static ReferenceSignal smooth_step(double amplitude, double start_time, double rise_time);
  /// amplitude · sin(2π · frequency · t) + offset, frequency in Hz.
  static ReferenceSignal sine(double amplitude, double frequency, double offset);
  /// Sum of components.
  static ReferenceSignal composite(std::vector<ReferenceSignal> components);

  ReferenceSignal() : kind_(Kind::kConstant) {}

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double start_time() const { return start_time_; }
  double rise_time() const { return rise_time_; }
  double frequency() const { return frequency_; }
  double offset() const { return offset_; }
  const std::vector<ReferenceSignal> & components() const { return components_; }

private:
  Kind kind_;
  double amplitude_ = 0.0;
  double start_time_ = 0.0;
  double rise_time_ = 0.0;
  double frequency_ = 0.0;
  double offset_ = 0.0;
  std::vector<ReferenceSignal> components_;
};

/// External disturbance signal for one channel. The step variant uses the
/// right-continuous unit step (1 at its onset instant).
class DisturbanceSignal
{
public:
  enum class Kind { kNone, kStep, kHarmonic, kTable };

  static DisturbanceSignal none();
  static DisturbanceSignal step(double amplitude, double start_time);
  /// amplitude · sin(angular_frequency · t) + offset.
  static DisturbanceSignal harmonic(double amplitude, double angular_frequency, double offset);
  /// Piecewise-linear interpolation through (time, value) points, clamped to
  /// the end values outside the table range. Times must be strictly increasing.
  static DisturbanceSignal table(std::vector<std::pair<double, double>> points);

  DisturbanceSignal() : kind_(Kind::kNone) {}

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double start_time() const { return start_time_; }
  double angular_frequency() const { return angular_frequency_; }
  double offset() const { return offset_; }
  const std::vector<std::pair<double, double>> & points() const { return points_; }

private:
  Kind kind_;
  double amplitude_ = 0.0;
  double start_time_ = 0.0;
  double angular_frequency_ = 0.0;
  double offset_ = 0.0;
  std::vector<std::pair<double, double>> points_;
};

}  // namespace adrcsim

#endif  // ADRCSIM_SIGNALS_HPP_
