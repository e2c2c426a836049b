#ifndef ADRCSIM_PARAMETER_SOURCE_HPP_
#define ADRCSIM_PARAMETER_SOURCE_HPP_

#include <functional>
#include <utility>
#include <vector>

namespace adrcsim
{

/// A block parameter that is either a constant or supplied per step from
/// outside the block: a piecewise-constant schedule (serializable) or an
/// arbitrary callable (library use only).
class ParameterSource
{
public:
  enum class Kind { kConstant, kSchedule, kExternal };

  ParameterSource() : ParameterSource(0.0) {}
  ParameterSource(double value) : kind_(Kind::kConstant), value_(value) {}  // NOLINT: implicit by design

  /// Piecewise-constant schedule: each (time, value) pair takes effect at its
  /// time and holds until the next one. Before the first time the first value
  /// applies. Points must be strictly increasing in time.
  static ParameterSource schedule(std::vector<std::pair<double, double>> points);

  /// Arbitrary per-step signal. Not serializable.
  static ParameterSource external(std::function<double(double)> fn);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  double constant_value() const;  // throws unless constant
  const std::vector<std::pair<double, double>> & schedule_points() const;

private:
  Kind kind_;
  double value_ = 0.0;
  std::vector<std::pair<double, double>> points_;
  std::function<double(double)> fn_;
};

}  // namespace adrcsim

#endif  // ADRCSIM_PARAMETER_SOURCE_HPP_
