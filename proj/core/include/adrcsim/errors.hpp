#ifndef ADRCSIM_ERRORS_HPP_
#define ADRCSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace adrcsim
{

/// Invalid configuration: bad parameter values, malformed scenario documents,
/// violated block invariants. Messages name the offending key and the rule.
class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A simulated signal left the finite domain. Carries the time and the name
/// of the first non-finite signal so instability runs stay diagnosable.
class DivergenceError : public std::runtime_error
{
public:
  DivergenceError(double time, std::string signal);

  double time() const { return time_; }
  const std::string & signal() const { return signal_; }

private:
  double time_;
  std::string signal_;
};

/// Requested quantity is not defined for this plant (e.g. the analytic total
/// disturbance on a plant without closed-form f*, b*).
class UnsupportedError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace adrcsim

#endif  // ADRCSIM_ERRORS_HPP_
