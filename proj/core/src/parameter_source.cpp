#include "adrcsim/parameter_source.hpp"

#include <algorithm>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

ParameterSource ParameterSource::schedule(std::vector<std::pair<double, double>> points)
{
  if (points.empty()) {
    throw ConfigError("parameter schedule: at least one (time, value) point required");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].first < points[i].first)) {
      throw ConfigError("parameter schedule: times must be strictly increasing");
    }
  }
  ParameterSource src;
  src.kind_ = Kind::kSchedule;
  src.points_ = std::move(points);
  return src;
}

ParameterSource ParameterSource::external(std::function<double(double)> fn)
{
  if (!fn) {
    throw ConfigError("external parameter source: callable required");
  }
  ParameterSource src;
  src.kind_ = Kind::kExternal;
  src.fn_ = std::move(fn);
  return src;
}

double ParameterSource::operator()(double t) const
{
  switch (kind_) {
    case Kind::kConstant:
      return value_;
    case Kind::kSchedule: {
      // Last point with time <= t; the first value applies before the table.
      auto it = std::upper_bound(points_.begin(), points_.end(), t,
                                 [](double lhs, const auto & p) { return lhs < p.first; });
      if (it == points_.begin()) return points_.front().second;
      return std::prev(it)->second;
    }
    case Kind::kExternal:
      return fn_(t);
  }
  return value_;
}

double ParameterSource::constant_value() const
{
  if (kind_ != Kind::kConstant) {
    throw ConfigError("parameter source is not a constant");
  }
  return value_;
}

const std::vector<std::pair<double, double>> & ParameterSource::schedule_points() const
{
  if (kind_ != Kind::kSchedule) {
    throw ConfigError("parameter source is not a schedule");
  }
  return points_;
}

}  // namespace adrcsim
