#include "adrcsim/signals.hpp"

#include <cmath>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

namespace
{
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

ReferenceSignal ReferenceSignal::constant(double value)
{
  ReferenceSignal s;
  s.kind_ = Kind::kConstant;
  s.offset_ = value;
  return s;
}

ReferenceSignal ReferenceSignal::step(double amplitude, double start_time)
{
  ReferenceSignal s;
  s.kind_ = Kind::kStep;
  s.amplitude_ = amplitude;
  s.start_time_ = start_time;
  return s;
}

ReferenceSignal ReferenceSignal::smooth_step(double amplitude, double start_time, double rise_time)
{
  if (!(rise_time > 0.0)) {
    throw ConfigError("smooth_step: rise_time must be > 0");
  }
  ReferenceSignal s;
  s.kind_ = Kind::kSmoothStep;
  s.amplitude_ = amplitude;
  s.start_time_ = start_time;
  s.rise_time_ = rise_time;
  return s;
}

ReferenceSignal ReferenceSignal::sine(double amplitude, double frequency, double offset)
{
  ReferenceSignal s;
  s.kind_ = Kind::kSine;
  s.amplitude_ = amplitude;
  s.frequency_ = frequency;
  s.offset_ = offset;
  return s;
}

ReferenceSignal ReferenceSignal::composite(std::vector<ReferenceSignal> components)
{
  if (components.empty()) {
    throw ConfigError("composite reference: at least one component required");
  }
  ReferenceSignal s;
  s.kind_ = Kind::kComposite;
  s.components_ = std::move(components);
  return s;
}

double ReferenceSignal::operator()(double t) const
{
  switch (kind_) {
    case Kind::kConstant:
      return offset_;
    case Kind::kStep:
      return (t >= start_time_) ? amplitude_ : 0.0;
    case Kind::kSmoothStep: {
      if (t <= start_time_) return 0.0;
      const double progress = (t - start_time_) / rise_time_;
      if (progress >= 1.0) return amplitude_;
      return amplitude_ * progress * progress * (3.0 - 2.0 * progress);
    }
    case Kind::kSine:
      return amplitude_ * std::sin(kTwoPi * frequency_ * t) + offset_;
    case Kind::kComposite: {
      double acc = 0.0;
      for (const auto & c : components_) acc += c(t);
      return acc;
    }
  }
  return 0.0;
}

DisturbanceSignal DisturbanceSignal::none()
{
  return DisturbanceSignal{};
}

DisturbanceSignal DisturbanceSignal::step(double amplitude, double start_time)
{
  DisturbanceSignal s;
  s.kind_ = Kind::kStep;
  s.amplitude_ = amplitude;
  s.start_time_ = start_time;
  return s;
}

DisturbanceSignal DisturbanceSignal::harmonic(double amplitude, double angular_frequency,
                                              double offset)
{
  DisturbanceSignal s;
  s.kind_ = Kind::kHarmonic;
  s.amplitude_ = amplitude;
  s.angular_frequency_ = angular_frequency;
  s.offset_ = offset;
  return s;
}

DisturbanceSignal DisturbanceSignal::table(std::vector<std::pair<double, double>> points)
{
  if (points.empty()) {
    throw ConfigError("disturbance table: at least one (time, value) point required");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].first < points[i].first)) {
      throw ConfigError("disturbance table: times must be strictly increasing");
    }
  }
  DisturbanceSignal s;
  s.kind_ = Kind::kTable;
  s.points_ = std::move(points);
  return s;
}

double DisturbanceSignal::operator()(double t) const
{
  switch (kind_) {
    case Kind::kNone:
      return 0.0;
    case Kind::kStep:
      // Right-continuous unit step: active at the onset instant itself.
      return (t >= start_time_) ? amplitude_ : 0.0;
    case Kind::kHarmonic:
      return amplitude_ * std::sin(angular_frequency_ * t) + offset_;
    case Kind::kTable: {
      if (t <= points_.front().first) return points_.front().second;
      if (t >= points_.back().first) return points_.back().second;
      for (std::size_t i = 1; i < points_.size(); ++i) {
        if (t <= points_[i].first) {
          const auto & [t0, v0] = points_[i - 1];
          const auto & [t1, v1] = points_[i];
          const double w = (t - t0) / (t1 - t0);
          return v0 + w * (v1 - v0);
        }
      }
      return points_.back().second;
    }
  }
  return 0.0;
}

}  // namespace adrcsim
