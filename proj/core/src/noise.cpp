#include "adrcsim/noise.hpp"

#include <cmath>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

namespace
{

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1]: never zero, so the log below stays finite.
double to_unit_interval(std::uint64_t bits)
{
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

double gaussian_sample(const NoiseModel & noise, int channel, std::uint64_t step_index)
{
  if (channel < 0 || static_cast<std::size_t>(channel) >= noise.variances.size()) {
    throw ConfigError("gaussian_sample: channel out of range");
  }
  const double variance = noise.variances[static_cast<std::size_t>(channel)];
  if (variance < 0.0) {
    throw ConfigError("gaussian_sample: variance must be >= 0");
  }
  if (variance == 0.0) {
    return 0.0;
  }

  // Counter-based derivation: the sample depends only on (seed, channel,
  // step), never on how many samples were drawn before it.
  std::uint64_t key = splitmix64(noise.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(channel) + 1)));
  key = splitmix64(key ^ step_index);
  const double u1 = to_unit_interval(splitmix64(key));
  const double u2 = to_unit_interval(splitmix64(key ^ 0xd2b74407b1ce6e93ULL));

  const double radius = std::sqrt(-2.0 * std::log(u1));
  return std::sqrt(variance) * radius * std::cos(kTwoPi * u2);
}

}  // namespace adrcsim
