#ifndef ADRCSIM_NOISE_HPP_
#define ADRCSIM_NOISE_HPP_

#include <cstdint>
#include <vector>

namespace adrcsim
{

/// Zero-mean Gaussian measurement noise, one variance per output channel.
/// Samples are derived counter-style from (seed, channel, step index), so a
/// given sample is the same no matter in which order samples are drawn.
struct NoiseModel
{
  std::vector<double> variances;
  std::uint64_t seed = 0;

  bool silent() const
  {
    for (double v : variances) {
      if (v != 0.0) return false;
    }
    return true;
  }
};

/// The sample for (noise.seed, channel, step_index). Variance 0 yields 0.0
/// exactly.
double gaussian_sample(const NoiseModel & noise, int channel, std::uint64_t step_index);

}  // namespace adrcsim

#endif  // ADRCSIM_NOISE_HPP_
