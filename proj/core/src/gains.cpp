#include "adrcsim/gains.hpp"

#include <vector>

#include "adrcsim/errors.hpp"

namespace adrcsim
{

namespace
{

void require_order(int n)
{
  if (n < 1) {
    throw ConfigError("gain parametrization: order n must be >= 1");
  }
}

}  // namespace

Eigen::VectorXd observer_gains(int n, double omega_o)
{
  require_order(n);
  if (!(omega_o > 0.0)) {
    throw ConfigError("observer_gains: omega_o must be > 0");
  }
  const int m = n + 1;
  Eigen::VectorXd l(m);
  double binom = 1.0;  // C(m, i) by the multiplicative recurrence
  double power = 1.0;
  for (int i = 1; i <= m; ++i) {
    binom *= static_cast<double>(m - i + 1) / static_cast<double>(i);
    power *= omega_o;
    l(i - 1) = binom * power;
  }
  return l;
}

Eigen::VectorXd controller_gains(int n, double omega_c)
{
  require_order(n);
  if (!(omega_c > 0.0)) {
    throw ConfigError("controller_gains: omega_c must be > 0");
  }
  // Pole-placement ordering: k_i = C(n, i-1) * omega_c^(n-i+1), so the
  // closed-loop companion matrix carries the characteristic coefficients of
  // (s + omega_c)^n in its bottom row. Powers by repeated multiplication keep
  // the bandwidth-scaling identities exact for power-of-two scale factors.
  std::vector<double> power(n + 1);
  power[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    power[j] = power[j - 1] * omega_c;
  }
  Eigen::VectorXd k(n);
  double binom = 1.0;  // C(n, i-1)
  for (int i = 1; i <= n; ++i) {
    if (i > 1) {
      binom *= static_cast<double>(n - i + 2) / static_cast<double>(i - 1);
    }
    k(i - 1) = binom * power[n - i + 1];
  }
  return k;
}

std::pair<double, double> admissible_gain_ratio_bounds(int n)
{
  require_order(n);
  return {0.0, 2.0 + 2.0 / static_cast<double>(n)};
}

}  // namespace adrcsim
