#ifndef ADRCSIM_GAINS_HPP_
#define ADRCSIM_GAINS_HPP_

#include <utility>

#include <Eigen/Dense>

namespace adrcsim
{

/// Observer gain vector l of length n+1 for observer bandwidth omega_o > 0:
/// l_i = C(n+1, i) * omega_o^i. Places every eigenvalue of
/// A_{n+1} - l*c^T at -omega_o.
Eigen::VectorXd observer_gains(int n, double omega_o);

/// Controller gain vector k of length n for controller bandwidth omega_c > 0,
/// ordered for pole placement: k_i = C(n, i-1) * omega_c^(n-i+1), so that the
/// closed-loop matrix A_n - b_n*k has every eigenvalue at -omega_c.
Eigen::VectorXd controller_gains(int n, double omega_c);

/// Open interval (0, 2 + 2/n) of admissible true-to-estimated input gain
/// ratios for which the closed loop is known to remain stable.
std::pair<double, double> admissible_gain_ratio_bounds(int n);

}  // namespace adrcsim

#endif  // ADRCSIM_GAINS_HPP_
