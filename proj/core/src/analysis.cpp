#include "adrcsim/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "adrcsim/canonical.hpp"
#include "adrcsim/errors.hpp"
#include "adrcsim/gains.hpp"

namespace adrcsim
{

namespace
{

// Characteristic coefficients (monic, highest power first) of a closed-loop
// matrix whose only departure from the canonical shift structure is one row
// or column of gains. The structure itself is asserted exactly: it is what
// makes the coefficient read-off an identity rather than a computation.
Eigen::VectorXd companion_char_coefficients(const Eigen::MatrixXd & M, bool first_column_form)
{
  const Eigen::Index m = M.rows();
  if (M.cols() != m || m < 1) {
    throw ConfigError("characteristic coefficients: square matrix required");
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const bool gain_slot = first_column_form ? (j == 0) : (i == m - 1);
      if (gain_slot) continue;
      const double expected = (j == i + 1) ? 1.0 : 0.0;
      if (M(i, j) != expected) {
        throw ConfigError("characteristic coefficients: matrix is not in companion form");
      }
    }
  }
  Eigen::VectorXd coeff(m + 1);
  coeff(0) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    coeff(i + 1) = first_column_form ? -M(i, 0) : -M(m - 1, m - 1 - i);
  }
  return coeff;
}

PoleCheck compare_against_binomial(const Eigen::VectorXd & coeff, int m, double omega, double tol)
{
  if (!(tol > 0.0)) {
    throw ConfigError("pole check: tolerance must be > 0");
  }
  const Eigen::VectorXd target = binomial_expansion(m, omega);
  double max_dev = 0.0;
  for (Eigen::Index i = 0; i <= m; ++i) {
    const double scale = std::max(std::abs(target(i)), 1.0);
    max_dev = std::max(max_dev, std::abs(coeff(i) - target(i)) / scale);
  }
  return PoleCheck{max_dev <= tol, max_dev};
}

}  // namespace

Eigen::VectorXd binomial_expansion(int m, double omega)
{
  if (m < 1) {
    throw ConfigError("binomial_expansion: m must be >= 1");
  }
  // (s + omega)^m by repeated polynomial multiplication; this is the
  // independent route against which gain-built coefficients are matched.
  Eigen::VectorXd p = Eigen::VectorXd::Zero(m + 1);
  p(0) = 1.0;
  for (int round = 0; round < m; ++round) {
    for (int i = round + 1; i >= 1; --i) {
      p(i) = p(i) * omega + p(i - 1);
    }
    // p(0) stays 1: multiplying a monic polynomial by (s + omega).
  }
  return p;
}

Eigen::MatrixXd observer_closed_loop_matrix(const Eigen::VectorXd & l)
{
  const int m = static_cast<int>(l.size());
  const CanonicalMatrices mats = canonical_matrices(m);
  return mats.A - l * mats.c.transpose();
}

Eigen::MatrixXd controller_closed_loop_matrix(const Eigen::VectorXd & k)
{
  const int n = static_cast<int>(k.size());
  const CanonicalMatrices mats = canonical_matrices(n);
  return mats.A - mats.b * k.transpose();
}

PoleCheck verify_observer_poles(const Eigen::VectorXd & l, double omega_o, double tol)
{
  const Eigen::MatrixXd M = observer_closed_loop_matrix(l);
  const Eigen::VectorXd coeff = companion_char_coefficients(M, /*first_column_form=*/true);
  return compare_against_binomial(coeff, static_cast<int>(l.size()), omega_o, tol);
}

PoleCheck verify_observer_poles(int n, double omega_o, double tol)
{
  return verify_observer_poles(observer_gains(n, omega_o), omega_o, tol);
}

PoleCheck verify_controller_poles(const Eigen::VectorXd & k, double omega_c, double tol)
{
  const Eigen::MatrixXd M = controller_closed_loop_matrix(k);
  const Eigen::VectorXd coeff = companion_char_coefficients(M, /*first_column_form=*/false);
  return compare_against_binomial(coeff, static_cast<int>(k.size()), omega_c, tol);
}

PoleCheck verify_controller_poles(int n, double omega_c, double tol)
{
  return verify_controller_poles(controller_gains(n, omega_c), omega_c, tol);
}

double eigensolver_pole_deviation(const Eigen::MatrixXd & closed_loop, double omega)
{
  if (!(omega > 0.0)) {
    throw ConfigError("eigensolver_pole_deviation: omega must be > 0");
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(closed_loop);
  double max_dev = 0.0;
  for (Eigen::Index i = 0; i < closed_loop.rows(); ++i) {
    const std::complex<double> lambda = solver.eigenvalues()(i);
    max_dev = std::max(max_dev, std::abs(lambda + std::complex<double>(omega, 0.0)) / omega);
  }
  return max_dev;
}

RampSteadyState ramp_disturbance_steady_state(int n, double omega_o, double alpha)
{
  if (!std::isfinite(alpha)) {
    throw ConfigError("ramp_disturbance_steady_state: alpha must be finite");
  }
  const Eigen::VectorXd l = observer_gains(n, omega_o);
  const Eigen::MatrixXd M = observer_closed_loop_matrix(l);
  const CanonicalMatrices mats = canonical_matrices(n + 1);

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  const Eigen::VectorXd z = lu.solve(-alpha * mats.b);
  if (!z.allFinite()) {
    throw ConfigError("ramp_disturbance_steady_state: singular observation-error system");
  }
  return RampSteadyState{z(0), z(n)};
}

bool check_b_ratio(double b_true, double b_hat, int n)
{
  if (b_hat == 0.0) {
    throw ConfigError("check_b_ratio: b_hat must be nonzero");
  }
  const auto [lo, hi] = admissible_gain_ratio_bounds(n);
  const double ratio = b_true / b_hat;
  return ratio > lo && ratio < hi;
}

MetricsReport metrics(const Trace & trace, int channel, double T, double epsilon)
{
  if (trace.rows() == 0) {
    throw ConfigError("metrics: trace is empty");
  }
  if (channel < 0 || channel >= static_cast<int>(trace.channels.size())) {
    throw ConfigError("metrics: channel out of range");
  }
  const auto & c = trace.channels[static_cast<std::size_t>(channel)];
  const auto & t = trace.time;
  const std::size_t rows = trace.rows();

  MetricsReport report;
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    const double dt = t[i + 1] - t[i];
    report.iae += 0.5 * dt * (std::abs(c.error[i]) + std::abs(c.error[i + 1]));
    report.ise += 0.5 * dt * (c.error[i] * c.error[i] + c.error[i + 1] * c.error[i + 1]);
  }

  for (std::size_t i = 0; i < rows; ++i) {
    report.peak_control = std::max(report.peak_control, std::abs(c.control[i]));
    if (t[i] >= T) {
      report.max_abs_error_after = std::max(report.max_abs_error_after, std::abs(c.error[i]));
    }
  }
  report.practically_stabilized = report.max_abs_error_after < epsilon;

  // Earliest recorded instant after which |e| stays below epsilon.
  std::size_t first_settled = rows;
  for (std::size_t i = rows; i-- > 0;) {
    if (std::abs(c.error[i]) < epsilon) {
      first_settled = i;
    } else {
      break;
    }
  }
  report.settled = first_settled < rows;
  report.settle_time = report.settled ? t[first_settled] : 0.0;

  const std::size_t tail_start = rows - std::max<std::size_t>(rows / 10, 1);
  for (std::size_t i = tail_start; i < rows; ++i) {
    report.steady_state_error_band =
      std::max(report.steady_state_error_band, std::abs(c.error[i]));
  }
  return report;
}

}  // namespace adrcsim
