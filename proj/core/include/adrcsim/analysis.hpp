#ifndef ADRCSIM_ANALYSIS_HPP_
#define ADRCSIM_ANALYSIS_HPP_

#include <Eigen/Dense>

#include "adrcsim/simulate.hpp"

namespace adrcsim
{

struct PoleCheck
{
  bool pass = false;
  /// Maximum relative deviation of the closed-loop characteristic
  /// coefficients from those of (s + ω)^m. Zero coefficient deviation is
  /// equivalent to every eigenvalue sitting exactly at -ω.
  double max_deviation = 0.0;
};

/// Coefficients of (s + omega)^m, highest power first (monic), length m+1,
/// computed by repeated polynomial multiplication.
Eigen::VectorXd binomial_expansion(int m, double omega);

/// Verifies that the observer gain vector places every eigenvalue of
/// A_{n+1} - l·c^T at -omega_o, through the characteristic-polynomial
/// certificate. The closed-loop matrix is formed explicitly and its structure
/// asserted; a direct eigensolve cannot resolve the multiplicity-(n+1) root
/// to tight tolerances (see eigensolver_pole_deviation).
PoleCheck verify_observer_poles(const Eigen::VectorXd & l, double omega_o, double tol);
PoleCheck verify_observer_poles(int n, double omega_o, double tol);

/// Same certificate for the controller: eigenvalues of A_n - b_n·k at -omega_c.
PoleCheck verify_controller_poles(const Eigen::VectorXd & k, double omega_c, double tol);
PoleCheck verify_controller_poles(int n, double omega_c, double tol);

/// Max relative eigenvalue deviation |λ + ω|/ω of a closed-loop matrix via a
/// dense QR eigensolver. Limited by the ~ε^(1/m) conditioning of the
/// defective eigenvalue; exposed for cross-checks at realistic tolerances.
double eigensolver_pole_deviation(const Eigen::MatrixXd & closed_loop, double omega);

/// Closed-loop observer matrix A_{n+1} - l·c^T and controller matrix
/// A_n - b_n·k, for callers that want the matrices themselves.
Eigen::MatrixXd observer_closed_loop_matrix(const Eigen::VectorXd & l);
Eigen::MatrixXd controller_closed_loop_matrix(const Eigen::VectorXd & k);

struct RampSteadyState
{
  double state_error;        // steady-state first-component estimation error
  double disturbance_error;  // steady-state total-disturbance estimation error
};

/// Steady state of the observation-error subsystem under a constant
/// disturbance slope alpha: solves (A_{n+1} - l·c^T)·z = -b_{n+1}·alpha.
/// Closed forms: state_error = alpha/omega_o^(n+1),
/// disturbance_error = (n+1)·alpha/omega_o.
RampSteadyState ramp_disturbance_steady_state(int n, double omega_o, double alpha);

/// True iff b_true/b_hat lies in the open admissible interval (0, 2 + 2/n).
bool check_b_ratio(double b_true, double b_hat, int n);

struct MetricsReport
{
  double iae = 0.0;
  double ise = 0.0;
  double max_abs_error_after = 0.0;  // over t >= T
  bool settled = false;
  double settle_time = 0.0;          // meaningful only when settled
  double peak_control = 0.0;
  double steady_state_error_band = 0.0;  // max |e| over the trailing tenth
  bool practically_stabilized = false;   // max |e(t)| < epsilon for all t >= T
};

/// Error and control statistics for one trace channel. IAE/ISE by the
/// trapezoidal rule; settle time is the earliest recorded instant after which
/// |e| stays below epsilon.
MetricsReport metrics(const Trace & trace, int channel, double T, double epsilon);

}  // namespace adrcsim

#endif  // ADRCSIM_ANALYSIS_HPP_
