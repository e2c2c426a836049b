#ifndef ADRCSIM_CANONICAL_HPP_
#define ADRCSIM_CANONICAL_HPP_

#include <Eigen/Dense>

namespace adrcsim
{

/// The standard vectors and matrices of the chain-of-integrators form in
/// dimension m: A has ones on the superdiagonal, b is the last unit vector,
/// c the first, and d carries a single one in entry m-2 (the row the scaled
/// input enters in the extended observer form).
struct CanonicalMatrices
{
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  Eigen::VectorXd d;
  /// d is ill-formed for m = 1; it is returned as the zero vector and flagged.
  bool d_defined = true;

  int dim() const { return static_cast<int>(b.size()); }
};

/// Builds the canonical matrices of dimension m >= 1. Throws ConfigError for m < 1.
CanonicalMatrices canonical_matrices(int m);

}  // namespace adrcsim

#endif  // ADRCSIM_CANONICAL_HPP_
