#include "adrcsim/canonical.hpp"

#include "adrcsim/errors.hpp"

namespace adrcsim
{

CanonicalMatrices canonical_matrices(int m)
{
  if (m < 1) {
    throw ConfigError("canonical_matrices: dimension must be >= 1");
  }
  CanonicalMatrices out;
  out.A = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    out.A(i, i + 1) = 1.0;
  }
  out.b = Eigen::VectorXd::Zero(m);
  out.b(m - 1) = 1.0;
  out.c = Eigen::VectorXd::Zero(m);
  out.c(0) = 1.0;
  out.d = Eigen::VectorXd::Zero(m);
  if (m >= 2) {
    out.d(m - 2) = 1.0;
  } else {
    out.d_defined = false;  // the unit entry has no slot in dimension 1
  }
  return out;
}

}  // namespace adrcsim
