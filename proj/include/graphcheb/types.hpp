#pragma once

#include <Eigen/Core>

namespace gcheb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Size limit for dense-oracle routines (eigendecomposition, SVD, dense
// solves). Overridable through the GRAPHCHEB_ORACLE_CAP environment variable.
Index oracle_cap();

}  // namespace gcheb
