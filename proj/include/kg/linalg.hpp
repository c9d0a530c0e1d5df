#pragma once
#include <Eigen/Dense>

namespace kg {

struct EigDecomp {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors; // columns
};

// Dense symmetric eigendecomposition; divide-and-conquer for large matrices.
EigDecomp sym_eig(const Eigen::MatrixXd& a);

// Symmetric tridiagonal (zero or given diagonal) eigendecomposition via the
// MRRR solver, which stays O(n^2) for the full eigenvector set.
EigDecomp tridiag_eig(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub);

} // namespace kg
