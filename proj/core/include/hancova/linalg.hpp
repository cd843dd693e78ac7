#ifndef HANCOVA_LINALG_HPP
#define HANCOVA_LINALG_HPP

#include <Eigen/Core>

#include "hancova/types.hpp"

namespace hancova {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Moore-Penrose pseudoinverse via SVD. Singular values below the rank
/// cutoff (see Tolerance) are zeroed.
Matrix pseudo_inverse(const Matrix& a, const Tolerance& tol = {});

/// Number of singular values above the rank cutoff.
Eigen::Index matrix_rank(const Matrix& a, const Tolerance& tol = {});

/// Q = I - X (X'X)^- X', the orthogonal projector onto the complement of
/// the column space of X. Symmetric and idempotent; Q X = 0.
Matrix orth_complement_projector(const Matrix& x, const Tolerance& tol = {});

/// Diagonal of the hat matrix X (X'X)^- X'. Entries lie in [0, 1] and sum
/// to rank(X).
Vector hat_diagonals(const Matrix& x, const Tolerance& tol = {});

}  // namespace hancova

#endif
