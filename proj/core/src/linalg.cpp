#include "hancova/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <limits>

namespace hancova {

namespace {

void require_finite(const Matrix& a, const char* op) {
  if (!a.allFinite()) {
    throw InvalidInputError(std::string(op) + ": matrix has non-finite entries");
  }
}

double rank_cutoff(const Matrix& a, const Vector& sv, const Tolerance& tol) {
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  double rel = tol.rank_tol;
  if (rel == 0.0) {
    rel = static_cast<double>(std::max(a.rows(), a.cols())) *
          std::numeric_limits<double>::epsilon();
  }
  return rel * smax;
}

}  // namespace

Matrix pseudo_inverse(const Matrix& a, const Tolerance& tol) {
  require_finite(a, "pseudo_inverse");
  tol.validate();
  if (a.size() == 0) return Matrix(a.cols(), a.rows());

  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double cutoff = rank_cutoff(a, sv, tol);

  Vector inv_sv(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    inv_sv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
  }
  return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

Eigen::Index matrix_rank(const Matrix& a, const Tolerance& tol) {
  require_finite(a, "matrix_rank");
  tol.validate();
  if (a.size() == 0) return 0;

  Eigen::JacobiSVD<Matrix> svd(a);
  const Vector& sv = svd.singularValues();
  const double cutoff = rank_cutoff(a, sv, tol);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return r;
}

Matrix orth_complement_projector(const Matrix& x, const Tolerance& tol) {
  require_finite(x, "orth_complement_projector");
  const Eigen::Index n = x.rows();
  Matrix q = Matrix::Identity(n, n);
  if (x.cols() == 0) return q;
  q.noalias() -= x * pseudo_inverse(x.transpose() * x, tol) * x.transpose();
  // symmetrize away the last bits of round-off
  q = 0.5 * (q + q.transpose()).eval();
  return q;
}

Vector hat_diagonals(const Matrix& x, const Tolerance& tol) {
  require_finite(x, "hat_diagonals");
  const Eigen::Index n = x.rows();
  if (x.cols() == 0) return Vector::Zero(n);
  const Matrix g = pseudo_inverse(x.transpose() * x, tol);
  Vector h(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i) = x.row(i) * g * x.row(i).transpose();
  }
  return h;
}

}  // namespace hancova
