#include "hancova/model.hpp"

namespace hancova {

std::pair<Matrix, Matrix> build_design(const AncovaData& data) {
  data.validate();
  const auto n = static_cast<Eigen::Index>(data.n_total());
  const auto n1 = static_cast<Eigen::Index>(data.n1());
  Matrix x = Matrix::Zero(n, 2);
  x.col(0).head(n1).setOnes();
  x.col(1).tail(n - n1).setOnes();
  return {std::move(x), data.covariates};
}

std::pair<Matrix, Matrix> generating_matrices(const Matrix& x, const Matrix& m,
                                              const Tolerance& tol) {
  const Matrix xtx_inv_xt = pseudo_inverse(x.transpose() * x, tol) * x.transpose();
  if (m.cols() == 0) {
    return {xtx_inv_xt, Matrix(0, x.rows())};
  }
  const Matrix q = orth_complement_projector(x, tol);
  const Matrix a = pseudo_inverse(m.transpose() * q * m, tol) * m.transpose() * q;
  const Matrix d = xtx_inv_xt - xtx_inv_xt * m * a;
  return {d, a};
}

std::pair<double, double> weights_n_star(const Matrix& d, std::size_t n1) {
  if (d.rows() != 2) throw InvalidInputError("weights_n_star: D must have 2 rows");
  const auto n = d.cols();
  const auto k = static_cast<Eigen::Index>(n1);
  if (k >= n) throw InvalidInputError("weights_n_star: n1 must be < N");
  const Vector diff = (d.row(0) - d.row(1)).transpose();
  return {diff.head(k).squaredNorm(), diff.tail(n - k).squaredNorm()};
}

std::pair<double, double> weights_n_tilde(const Matrix& a, std::size_t n1, std::size_t l) {
  if (l < 1 || static_cast<Eigen::Index>(l) > a.rows()) {
    throw InvalidInputError("weights_n_tilde: covariate index out of range");
  }
  const auto n = a.cols();
  const auto k = static_cast<Eigen::Index>(n1);
  const Vector row = a.row(static_cast<Eigen::Index>(l - 1)).transpose();
  return {row.head(k).squaredNorm(), row.tail(n - k).squaredNorm()};
}

FittedModel fit(const AncovaData& data, const Tolerance& tol) {
  const auto [x, m] = build_design(data);
  const auto l = m.cols();

  FittedModel fm;
  auto [d, a] = generating_matrices(x, m, tol);
  fm.d = std::move(d);
  fm.a = std::move(a);
  fm.b_hat = fm.d * data.y;
  fm.p_hat = l > 0 ? Vector(fm.a * data.y) : Vector(0);
  fm.residuals = data.y - x * fm.b_hat;
  if (l > 0) fm.residuals -= m * fm.p_hat;

  const std::size_t n1 = data.n1();
  std::tie(fm.n1_star, fm.n2_star) = weights_n_star(fm.d, n1);
  fm.n_tilde.resize(l, 2);
  for (Eigen::Index j = 0; j < l; ++j) {
    const auto [t1, t2] = weights_n_tilde(fm.a, n1, static_cast<std::size_t>(j) + 1);
    fm.n_tilde(j, 0) = t1;
    fm.n_tilde(j, 1) = t2;
  }
  fm.p_identifiable = l == 0 || matrix_rank(m, tol) == l;
  return fm;
}

}  // namespace hancova
