#include "hancova/variance.hpp"

namespace hancova {

namespace {

// Stacked design (X : M) for the pooled model.
Matrix stacked_design(const AncovaData& data, const Matrix& x) {
  Matrix xt(x.rows(), 2 + data.covariates.cols());
  xt.leftCols(2) = x;
  if (data.covariates.cols() > 0) xt.rightCols(data.covariates.cols()) = data.covariates;
  return xt;
}

}  // namespace

std::pair<double, std::size_t> group_variance(const AncovaData& data, int i,
                                              const Tolerance& tol) {
  data.validate();
  if (i != 1 && i != 2) throw InvalidInputError("group_variance: group index must be 1 or 2");

  const Vector yi = data.y_group(i);
  const Matrix mi = data.covariates_group(i);
  const auto ni = static_cast<std::size_t>(yi.size());
  const auto r_mi = static_cast<std::size_t>(matrix_rank(mi, tol));

  if (ni < r_mi + 2) throw DegenerateGroupError(i, ni, r_mi + 2);
  const std::size_t df = ni - 1 - r_mi;

  Matrix bi(yi.size(), 1 + mi.cols());
  bi.col(0).setOnes();
  if (mi.cols() > 0) bi.rightCols(mi.cols()) = mi;
  const Matrix qi = orth_complement_projector(bi, tol);
  const double ss = yi.dot(qi * yi);
  return {std::max(ss, 0.0) / static_cast<double>(df), df};
}

double sigma_b_sq(double sigma1_sq, double sigma2_sq, double n1_star, double n2_star,
                  std::size_t n_total) {
  return static_cast<double>(n_total) * (sigma1_sq * n1_star + sigma2_sq * n2_star);
}

double sigma_pl_sq(double sigma1_sq, double sigma2_sq, double n_tilde_1, double n_tilde_2,
                   std::size_t n_total) {
  return static_cast<double>(n_total) * (sigma1_sq * n_tilde_1 + sigma2_sq * n_tilde_2);
}

VarianceEstimates variance_estimates(const AncovaData& data, const FittedModel& fm,
                                     const Tolerance& tol) {
  VarianceEstimates v;
  std::tie(v.sigma1_sq, v.df1) = group_variance(data, 1, tol);
  std::tie(v.sigma2_sq, v.df2) = group_variance(data, 2, tol);
  const std::size_t n = data.n_total();
  v.sigma_b_sq = sigma_b_sq(v.sigma1_sq, v.sigma2_sq, fm.n1_star, fm.n2_star, n);
  const auto l = fm.n_tilde.rows();
  v.sigma_pl_sq.resize(l);
  for (Eigen::Index j = 0; j < l; ++j) {
    v.sigma_pl_sq(j) = sigma_pl_sq(v.sigma1_sq, v.sigma2_sq, fm.n_tilde(j, 0), fm.n_tilde(j, 1), n);
  }
  return v;
}

Matrix hcse_covariance(const Matrix& xt, const Vector& residuals, HcFlavor flavor,
                       const Tolerance& tol) {
  if (xt.rows() != residuals.size()) {
    throw InvalidInputError("hcse_covariance: residual length != design rows");
  }
  const auto n = xt.rows();
  const Matrix g = pseudo_inverse(xt.transpose() * xt, tol);

  Vector w = residuals.array().square();
  if (flavor == HcFlavor::HC2 || flavor == HcFlavor::HC3) {
    const Vector h = hat_diagonals(xt, tol);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lev = 1.0 - h(i);
      if (lev <= 0.0) {
        throw LeverageError("hcse_covariance: hat diagonal is 1 at row " + std::to_string(i));
      }
      w(i) /= flavor == HcFlavor::HC2 ? lev : lev * lev;
    }
  }

  Matrix meat = xt.transpose() * w.asDiagonal() * xt;
  Matrix gamma = g * meat * g;
  if (flavor == HcFlavor::HC1) {
    // N / (N - L - 1), L = number of covariate columns
    const double l = static_cast<double>(xt.cols() - 2);
    gamma *= static_cast<double>(n) / (static_cast<double>(n) - l - 1.0);
  }
  return 0.5 * (gamma + gamma.transpose()).eval();
}

double sigma_b_hc(const Matrix& gamma, std::size_t n_total) {
  if (gamma.rows() < 2 || gamma.cols() < 2) {
    throw InvalidInputError("sigma_b_hc: Gamma must be at least 2x2");
  }
  Vector a = Vector::Zero(gamma.rows());
  a(0) = 1.0;
  a(1) = -1.0;
  return static_cast<double>(n_total) * a.dot(gamma * a);
}

std::pair<double, std::size_t> pooled_classical_variance(const AncovaData& data,
                                                         const Tolerance& tol) {
  data.validate();
  const auto [x, m] = build_design(data);
  const Matrix xt = stacked_design(data, x);
  const auto n = data.n_total();
  const auto r_m = static_cast<std::size_t>(matrix_rank(m, tol));
  if (n < r_m + 3) {
    throw DegenerateGroupError(0, n, r_m + 3);
  }
  const std::size_t df = n - 2 - r_m;
  const Matrix q = orth_complement_projector(xt, tol);
  const double ss = data.y.dot(q * data.y);
  return {std::max(ss, 0.0) / static_cast<double>(df), df};
}

double quadratic_form_variance(const Matrix& q, const Vector& mu, double sigma_sq,
                               double mu3, double mu4) {
  if (q.rows() != q.cols()) throw InvalidInputError("quadratic_form_variance: Q must be square");
  if (mu.size() != q.rows()) throw InvalidInputError("quadratic_form_variance: mu length mismatch");
  const Vector qd = q.diagonal();
  const Matrix q2 = q * q;
  const double sigma4 = sigma_sq * sigma_sq;
  return (mu4 - 3.0 * sigma4) * qd.squaredNorm() + 2.0 * sigma4 * q2.trace() +
         4.0 * sigma_sq * mu.dot(q2 * mu) + 4.0 * mu3 * mu.dot(q * qd);
}

}  // namespace hancova
