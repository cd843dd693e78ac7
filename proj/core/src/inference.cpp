#include "hancova/inference.hpp"

#include <cmath>
#include <limits>

namespace hancova {

std::string method_name(Method m) {
  switch (m) {
    case Method::welch_satterthwaite_cov: return "welch_satterthwaite_cov";
    case Method::classical_ancova: return "classical_ancova";
    case Method::normal_approx: return "normal_approx";
    case Method::wild_bootstrap: return "wild_bootstrap";
    case Method::welch_plain: return "welch_plain";
  }
  return "unknown";
}

double satterthwaite_df(double v1, double v2, double w1, double w2, std::size_t df1,
                        std::size_t df2) {
  const double num = v1 * w1 + v2 * w2;
  const double den = v1 * v1 * w1 * w1 / static_cast<double>(df1) +
                     v2 * v2 * w2 * w2 / static_cast<double>(df2);
  if (den <= 0.0) return static_cast<double>(df1 + df2);
  return num * num / den;
}

namespace {

// Assemble a TestResult from effect, scaled SE and a t (or normal) reference.
TestResult make_result(Method method, double effect, double se, double hypothesized,
                       std::optional<double> df, double alpha, const Tolerance& tol) {
  TestResult r;
  r.method = method;
  r.effect = effect;
  r.se = se;
  r.alpha = alpha;
  r.df = df;
  if (se > 0.0) {
    r.statistic = (effect - hypothesized) / se;
  } else {
    r.statistic = effect == hypothesized ? 0.0 : std::numeric_limits<double>::infinity();
  }
  double quantile;
  if (df) {
    r.p_value = 2.0 * (1.0 - t_cdf(std::fabs(r.statistic), *df, tol));
    quantile = t_quantile(1.0 - alpha / 2.0, *df, tol);
  } else {
    r.p_value = 2.0 * (1.0 - normal_cdf(std::fabs(r.statistic)));
    quantile = normal_quantile(1.0 - alpha / 2.0);
  }
  r.ci_lower = effect - quantile * se;
  r.ci_upper = effect + quantile * se;
  return r;
}

}  // namespace

TestResult welch_cov_test(const AncovaData& data, double alpha, const Tolerance& tol,
                          double delta0) {
  const FittedModel fm = fit(data, tol);
  const VarianceEstimates v = variance_estimates(data, fm, tol);
  const auto n = data.n_total();
  const double kappa = satterthwaite_df(v.sigma1_sq, v.sigma2_sq, fm.n1_star, fm.n2_star,
                                        v.df1, v.df2);
  const double se = std::sqrt(v.sigma_b_sq / static_cast<double>(n));
  return make_result(Method::welch_satterthwaite_cov, fm.delta(), se, delta0, kappa, alpha,
                     tol);
}

TestResult covariate_test(const AncovaData& data, std::size_t l, double alpha,
                          const Tolerance& tol, double p0) {
  const FittedModel fm = fit(data, tol);
  if (l < 1 || static_cast<Eigen::Index>(l) > fm.p_hat.size()) {
    throw InvalidInputError("covariate_test: covariate index out of range");
  }
  const VarianceEstimates v = variance_estimates(data, fm, tol);
  const auto n = data.n_total();
  const auto j = static_cast<Eigen::Index>(l - 1);
  const double lambda = satterthwaite_df(v.sigma1_sq, v.sigma2_sq, fm.n_tilde(j, 0),
                                         fm.n_tilde(j, 1), v.df1, v.df2);
  const double se = std::sqrt(v.sigma_pl_sq(j) / static_cast<double>(n));
  return make_result(Method::welch_satterthwaite_cov, fm.p_hat(j), se, p0, lambda, alpha, tol);
}

TestResult classical_ancova_test(const AncovaData& data, double alpha, const Tolerance& tol,
                                 double delta0) {
  const FittedModel fm = fit(data, tol);
  const auto [sigma_c_sq, df_c] = pooled_classical_variance(data, tol);
  const auto [x, m] = build_design(data);
  Matrix xt(x.rows(), 2 + m.cols());
  xt.leftCols(2) = x;
  if (m.cols() > 0) xt.rightCols(m.cols()) = m;
  Vector c = Vector::Zero(xt.cols());
  c(0) = 1.0;
  c(1) = -1.0;
  const Matrix g = pseudo_inverse(xt.transpose() * xt, tol);
  const double se = std::sqrt(sigma_c_sq * c.dot(g * c));
  return make_result(Method::classical_ancova, fm.delta(), se, delta0,
                     static_cast<double>(df_c), alpha, tol);
}

TestResult welch_plain_test(const Vector& y1, const Vector& y2, double alpha, double delta0) {
  if (y1.size() < 2 || y2.size() < 2) {
    throw InvalidInputError("welch_plain_test: both samples need at least 2 values");
  }
  const double n1 = static_cast<double>(y1.size());
  const double n2 = static_cast<double>(y2.size());
  const double m1 = y1.mean();
  const double m2 = y2.mean();
  const double s1 = (y1.array() - m1).square().sum() / (n1 - 1.0);
  const double s2 = (y2.array() - m2).square().sum() / (n2 - 1.0);
  const double v1 = s1 / n1;
  const double v2 = s2 / n2;
  const double se = std::sqrt(v1 + v2);
  const double df = (v1 + v2) * (v1 + v2) / (v1 * v1 / (n1 - 1.0) + v2 * v2 / (n2 - 1.0));
  return make_result(Method::welch_plain, m1 - m2, se, delta0, df, alpha, Tolerance{});
}

TestResult normal_approx_test(const AncovaData& data, double alpha, const Tolerance& tol,
                              double delta0) {
  TestResult r = welch_cov_test(data, alpha, tol, delta0);
  const double effect = r.effect;
  const double se = r.se;
  TestResult out = make_result(Method::normal_approx, effect, se, delta0, std::nullopt,
                               alpha, tol);
  return out;
}

}  // namespace hancova
