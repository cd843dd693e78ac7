#ifndef HANCOVA_INFERENCE_HPP
#define HANCOVA_INFERENCE_HPP

#include <optional>
#include <string>

#include "hancova/data.hpp"
#include "hancova/distributions.hpp"
#include "hancova/model.hpp"
#include "hancova/variance.hpp"

namespace hancova {

enum class Method {
  welch_satterthwaite_cov,
  classical_ancova,
  normal_approx,
  wild_bootstrap,
  welch_plain,
};

std::string method_name(Method m);

/// Outcome of a two-sided test with its confidence interval. df is absent
/// for asymptotic (normal-reference) and bootstrap methods. The interval
/// always satisfies ci = effect -/+ quantile * se.
struct TestResult {
  Method method = Method::welch_satterthwaite_cov;
  double effect = 0.0;      // delta_hat or p_hat_l
  double se = 0.0;          // reported as sigma_hat / sqrt(N)
  double statistic = 0.0;   // (effect - hypothesized) / se
  std::optional<double> df;
  double p_value = 1.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  double alpha = 0.05;

  bool rejects() const { return p_value <= alpha; }
};

/// Satterthwaite degrees of freedom for a weighted variance sum
/// (v1 w1 + v2 w2)^2 / (v1^2 w1^2 / df1 + v2^2 w2^2 / df2).
double satterthwaite_df(double v1, double v2, double w1, double w2, std::size_t df1,
                        std::size_t df2);

/// Welch-Satterthwaite t-test with covariates for H0: b1 = b2 (+delta0).
TestResult welch_cov_test(const AncovaData& data, double alpha = 0.05,
                          const Tolerance& tol = {}, double delta0 = 0.0);

/// t-approximate test for H0: p_l = p0 (l is 1-based).
TestResult covariate_test(const AncovaData& data, std::size_t l, double alpha = 0.05,
                          const Tolerance& tol = {}, double p0 = 0.0);

/// Classical ANCOVA t-test with the pooled variance estimator.
TestResult classical_ancova_test(const AncovaData& data, double alpha = 0.05,
                                 const Tolerance& tol = {}, double delta0 = 0.0);

/// Covariate-free Welch t-test on two samples.
TestResult welch_plain_test(const Vector& y1, const Vector& y2, double alpha = 0.05,
                            double delta0 = 0.0);

/// Large-sample version of welch_cov_test with standard-normal reference.
TestResult normal_approx_test(const AncovaData& data, double alpha = 0.05,
                              const Tolerance& tol = {}, double delta0 = 0.0);

}  // namespace hancova

#endif
