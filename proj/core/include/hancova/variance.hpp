#ifndef HANCOVA_VARIANCE_HPP
#define HANCOVA_VARIANCE_HPP

#include <cstddef>
#include <utility>

#include "hancova/data.hpp"
#include "hancova/model.hpp"

namespace hancova {

/// Heteroscedasticity-consistent sandwich flavors.
enum class HcFlavor { HC0, HC1, HC2, HC3 };

/// Group-specific and derived variance estimates.
struct VarianceEstimates {
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  double sigma_b_sq = 0.0;   // variance of sqrt(N) (b1_hat - b2_hat)
  Vector sigma_pl_sq;        // length L, variance of sqrt(N) p_hat_l
  std::size_t df1 = 0;       // n_1 - 1 - r(M_1)
  std::size_t df2 = 0;       // n_2 - 1 - r(M_2)
};

/// Unbiased sub-model variance of group i (1 or 2):
/// sigma_i^2 = Y_i' Q_i Y_i / (n_i - 1 - r(M_i)) with Q_i the residual
/// projector of the group-i regression on (1, M_i). Throws
/// DegenerateGroupError when the degrees of freedom drop below 1.
std::pair<double, std::size_t> group_variance(const AncovaData& data, int i,
                                              const Tolerance& tol = {});

/// sigma_b^2 = N (sigma1_sq n1_star + sigma2_sq n2_star).
double sigma_b_sq(double sigma1_sq, double sigma2_sq, double n1_star, double n2_star,
                  std::size_t n_total);

/// sigma_{p_l}^2 = N (sigma1_sq n_tilde_1l + sigma2_sq n_tilde_2l).
double sigma_pl_sq(double sigma1_sq, double sigma2_sq, double n_tilde_1, double n_tilde_2,
                   std::size_t n_total);

/// All variance estimates for a fitted model in one call.
VarianceEstimates variance_estimates(const AncovaData& data, const FittedModel& fm,
                                     const Tolerance& tol = {});

/// Sandwich covariance of beta_hat = (b1, b2, p1..pL)' for the stacked
/// design Xt = (X : M). HC2/HC3 throw LeverageError when some h_ii = 1.
Matrix hcse_covariance(const Matrix& xt, const Vector& residuals, HcFlavor flavor,
                       const Tolerance& tol = {});

/// sigma_HC^2 = N a' Gamma a with contrast a = (1, -1, 0, ..., 0)'.
double sigma_b_hc(const Matrix& gamma, std::size_t n_total);

/// Classical pooled variance sigma_C^2 = Y'(I - H_Xt)Y / (N - 2 - r(M))
/// and its degrees of freedom.
std::pair<double, std::size_t> pooled_classical_variance(const AncovaData& data,
                                                         const Tolerance& tol = {});

/// Var(Y'QY) for Y = mu + eps with independent errors of variance sigma^2,
/// third central moment mu3 and fourth central moment mu4:
///   (mu4 - 3 sigma^4) q'q + 2 sigma^4 tr(Q^2) + 4 sigma^2 mu'Q^2 mu + 4 mu3 mu'Q q
/// where q = diag(Q).
double quadratic_form_variance(const Matrix& q, const Vector& mu, double sigma_sq,
                               double mu3, double mu4);

}  // namespace hancova

#endif
