#ifndef HANCOVA_DISTRIBUTIONS_HPP
#define HANCOVA_DISTRIBUTIONS_HPP

#include "hancova/types.hpp"

namespace hancova {

/// Regularized incomplete beta function I_x(a, b), evaluated with the
/// Lentz continued fraction. Absolute accuracy ~tol.prob_tol.
double incomplete_beta(double a, double b, double x, const Tolerance& tol = {});

/// Regularized lower incomplete gamma P(a, x) (series/continued fraction).
double incomplete_gamma_p(double a, double x, const Tolerance& tol = {});

/// CDF of Student's t with (possibly fractional) df > 0.
double t_cdf(double x, double df, const Tolerance& tol = {});

/// Density of Student's t.
double t_pdf(double x, double df);

/// Quantile of Student's t: t_cdf(t_quantile(p, df), df) == p. Solved by a
/// bracketed Newton/bisection hybrid on the CDF.
double t_quantile(double p, double df, const Tolerance& tol = {});

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile (rational initial guess refined by Newton).
double normal_quantile(double p);

/// Chi-square CDF with df > 0 (fractional allowed).
double chisq_cdf(double x, double df, const Tolerance& tol = {});

}  // namespace hancova

#endif
