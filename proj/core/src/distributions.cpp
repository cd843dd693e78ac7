#include "hancova/distributions.hpp"

#include <cmath>
#include <limits>

namespace hancova {

namespace {

constexpr int kMaxIter = 500;
constexpr double kFpMin = 1e-300;

// Lentz's algorithm for the continued fraction of I_x(a,b).
double beta_cont_frac(double a, double b, double x, double eps) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw std::runtime_error("incomplete_beta: continued fraction did not converge");
}

// Series for the regularized lower incomplete gamma.
double gamma_series(double a, double x, double eps) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * eps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw std::runtime_error("incomplete_gamma_p: series did not converge");
}

// Continued fraction for the regularized upper incomplete gamma.
double gamma_cont_frac(double a, double x, double eps) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw std::runtime_error("incomplete_gamma_p: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x, const Tolerance& tol) {
  tol.validate();
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidInputError("incomplete_beta: a, b must be > 0");
  if (std::isnan(x)) throw InvalidInputError("incomplete_beta: x is NaN");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;

  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cont_frac(a, b, x, tol.prob_tol) / a;
  }
  return 1.0 - bt * beta_cont_frac(b, a, 1.0 - x, tol.prob_tol) / b;
}

double incomplete_gamma_p(double a, double x, const Tolerance& tol) {
  tol.validate();
  if (!(a > 0.0)) throw InvalidInputError("incomplete_gamma_p: a must be > 0");
  if (std::isnan(x)) throw InvalidInputError("incomplete_gamma_p: x is NaN");
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) return gamma_series(a, x, tol.prob_tol);
  return 1.0 - gamma_cont_frac(a, x, tol.prob_tol);
}

double t_cdf(double x, double df, const Tolerance& tol) {
  if (!(df > 0.0)) throw InvalidInputError("t_cdf: df must be > 0");
  if (std::isnan(x)) throw InvalidInputError("t_cdf: x is NaN");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  if (x == 0.0) return 0.5;

  // P(|T| > |x|) = I_{df/(df+x^2)}(df/2, 1/2)
  const double tail = incomplete_beta(0.5 * df, 0.5, df / (df + x * x), tol);
  return x > 0.0 ? 1.0 - 0.5 * tail : 0.5 * tail;
}

double t_pdf(double x, double df) {
  if (!(df > 0.0)) throw InvalidInputError("t_pdf: df must be > 0");
  const double ln_c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                      0.5 * std::log(df * M_PI);
  return std::exp(ln_c - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

double t_quantile(double p, double df, const Tolerance& tol) {
  if (!(df > 0.0)) throw InvalidInputError("t_quantile: df must be > 0");
  if (!(p > 0.0 && p < 1.0)) throw InvalidInputError("t_quantile: p must be in (0,1)");
  if (p == 0.5) return 0.0;

  // Bracket the root, starting from the normal quantile.
  double guess = normal_quantile(p);
  double lo, hi;
  if (p > 0.5) {
    lo = 0.0;
    hi = std::max(1.0, 2.0 * std::fabs(guess));
    while (t_cdf(hi, df, tol) < p) hi *= 2.0;
  } else {
    hi = 0.0;
    lo = -std::max(1.0, 2.0 * std::fabs(guess));
    while (t_cdf(lo, df, tol) > p) lo *= 2.0;
  }

  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double f = t_cdf(x, df, tol) - p;
    if (std::fabs(f) < tol.prob_tol) return x;
    if (f > 0.0) hi = x; else lo = x;
    const double dens = t_pdf(x, df);
    double next = dens > 0.0 ? x - f / dens : x;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    if (next == x) break;
    x = next;
  }
  return x;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInputError("normal_quantile: p must be in (0,1)");

  // Acklam's rational approximation, then two Newton corrections.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    const double e = normal_cdf(x) - p;
    const double dens = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    if (dens > 0.0) x -= e / dens;
  }
  return x;
}

double chisq_cdf(double x, double df, const Tolerance& tol) {
  if (!(df > 0.0)) throw InvalidInputError("chisq_cdf: df must be > 0");
  if (std::isnan(x)) throw InvalidInputError("chisq_cdf: x is NaN");
  if (x <= 0.0) return 0.0;
  return incomplete_gamma_p(0.5 * df, 0.5 * x, tol);
}

}  // namespace hancova
