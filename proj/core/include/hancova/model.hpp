#ifndef HANCOVA_MODEL_HPP
#define HANCOVA_MODEL_HPP

#include <cstddef>
#include <utility>

#include "hancova/data.hpp"

namespace hancova {

/// Ordinary least squares fit of the two-sample ANCOVA model
/// y = X b + M p + eps, with the generating matrices D (b_hat = D y) and
/// A (p_hat = A y) and the variance weights derived from their rows.
struct FittedModel {
  Vector b_hat;       // length 2: adjusted group effects
  Vector p_hat;       // length L: common regression coefficients
  Vector residuals;   // length N: y - X b_hat - M p_hat
  Matrix d;           // 2 x N
  Matrix a;           // L x N
  double n1_star = 0.0;
  double n2_star = 0.0;
  Matrix n_tilde;     // L x 2, row l = (n_tilde_{1,l}, n_tilde_{2,l})
  bool p_identifiable = true;  // false when rank(M) < L; only delta is estimable then

  double delta() const { return b_hat(0) - b_hat(1); }
};

/// Design matrices: X is the N x 2 block-of-ones group design; the
/// covariate matrix is passed through. Throws StructuralError when the
/// group vector is not two-block sorted.
std::pair<Matrix, Matrix> build_design(const AncovaData& data);

/// Generating matrices D = (X'X)^{-1}X' - (X'X)^{-1}X'M(M'QM)^- M'Q and
/// A = (M'QM)^- M'Q. Rank-deficient M'QM goes through the Moore-Penrose
/// inverse; L = 0 yields D = (X'X)^{-1}X' and an empty A.
std::pair<Matrix, Matrix> generating_matrices(const Matrix& x, const Matrix& m,
                                              const Tolerance& tol = {});

/// n_i* = sum over group-i columns of (d_1j - d_2j)^2.
std::pair<double, double> weights_n_star(const Matrix& d, std::size_t n1);

/// n_tilde_{i,l} = sum over group-i columns of a_lj^2 (l is 1-based).
std::pair<double, double> weights_n_tilde(const Matrix& a, std::size_t n1, std::size_t l);

/// Full OLS fit. Never rejects degenerate groups; the variance module does.
FittedModel fit(const AncovaData& data, const Tolerance& tol = {});

}  // namespace hancova

#endif
