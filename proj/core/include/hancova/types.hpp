#ifndef HANCOVA_TYPES_HPP
#define HANCOVA_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hancova {

/// Numerical tolerances threaded through the estimators.
///
/// rank_tol is a relative singular-value cutoff: singular values below
/// rank_tol * sigma_max are treated as zero. The default 0 selects the
/// automatic cutoff max(rows, cols) * machine-epsilon. prob_tol bounds the
/// absolute error of distribution CDFs and quantiles.
struct Tolerance {
  double rank_tol = 0.0;
  double prob_tol = 1e-10;

  void validate() const {
    if (rank_tol < 0.0) throw std::invalid_argument("Tolerance: rank_tol must be >= 0");
    if (!(prob_tol > 0.0)) throw std::invalid_argument("Tolerance: prob_tol must be > 0");
  }
};

/// Non-finite or otherwise malformed numeric input.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a structural contract (e.g. group vector not the sorted
/// two-block pattern).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group is too small for its covariate sub-model: n_i - 1 - r(M_i) < 1.
class DegenerateGroupError : public std::runtime_error {
 public:
  DegenerateGroupError(int group, std::size_t n, std::size_t required)
      : std::runtime_error("group " + std::to_string(group) + " is degenerate: n=" +
                           std::to_string(n) + " but the sub-model needs n >= " +
                           std::to_string(required)),
        group_(group),
        required_n_(required) {}

  int group() const noexcept { return group_; }
  std::size_t required_n() const noexcept { return required_n_; }

 private:
  int group_;
  std::size_t required_n_;
};

/// A hat-matrix diagonal equals 1, so leverage-adjusted residuals blow up.
class LeverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV/config parse failure; line is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hancova

#endif
