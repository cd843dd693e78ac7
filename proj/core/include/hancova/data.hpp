#ifndef HANCOVA_DATA_HPP
#define HANCOVA_DATA_HPP

#include <cstddef>
#include <vector>

#include "hancova/linalg.hpp"
#include "hancova/types.hpp"

namespace hancova {

/// Two-sample ANCOVA data in canonical form: all group-1 rows precede all
/// group-2 rows. Construct through make_ancova_data to canonicalize
/// arbitrary row order.
struct AncovaData {
  Vector y;                        // response, length N
  std::vector<int> group;          // labels in {1, 2}, two-block sorted
  Matrix covariates;               // N x L fixed covariate values (L >= 0)
  std::vector<std::size_t> original_row;  // position of each row in the input

  std::size_t n1() const;
  std::size_t n2() const;
  std::size_t n_total() const { return static_cast<std::size_t>(y.size()); }
  std::size_t n_covariates() const { return static_cast<std::size_t>(covariates.cols()); }

  Vector y_group(int g) const;
  Matrix covariates_group(int g) const;

  /// Throws unless the invariants hold: N = n1 + n2 with n1, n2 >= 2,
  /// two-block sorted groups, finite values, conformable shapes.
  void validate() const;
};

/// Build canonical AncovaData from rows in any order (stable sort by group).
AncovaData make_ancova_data(const Vector& y, const std::vector<int>& group,
                            const Matrix& covariates);

/// Covariate-free convenience overload.
AncovaData make_ancova_data(const Vector& y, const std::vector<int>& group);

/// Two samples given separately (canonical by construction).
AncovaData make_ancova_data(const Vector& y1, const Vector& y2);

}  // namespace hancova

#endif
