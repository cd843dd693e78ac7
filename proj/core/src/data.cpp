#include "hancova/data.hpp"

#include <algorithm>
#include <numeric>

namespace hancova {

std::size_t AncovaData::n1() const {
  return static_cast<std::size_t>(std::count(group.begin(), group.end(), 1));
}

std::size_t AncovaData::n2() const {
  return static_cast<std::size_t>(std::count(group.begin(), group.end(), 2));
}

Vector AncovaData::y_group(int g) const {
  const std::size_t offset = g == 1 ? 0 : n1();
  const std::size_t count = g == 1 ? n1() : n2();
  return y.segment(static_cast<Eigen::Index>(offset), static_cast<Eigen::Index>(count));
}

Matrix AncovaData::covariates_group(int g) const {
  const std::size_t offset = g == 1 ? 0 : n1();
  const std::size_t count = g == 1 ? n1() : n2();
  return covariates.middleRows(static_cast<Eigen::Index>(offset),
                               static_cast<Eigen::Index>(count));
}

void AncovaData::validate() const {
  const std::size_t n = n_total();
  if (group.size() != n) throw StructuralError("AncovaData: group length != response length");
  if (covariates.cols() > 0 && static_cast<std::size_t>(covariates.rows()) != n) {
    throw StructuralError("AncovaData: covariate rows != response length");
  }
  if (!y.allFinite() || (covariates.size() > 0 && !covariates.allFinite())) {
    throw InvalidInputError("AncovaData: non-finite values");
  }
  std::size_t c1 = 0, c2 = 0;
  bool seen_two = false;
  for (int g : group) {
    if (g == 1) {
      if (seen_two) throw StructuralError("AncovaData: group vector is not two-block sorted");
      ++c1;
    } else if (g == 2) {
      seen_two = true;
      ++c2;
    } else {
      throw StructuralError("AncovaData: group labels must be 1 or 2");
    }
  }
  if (c1 < 2 || c2 < 2) {
    throw StructuralError("AncovaData: each group needs at least 2 observations");
  }
}

AncovaData make_ancova_data(const Vector& y, const std::vector<int>& group,
                            const Matrix& covariates) {
  const auto n = static_cast<std::size_t>(y.size());
  if (group.size() != n) throw StructuralError("make_ancova_data: group length != response length");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return group[a] < group[b]; });

  AncovaData d;
  d.y.resize(y.size());
  d.group.resize(n);
  d.original_row = order;
  const bool has_cov = covariates.cols() > 0;
  if (has_cov) d.covariates.resize(covariates.rows(), covariates.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = static_cast<Eigen::Index>(order[i]);
    d.y(static_cast<Eigen::Index>(i)) = y(src);
    d.group[i] = group[order[i]];
    if (has_cov) d.covariates.row(static_cast<Eigen::Index>(i)) = covariates.row(src);
  }
  if (!has_cov) d.covariates.resize(y.size(), 0);
  d.validate();
  return d;
}

AncovaData make_ancova_data(const Vector& y, const std::vector<int>& group) {
  return make_ancova_data(y, group, Matrix(y.size(), 0));
}

AncovaData make_ancova_data(const Vector& y1, const Vector& y2) {
  Vector y(y1.size() + y2.size());
  y << y1, y2;
  std::vector<int> group(static_cast<std::size_t>(y.size()), 2);
  std::fill(group.begin(), group.begin() + y1.size(), 1);
  return make_ancova_data(y, group);
}

}  // namespace hancova
