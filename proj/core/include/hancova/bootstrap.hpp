#ifndef HANCOVA_BOOTSTRAP_HPP
#define HANCOVA_BOOTSTRAP_HPP

#include <cstdint>
#include <vector>

#include "hancova/inference.hpp"
#include "hancova/rng.hpp"

namespace hancova {

/// Which parameter the wild bootstrap tests: the adjusted treatment
/// difference delta = b1 - b2, or the l-th regression coefficient.
struct BootstrapHypothesis {
  enum class Kind { treatment_delta, covariate } kind = Kind::treatment_delta;
  std::size_t covariate_index = 0;  // 1-based, used when kind == covariate

  static BootstrapHypothesis treatment_delta() { return {}; }
  static BootstrapHypothesis covariate(std::size_t l) {
    return {Kind::covariate, l};
  }
};

struct BootstrapConfig {
  std::size_t n_resamples = 10000;
  std::uint64_t seed = 0;
  BootstrapHypothesis hypothesis;

  void validate() const {
    if (n_resamples < 100) {
      throw InvalidInputError("BootstrapConfig: n_resamples must be >= 100");
    }
  }
};

/// Vector of n random signs in {-1, +1}, deterministic given the rng.
std::vector<int> rademacher_vector(std::size_t n, Rng& rng);

/// Wild-bootstrap test: residuals are multiplied by Rademacher signs,
/// effects and the HC0 variance are recomputed per resample, and the
/// p-value is the share of resample statistics at least as extreme as the
/// observed one. The CI inverts the resample quantiles with a
/// degrees-of-freedom correction sqrt((N - k)/N), k = 2 + r(M), on the
/// resample studentizer; see README for the rationale. Deterministic for a
/// fixed seed regardless of thread count.
TestResult wild_bootstrap_test(const AncovaData& data, const BootstrapConfig& cfg,
                               double alpha = 0.05, const Tolerance& tol = {});

}  // namespace hancova

#endif
