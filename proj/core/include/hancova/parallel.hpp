#ifndef HANCOVA_PARALLEL_HPP
#define HANCOVA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hancova {

/// Worker count: HANCOVA_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Run fn(i) for i in [0, n). Work items must be independent; callers get
/// determinism by writing results into per-index slots and reducing
/// sequentially afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hancova

#endif
