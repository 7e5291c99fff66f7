#pragma once

#include <cstdint>

namespace covertsim::mc {

// Execution policy for Monte Carlo trial loops. Every kernel that accepts a
// policy writes trial i's output to slot i, so the serial and OpenMP paths
// produce bit-identical results; the serial path is the reference the tests
// compare against.
enum class Exec { serial, parallel };

template <typename Fn>
void for_each_index(std::int64_t count, Exec policy, Fn&& fn) {
  if (policy == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace covertsim::mc
