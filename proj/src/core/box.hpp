#pragma once

#include <vector>

#include "normlab/core.hpp"

namespace normlab::detail {

/// Visits every lattice point of the box prod [0, upper_i] in lexicographic
/// order. `fn` returns false to stop early.
template <typename Fn>
void for_each_in_box(const std::vector<Exponent>& upper, Fn&& fn) {
  for (Exponent u : upper)
    if (u < 0) return;
  ExponentVector a(upper.size());
  while (true) {
    if (!fn(static_cast<const ExponentVector&>(a))) return;
    std::size_t i = upper.size();
    while (i > 0) {
      --i;
      if (a[i] < upper[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
      if (i == 0) return;
    }
    if (upper.empty()) return;
  }
}

}  // namespace normlab::detail
