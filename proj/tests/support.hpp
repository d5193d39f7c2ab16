#pragma once

#include <initializer_list>
#include <vector>

#include "normlab/clutter.hpp"
#include "normlab/core.hpp"

namespace normlab::test {

inline MonomialIdeal ideal(std::size_t d, std::initializer_list<ExponentVector> gens) {
  return MonomialIdeal(RingDescriptor::standard(d), std::vector<ExponentVector>(gens));
}

inline MonomialIdeal ideal(std::size_t d, std::vector<ExponentVector> gens) {
  return MonomialIdeal(RingDescriptor::standard(d), std::move(gens));
}

inline MonomialIdeal pure_powers(std::size_t d, Exponent k) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    ExponentVector a(d);
    a[i] = k;
    gens.push_back(a);
  }
  return ideal(d, std::move(gens));
}

inline MonomialIdeal maximal_power(std::size_t d, Exponent k) {
  return MonomialIdeal::maximal_power(RingDescriptor::standard(d), k);
}

inline Clutter six_vertex_clutter() { return Clutter(6, {{1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {4, 5, 6}}); }
inline Clutter triangle() { return Clutter(3, {{1, 2}, {2, 3}, {1, 3}}); }

inline bool contains_all(const MonomialIdeal& big, const MonomialIdeal& small) { return is_subset(small, big); }

/// The m-primary fixtures used across suites.
inline std::vector<MonomialIdeal> m_primary_fixtures() {
  return {maximal_power(2, 1),       pure_powers(2, 2), pure_powers(2, 3), ideal(2, {{3, 0}, {0, 5}}),
          pure_powers(3, 2),         pure_powers(3, 3), maximal_power(2, 2)};
}

/// m-primary, but every general reduction has reduction number 3 > d.
inline MonomialIdeal gapped_quartic() { return ideal(2, {{4, 0}, {1, 3}, {0, 4}}); }

}  // namespace normlab::test
