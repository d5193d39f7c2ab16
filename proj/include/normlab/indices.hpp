#pragma once

// Normalization index s(I) and generation index s0(I) of a monomial ideal.
//
// Both are computed with cutoff ℓ(I) - 1: the normalization of R[It] is
// Cohen-Macaulay for monomial I, so closure(I^{n+1}) = I closure(I^n) for
// every n >= ℓ(I) - 1 and the normalization is generated in degrees < ℓ(I).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normlab/checks.hpp"
#include "normlab/core.hpp"

namespace normlab {

struct IndicesReport {
  std::int64_t s = 0;
  std::int64_t s0 = 0;
  std::size_t ell = 0;
  /// Level n -> minimal generators of closure(I^n) that are not products of
  /// lower levels. Level 1 holds the generators of closure(I).
  std::map<std::int64_t, std::vector<ExponentVector>> fresh_generators;
  bool normal = false;
  std::vector<Check> bound_checks;
  std::vector<std::string> notices;
};

/// Closures closure(I^n) for n = 0..top, sharing one Newton polyhedron.
std::vector<MonomialIdeal> closure_tower(const MonomialIdeal& I, std::int64_t top);

/// Least s with closure(I^{n+1}) = I closure(I^n) for s <= n <= ℓ - 2.
std::int64_t normalization_index(const MonomialIdeal& I);

struct GenerationIndex {
  std::int64_t s0 = 1;
  std::map<std::int64_t, std::vector<ExponentVector>> fresh_generators;
};

GenerationIndex generation_index(const MonomialIdeal& I);

/// s, s0 <= ℓ - 1 always; the two multiplicity bounds when I is m-primary
/// (a notice is added instead otherwise). Throws FalsificationAlert on a
/// violated bound.
std::vector<Check> check_bounds(const MonomialIdeal& I, std::int64_t s, std::int64_t s0,
                                std::vector<std::string>* notices = nullptr);

IndicesReport indices_report(const MonomialIdeal& I);

}  // namespace normlab
