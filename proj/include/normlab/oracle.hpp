#pragma once

// Slow reference implementations built straight from definitions. They share
// no enumeration code with the fast paths and are used to cross-check them.

#include <cstdint>
#include <vector>

#include "normlab/core.hpp"

namespace normlab::oracle {

/// x^a lies in closure(I^n) iff x^{ka} lies in I^{nk} for some k <= kmax.
class DefinitionClosure {
 public:
  explicit DefinitionClosure(MonomialIdeal I, std::int64_t kmax = 12);

  bool contains(const ExponentVector& a, std::int64_t n);
  /// Minimal generators of closure(I^n) by scanning the box [0, n·max_j]^d.
  MonomialIdeal closure_of_power(std::int64_t n);

 private:
  const MonomialIdeal& power(std::int64_t m);

  MonomialIdeal ideal_;
  std::int64_t kmax_;
  std::vector<MonomialIdeal> powers_;
};

/// Every lattice point of the box tested against the facets, then minimalized.
MonomialIdeal closure_by_facet_scan(const MonomialIdeal& I, std::int64_t n);

/// λ(R/I) by counting standard monomials in the box below the pure powers.
BigInt colength_by_count(const MonomialIdeal& I);

/// Monomials m of degree e with m·u in J for every monomial u of degree k.
std::vector<ExponentVector> monomial_colon_slice(const MonomialIdeal& J, std::int64_t k, std::int64_t e);

}  // namespace normlab::oracle
