#pragma once

// Clutters (hypergraphs with pairwise incomparable edges), their edge ideals,
// minimal vertex covers and symbolic powers.

#include <cstdint>
#include <optional>
#include <vector>

#include "normlab/core.hpp"

namespace normlab {

/// Vertices are 1..d; each edge is a sorted list of vertices.
class Clutter {
 public:
  /// Throws InputError on out-of-range vertices, empty edges or comparable
  /// edges.
  Clutter(std::size_t vertices, std::vector<std::vector<std::size_t>> edges);

  std::size_t vertices() const { return vertices_; }
  const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t vertices_;
  std::vector<std::vector<std::size_t>> edges_;
};

/// d x m 0/1 matrix; column j is the indicator of edge j.
struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<int>> entries;  // entries[i][j]
};

IncidenceMatrix incidence_matrix(const Clutter& C);
MonomialIdeal edge_ideal(const Clutter& C);

/// Inclusion-minimal vertex sets meeting every edge, sorted by size then
/// lexicographically. Requires d <= 20.
std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Clutter& C);

/// Intersection of (x_i : i in cover)^n over the minimal covers.
MonomialIdeal symbolic_power(const Clutter& C, std::int64_t n);

/// Every vertex of { x >= 0, xA >= 1 } is integral. Throws DegenerateSystem
/// for a clutter without vertices or edges.
bool q_polyhedron_integral(const Clutter& C);

struct SymbolicComparison {
  std::int64_t power = 0;
  bool equal = true;
  /// Generators of the symbolic power outside the closure, and the reverse.
  std::vector<ExponentVector> only_symbolic;
  std::vector<ExponentVector> only_closure;
};

struct SymbolicClosureTable {
  bool q_integral = false;
  std::vector<SymbolicComparison> rows;
};

/// closure(I^n) against I^(n) for n = 1..nmax. Throws FalsificationAlert if
/// Q(A) is integral and some row differs.
SymbolicClosureTable compare_symbolic_closure(const Clutter& C, std::int64_t nmax);

}  // namespace normlab
