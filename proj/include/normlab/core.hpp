#pragma once

// Monomial ideals in a (standard or positively) graded polynomial ring
// k[x_1, ..., x_d] over a field of characteristic zero, and integral closure
// of their powers through the Newton polyhedron.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "normlab/numeric.hpp"

namespace normlab {

using Exponent = std::int64_t;

class RingDescriptor {
 public:
  /// `weights` defaults to all ones (standard grading).
  explicit RingDescriptor(std::vector<std::string> names,
                          std::vector<std::int64_t> weights = {});

  /// Standard graded ring with variables x,y,z (d <= 3) or x1..xd.
  static RingDescriptor standard(std::size_t d);

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  /// Sum of the variable degrees.
  std::int64_t weight_sum() const;
  bool is_standard() const;

  bool operator==(const RingDescriptor&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
};

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t d) : entries_(d, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries);
  explicit ExponentVector(std::vector<Exponent> entries);

  std::size_t size() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Exponent>& entries() const { return entries_; }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;
  Exponent total_degree() const;
  bool is_zero() const;

  // Lexicographic. Generator lists are kept in decreasing order, so x^2
  // precedes x*y precedes y^2.
  auto operator<=>(const ExponentVector&) const = default;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  ExponentVector scaled(Exponent k) const;

 private:
  std::vector<Exponent> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// max(a - b, 0) componentwise: the generator of (x^a : x^b).
ExponentVector monus(const ExponentVector& a, const ExponentVector& b);
std::int64_t weighted_degree(const RingDescriptor& ring, const ExponentVector& a);

/// All exponent vectors of weighted degree e, in increasing lexicographic order.
std::vector<ExponentVector> monomials_of_degree(const RingDescriptor& ring, std::int64_t e);

/// A monomial ideal, stored as its minimal generators (an antichain under
/// divisibility) in decreasing lexicographic order. The unit ideal is {0}; the zero ideal
/// has no generators.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`. Throws DimensionMismatch on inconsistent lengths.
  MonomialIdeal(RingDescriptor ring, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(RingDescriptor ring);
  static MonomialIdeal unit(RingDescriptor ring);
  /// The power m^k of the homogeneous maximal ideal (standard degree k).
  static MonomialIdeal maximal_power(RingDescriptor ring, std::int64_t k);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t dimension() const { return ring_.dimension(); }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  bool contains(const ExponentVector& a) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  RingDescriptor ring_;
  std::vector<ExponentVector> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);
/// Renders a monomial with the ring's variable names, e.g. "x^2*y".
std::string format_monomial(const RingDescriptor& ring, const ExponentVector& a);

MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<ExponentVector> gens);
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, std::int64_t n);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : J). Throws DegenerateIdeal when J is zero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

bool contains_monomial(const MonomialIdeal& I, const ExponentVector& a);
/// I ⊆ J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

/// True iff every variable has a pure-power generator.
bool is_m_primary(const MonomialIdeal& I);
/// All minimal generators share one weighted degree; returns it.
std::optional<std::int64_t> equigenerated_degree(const MonomialIdeal& I);

/// λ(R/I). Throws NotMPrimary.
BigInt colength(const MonomialIdeal& I);
/// dim_k (R/I)_e, weighted degree.
BigInt hilbert_slice(const MonomialIdeal& I, std::int64_t e);

/// Rank over Q of the generator exponents augmented by a column of ones.
std::size_t analytic_spread(const MonomialIdeal& I);

/// Height: the least size of a set of variables meeting every generator
/// support (the least height of a minimal prime of the radical).
std::size_t height(const MonomialIdeal& I);

/// One inequality <normal, a> >= offset. Normals are scaled to coprime
/// nonnegative integers, so the rational facet is recovered exactly.
struct Facet {
  std::vector<BigInt> normal;
  BigInt offset;

  bool operator==(const Facet&) const = default;
  bool operator<(const Facet& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

/// { a in R^d_{>=0} : <normal, a> >= offset for every facet }.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t d, std::vector<Facet> facets);

  std::size_t dimension() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// a in n·P.
  bool contains(const ExponentVector& a, std::int64_t n = 1) const;
  NewtonPolyhedron scaled(std::int64_t n) const;

  bool operator==(const NewtonPolyhedron&) const = default;

 private:
  std::size_t dim_;
  std::vector<Facet> facets_;
};

std::ostream& operator<<(std::ostream& os, const NewtonPolyhedron& P);

/// Irredundant facet description of conv(exponents) + R^d_{>=0}.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

/// Minimal generators of the integral closure of I^n.
MonomialIdeal closure_of_power(const MonomialIdeal& I, std::int64_t n);
MonomialIdeal closure_of_power(const MonomialIdeal& I, const NewtonPolyhedron& P,
                               std::int64_t n);

struct NormalityCertificate {
  bool normal = true;
  /// Powers n with closure(I^n) = I^n that were checked.
  std::int64_t checked_up_to = 0;
  std::optional<std::int64_t> failing_power;
  std::optional<ExponentVector> witness;
};

/// Decides normality by checking closure(I^n) = I^n for 1 <= n < ℓ(I).
NormalityCertificate is_normal(const MonomialIdeal& I);

}  // namespace normlab
