#include <algorithm>
#include <set>

#include "box.hpp"
#include "normlab/core.hpp"
#include "normlab/errors.hpp"
#include "normlab/linalg.hpp"

namespace normlab {

NewtonPolyhedron::NewtonPolyhedron(std::size_t d, std::vector<Facet> facets)
    : dim_(d), facets_(std::move(facets)) {
  for (const auto& f : facets_)
    if (f.normal.size() != d) throw DimensionMismatch("facet normal length differs from dimension");
  std::sort(facets_.begin(), facets_.end());
}

bool NewtonPolyhedron::contains(const ExponentVector& a, std::int64_t n) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] < 0) return false;
  BigInt lhs;
  for (const auto& f : facets_) {
    lhs = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      if (a[i] != 0 && f.normal[i] != 0) lhs += f.normal[i] * a[i];
    if (lhs < f.offset * n) return false;
  }
  return true;
}

NewtonPolyhedron NewtonPolyhedron::scaled(std::int64_t n) const {
  std::vector<Facet> out = facets_;
  for (auto& f : out) f.offset *= n;
  return NewtonPolyhedron(dim_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const NewtonPolyhedron& P) {
  os << '{';
  for (std::size_t k = 0; k < P.facets().size(); ++k) {
    const auto& f = P.facets()[k];
    os << (k ? "; " : "");
    bool first = true;
    for (std::size_t i = 0; i < f.normal.size(); ++i) {
      if (f.normal[i] == 0) continue;
      os << (first ? "" : " + ");
      if (f.normal[i] != 1) os << f.normal[i];
      os << 'a' << (i + 1);
      first = false;
    }
    os << " >= " << f.offset;
  }
  return os << '}';
}

namespace {

// Scales a rational vector to coprime integers.
std::vector<BigInt> primitive(const RationalVector& v) {
  BigInt den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, BigInt(denominator(x)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(BigInt(numerator(x)) * (den / BigInt(denominator(x))));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero())
    throw DegenerateIdeal("Newton polyhedron needs a nonzero proper ideal");
  const std::size_t d = I.dimension();
  const auto& points = I.generators();
  const std::size_t np = points.size();

  // Candidate supporting hyperplanes pass through d elements of
  // points ∪ {e_1..e_d} (directions), at least one of them a point. Each
  // candidate has d-1 affinely independent tight elements, so every valid
  // candidate spans a facet and the resulting list is irredundant after
  // deduplication.
  std::set<Facet> facets;
  RationalMatrix rows;
  for_each_subset(np + d, d, [&](const std::vector<std::size_t>& idx) {
    if (idx.front() >= np) return;  // no point in the subset
    const ExponentVector& base = points[idx.front()];
    rows.clear();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      RationalVector row(d, Rational(0));
      if (idx[k] < np) {
        for (std::size_t i = 0; i < d; ++i) row[i] = points[idx[k]][i] - base[i];
      } else {
        row[idx[k] - np] = 1;
      }
      rows.push_back(std::move(row));
    }
    const RationalMatrix ns = null_space(rows, d);
    if (ns.size() != 1) return;
    std::vector<BigInt> normal = primitive(ns.front());
    const bool nonneg = std::all_of(normal.begin(), normal.end(), [](const BigInt& x) { return x >= 0; });
    const bool nonpos = std::all_of(normal.begin(), normal.end(), [](const BigInt& x) { return x <= 0; });
    if (!nonneg && !nonpos) return;
    if (!nonneg)
      for (auto& x : normal) x = -x;
    BigInt offset = 0;
    for (std::size_t i = 0; i < d; ++i) offset += normal[i] * base[i];
    for (const auto& p : points) {
      BigInt v = 0;
      for (std::size_t i = 0; i < d; ++i) v += normal[i] * p[i];
      if (v < offset) return;
    }
    facets.insert(Facet{std::move(normal), std::move(offset)});
  });
  return NewtonPolyhedron(d, std::vector<Facet>(facets.begin(), facets.end()));
}

MonomialIdeal closure_of_power(const MonomialIdeal& I, std::int64_t n) {
  if (!I.is_proper_nonzero())
    throw DegenerateIdeal("integral closure needs a nonzero proper ideal");
  return closure_of_power(I, newton_polyhedron(I), n);
}

MonomialIdeal closure_of_power(const MonomialIdeal& I, const NewtonPolyhedron& P, std::int64_t n) {
  if (!I.is_proper_nonzero())
    throw DegenerateIdeal("integral closure needs a nonzero proper ideal");
  if (n < 1) throw InputError("closure_of_power needs n >= 1");
  const std::size_t d = I.dimension();
  // A minimal lattice point of n·P has a_j <= n·max_i g_ij: above that bound
  // a - e_j still dominates n times a convex combination of generators.
  std::vector<Exponent> upper(d, 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < d; ++i) upper[i] = std::max(upper[i], n * g[i]);

  // The lattice points of n·P form an up-set, so a member is minimal iff
  // every single decrement leaves n·P.
  std::vector<ExponentVector> minimal;
  ExponentVector below(d);
  detail::for_each_in_box(upper, [&](const ExponentVector& a) {
    if (!P.contains(a, n)) return true;
    below = a;
    for (std::size_t j = 0; j < d; ++j) {
      if (a[j] == 0) continue;
      --below[j];
      const bool inside = P.contains(below, n);
      ++below[j];
      if (inside) return true;
    }
    minimal.push_back(a);
    return true;
  });
  return MonomialIdeal(I.ring(), std::move(minimal));
}

}  // namespace normlab
