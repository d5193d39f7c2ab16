#include "normlab/oracle.hpp"

#include <algorithm>
#include <functional>

#include "normlab/errors.hpp"

namespace normlab::oracle {

namespace {

std::vector<ExponentVector> box_points(const std::vector<Exponent>& upper) {
  std::vector<ExponentVector> out;
  ExponentVector a(upper.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == upper.size()) {
      out.push_back(a);
      return;
    }
    for (Exponent v = 0; v <= upper[i]; ++v) {
      a[i] = v;
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);
  return out;
}

std::vector<Exponent> closure_box(const MonomialIdeal& I, std::int64_t n) {
  std::vector<Exponent> upper(I.dimension(), 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = std::max(upper[i], n * g[i]);
  return upper;
}

}  // namespace

DefinitionClosure::DefinitionClosure(MonomialIdeal I, std::int64_t kmax)
    : ideal_(std::move(I)), kmax_(kmax) {
  if (!ideal_.is_proper_nonzero()) throw DegenerateIdeal("oracle needs a nonzero proper ideal");
  powers_.push_back(MonomialIdeal::unit(ideal_.ring()));
}

const MonomialIdeal& DefinitionClosure::power(std::int64_t m) {
  while (static_cast<std::int64_t>(powers_.size()) <= m) powers_.push_back(multiply(powers_.back(), ideal_));
  return powers_[static_cast<std::size_t>(m)];
}

bool DefinitionClosure::contains(const ExponentVector& a, std::int64_t n) {
  for (std::int64_t k = 1; k <= kmax_; ++k)
    if (power(n * k).contains(a.scaled(k))) return true;
  return false;
}

MonomialIdeal DefinitionClosure::closure_of_power(std::int64_t n) {
  std::vector<ExponentVector> members;
  for (const auto& a : box_points(closure_box(ideal_, n)))
    if (contains(a, n)) members.push_back(a);
  return MonomialIdeal(ideal_.ring(), std::move(members));
}

MonomialIdeal closure_by_facet_scan(const MonomialIdeal& I, std::int64_t n) {
  const NewtonPolyhedron P = newton_polyhedron(I);
  std::vector<ExponentVector> members;
  for (const auto& a : box_points(closure_box(I, n)))
    if (P.contains(a, n)) members.push_back(a);
  return MonomialIdeal(I.ring(), std::move(members));
}

BigInt colength_by_count(const MonomialIdeal& I) {
  if (!is_m_primary(I)) throw NotMPrimary("colength of a non m-primary ideal");
  if (!I.ring().is_standard()) throw InputError("slice counting needs the standard grading");
  BigInt total = 0;
  for (std::int64_t e = 0;; ++e) {
    BigInt slice = 0;
    for (const auto& m : monomials_of_degree(I.ring(), e))
      if (!I.contains(m)) ++slice;
    if (slice == 0) return total;
    total += slice;
  }
}

std::vector<ExponentVector> monomial_colon_slice(const MonomialIdeal& J, std::int64_t k, std::int64_t e) {
  std::vector<ExponentVector> out;
  const auto multipliers = monomials_of_degree(J.ring(), k);
  for (const auto& m : monomials_of_degree(J.ring(), e))
    if (std::all_of(multipliers.begin(), multipliers.end(), [&](const ExponentVector& u) { return J.contains(m + u); }))
      out.push_back(m);
  return out;
}

}  // namespace normlab::oracle
