#include "normlab/indices.hpp"

#include "normlab/errors.hpp"
#include "normlab/hilbert_sally.hpp"

namespace normlab {

namespace {

void require_proper(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DegenerateIdeal("indices need a nonzero proper ideal");
}

Check bound(std::string name, std::int64_t lhs, const BigInt& rhs) {
  Check c;
  c.name = std::move(name);
  c.kind = Check::Kind::Assertion;
  c.lhs = std::to_string(lhs);
  c.rhs = rhs.str();
  c.holds = BigInt(lhs) <= rhs;
  c.relation = "<=";
  return c;
}

}  // namespace

std::vector<MonomialIdeal> closure_tower(const MonomialIdeal& I, std::int64_t top) {
  const NewtonPolyhedron P = newton_polyhedron(I);
  std::vector<MonomialIdeal> out{MonomialIdeal::unit(I.ring())};
  for (std::int64_t n = 1; n <= top; ++n) out.push_back(closure_of_power(I, P, n));
  return out;
}

std::int64_t normalization_index(const MonomialIdeal& I) {
  require_proper(I);
  const auto ell = static_cast<std::int64_t>(analytic_spread(I));
  if (ell <= 1) return 0;
  const auto C = closure_tower(I, ell - 1);
  for (std::int64_t n = ell - 2; n >= 0; --n)
    if (!(C[n + 1] == multiply(I, C[n]))) return n + 1;
  return 0;
}

GenerationIndex generation_index(const MonomialIdeal& I) {
  require_proper(I);
  const auto ell = static_cast<std::int64_t>(analytic_spread(I));
  GenerationIndex out;
  const auto C = closure_tower(I, std::max<std::int64_t>(ell - 1, 1));
  out.fresh_generators[1] = C[1].generators();
  if (ell <= 1) {
    out.s0 = 0;
    return out;
  }
  for (std::int64_t n = 2; n <= ell - 1; ++n) {
    MonomialIdeal products = MonomialIdeal::zero(I.ring());
    for (std::int64_t k = 1; k <= n / 2; ++k) products = sum(products, multiply(C[k], C[n - k]));
    std::vector<ExponentVector> fresh;
    for (const auto& g : C[n].generators())
      if (!products.contains(g)) fresh.push_back(g);
    if (!fresh.empty()) {
      out.fresh_generators[n] = std::move(fresh);
      out.s0 = n;
    }
  }
  return out;
}

std::vector<Check> check_bounds(const MonomialIdeal& I, std::int64_t s, std::int64_t s0,
                                std::vector<std::string>* notices) {
  const auto ell = static_cast<std::int64_t>(analytic_spread(I));
  std::vector<Check> checks;
  checks.push_back(bound("s <= ℓ - 1", s, std::max<std::int64_t>(ell - 1, 0)));
  checks.push_back(bound("s0 <= ℓ - 1", s0, std::max<std::int64_t>(ell - 1, 0)));
  if (is_m_primary(I)) {
    const BigInt e = filtration_report(I).multiplicity();
    const auto d = static_cast<long>(I.dimension());
    checks.push_back(bound("s <= (e - 1) s0", s, (e - 1) * s0));
    BigInt p = 1;
    for (long i = 0; i < d; ++i) p *= (s0 + 1);
    checks.push_back(bound("s <= e((s0 + 1)^d - 1) - s0(2d - 1)", s, e * (p - 1) - BigInt(s0) * (2 * d - 1)));
  } else if (notices) {
    notices->push_back("multiplicity bounds skipped: ideal is not m-primary");
  }
  for (const auto& c : checks)
    if (!c.holds)
      throw FalsificationAlert("bound violated: " + c.name + " (" + c.lhs + " > " + c.rhs + ")");
  return checks;
}

IndicesReport indices_report(const MonomialIdeal& I) {
  require_proper(I);
  IndicesReport r;
  r.ell = analytic_spread(I);
  r.s = normalization_index(I);
  GenerationIndex g = generation_index(I);
  r.s0 = g.s0;
  r.fresh_generators = std::move(g.fresh_generators);
  r.normal = r.s == 0;
  if (r.ell <= 1) r.notices.push_back("ℓ(I) = 1: s = s0 = 0 by convention");
  r.bound_checks = check_bounds(I, r.s, r.s0, &r.notices);
  return r;
}

}  // namespace normlab
