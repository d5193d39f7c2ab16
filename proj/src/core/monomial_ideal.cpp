#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "box.hpp"
#include "normlab/core.hpp"
#include "normlab/errors.hpp"
#include "normlab/linalg.hpp"

namespace normlab {

RingDescriptor::RingDescriptor(std::vector<std::string> names, std::vector<std::int64_t> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw InputError("ring must have at least one variable");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw DimensionMismatch("ring has " + std::to_string(names_.size()) + " variables but " +
                            std::to_string(weights_.size()) + " weights");
  for (auto w : weights_)
    if (w <= 0) throw InputError("variable weights must be positive");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InputError("variable names must be distinct");
}

RingDescriptor RingDescriptor::standard(std::size_t d) {
  std::vector<std::string> names;
  if (d <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < d; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  }
  return RingDescriptor(std::move(names));
}

std::int64_t RingDescriptor::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

bool RingDescriptor::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {
  for (auto e : entries_)
    if (e < 0) throw InputError("exponents must be nonnegative");
}

ExponentVector::ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
  for (auto e : entries_)
    if (e < 0) throw InputError("exponents must be nonnegative");
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

Exponent ExponentVector::total_degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), Exponent{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

ExponentVector ExponentVector::scaled(Exponent k) const {
  ExponentVector c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = k * entries_[i];
  return c;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

ExponentVector monus(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max<Exponent>(a[i] - b[i], 0);
  return c;
}

std::int64_t weighted_degree(const RingDescriptor& ring, const ExponentVector& a) {
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) deg += ring.weights()[i] * a[i];
  return deg;
}

namespace {

void monomials_rec(const RingDescriptor& ring, std::size_t i, std::int64_t remaining,
                   ExponentVector& cur, std::vector<ExponentVector>& out) {
  const std::size_t d = ring.dimension();
  const std::int64_t w = ring.weights()[i];
  if (i + 1 == d) {
    if (remaining % w == 0) {
      cur[i] = remaining / w;
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t k = 0; k * w <= remaining; ++k) {
    cur[i] = k;
    monomials_rec(ring, i + 1, remaining - k * w, cur, out);
  }
  cur[i] = 0;
}

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch("ideals live in different rings");
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(const RingDescriptor& ring, std::int64_t e) {
  std::vector<ExponentVector> out;
  if (e < 0) return out;
  ExponentVector cur(ring.dimension());
  monomials_rec(ring, 0, e, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<ExponentVector> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal::MonomialIdeal(RingDescriptor ring, std::vector<ExponentVector> gens)
    : ring_(std::move(ring)) {
  const std::size_t d = ring_.dimension();
  for (const auto& g : gens)
    if (g.size() != d)
      throw DimensionMismatch("exponent vector of length " + std::to_string(g.size()) +
                              " in a ring of dimension " + std::to_string(d));
  // A divisor has strictly smaller total degree unless equal, so scanning by
  // degree only needs to compare against already accepted generators.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

MonomialIdeal MonomialIdeal::zero(RingDescriptor ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingDescriptor ring) {
  const std::size_t d = ring.dimension();
  return MonomialIdeal(std::move(ring), {ExponentVector(d)});
}

MonomialIdeal MonomialIdeal::maximal_power(RingDescriptor ring, std::int64_t k) {
  if (k <= 0) return unit(std::move(ring));
  auto std_ring = RingDescriptor(ring.names());
  auto gens = monomials_of_degree(std_ring, k);
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(a); });
}

std::string format_monomial(const RingDescriptor& ring, const ExponentVector& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.names()[i];
    if (a[i] > 1) os << '^' << a[i];
  }
  if (first) os << '1';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << '(';
  for (std::size_t i = 0; i < I.generators().size(); ++i)
    os << (i ? ", " : "") << format_monomial(I.ring(), I.generators()[i]);
  return os << ')';
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> prods;
  prods.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) prods.push_back(a + b);
  return MonomialIdeal(I.ring(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, std::int64_t n) {
  if (n < 0) throw InputError("negative power");
  MonomialIdeal result = MonomialIdeal::unit(I.ring());
  for (std::int64_t k = 0; k < n; ++k) result = multiply(result, I);
  return result;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<ExponentVector> lcms;
  lcms.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) lcms.push_back(lcm(a, b));
  return MonomialIdeal(I.ring(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) throw DegenerateIdeal("colon by the zero ideal");
  std::optional<MonomialIdeal> result;
  for (const auto& b : J.generators()) {
    std::vector<ExponentVector> quot;
    for (const auto& a : I.generators()) quot.push_back(monus(a, b));
    MonomialIdeal piece(I.ring(), std::move(quot));
    result = result ? intersect(*result, piece) : piece;
  }
  return *result;
}

bool contains_monomial(const MonomialIdeal& I, const ExponentVector& a) {
  if (a.size() != I.dimension()) throw DimensionMismatch("monomial length differs from ring dimension");
  return I.contains(a);
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const ExponentVector& g) { return J.contains(g); });
}

namespace {

// Least exponent of a pure power of each variable, if any.
std::vector<std::optional<Exponent>> pure_powers(const MonomialIdeal& I) {
  const std::size_t d = I.dimension();
  std::vector<std::optional<Exponent>> out(d);
  for (const auto& g : I.generators()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) {
      for (auto& o : out) o = 0;
      return out;
    }
    if (support == 1 && (!out[var] || *out[var] > g[var])) out[var] = g[var];
  }
  return out;
}

}  // namespace

bool is_m_primary(const MonomialIdeal& I) {
  const auto pp = pure_powers(I);
  return std::all_of(pp.begin(), pp.end(), [](const auto& p) { return p.has_value(); });
}

std::optional<std::int64_t> equigenerated_degree(const MonomialIdeal& I) {
  if (I.is_zero()) return std::nullopt;
  const std::int64_t deg = weighted_degree(I.ring(), I.generators().front());
  for (const auto& g : I.generators())
    if (weighted_degree(I.ring(), g) != deg) return std::nullopt;
  return deg;
}

BigInt colength(const MonomialIdeal& I) {
  const auto pp = pure_powers(I);
  std::vector<Exponent> upper;
  for (std::size_t i = 0; i < pp.size(); ++i) {
    if (!pp[i])
      throw NotMPrimary("ideal " + [&] {
        std::ostringstream os;
        os << I;
        return os.str();
      }() + " has no pure power of " + I.ring().names()[i]);
    upper.push_back(*pp[i] - 1);
  }
  BigInt count = 0;
  detail::for_each_in_box(upper, [&](const ExponentVector& a) {
    if (!I.contains(a)) ++count;
    return true;
  });
  return count;
}

BigInt hilbert_slice(const MonomialIdeal& I, std::int64_t e) {
  BigInt count = 0;
  for (const auto& m : monomials_of_degree(I.ring(), e))
    if (!I.contains(m)) ++count;
  return count;
}

std::size_t analytic_spread(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero())
    throw DegenerateIdeal("analytic spread needs a nonzero proper ideal");
  const std::size_t d = I.dimension();
  RationalMatrix rows;
  for (const auto& g : I.generators()) {
    RationalVector row;
    for (std::size_t i = 0; i < d; ++i) row.emplace_back(g[i]);
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  return rank(rows, d + 1);
}

std::size_t height(const MonomialIdeal& I) {
  if (I.is_unit()) throw DegenerateIdeal("the unit ideal has no height");
  if (I.is_zero()) return 0;
  const std::size_t d = I.dimension();
  std::vector<std::uint64_t> supports;
  for (const auto& g : I.generators()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] > 0) s |= (std::uint64_t{1} << i);
    supports.push_back(s);
  }
  std::size_t best = d;
  for (std::uint64_t cover = 0; cover < (std::uint64_t{1} << d); ++cover) {
    const auto size = static_cast<std::size_t>(std::popcount(cover));
    if (size >= best) continue;
    if (std::all_of(supports.begin(), supports.end(), [&](auto s) { return (s & cover) != 0; }))
      best = size;
  }
  return best;
}

NormalityCertificate is_normal(const MonomialIdeal& I) {
  const std::size_t ell = analytic_spread(I);
  const NewtonPolyhedron P = newton_polyhedron(I);
  NormalityCertificate cert;
  MonomialIdeal pow = MonomialIdeal::unit(I.ring());
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(ell); ++n) {
    pow = multiply(pow, I);
    const MonomialIdeal closure = closure_of_power(I, P, n);
    for (const auto& g : closure.generators()) {
      if (!pow.contains(g)) {
        cert.normal = false;
        cert.failing_power = n;
        cert.witness = g;
        return cert;
      }
    }
    cert.checked_up_to = n;
  }
  return cert;
}

}  // namespace normlab
