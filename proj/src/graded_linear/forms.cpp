#include <algorithm>
#include <mutex>
#include <sstream>

#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"

namespace normlab {

MonomialBasis::MonomialBasis(std::size_t nvars, std::int64_t degree)
    : nvars_(nvars), degree_(degree) {
  monomials_ = monomials_of_degree(RingDescriptor::standard(nvars), degree);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(std::size_t nvars, std::int64_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::int64_t>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, degree);
  return slot;
}

std::size_t MonomialBasis::index_of(const ExponentVector& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw DimensionMismatch("monomial not of the basis degree");
  return it->second;
}

HomogeneousForm HomogeneousForm::monomial(const ExponentVector& a, const Rational& c) {
  HomogeneousForm f(a.size(), a.total_degree());
  f.add_term(a, c);
  return f;
}

void HomogeneousForm::add_term(const ExponentVector& a, const Rational& c) {
  if (a.size() != nvars_) throw DimensionMismatch("term has the wrong number of variables");
  if (a.total_degree() != degree_) throw DimensionMismatch("term degree differs from form degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomogeneousForm HomogeneousForm::times_monomial(const ExponentVector& m) const {
  HomogeneousForm out(nvars_, degree_ + m.total_degree());
  for (const auto& [a, c] : terms_) out.terms_.emplace(a + m, c);
  return out;
}

HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (f.nvars_ != g.nvars_) throw DimensionMismatch("forms in different rings");
  HomogeneousForm out(f.nvars_, f.degree_ + g.degree_);
  for (const auto& [a, c] : f.terms_)
    for (const auto& [b, e] : g.terms_) out.add_term(a + b, c * e);
  return out;
}

std::string format_form(const RingDescriptor& ring, const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [a, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_one = a.is_zero();
    if (mag != 1 || is_one) {
      os << mag;
      if (!is_one) os << '*';
    }
    if (!is_one) os << format_monomial(ring, a);
  }
  return os.str();
}

FormList forms_of(const MonomialIdeal& I) {
  if (!I.ring().is_standard()) throw InputError("graded-linear operations need the standard grading");
  FormList out;
  for (const auto& g : I.generators()) out.push_back(HomogeneousForm::monomial(g));
  return out;
}

FormList product(const FormList& a, const FormList& b) {
  FormList out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

FormList power(const FormList& gens, std::size_t nvars, std::int64_t n) {
  if (n < 0) throw InputError("negative power");
  // Products in a canonical multiset order avoid n! duplicates.
  std::vector<std::vector<std::size_t>> combos{{}};
  for (std::int64_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : combos)
      for (std::size_t i = c.empty() ? 0 : c.back(); i < gens.size(); ++i) {
        auto d = c;
        d.push_back(i);
        next.push_back(std::move(d));
      }
    combos = std::move(next);
  }
  FormList result;
  for (const auto& c : combos) {
    HomogeneousForm f = HomogeneousForm::monomial(ExponentVector(nvars));
    for (std::size_t i : c) f = f * gens[i];
    result.push_back(std::move(f));
  }
  return result;
}

GradedSubspace::GradedSubspace(std::size_t nvars, std::int64_t degree)
    : nvars_(nvars),
      degree_(degree),
      monomials_(MonomialBasis::get(nvars, degree)),
      basis_(monomials_->size()) {}

GradedSubspace GradedSubspace::full(std::size_t nvars, std::int64_t degree) {
  GradedSubspace s(nvars, degree);
  for (std::size_t i = 0; i < s.ambient_dimension(); ++i) {
    RationalVector v(s.ambient_dimension(), Rational(0));
    v[i] = 1;
    s.basis_.insert(std::move(v));
  }
  return s;
}

RationalVector GradedSubspace::to_vector(const HomogeneousForm& f) const {
  if (f.degree() != degree_ || f.nvars() != nvars_)
    throw DimensionMismatch("form does not live in this graded piece");
  RationalVector v(ambient_dimension(), Rational(0));
  for (const auto& [a, c] : f.terms()) v[monomials_->index_of(a)] = c;
  return v;
}

HomogeneousForm GradedSubspace::to_form(const RationalVector& v) const {
  HomogeneousForm f(nvars_, degree_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add_term((*monomials_)[i], v[i]);
  return f;
}

bool GradedSubspace::insert(const HomogeneousForm& f) { return basis_.insert(to_vector(f)); }

bool GradedSubspace::contains(const HomogeneousForm& f) const {
  return basis_.contains(to_vector(f));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (other.degree_ != degree_ || other.nvars_ != nvars_) return false;
  if (other.dimension() > dimension()) return false;
  for (std::size_t r = 0; r < other.basis_.rank(); ++r)
    if (!basis_.contains(other.basis_.row(r))) return false;
  return true;
}

FormList GradedSubspace::basis_forms() const {
  FormList out;
  for (const auto& row : basis_.rows()) out.push_back(to_form(row));
  return out;
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
  return nvars_ == other.nvars_ && degree_ == other.degree_ &&
         basis_.rows() == other.basis_.rows();
}

GradedSubspace ideal_slice(const FormList& gens, std::size_t nvars, std::int64_t e) {
  GradedSubspace s(nvars, e);
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > e) continue;
    for (const auto& m : MonomialBasis::get(nvars, e - g.degree())->monomials()) {
      if (s.is_full()) return s;
      s.insert(g.times_monomial(m));
    }
  }
  return s;
}

GradedSubspace next_slice(const GradedSubspace& current, const FormList& gens) {
  const std::size_t nvars = current.nvars();
  const std::int64_t e = current.degree() + 1;
  GradedSubspace s(nvars, e);
  const auto& src = current.monomials();
  const auto& dst = s.monomials();
  for (const auto& row : current.echelon().rows()) {
    for (std::size_t var = 0; var < nvars && !s.is_full(); ++var) {
      RationalVector v(s.ambient_dimension(), Rational(0));
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        ExponentVector m = src[c];
        ++m[var];
        v[dst.index_of(m)] = row[c];
      }
      s.insert_vector(std::move(v));
    }
  }
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() == e && !s.is_full()) s.insert(g);
  return s;
}

GradedSubspace product_slice(const FormList& gens, const GradedSubspace& S) {
  if (gens.empty()) return GradedSubspace(S.nvars(), S.degree());
  const std::int64_t delta = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != delta) throw NotEquigenerated("product_slice needs forms of one degree");
  GradedSubspace out(S.nvars(), S.degree() + delta);
  const FormList basis = S.basis_forms();
  for (const auto& g : gens)
    for (const auto& v : basis) {
      if (out.is_full()) return out;
      out.insert(g * v);
    }
  return out;
}

GradedSubspace monomial_slice(const MonomialIdeal& I, std::int64_t e) {
  GradedSubspace s(I.dimension(), e);
  const auto& basis = s.monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!I.contains(basis[i])) continue;
    RationalVector v(basis.size(), Rational(0));
    v[i] = 1;
    s.insert_vector(std::move(v));
  }
  return s;
}

BigInt quotient_length(const FormList& num, const FormList& den, std::size_t nvars,
                       std::int64_t degree_cap) {
  auto nonzero = [](const FormList& l) {
    FormList out;
    for (const auto& f : l)
      if (!f.is_zero()) out.push_back(f);
    return out;
  };
  const FormList n = nonzero(num), m = nonzero(den);
  if (n.empty()) {
    if (!m.empty()) throw InclusionViolated("nonzero denominator inside the zero ideal");
    return 0;
  }
  std::int64_t lo = n.front().degree(), hi = lo;
  for (const FormList* l : {&n, &m})
    for (const auto& f : *l) {
      lo = std::min(lo, f.degree());
      hi = std::max(hi, f.degree());
    }
  GradedSubspace ns = ideal_slice(n, nvars, lo);
  GradedSubspace ds = ideal_slice(m, nvars, lo);
  BigInt total = 0;
  for (std::int64_t e = lo; e <= degree_cap; ++e) {
    if (!ns.contains(ds))
      throw InclusionViolated("denominator not contained in numerator in degree " + std::to_string(e));
    total += ns.dimension() - ds.dimension();
    if (e >= hi && ns.dimension() == ds.dimension()) {
      // Above every generator degree the slices are R_1-multiples of the
      // previous ones, so equality persists. Verify one more degree anyway.
      const GradedSubspace n2 = next_slice(ns, n), d2 = next_slice(ds, m);
      if (n2.dimension() != d2.dimension())
        throw FalsificationAlert("slice equality failed to persist past degree " + std::to_string(e));
      return total;
    }
    ns = next_slice(ns, n);
    ds = next_slice(ds, m);
  }
  throw NonFiniteQuotient("slices still differ at degree cap " + std::to_string(degree_cap));
}

BigInt colength_of_forms(const FormList& J, std::size_t nvars, std::int64_t degree_cap) {
  const FormList unit{HomogeneousForm::monomial(ExponentVector(nvars))};
  return quotient_length(unit, J, nvars, degree_cap);
}

}  // namespace normlab
