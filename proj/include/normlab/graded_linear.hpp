#pragma once

// Degreewise exact linear algebra for homogeneous ideals in a standard graded
// polynomial ring over Q: slices, general reductions, reduction numbers,
// quotient lengths, and colons by powers of the maximal ideal.
//
// Two equigenerated ideals of degree δ with J ⊆ I are equal iff their slices
// in degree δ agree; more generally (I^{r+1}) and (J I^r) are both generated
// in degree (r+1)δ, so I^{r+1} = J I^r iff the slices in that one degree
// agree. That is what keeps every reduction-number test Gröbner-free.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "normlab/core.hpp"
#include "normlab/linalg.hpp"
#include "normlab/numeric.hpp"

namespace normlab {

/// Canonical (lexicographic) monomial basis of R_e, standard grading.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, std::int64_t degree);

  /// Shared cached instance.
  static std::shared_ptr<const MonomialBasis> get(std::size_t nvars, std::int64_t degree);

  std::size_t nvars() const { return nvars_; }
  std::int64_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<ExponentVector>& monomials() const { return monomials_; }
  std::size_t index_of(const ExponentVector& a) const;

 private:
  std::size_t nvars_;
  std::int64_t degree_;
  std::vector<ExponentVector> monomials_;
  std::map<ExponentVector, std::size_t> index_;
};

class HomogeneousForm {
 public:
  HomogeneousForm(std::size_t nvars, std::int64_t degree) : nvars_(nvars), degree_(degree) {}
  static HomogeneousForm monomial(const ExponentVector& a, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  std::int64_t degree() const { return degree_; }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws DimensionMismatch if `a` has the wrong length or degree.
  void add_term(const ExponentVector& a, const Rational& c);
  HomogeneousForm times_monomial(const ExponentVector& m) const;

  friend HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g);
  bool operator==(const HomogeneousForm&) const = default;

 private:
  std::size_t nvars_;
  std::int64_t degree_;
  std::map<ExponentVector, Rational> terms_;
};

using FormList = std::vector<HomogeneousForm>;

std::string format_form(const RingDescriptor& ring, const HomogeneousForm& f);

/// Generators of a monomial ideal as forms. Requires the standard grading.
FormList forms_of(const MonomialIdeal& I);
/// All pairwise products.
FormList product(const FormList& a, const FormList& b);
FormList power(const FormList& gens, std::size_t nvars, std::int64_t n);

/// A subspace of R_e held as its reduced row echelon basis over the
/// canonical monomial basis.
class GradedSubspace {
 public:
  GradedSubspace(std::size_t nvars, std::int64_t degree);
  static GradedSubspace full(std::size_t nvars, std::int64_t degree);

  std::size_t nvars() const { return nvars_; }
  std::int64_t degree() const { return degree_; }
  std::size_t dimension() const { return basis_.rank(); }
  std::size_t ambient_dimension() const { return monomials_->size(); }
  bool is_full() const { return basis_.is_full(); }
  const MonomialBasis& monomials() const { return *monomials_; }
  const EchelonBasis& echelon() const { return basis_; }

  /// Returns false if f already lay in the span. f must have this degree.
  bool insert(const HomogeneousForm& f);
  bool insert_vector(RationalVector v) { return basis_.insert(std::move(v)); }
  bool contains(const HomogeneousForm& f) const;
  bool contains(const GradedSubspace& other) const;

  RationalVector to_vector(const HomogeneousForm& f) const;
  HomogeneousForm to_form(const RationalVector& v) const;
  /// Basis rows in RREF order, as forms.
  FormList basis_forms() const;

  bool operator==(const GradedSubspace& other) const;

 private:
  std::size_t nvars_;
  std::int64_t degree_;
  std::shared_ptr<const MonomialBasis> monomials_;
  EchelonBasis basis_;
};

/// span{ m·g : g in gens, m a monomial of degree e - deg g } ⊆ R_e.
GradedSubspace ideal_slice(const FormList& gens, std::size_t nvars, std::int64_t e);
/// R_1 · S + span{ g : deg g = deg S + 1 }: the next slice of an ideal from the
/// current one.
GradedSubspace next_slice(const GradedSubspace& current, const FormList& gens);
/// span{ g·v : g in gens, v in S }.
GradedSubspace product_slice(const FormList& gens, const GradedSubspace& S);

struct GeneralReduction {
  /// Seed that produced the accepted forms.
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds_tried;
  std::int64_t delta = 0;
  FormList forms;
  /// Human-readable record of the validation checks that passed.
  std::vector<std::string> validation;
  std::int64_t reduction_number = 0;
  /// λ(R/J), recorded for m-primary inputs.
  std::optional<BigInt> colength;
  /// True when J is the generating set of I itself (ν(I) = d, mixed degrees).
  bool uses_ideal_generators = false;
};

struct ReductionOptions {
  std::int64_t coefficient_bound = 100;
  int attempts = 8;
  /// When set and the ideal is m-primary, λ(R/J) must equal it.
  std::optional<BigInt> expected_multiplicity;
  /// Whether the ideal is m-primary; probed from the slices when unset.
  std::optional<bool> m_primary;
};

/// d forms, each a pseudo-random integer combination of the degree-δ
/// generators, validated as a reduction (and, for m-primary input, by
/// λ(R/J)). Re-draws with seed+1 on failure.
GeneralReduction draw_reduction(const FormList& gens, std::size_t nvars, std::uint64_t seed,
                                const ReductionOptions& options = {});
/// As above for a monomial ideal. A non-equigenerated ideal with exactly d
/// generators is its own parameter reduction and is returned unchanged.
GeneralReduction draw_reduction(const MonomialIdeal& I, std::uint64_t seed,
                                const ReductionOptions& options = {});

/// Least r >= 0 with (I^{r+1})_{(r+1)δ} = (J I^r)_{(r+1)δ}, for I and J
/// generated in the single degree δ. Throws NoReductionWithinBound.
std::int64_t reduction_number(const FormList& I, const FormList& J, std::size_t nvars,
                              std::int64_t bound);

/// λ(num/den) = Σ_e dim num_e - dim den_e.
BigInt quotient_length(const FormList& num, const FormList& den, std::size_t nvars,
                       std::int64_t degree_cap = 60);
/// λ(R/J).
BigInt colength_of_forms(const FormList& J, std::size_t nvars, std::int64_t degree_cap = 60);

/// (J : m^k)_e = { f in R_e : u·f in J_{e+k} for every monomial u of degree k }.
GradedSubspace colon_by_m_power(const FormList& J, std::size_t nvars, std::int64_t k,
                                std::int64_t e);

/// The slice of a monomial ideal: the span of its degree-e monomials.
GradedSubspace monomial_slice(const MonomialIdeal& I, std::int64_t e);

enum class HypothesisStatus { Verified, PartiallyVerified, Unverifiable };
std::string to_string(HypothesisStatus s);

struct ColonVerdict {
  std::int64_t power = 1;
  std::size_t height = 0;
  std::int64_t delta = 0;
  std::int64_t sigma = 0;
  /// gδ - δ - σ + 1 before clamping; colon by m^max(k,0).
  std::int64_t k = 0;
  HypothesisStatus hypotheses = HypothesisStatus::Verified;
  std::string hypothesis_note;
  GeneralReduction reduction;
  /// The general forms span I_δ, so J = I and J^n is generated by the
  /// monomials of I^n.
  bool reduction_spans_ideal = false;
  std::int64_t max_closure_degree = 0;
  std::int64_t degrees_checked_up_to = 0;
  bool equal = true;
  std::optional<std::int64_t> mismatch_degree;
  /// Per degree: (dim of colon slice, dim of closure slice).
  std::vector<std::pair<std::size_t, std::size_t>> slice_dimensions;
};

struct ColonOptions {
  std::optional<BigInt> multiplicity;
};

/// Compares closure(I^n) with J^n : m^k degree by degree for every e up to
/// D + δ + 1, where D is the largest generator degree of the closure.
ColonVerdict verify_colon_formula(const MonomialIdeal& I, std::int64_t n, std::uint64_t seed,
                                  const ColonOptions& options = {});

}  // namespace normlab
