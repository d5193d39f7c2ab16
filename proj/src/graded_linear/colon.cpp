#include <algorithm>

#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"

namespace normlab {

GradedSubspace colon_by_m_power(const FormList& J, std::size_t nvars, std::int64_t k,
                                std::int64_t e) {
  if (k < 0 || e < 0) throw InputError("colon_by_m_power needs k, e >= 0");
  if (k == 0) return ideal_slice(J, nvars, e);

  const GradedSubspace target = ideal_slice(J, nvars, e + k);
  GradedSubspace result(nvars, e);
  if (target.is_full()) return GradedSubspace::full(nvars, e);

  const auto& src = result.monomials();
  const auto& dst = target.monomials();
  const EchelonBasis& W = target.echelon();
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < dst.size(); ++c)
    if (W.row_of_pivot(c) == EchelonBasis::npos) free_cols.push_back(c);

  // Normal form of a monomial of R_{e+k} modulo J_{e+k}, in the coordinates
  // of the non-pivot columns.
  auto normal_form = [&](std::size_t col) {
    RationalVector nf(free_cols.size(), Rational(0));
    const std::size_t r = W.row_of_pivot(col);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      if (r == EchelonBasis::npos)
        nf[i] = (free_cols[i] == col) ? 1 : 0;
      else
        nf[i] = -W.row(r)[free_cols[i]];
    }
    return nf;
  };

  // f = Σ c_m m lies in the colon iff Σ c_m NF(u·m) = 0 for every u.
  EchelonBasis constraints(src.size());
  for (const auto& u : MonomialBasis::get(nvars, k)->monomials()) {
    std::vector<RationalVector> columns;
    columns.reserve(src.size());
    for (std::size_t m = 0; m < src.size(); ++m) columns.push_back(normal_form(dst.index_of(src[m] + u)));
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      RationalVector row(src.size(), Rational(0));
      for (std::size_t m = 0; m < src.size(); ++m) row[m] = columns[m][i];
      constraints.insert(std::move(row));
      if (constraints.is_full()) return result;
    }
  }
  for (auto& v : null_space(constraints.rows(), src.size())) result.insert_vector(std::move(v));
  return result;
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified:
      return "hypotheses verified";
    case HypothesisStatus::PartiallyVerified:
      return "hypotheses partially verified";
    case HypothesisStatus::Unverifiable:
      return "hypotheses unverifiable";
  }
  return "?";
}

ColonVerdict verify_colon_formula(const MonomialIdeal& I, std::int64_t n, std::uint64_t seed,
                                  const ColonOptions& options) {
  if (!I.ring().is_standard()) throw InputError("colon verification needs the standard grading");
  if (!I.is_proper_nonzero()) throw DegenerateIdeal("colon verification needs a nonzero proper ideal");
  if (n < 1) throw InputError("power must be >= 1");
  const auto delta = equigenerated_degree(I);
  if (!delta) throw NotEquigenerated("colon verification needs generators of a single degree");

  const std::size_t d = I.dimension();
  ColonVerdict v;
  v.power = n;
  v.height = height(I);
  v.delta = *delta;
  v.sigma = I.ring().weight_sum();
  v.k = static_cast<std::int64_t>(v.height) * v.delta - v.delta - v.sigma + 1;

  const bool squarefree = std::all_of(I.generators().begin(), I.generators().end(), [](const auto& g) {
    return std::all_of(g.begin(), g.end(), [](Exponent x) { return x <= 1; });
  });
  if (v.height == d) {
    v.hypotheses = HypothesisStatus::Verified;
    v.hypothesis_note = "m-primary: the G_d and depth conditions are vacuous";
  } else if (squarefree && v.height + 1 == d) {
    v.hypotheses = HypothesisStatus::PartiallyVerified;
    v.hypothesis_note = "reduced and one-dimensional; G_d and depth conditions not checked";
  } else {
    v.hypotheses = HypothesisStatus::Unverifiable;
    v.hypothesis_note = "neither m-primary nor one-dimensional reduced; hypotheses not checked";
  }

  ReductionOptions ropts;
  ropts.m_primary = v.height == d;
  if (v.height == d) ropts.expected_multiplicity = options.multiplicity;
  const FormList gens = forms_of(I);
  v.reduction = draw_reduction(gens, d, seed, ropts);
  v.reduction_spans_ideal = ideal_slice(v.reduction.forms, d, v.delta) == ideal_slice(gens, d, v.delta);
  const FormList Jn = v.reduction_spans_ideal ? forms_of(power(I, n)) : power(v.reduction.forms, d, n);
  const std::int64_t k = std::max<std::int64_t>(v.k, 0);

  const MonomialIdeal closure = closure_of_power(I, n);
  for (const auto& g : closure.generators())
    v.max_closure_degree = std::max(v.max_closure_degree, g.total_degree());
  v.degrees_checked_up_to = v.max_closure_degree + v.delta + 1;

  for (std::int64_t e = 0; e <= v.degrees_checked_up_to; ++e) {
    const GradedSubspace colon = colon_by_m_power(Jn, d, k, e);
    const GradedSubspace expected = monomial_slice(closure, e);
    v.slice_dimensions.emplace_back(colon.dimension(), expected.dimension());
    if (!(colon == expected) && v.equal) {
      v.equal = false;
      v.mismatch_degree = e;
    }
  }
  return v;
}

}  // namespace normlab
