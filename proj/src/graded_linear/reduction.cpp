#include <limits>
#include <random>
#include <sstream>

#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"

namespace normlab {

namespace {

// Uniform integer in [-bound, bound] from raw mt19937_64 output by rejection,
// so the stream is identical on every standard library.
std::int64_t draw_coefficient(std::mt19937_64& rng, std::int64_t bound) {
  const std::uint64_t range = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % range) - bound;
}

std::int64_t common_degree(const FormList& gens) {
  if (gens.empty()) throw DegenerateIdeal("no generators");
  const std::int64_t delta = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != delta) throw NotEquigenerated("generators of several degrees");
  return delta;
}

}  // namespace

std::int64_t reduction_number(const FormList& I, const FormList& J, std::size_t nvars,
                              std::int64_t bound) {
  const std::int64_t delta = common_degree(I);
  if (common_degree(J) != delta) throw NotEquigenerated("reduction forms differ in degree from the ideal");
  GradedSubspace Ir = GradedSubspace::full(nvars, 0);  // (I^r)_{rδ}, r = 0
  for (std::int64_t r = 0; r <= bound; ++r) {
    const GradedSubspace next = product_slice(I, Ir);
    const GradedSubspace jir = product_slice(J, Ir);
    if (!next.contains(jir)) throw InclusionViolated("J is not contained in I");
    if (jir.dimension() == next.dimension()) return r;
    Ir = next;
  }
  throw NoReductionWithinBound("no r <= " + std::to_string(bound) + " with I^{r+1} = J I^r");
}

GeneralReduction draw_reduction(const FormList& gens, std::size_t nvars, std::uint64_t seed,
                                const ReductionOptions& options) {
  const std::int64_t delta = common_degree(gens);
  const bool m_primary = options.m_primary ? *options.m_primary : [&] {
    // m-primary iff some slice of the ideal is all of R_e; a slice of a
    // finite-colength ideal fills up once the colength is exhausted.
    GradedSubspace s = ideal_slice(gens, nvars, delta);
    for (std::int64_t e = delta; e <= delta * static_cast<std::int64_t>(nvars) + 1; ++e) {
      if (s.is_full()) return true;
      s = next_slice(s, gens);
    }
    return false;
  }();

  GeneralReduction result;
  result.delta = delta;
  std::ostringstream failures;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    result.seeds_tried.push_back(s);
    std::mt19937_64 rng(s);
    FormList forms;
    for (std::size_t i = 0; i < nvars; ++i) {
      HomogeneousForm f(nvars, delta);
      for (const auto& g : gens) {
        const std::int64_t c = draw_coefficient(rng, options.coefficient_bound);
        for (const auto& [a, coef] : g.terms()) f.add_term(a, coef * c);
      }
      forms.push_back(std::move(f));
    }
    std::vector<std::string> validation;
    try {
      const std::int64_t r =
          reduction_number(gens, forms, nvars, 2 * static_cast<std::int64_t>(nvars) + 2);
      if (r > static_cast<std::int64_t>(nvars)) {
        failures << " seed " << s << ": reduction number " << r << " exceeds " << nvars << ';';
        continue;
      }
      validation.push_back("reduction: I^" + std::to_string(r + 1) + " = J I^" + std::to_string(r) +
                           " in degree " + std::to_string((r + 1) * delta));
      result.reduction_number = r;
      if (m_primary) {
        const BigInt len = colength_of_forms(forms, nvars);
        if (options.expected_multiplicity && len != *options.expected_multiplicity) {
          failures << " seed " << s << ": colength " << len << " != multiplicity "
                   << *options.expected_multiplicity << ';';
          continue;
        }
        validation.push_back("colength: λ(R/J) = " + len.str() +
                             (options.expected_multiplicity ? " = e0" : ""));
        result.colength = len;
      }
    } catch (const NoReductionWithinBound&) {
      failures << " seed " << s << ": not a reduction;";
      continue;
    } catch (const NonFiniteQuotient&) {
      failures << " seed " << s << ": J not m-primary;";
      continue;
    }
    result.seed = s;
    result.forms = std::move(forms);
    result.validation = std::move(validation);
    return result;
  }
  throw ReductionDrawFailed("no valid general reduction after " + std::to_string(options.attempts) +
                            " draws:" + failures.str());
}

GeneralReduction draw_reduction(const MonomialIdeal& I, std::uint64_t seed,
                                const ReductionOptions& options) {
  if (!I.is_proper_nonzero()) throw DegenerateIdeal("reduction of a zero or unit ideal");
  const FormList gens = forms_of(I);
  if (equigenerated_degree(I)) {
    ReductionOptions opts = options;
    opts.m_primary = is_m_primary(I);
    return draw_reduction(gens, I.dimension(), seed, opts);
  }
  if (I.size() != I.dimension())
    throw NotEquigenerated("a general reduction needs generators of a single degree");
  // d generators of mixed degrees: for m-primary I this is a parameter
  // ideal, hence its own minimal reduction.
  GeneralReduction result;
  result.seed = seed;
  result.uses_ideal_generators = true;
  result.forms = gens;
  result.delta = 0;
  result.validation.push_back("J = I: generated by d elements");
  if (is_m_primary(I)) {
    const BigInt len = colength_of_forms(gens, I.dimension());
    if (options.expected_multiplicity && len != *options.expected_multiplicity)
      throw ReductionDrawFailed("λ(R/I) = " + len.str() + " differs from the multiplicity " +
                                options.expected_multiplicity->str());
    result.colength = len;
    result.validation.push_back("colength: λ(R/J) = " + len.str() +
                                (options.expected_multiplicity ? " = e0" : ""));
  }
  return result;
}

}  // namespace normlab
