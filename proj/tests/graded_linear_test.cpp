#include "doctest.h"

#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"
#include "support.hpp"

using namespace normlab;
using normlab::test::ideal;

namespace {

HomogeneousForm mono(std::initializer_list<Exponent> a, const Rational& c = 1) {
  return HomogeneousForm::monomial(ExponentVector(a), c);
}

}  // namespace

TEST_SUITE("graded-linear") {
  TEST_CASE("forms") {
    HomogeneousForm f(2, 2);
    f.add_term(ExponentVector{2, 0}, 3);
    f.add_term(ExponentVector{0, 2}, -1);
    f.add_term(ExponentVector{2, 0}, -3);
    CHECK(f.terms().size() == 1);
    CHECK_THROWS_AS(f.add_term(ExponentVector{1, 0}, 1), DimensionMismatch);
    const auto g = mono({1, 0}) * mono({0, 1}, 2);
    CHECK(g == mono({1, 1}, 2));
    CHECK(format_form(RingDescriptor::standard(2), g) == "2*x*y");
    CHECK(power(forms_of(ideal(2, {{1, 0}, {0, 1}})), 2, 2).size() == 3);
  }

  TEST_CASE("ideal slices") {
    const FormList gens = forms_of(ideal(2, {{2, 0}, {0, 2}}));
    CHECK(ideal_slice(gens, 2, 2).dimension() == 2);
    CHECK(ideal_slice(gens, 2, 2).ambient_dimension() == 3);
    CHECK(ideal_slice(gens, 2, 3).is_full());
    CHECK(ideal_slice(gens, 2, 1).dimension() == 0);
    CHECK(next_slice(ideal_slice(gens, 2, 2), gens) == ideal_slice(gens, 2, 3));
  }

  TEST_CASE("reduction numbers") {
    const FormList m2 = forms_of(test::maximal_power(2, 2));
    const FormList J = forms_of(test::pure_powers(2, 2));
    CHECK(reduction_number(m2, J, 2, 6) == 1);
    CHECK(reduction_number(m2, m2, 2, 6) == 0);
    for (std::size_t d : {2u, 3u}) {
      const auto Id = test::pure_powers(d, static_cast<Exponent>(d));
      const auto I1 = test::maximal_power(d, static_cast<Exponent>(d));
      CHECK(reduction_number(forms_of(I1), forms_of(Id), d, 2 * d + 2) == static_cast<std::int64_t>(d) - 1);
    }
    const FormList too_small{mono({2, 0})};
    CHECK_THROWS_AS(reduction_number(m2, too_small, 2, 6), NoReductionWithinBound);
  }

  TEST_CASE("quotient lengths") {
    const auto m2 = forms_of(test::maximal_power(2, 2));
    const auto J = forms_of(test::pure_powers(2, 2));
    CHECK(quotient_length(m2, J, 2) == 1);
    CHECK(quotient_length(J, J, 2) == 0);
    CHECK(quotient_length(forms_of(test::maximal_power(2, 4)), product(J, m2), 2) == 0);
    CHECK_THROWS_AS(quotient_length(J, m2, 2), InclusionViolated);
    CHECK_THROWS_AS(quotient_length(FormList{mono({1, 0})}, FormList{mono({2, 0})}, 2, 20), NonFiniteQuotient);
    CHECK(colength_of_forms(J, 2) == 4);
  }

  TEST_CASE("colon by powers of the maximal ideal") {
    const auto J = forms_of(test::pure_powers(2, 2));
    CHECK(colon_by_m_power(J, 2, 1, 2).is_full());
    CHECK(colon_by_m_power(J, 2, 1, 1).dimension() == 0);
    for (std::int64_t e = 0; e <= 5; ++e) CHECK(colon_by_m_power(J, 2, 0, e) == ideal_slice(J, 2, e));
    const FormList sum_form{[] {
      HomogeneousForm f(2, 2);
      f.add_term(ExponentVector{2, 0}, 1);
      f.add_term(ExponentVector{0, 2}, 1);
      return f;
    }()};
    CHECK(colon_by_m_power(sum_form, 2, 1, 2) == ideal_slice(sum_form, 2, 2));
  }

  TEST_CASE("general reductions") {
    const auto I = test::pure_powers(2, 2);
    ReductionOptions opts;
    opts.expected_multiplicity = BigInt(4);
    const auto J = draw_reduction(I, 7, opts);
    CHECK(J.forms.size() == 2);
    CHECK(J.reduction_number == 0);
    CHECK(J.colength == BigInt(4));
    CHECK_FALSE(J.validation.empty());
    CHECK(J.seed == 7);

    const auto m = test::maximal_power(3, 1);
    const auto Jm = draw_reduction(m, 3);
    CHECK(Jm.reduction_number == 0);
    CHECK(ideal_slice(Jm.forms, 3, 1).is_full());

    const auto tri = edge_ideal(test::triangle());
    const auto Jt = draw_reduction(tri, 11);
    CHECK(Jt.forms.size() == 3);
    CHECK(ideal_slice(Jt.forms, 3, 2) == ideal_slice(forms_of(tri), 3, 2));

    const auto m2 = test::maximal_power(2, 2);
    ReductionOptions m2opts;
    m2opts.expected_multiplicity = BigInt(4);
    const auto Jm2 = draw_reduction(m2, 5, m2opts);
    CHECK(Jm2.reduction_number == 1);
    CHECK(Jm2.colength == BigInt(4));
  }

  TEST_CASE("draws are deterministic in the seed") {
    const auto I = test::maximal_power(3, 2);
    const auto a = draw_reduction(I, 42), b = draw_reduction(I, 42), c = draw_reduction(I, 43);
    CHECK(a.forms == b.forms);
    CHECK(a.seeds_tried == b.seeds_tried);
    CHECK_FALSE(a.forms == c.forms);
  }

  TEST_CASE("failed validation re-draws and finally reports every seed") {
    ReductionOptions opts;
    opts.expected_multiplicity = BigInt(5);
    try {
      draw_reduction(test::maximal_power(2, 2), 100, opts);
      FAIL("expected ReductionDrawFailed");
    } catch (const ReductionDrawFailed& e) {
      const std::string msg = e.what();
      CHECK(msg.find("seed 100") != std::string::npos);
      CHECK(msg.find("seed 107") != std::string::npos);
    }
  }

  TEST_CASE("mixed degrees need d generators") {
    CHECK_THROWS_AS(draw_reduction(ideal(2, {{3, 0}, {1, 1}, {0, 5}}), 1), NotEquigenerated);
    const auto J = draw_reduction(ideal(2, {{3, 0}, {0, 5}}), 1);
    CHECK(J.uses_ideal_generators);
    CHECK(J.colength == BigInt(15));
  }

  TEST_CASE("colon formula") {
    const auto v = verify_colon_formula(test::pure_powers(2, 2), 1, 7);
    CHECK(v.k == 1);
    CHECK(v.equal);
    CHECK(v.degrees_checked_up_to >= 5);
    CHECK(v.hypotheses == HypothesisStatus::Verified);

    const auto vm = verify_colon_formula(test::maximal_power(3, 1), 1, 7);
    CHECK(vm.k == 0);
    CHECK(vm.equal);

    for (std::int64_t n : {1, 2}) {
      const auto vt = verify_colon_formula(edge_ideal(test::triangle()), n, 7);
      CHECK(vt.k == 0);
      CHECK(vt.equal);
      CHECK(vt.hypotheses == HypothesisStatus::PartiallyVerified);
    }

    const auto vm2 = verify_colon_formula(test::maximal_power(2, 2), 2, 3);
    CHECK(vm2.equal);
    CHECK_FALSE(vm2.reduction_spans_ideal);

    CHECK_THROWS_AS(verify_colon_formula(ideal(2, {{3, 0}, {0, 5}}), 1, 1), NotEquigenerated);
  }
}
