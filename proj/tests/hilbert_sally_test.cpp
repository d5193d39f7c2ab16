#include "doctest.h"

#include <tuple>

#include "normlab/errors.hpp"
#include "normlab/hilbert_sally.hpp"
#include "support.hpp"

using namespace normlab;
using normlab::test::ideal;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("hilbert-sally") {
  TEST_CASE("length tables") {
    CHECK(length_table(test::pure_powers(2, 2), 4) == big({0, 3, 10, 21, 36}));
    CHECK(length_table(test::pure_powers(3, 3), 8) == big({0, 10, 56, 165, 364, 680, 1140, 1771, 2600}));
    CHECK(length_table(ideal(2, {{3, 0}, {0, 5}}), 6) == big({0, 11, 37, 78, 134, 205, 291}));
    CHECK(length_table(test::maximal_power(2, 1), 3) == big({0, 1, 3, 6}));
    CHECK_THROWS_AS(length_table(edge_ideal(test::six_vertex_clutter()), 3), NotMPrimary);
  }

  TEST_CASE("length tables when the closures are powers of m") {
    // closure(I^n) = m^{cn}, so λ(R/closure(I^n)) = C(cn + d - 1, d).
    auto binom = [](long n, long k) {
      BigInt r = 1;
      for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
      return r;
    };
    const std::vector<std::tuple<MonomialIdeal, long, long>> cases{
        {test::pure_powers(3, 3), 3, 3}, {test::pure_powers(2, 2), 2, 2},
        {test::pure_powers(3, 2), 3, 2}, {test::gapped_quartic(), 2, 4}};
    for (const auto& [I, d, c] : cases) {
      CAPTURE(I);
      const auto table = length_table(I, 10);
      for (long n = 0; n <= 10; ++n) CHECK(table[n] == (n == 0 ? BigInt(0) : binom(c * n + d - 1, d)));
    }
  }

  TEST_CASE("h-polynomial and coefficients") {
    const auto f = h_polynomial(big({0, 3, 10, 21, 36, 55}), 2);
    CHECK(f == big({3, 1}));
    CHECK(hilbert_coefficients(f, 2) == big({4, 1, 0}));
    CHECK(format_polynomial(big({10, 16, 1})) == "10 + 16t + t^2");
    CHECK(format_polynomial({}) == "0");
    CHECK(format_polynomial(big({0, -1, 0, 2})) == "-t + 2t^3");
    CHECK(taylor_coefficient_at_one(big({10, 16, 1}), 1) == 18);
    CHECK(taylor_coefficient_at_one(big({10, 16, 1}), 2) == 1);
    CHECK(taylor_coefficient_at_one(big({10, 16, 1}), 3) == 0);
    CHECK_THROWS_AS(h_polynomial(big({0, 1, 5, 2}), 2), SeriesNotStabilized);
  }

  TEST_CASE("sally h-vector") {
    CHECK(sally_h_vector(big({3, 1}), BigInt(4)).empty());
    CHECK(sally_h_vector(big({10, 16, 1}), BigInt(27)) == big({0, 1}));
    // a_0 + (e_0 - a_0)t - f must vanish at t = 1.
    CHECK_THROWS_AS(sally_h_vector(big({10, 16, 1}), BigInt(28)), NonExactDivision);
  }

  TEST_CASE("filtration reports") {
    const auto r = filtration_report(test::pure_powers(3, 3));
    CHECK(r.dimension == 3);
    CHECK(r.f == big({10, 16, 1}));
    CHECK(r.e == big({27, 18, 1, 0}));
    CHECK(r.g == big({0, 1}));
    CHECK(r.b(1) == 1);
    CHECK(r.b(2) == 0);
    CHECK(r.lambda_closure_over_reduction == 17);
    CHECK(all_guaranteed_hold(r.checks));

    const auto q = filtration_report(ideal(2, {{3, 0}, {0, 5}}));
    CHECK(q.f == big({11, 4}));
    CHECK(q.e[0] == 15);
    CHECK(q.e[1] == 4);
    CHECK(q.g.empty());

    const auto p = filtration_report(test::pure_powers(2, 2));
    CHECK(p.f == big({3, 1}));
    CHECK(p.multiplicity() == 4);
    CHECK(p.e[1] == 1);

    FiltrationOptions short_table;
    short_table.table_length = 2;
    CHECK(filtration_report(test::pure_powers(3, 3), short_table).f == r.f);
  }

  TEST_CASE("identities") {
    auto all = test::m_primary_fixtures();
    all.push_back(test::gapped_quartic());
    for (const auto& I : all) {
      CAPTURE(I);
      const auto r = filtration_report(I);
      const auto checks = verify_identities(r);
      CHECK(all_guaranteed_hold(checks));
      CHECK(polynomial_growth_check(r).holds);
      auto a = [&](std::size_t i) { return i < r.f.size() ? r.f[i] : BigInt(0); };
      CHECK(a(1) == r.lambda_closure_over_reduction - r.b(1));
      for (std::size_t i = 2; i <= r.f.size() + 2; ++i) CHECK(a(i) == r.b(i - 1) - r.b(i));
      CHECK(r.e[0] == r.f[0] + r.lambda_closure_over_reduction);
      for (std::size_t i = 0; i + 1 < r.g.size(); ++i) CHECK(r.b(i + 1) >= 0);
    }
  }

  TEST_CASE("a corrupted report trips the identities") {
    auto r = filtration_report(test::pure_powers(3, 3));
    r.g[1] = 2;
    CHECK_THROWS_AS(verify_identities(r), FalsificationAlert);
  }

  TEST_CASE("e1 inequality") {
    const auto c = e1_inequality_report(filtration_report(test::pure_powers(3, 3)));
    CHECK(c.kind == Check::Kind::Informational);
    CHECK(c.note == "difference 1");
    CHECK(e1_inequality_report(filtration_report(test::pure_powers(2, 2))).note == "difference 0");
  }

  TEST_CASE("sally module lengths agree with the series") {
    const auto I = test::pure_powers(3, 3);
    const auto r = filtration_report(I);
    const auto J = draw_reduction(I, 1);
    const auto x = sally_cross_check(I, r, J, 3);
    CHECK(x.direct == big({1, 3, 6}));
    CHECK(x.predicted == big({1, 3, 6}));
    CHECK(x.agree);
    CHECK(sally_series_prediction(big({0, 1}), 3, 4) == big({1, 3, 6, 10}));
    CHECK(sally_series_prediction({}, 2, 2) == big({0, 0}));

    const auto I2 = test::pure_powers(2, 2);
    const auto y = sally_cross_check(I2, filtration_report(I2), draw_reduction(I2, 1), 3);
    CHECK(y.direct == big({0, 0, 0}));
    CHECK(y.agree);
  }

  TEST_CASE("generator bounds") {
    const auto g = generator_bound_check(test::pure_powers(3, 3), 1);
    CHECK(g.lambda_F1_over_J == 17);
    CHECK(g.quotient_lengths == big({1, 0}));
    CHECK(g.generator_count == 18);
    CHECK(all_guaranteed_hold(g.checks));

    const auto h = generator_bound_check(test::pure_powers(2, 2), 1);
    CHECK(h.generator_count == 1);
    CHECK(h.lambda_F1_over_J == 1);

    const auto q = generator_bound_check(ideal(2, {{3, 0}, {0, 5}}), 1);
    CHECK(q.reduction.uses_ideal_generators);
    CHECK(q.generator_count == 4);
    CHECK(all_guaranteed_hold(q.checks));

    for (const auto& I : test::m_primary_fixtures()) {
      CAPTURE(I);
      const auto r = filtration_report(I);
      const auto b = generator_bound_check(I, 3, r);
      CHECK(all_guaranteed_hold(b.checks));
      CHECK(b.lambda_F1_over_J == r.lambda_closure_over_reduction);
      CHECK(b.generator_count <= r.e[1]);
    }
  }

  TEST_CASE("reduction numbers above d are rejected") {
    const auto I = test::gapped_quartic();
    const auto r = filtration_report(I);
    CHECK(r.f == big({10, 6}));
    CHECK(r.g.empty());
    CHECK_THROWS_AS(generator_bound_check(I, 1), ReductionDrawFailed);
    const auto J = forms_of(ideal(2, {{4, 0}, {0, 4}}));
    CHECK(reduction_number(forms_of(I), J, 2, 6) == 3);
  }

  TEST_CASE("non m-primary input") {
    CHECK_THROWS_AS(filtration_report(edge_ideal(test::triangle())), NotMPrimary);
    CHECK_THROWS_AS(generator_bound_check(edge_ideal(test::triangle()), 1), NotMPrimary);
  }
}
