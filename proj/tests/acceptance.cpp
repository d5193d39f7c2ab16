// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "normlab/cli.hpp"
#include "normlab/clutter.hpp"
#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"
#include "normlab/hilbert_sally.hpp"
#include "normlab/indices.hpp"
#include "normlab/oracle.hpp"
#include "support.hpp"

using namespace normlab;
using normlab::test::ideal;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string what) : what_(std::move(what)) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) failures_.push_back(detail);
  }

  bool report(int number) const {
    std::cout << (failures_.empty() ? "PASS" : "FAIL") << " criterion " << number << ": " << what_;
    for (const auto& f : failures_) std::cout << "\n    " << f;
    std::cout << std::endl;
    return failures_.empty();
  }

 private:
  std::string what_;
  std::vector<std::string> failures_;
};

std::string str(const MonomialIdeal& I) {
  std::ostringstream os;
  os << I;
  return os.str();
}

std::vector<MonomialIdeal> fixtures() { return test::m_primary_fixtures(); }

void criterion_1(Criterion& c) {
  for (std::size_t d : {2u, 3u}) {
    const auto I = test::pure_powers(d, static_cast<Exponent>(d));
    const auto r = indices_report(I);
    c.expect(r.s0 == 1, str(I) + ": s0 = " + std::to_string(r.s0));
    c.expect(r.s == static_cast<std::int64_t>(d) - 1, str(I) + ": s = " + std::to_string(r.s));
    const auto m = test::maximal_power(d, static_cast<Exponent>(d));
    c.expect(reduction_number(forms_of(m), forms_of(I), d, 2 * d + 2) == static_cast<std::int64_t>(d) - 1,
             "reduction number of closure(I) over I");
  }
}

void criterion_2(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const Clutter C = test::six_vertex_clutter();
  const auto I = edge_ideal(C);
  using Sets = std::vector<std::vector<std::size_t>>;
  c.expect(minimal_vertex_covers(C) == Sets{{1, 6}, {2, 4}, {3, 5}, {1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {4, 5, 6}},
           "minimal vertex covers");
  const ExponentVector all_ones{1, 1, 1, 1, 1, 1};
  const auto c2 = closure_of_power(I, 2);
  c.expect(c2 == sum(power(I, 2), ideal(6, {all_ones})), "closure(I^2) = I^2 + (x1...x6)");
  c.expect(closure_of_power(I, 3) == multiply(I, c2), "closure(I^3) = I closure(I^2)");
  c.expect(analytic_spread(I) == 4, "analytic spread");
  const auto r = indices_report(I);
  c.expect(r.s == 2 && r.s0 == 2, "s = " + std::to_string(r.s) + ", s0 = " + std::to_string(r.s0));
  c.expect(r.fresh_generators.size() == 2 && r.fresh_generators.count(2) &&
               r.fresh_generators.at(2) == std::vector<ExponentVector>{all_ones},
           "unique level-2 fresh generator x1...x6");
  const auto cert = is_normal(I);
  c.expect(!cert.normal && cert.witness == all_ones, "not normal, witness (1,1,1,1,1,1)");
  c.expect(q_polyhedron_integral(C), "Q(A) integral");
  const auto t = compare_symbolic_closure(C, 3);
  bool equal = t.rows.size() == 3;
  for (const auto& row : t.rows) equal = equal && row.equal;
  c.expect(equal, "symbolic powers equal closures for n <= 3");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60, "runtime " + std::to_string(secs) + " s");
}

void criterion_3(Criterion& c) {
  auto all = fixtures();
  for (const auto& I : all) {
    const auto r = filtration_report(I);
    for (const auto& chk : verify_identities(r))
      if (chk.kind != Check::Kind::Informational) c.expect(chk.holds, str(I) + ": " + chk.name);
    const std::size_t top = std::max(r.f.size(), r.g.size()) + 2;
    for (std::size_t i = 2; i <= top; ++i) {
      const BigInt a = i < r.f.size() ? r.f[i] : BigInt(0);
      c.expect(a == r.b(i - 1) - r.b(i), str(I) + ": a_" + std::to_string(i) + " = b_{i-1} - b_i");
    }
    for (std::size_t i = 1; i + 1 < r.e.size(); ++i)
      c.expect(r.e[i + 1] == taylor_coefficient_at_one(r.g, i), str(I) + ": e_" + std::to_string(i + 1));
    for (std::size_t i = 1; i <= r.g.size(); ++i) {
      c.expect(r.b(i) >= 0, str(I) + ": b nonnegative");
      c.expect(r.b(i) >= r.b(i + 1), str(I) + ": b non-increasing");
    }
    if (r.g.size() <= 5) {
      std::vector<BigInt> e;
      for (std::size_t i = 0; i <= 5; ++i) e.push_back(i < r.e.size() ? r.e[i] : taylor_coefficient_at_one(r.g, i - 1));
      c.expect(e[2] >= e[3] && e[3] >= e[4] && e[4] >= e[5], str(I) + ": e2 >= e3 >= e4 >= e5");
    }
    const auto J = draw_reduction(I, 1, [&] {
      ReductionOptions o;
      o.expected_multiplicity = r.multiplicity();
      return o;
    }());
    const auto x = sally_cross_check(I, r, J, 3);
    c.expect(x.agree, str(I) + ": Sally module lengths against g/(1-t)^d");
  }
}

void criterion_4(Criterion& c) {
  const auto r = filtration_report(test::pure_powers(2, 2));
  c.expect(r.f == std::vector<BigInt>{3, 1}, "f = " + format_polynomial(r.f));
  c.expect(r.e.size() >= 2 && r.e[0] == 4 && r.e[1] == 1, "e0 = 4, e1 = 1");
  c.expect(r.g.empty(), "g = " + format_polynomial(r.g));
  const auto e1 = e1_inequality_report(r);
  c.expect(e1.note == "difference 0", "e1 - (e0 - λ(R/closure(I))) " + e1.note);
}

void criterion_5(Criterion& c) {
  for (const auto& I : fixtures()) {
    const auto r = filtration_report(I);
    const auto g = generator_bound_check(I, 1, r);
    c.expect(g.generator_count <= r.e[1], str(I) + ": G <= e1");
    c.expect(r.e[1] == g.lambda_F1_over_J + taylor_coefficient_at_one(r.g, 0), str(I) + ": e1 = λ(F1/J) + g(1)");
  }
}

int cli_exit(std::vector<std::string> args) {
  args.insert(args.begin(), "normlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  return cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
}

void criterion_6(Criterion& c) {
  const auto a = verify_colon_formula(test::pure_powers(2, 2), 1, 1);
  c.expect(a.k == 1 && a.equal && a.degrees_checked_up_to >= 5, "(x^2, y^2): k = 1, J : m = closure(I)");
  for (std::int64_t e = 0; e <= 5; ++e)
    c.expect(colon_by_m_power(a.reduction.forms, 2, 1, e) == monomial_slice(test::maximal_power(2, 2), e),
             "(x^2, y^2): degree " + std::to_string(e));
  const auto b = verify_colon_formula(test::maximal_power(2, 1), 1, 1);
  c.expect(b.k == 0 && b.equal, "m: k = 0");
  for (std::int64_t n = 1; n <= 2; ++n) {
    const auto t = verify_colon_formula(edge_ideal(test::triangle()), n, 1);
    c.expect(t.k == 0 && t.equal, "triangle n = " + std::to_string(n));
  }
  c.expect(is_normal(edge_ideal(test::triangle())).normal, "triangle ideal is normal");
  const std::string data = DATA_DIR;
  c.expect(cli_exit({"colon-verify", "-i", data + "/x2y2.json"}) == 0, "colon-verify exit 0 on x2y2");
  c.expect(cli_exit({"colon-verify", "-i", data + "/triangle.json", "-n", "2"}) == 0,
           "colon-verify exit 0 on the triangle");
}

void criterion_7(Criterion& c) {
  auto all = fixtures();
  all.push_back(edge_ideal(test::six_vertex_clutter()));
  all.push_back(edge_ideal(test::triangle()));
  all.push_back(test::gapped_quartic());
  for (const auto& I : all) {
    const auto r = indices_report(I);
    c.expect(r.s <= static_cast<std::int64_t>(r.ell) - 1, str(I) + ": s <= ℓ - 1");
    if (!is_m_primary(I)) continue;
    const BigInt e = filtration_report(I).multiplicity();
    const auto d = static_cast<long>(I.dimension());
    BigInt p = 1;
    for (long i = 0; i < d; ++i) p *= r.s0 + 1;
    c.expect(BigInt(r.s) <= (e - 1) * r.s0, str(I) + ": s <= (e - 1) s0");
    c.expect(BigInt(r.s) <= e * (p - 1) - BigInt(r.s0) * (2 * d - 1), str(I) + ": s <= e((s0+1)^d - 1) - s0(2d-1)");
  }
}

void criterion_8(Criterion& c) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 3), ngen(1, 4), expo(0, 6);
  for (int trial = 0; trial < 24; ++trial) {
    const auto d = static_cast<std::size_t>(dim(rng));
    std::vector<ExponentVector> gens;
    const int m = ngen(rng);
    for (int j = 0; j < m; ++j) {
      ExponentVector a(d);
      for (std::size_t i = 0; i < d; ++i) a[i] = expo(rng);
      gens.push_back(a);
    }
    const auto I = ideal(d, gens);
    if (!I.is_proper_nonzero()) continue;
    const std::string tag = str(I);
    std::vector<MonomialIdeal> C{MonomialIdeal::unit(I.ring())};
    for (std::int64_t n = 1; n <= 4; ++n) C.push_back(closure_of_power(I, n));
    c.expect(closure_of_power(C[1], 1) == C[1], tag + ": idempotence");
    for (int a = 1; a <= 2; ++a)
      for (int b = a; a + b <= 4; ++b)
        c.expect(is_subset(multiply(C[a], C[b]), C[a + b]), tag + ": products of closures");
    oracle::DefinitionClosure def(I, 12);
    c.expect(def.closure_of_power(1) == C[1], tag + ": definition oracle");
    c.expect(oracle::closure_by_facet_scan(I, 2) == C[2], tag + ": facet scan oracle");
    if (d >= 2)
      for (std::int64_t k = 0; k <= 2; ++k) {
        const auto col = colon(I, test::maximal_power(d, k));
        for (std::int64_t e = 0; e <= 6; ++e)
          c.expect(colon_by_m_power(forms_of(I), d, k, e) == monomial_slice(col, e), tag + ": monomial colon");
      }
  }
  const auto I = test::maximal_power(3, 2);
  c.expect(draw_reduction(I, 5).forms == draw_reduction(I, 5).forms, "seed determinism");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"pure powers x_i^d: s0 = 1 and s = d - 1 for d = 2, 3", criterion_1},
      {"six-vertex clutter example", criterion_2},
      {"Hilbert and Sally identities on the m-primary fixtures", criterion_3},
      {"(x^2, y^2): f = 3 + t, e0 = 4, e1 = 1, g = 0", criterion_4},
      {"generator count bounds", criterion_5},
      {"colon formula", criterion_6},
      {"index bounds", criterion_7},
      {"property suite", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c(criteria[i].first);
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (!c.report(static_cast<int>(i) + 1)) ++failed;
  }
  return failed;
}
