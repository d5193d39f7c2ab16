#include "normlab/hilbert_sally.hpp"

#include <algorithm>
#include <sstream>

#include "normlab/errors.hpp"

namespace normlab {

std::string to_string(Check::Kind kind) {
  switch (kind) {
    case Check::Kind::Identity:
      return "identity";
    case Check::Kind::Assertion:
      return "assertion";
    case Check::Kind::Informational:
      return "informational";
  }
  return "?";
}

bool all_guaranteed_hold(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.holds || c.kind == Check::Kind::Informational;
  });
}

namespace {

Check make_check(std::string name, Check::Kind kind, const BigInt& lhs, const std::string& rel,
                 const BigInt& rhs) {
  Check c;
  c.name = std::move(name);
  c.kind = kind;
  c.lhs = lhs.str();
  c.rhs = rhs.str();
  if (rel == "==")
    c.holds = lhs == rhs;
  else if (rel == "<=")
    c.holds = lhs <= rhs;
  else
    c.holds = lhs >= rhs;
  c.relation = rel;
  return c;
}

}  // namespace

std::string format_polynomial(const IntPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const BigInt mag = abs(p[i]);
    if (first)
      os << (p[i] < 0 ? "-" : "");
    else
      os << (p[i] < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<BigInt> length_table(const MonomialIdeal& I, std::int64_t N) {
  if (!is_m_primary(I)) throw NotMPrimary("the closure filtration needs an m-primary ideal");
  if (I.is_unit()) throw DegenerateIdeal("the unit ideal has no Hilbert filtration");
  const NewtonPolyhedron P = newton_polyhedron(I);
  std::vector<BigInt> table{0};
  for (std::int64_t n = 1; n <= N; ++n) table.push_back(colength(closure_of_power(I, P, n)));
  return table;
}

IntPolynomial h_polynomial(const std::vector<BigInt>& table, std::size_t d) {
  if (table.size() < 3) throw SeriesNotStabilized("length table too short");
  const std::size_t count = table.size() - 1;  // coefficients of Σ λ(R/I_{n+1}) t^n
  IntPolynomial c(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= std::min<std::size_t>(k, d + 1); ++j) {
      const BigInt term = binomial(static_cast<std::int64_t>(d + 1), static_cast<std::int64_t>(j)) *
                          table[k - j + 1];
      acc += (j % 2 == 0) ? term : BigInt(-term);
    }
    c[k] = acc;
  }
  if (c[count - 1] != 0 || c[count - 2] != 0)
    throw SeriesNotStabilized("h-polynomial not stabilized with " + std::to_string(count) +
                              " table entries");
  trim(c);
  return c;
}

BigInt taylor_coefficient_at_one(const IntPolynomial& p, std::size_t i) {
  BigInt acc = 0;
  for (std::size_t k = i; k < p.size(); ++k)
    acc += binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)) * p[k];
  return acc;
}

std::vector<BigInt> hilbert_coefficients(const IntPolynomial& f, std::size_t upto) {
  std::vector<BigInt> e;
  for (std::size_t i = 0; i <= upto; ++i) e.push_back(taylor_coefficient_at_one(f, i));
  return e;
}

IntPolynomial sally_h_vector(const IntPolynomial& f, const BigInt& e0) {
  const BigInt a0 = f.empty() ? BigInt(0) : f[0];
  IntPolynomial num(std::max<std::size_t>(2, f.size()), BigInt(0));
  num[0] += a0;
  num[1] += e0 - a0;
  for (std::size_t i = 0; i < f.size(); ++i) num[i] -= f[i];
  // Division by (1 - t): g_k is the k-th partial sum.
  IntPolynomial g(num.size());
  BigInt run = 0;
  for (std::size_t k = 0; k < num.size(); ++k) {
    run += num[k];
    g[k] = run;
  }
  if (g.back() != 0)
    throw NonExactDivision("a_0 + (e_0 - a_0) t - f(t) is not divisible by 1 - t (remainder " +
                           g.back().str() + ")");
  if (g.front() != 0) throw NonzeroConstantTerm("Sally h-polynomial has nonzero constant term");
  trim(g);
  return g;
}

std::vector<Check> verify_identities(const FiltrationReport& report) {
  std::vector<Check> checks;
  const IntPolynomial& f = report.f;
  const IntPolynomial& g = report.g;
  auto a = [&](std::size_t i) { return i < f.size() ? f[i] : BigInt(0); };
  const std::size_t top = std::max(f.size(), g.size()) + 1;

  for (std::size_t i = 2; i <= top; ++i)
    checks.push_back(make_check("a_" + std::to_string(i) + " = b_" + std::to_string(i - 1) + " - b_" +
                                    std::to_string(i),
                                Check::Kind::Identity, a(i), "==", report.b(i - 1) - report.b(i)));
  for (std::size_t i = 1; i <= top; ++i)
    checks.push_back(make_check("e_" + std::to_string(i + 1) + "(F) = g^(" + std::to_string(i) +
                                    ")(1)/" + std::to_string(i) + "!",
                                Check::Kind::Identity, taylor_coefficient_at_one(f, i + 1), "==",
                                taylor_coefficient_at_one(g, i)));
  for (const auto& c : checks)
    if (!c.holds)
      throw FalsificationAlert("identity failed: " + c.name + " (" + c.lhs + " vs " + c.rhs + ")");

  for (std::size_t i = 1; i < std::max<std::size_t>(g.size(), 2); ++i) {
    checks.push_back(make_check("b_" + std::to_string(i) + " >= 0", Check::Kind::Assertion,
                                report.b(i), ">=", 0));
    checks.push_back(make_check("b_" + std::to_string(i) + " >= b_" + std::to_string(i + 1),
                                Check::Kind::Assertion, report.b(i), ">=", report.b(i + 1)));
  }
  if (g.size() <= 5) {
    const bool decreasing_ok =
        std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
    for (std::size_t i = 2; i <= 4; ++i) {
      Check c = make_check("e_" + std::to_string(i) + "(F) >= e_" + std::to_string(i + 1) + "(F)",
                           Check::Kind::Assertion, taylor_coefficient_at_one(f, i), ">=",
                           taylor_coefficient_at_one(f, i + 1));
      if (!decreasing_ok) c.note = "b not decreasing; chain not guaranteed";
      checks.push_back(std::move(c));
    }
  }
  return checks;
}

Check polynomial_growth_check(const FiltrationReport& report) {
  const std::int64_t d = static_cast<std::int64_t>(report.dimension);
  const std::int64_t deg_f = static_cast<std::int64_t>(report.f.size()) - 1;
  const std::int64_t start = std::max<std::int64_t>(1, deg_f - d + 1);
  Check c;
  c.name = "λ(R/I_n) = Hilbert polynomial for n >= " + std::to_string(start);
  c.kind = Check::Kind::Identity;
  c.relation = "==";
  for (std::int64_t m = start; m < static_cast<std::int64_t>(report.length_table.size()); ++m) {
    BigInt value = 0;
    for (std::int64_t i = 0; i <= d; ++i) {
      const BigInt term = report.e[static_cast<std::size_t>(i)] * binomial_polynomial(m - 1 + d - i, d - i);
      value += (i % 2 == 0) ? term : BigInt(-term);
    }
    if (value != report.length_table[static_cast<std::size_t>(m)]) {
      c.holds = false;
      c.lhs = report.length_table[static_cast<std::size_t>(m)].str();
      c.rhs = value.str();
      c.note = "first disagreement at n = " + std::to_string(m);
      return c;
    }
  }
  c.lhs = "table";
  c.rhs = "polynomial";
  c.note = "n = " + std::to_string(start) + ".." + std::to_string(report.length_table.size() - 1);
  return c;
}

Check e1_inequality_report(const FiltrationReport& report) {
  const BigInt& e0 = report.e.at(0);
  const BigInt& e1 = report.e.at(1);
  const BigInt a0 = report.f.empty() ? BigInt(0) : report.f[0];
  Check c = make_check("e_1 >= e_0 - λ(R/I_1)", Check::Kind::Informational, e1, ">=", e0 - a0);
  c.note = "difference " + BigInt(e1 - (e0 - a0)).str();
  return c;
}

FiltrationReport filtration_report(const MonomialIdeal& I, const FiltrationOptions& options) {
  if (!is_m_primary(I)) throw NotMPrimary("the closure filtration needs an m-primary ideal");
  if (I.is_unit()) throw DegenerateIdeal("the unit ideal has no Hilbert filtration");
  const std::size_t d = I.dimension();
  const std::int64_t ell = static_cast<std::int64_t>(analytic_spread(I));
  std::int64_t N = options.table_length.value_or(static_cast<std::int64_t>(d) + ell + 2);
  if (N > options.max_table_length)
    throw InputError("table length " + std::to_string(N) + " exceeds the cap " +
                     std::to_string(options.max_table_length));

  const NewtonPolyhedron P = newton_polyhedron(I);
  FiltrationReport report;
  report.dimension = d;
  report.length_table.push_back(0);
  while (true) {
    while (static_cast<std::int64_t>(report.length_table.size()) <= N)
      report.length_table.push_back(
          colength(closure_of_power(I, P, static_cast<std::int64_t>(report.length_table.size()))));
    try {
      report.f = h_polynomial(report.length_table, d);
      break;
    } catch (const SeriesNotStabilized&) {
      if (N >= options.max_table_length) throw;
      ++N;
    }
  }
  report.e = hilbert_coefficients(report.f, std::max(d, report.f.size() - 1));
  report.g = sally_h_vector(report.f, report.e[0]);
  report.lambda_closure_over_reduction = report.e[0] - report.f[0];
  report.checks = verify_identities(report);
  report.checks.push_back(polynomial_growth_check(report));
  if (!report.checks.back().holds)
    throw FalsificationAlert("length table disagrees with its Hilbert polynomial: " +
                             report.checks.back().note);
  return report;
}

std::vector<BigInt> sally_module_lengths(const MonomialIdeal& I, const GeneralReduction& J,
                                         std::int64_t nmax) {
  const std::size_t d = I.dimension();
  const NewtonPolyhedron P = newton_polyhedron(I);
  const FormList F1 = forms_of(closure_of_power(I, P, 1));
  std::vector<BigInt> out;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const FormList num = forms_of(closure_of_power(I, P, n + 1));
    const FormList den = product(power(J.forms, d, n), F1);
    out.push_back(quotient_length(num, den, d));
  }
  return out;
}

std::vector<BigInt> sally_series_prediction(const IntPolynomial& g, std::size_t d, std::size_t count) {
  std::vector<BigInt> out;
  const auto dd = static_cast<std::int64_t>(d);
  for (std::size_t n = 1; n <= count; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < g.size() && k <= n; ++k)
      acc += g[k] * binomial(static_cast<std::int64_t>(n - k) + dd - 1, dd - 1);
    out.push_back(acc);
  }
  return out;
}

SallyCrossCheck sally_cross_check(const MonomialIdeal& I, const FiltrationReport& report,
                                  const GeneralReduction& J, std::int64_t nmax) {
  SallyCrossCheck out;
  out.direct = sally_module_lengths(I, J, nmax);
  out.predicted = sally_series_prediction(report.g, report.dimension, static_cast<std::size_t>(nmax));
  out.agree = out.direct == out.predicted;
  return out;
}

GeneratorBoundReport generator_bound_check(const MonomialIdeal& I, std::uint64_t seed,
                                           const FiltrationReport& report) {
  if (!is_m_primary(I)) throw NotMPrimary("generator bounds need an m-primary ideal");
  const std::size_t d = I.dimension();
  ReductionOptions ropts;
  ropts.expected_multiplicity = report.multiplicity();

  GeneratorBoundReport out;
  out.reduction = draw_reduction(I, seed, ropts);
  const NewtonPolyhedron P = newton_polyhedron(I);
  const std::size_t ell = analytic_spread(I);
  std::vector<FormList> F{FormList{}};
  for (std::size_t k = 1; k <= ell; ++k) F.push_back(forms_of(closure_of_power(I, P, static_cast<std::int64_t>(k))));

  out.lambda_F1_over_J = quotient_length(F[1], out.reduction.forms, d);
  out.generator_count = out.lambda_F1_over_J;
  for (std::size_t k = 1; k + 1 <= ell; ++k) {
    out.quotient_lengths.push_back(quotient_length(F[k + 1], product(out.reduction.forms, F[k]), d));
    out.generator_count += out.quotient_lengths.back();
  }

  const BigInt& e0 = report.e.at(0);
  const BigInt& e1 = report.e.at(1);
  BigInt g1 = 0;
  for (const auto& b : report.g) g1 += b;

  out.checks.push_back(make_check("λ(F_1/J) = e_0 - λ(R/F_1)", Check::Kind::Assertion,
                                  out.lambda_F1_over_J, "==", report.lambda_closure_over_reduction));
  out.checks.push_back(make_check("e_1(F) = λ(F_1/J) + g(1)", Check::Kind::Assertion, e1, "==",
                                  out.lambda_F1_over_J + g1));
  out.checks.push_back(make_check("(a) G <= e_1(F)", Check::Kind::Assertion, out.generator_count, "<=", e1));
  Check b = make_check("(b) G <= e_0(F)", report.g.empty() ? Check::Kind::Assertion : Check::Kind::Informational,
                       out.generator_count, "<=", e0);
  if (!report.g.empty()) b.note = "stated for depth d; g != 0 here";
  out.checks.push_back(std::move(b));
  const BigInt f2 = out.quotient_lengths.empty() ? BigInt(0) : out.quotient_lengths.front();
  out.checks.push_back(make_check("(c) G <= λ(F_1/J) + (d-2) λ(F_2/F_1 J)", Check::Kind::Assertion,
                                  out.generator_count, "<=",
                                  out.lambda_F1_over_J + BigInt(static_cast<long>(d) - 2) * f2));
  return out;
}

GeneratorBoundReport generator_bound_check(const MonomialIdeal& I, std::uint64_t seed) {
  return generator_bound_check(I, seed, filtration_report(I));
}

}  // namespace normlab
