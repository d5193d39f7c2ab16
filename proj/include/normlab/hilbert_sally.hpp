#pragma once

// Hilbert series of the integral closure filtration F = { closure(I^n) } of an
// m-primary monomial ideal, and the h-vector of its Sally module.
//
// Series convention. With I_n = closure(I^n),
//
//     Σ_{n>=0} λ(R/I_{n+1}) t^n = f(t) / (1-t)^{d+1},
//
// so f(0) = a_0 = λ(R/I_1). For I = (x^2, y^2) the table 3, 10, 21, 36, ...
// gives f = 3 + t, and λ(R/I_n) = 4·C(n+1,2) - n as expected. The Sally
// module S = ⊕_{n>=1} I_{n+1} / J^n I_1 of a minimal reduction J has
// Σ_{n>=1} λ(S_n) t^n = g(t) / (1-t)^d with
//
//     f(t) = λ(R/I_1) + λ(I_1/J)·t - (1-t)·g(t),   λ(I_1/J) = e_0 - a_0.
//
// Hilbert coefficients are unsigned: e_i = f^{(i)}(1) / i!.
//
// The h-vector b of g is asserted nonnegative and non-increasing. For
// monomial ideals the normalized Rees algebra is Cohen-Macaulay (Hochster:
// it is a normal affine semigroup ring), hence so is gr_F, hence S is
// Cohen-Macaulay of dimension d and its h-vector is positive, while the
// difference relation a_i = b_{i-1} - b_i with a_i >= 0 makes it
// non-increasing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/checks.hpp"
#include "normlab/core.hpp"
#include "normlab/graded_linear.hpp"
#include "normlab/numeric.hpp"

namespace normlab {

struct FiltrationReport {
  std::size_t dimension = 0;
  /// λ(R/closure(I^n)) for n = 0..N.
  std::vector<BigInt> length_table;
  /// h-polynomial coefficients a_i.
  IntPolynomial f;
  /// Sally h-polynomial; b_i = g[i] and g[0] = 0. Empty when g = 0.
  IntPolynomial g;
  /// e_0 .. e_max(d, deg f).
  std::vector<BigInt> e;
  /// λ(I_1/J) = e_0 - a_0.
  BigInt lambda_closure_over_reduction;
  std::vector<Check> checks;

  const BigInt& multiplicity() const { return e.front(); }
  /// b_i, zero beyond the stored coefficients.
  BigInt b(std::size_t i) const { return i < g.size() ? g[i] : BigInt(0); }
};

/// "3 + t - 2t^2" style rendering; "0" for the zero polynomial.
std::string format_polynomial(const IntPolynomial& p);

/// λ(R/closure(I^n)) for n = 0..N. Throws NotMPrimary.
std::vector<BigInt> length_table(const MonomialIdeal& I, std::int64_t N);

/// f(t) from a length table. Throws SeriesNotStabilized unless the last two
/// computed coefficients of (1-t)^{d+1}·Σ λ(R/I_{n+1}) t^n vanish.
IntPolynomial h_polynomial(const std::vector<BigInt>& table, std::size_t d);

/// p^{(i)}(1) / i!.
BigInt taylor_coefficient_at_one(const IntPolynomial& p, std::size_t i);

/// e_0 .. e_upto.
std::vector<BigInt> hilbert_coefficients(const IntPolynomial& f, std::size_t upto);

/// g(t) = (a_0 + (e_0 - a_0) t - f(t)) / (1 - t).
/// Throws NonExactDivision or NonzeroConstantTerm.
IntPolynomial sally_h_vector(const IntPolynomial& f, const BigInt& e0);

/// Coefficient identities (thrown on failure as FalsificationAlert), the
/// decreasing h-vector and the e_2 >= ... >= e_5 chain (reported).
std::vector<Check> verify_identities(const FiltrationReport& report);

/// λ(R/I_n) matches the Hilbert polynomial built from e_0..e_d for every
/// n >= deg f - d + 1 in the table.
Check polynomial_growth_check(const FiltrationReport& report);

/// e_1 - (e_0 - λ(R/I_1)), informational.
Check e1_inequality_report(const FiltrationReport& report);

struct FiltrationOptions {
  /// Table length; defaults to d + ℓ(I) + 2 and is extended on
  /// SeriesNotStabilized up to `max_table_length`.
  std::optional<std::int64_t> table_length;
  std::int64_t max_table_length = 25;
};

FiltrationReport filtration_report(const MonomialIdeal& I, const FiltrationOptions& options = {});

/// λ(I_{n+1} / J^n I_1) for n = 1..nmax, computed by degreewise linear algebra.
std::vector<BigInt> sally_module_lengths(const MonomialIdeal& I, const GeneralReduction& J,
                                         std::int64_t nmax);

/// First `count` coefficients (from t^1) of g(t)/(1-t)^d.
std::vector<BigInt> sally_series_prediction(const IntPolynomial& g, std::size_t d, std::size_t count);

struct SallyCrossCheck {
  std::vector<BigInt> direct;
  std::vector<BigInt> predicted;
  bool agree = true;
};

SallyCrossCheck sally_cross_check(const MonomialIdeal& I, const FiltrationReport& report,
                                  const GeneralReduction& J, std::int64_t nmax = 3);

struct GeneratorBoundReport {
  GeneralReduction reduction;
  /// λ(F_1/J), computed from J.
  BigInt lambda_F1_over_J;
  /// λ(F_{k+1} / J F_k) for k = 1..ℓ-1.
  std::vector<BigInt> quotient_lengths;
  /// λ(F_1/J) + Σ λ(F_{k+1}/J F_k).
  BigInt generator_count;
  std::vector<Check> checks;
};

/// Counts generators of the closure filtration's Rees algebra over R[Jt] and
/// compares them with the bounds e_1, e_0 and λ(F_1/J) + (d-2) λ(F_2/F_1 J).
/// Requires I m-primary and either equigenerated or generated by d elements.
GeneratorBoundReport generator_bound_check(const MonomialIdeal& I, std::uint64_t seed,
                                           const FiltrationReport& report);
GeneratorBoundReport generator_bound_check(const MonomialIdeal& I, std::uint64_t seed);

}  // namespace normlab
