#include "normlab/clutter.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "normlab/errors.hpp"
#include "normlab/linalg.hpp"

namespace normlab {

namespace {

bool is_subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Clutter::Clutter(std::size_t vertices, std::vector<std::vector<std::size_t>> edges)
    : vertices_(vertices) {
  for (auto& e : edges) {
    if (e.empty()) throw InputError("clutter edges must be nonempty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("clutter edge repeats a vertex");
    if (e.front() < 1 || e.back() > vertices)
      throw InputError("clutter vertex out of range 1.." + std::to_string(vertices));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && is_subset_of(edges[i], edges[j]))
        throw InputError("clutter edges must be pairwise incomparable");
  edges_ = std::move(edges);
}

IncidenceMatrix incidence_matrix(const Clutter& C) {
  IncidenceMatrix A;
  A.rows = C.vertices();
  A.cols = C.edges().size();
  A.entries.assign(A.rows, std::vector<int>(A.cols, 0));
  for (std::size_t j = 0; j < A.cols; ++j)
    for (std::size_t v : C.edges()[j]) A.entries[v - 1][j] = 1;
  return A;
}

MonomialIdeal edge_ideal(const Clutter& C) {
  std::vector<ExponentVector> gens;
  for (const auto& e : C.edges()) {
    ExponentVector a(C.vertices());
    for (std::size_t v : e) a[v - 1] = 1;
    gens.push_back(std::move(a));
  }
  return MonomialIdeal(RingDescriptor::standard(C.vertices()), std::move(gens));
}

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Clutter& C) {
  const std::size_t d = C.vertices();
  if (d > 20) throw InputError("vertex cover search supports at most 20 vertices");
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : C.edges()) {
    std::uint32_t m = 0;
    for (std::size_t v : e) m |= 1u << (v - 1);
    edge_masks.push_back(m);
  }
  std::vector<std::uint32_t> masks(std::size_t{1} << d);
  for (std::uint32_t s = 0; s < masks.size(); ++s) masks[s] = s;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s : masks) {
    if (std::any_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & s) == c; })) continue;
    if (std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & s) != 0; }))
      covers.push_back(s);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t c : covers) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < d; ++v)
      if (c & (1u << v)) vs.push_back(v + 1);
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

MonomialIdeal symbolic_power(const Clutter& C, std::int64_t n) {
  if (n < 1) throw InputError("symbolic power needs n >= 1");
  const std::size_t d = C.vertices();
  const RingDescriptor ring = RingDescriptor::standard(d);
  std::optional<MonomialIdeal> result;
  for (const auto& cover : minimal_vertex_covers(C)) {
    std::vector<ExponentVector> gens;
    for (const auto& b : monomials_of_degree(RingDescriptor::standard(cover.size()), n)) {
      ExponentVector a(d);
      for (std::size_t i = 0; i < cover.size(); ++i) a[cover[i] - 1] = b[i];
      gens.push_back(std::move(a));
    }
    MonomialIdeal prime_power(ring, std::move(gens));
    result = result ? intersect(*result, prime_power) : prime_power;
  }
  return result ? *result : MonomialIdeal::unit(ring);
}

bool q_polyhedron_integral(const Clutter& C) {
  const std::size_t d = C.vertices();
  const std::size_t m = C.edges().size();
  if (d == 0 || m == 0) throw DegenerateSystem("Q(A) needs at least one vertex and one edge");
  const IncidenceMatrix A = incidence_matrix(C);

  // Rows 0..d-1: x_i >= 0. Rows d..d+m-1: Σ_{i in edge} x_i >= 1.
  RationalMatrix rows;
  RationalVector rhs;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector r(d, Rational(0));
    r[i] = 1;
    rows.push_back(std::move(r));
    rhs.push_back(0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector r(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) r[i] = A.entries[i][j];
    rows.push_back(std::move(r));
    rhs.push_back(1);
  }

  std::set<RationalVector> vertices;
  for_each_subset(d + m, d, [&](const std::vector<std::size_t>& basis) {
    RationalMatrix a;
    RationalVector b;
    for (std::size_t r : basis) {
      a.push_back(rows[r]);
      b.push_back(rhs[r]);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < d; ++i) lhs += rows[r][i] * (*x)[i];
      if (lhs < rhs[r]) return;
    }
    vertices.insert(std::move(*x));
  });
  if (vertices.empty()) throw DegenerateSystem("Q(A) has no vertices");
  for (const auto& v : vertices)
    for (const auto& c : v)
      if (denominator(c) != 1) return false;
  return true;
}

SymbolicClosureTable compare_symbolic_closure(const Clutter& C, std::int64_t nmax) {
  const MonomialIdeal I = edge_ideal(C);
  if (!I.is_proper_nonzero()) throw DegenerateIdeal("clutter has no edges");
  if (nmax < 1 || nmax > static_cast<std::int64_t>(analytic_spread(I)))
    throw InputError("comparison range must satisfy 1 <= n <= ℓ(I)");
  SymbolicClosureTable table;
  table.q_integral = q_polyhedron_integral(C);
  const NewtonPolyhedron P = newton_polyhedron(I);
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const MonomialIdeal closure = closure_of_power(I, P, n);
    const MonomialIdeal symbolic = symbolic_power(C, n);
    SymbolicComparison row;
    row.power = n;
    for (const auto& g : symbolic.generators())
      if (!closure.contains(g)) row.only_symbolic.push_back(g);
    for (const auto& g : closure.generators())
      if (!symbolic.contains(g)) row.only_closure.push_back(g);
    row.equal = row.only_symbolic.empty() && row.only_closure.empty();
    if (table.q_integral && !row.equal)
      throw FalsificationAlert("Q(A) is integral but closure(I^" + std::to_string(n) +
                               ") differs from the symbolic power");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace normlab
