#include "doctest.h"

#include "normlab/clutter.hpp"
#include "normlab/errors.hpp"
#include "support.hpp"

using namespace normlab;
using normlab::test::ideal;

using Sets = std::vector<std::vector<std::size_t>>;

TEST_SUITE("clutter") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(Clutter(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Clutter(3, {{}}), InputError);
    CHECK_THROWS_AS(Clutter(3, {{1, 2}, {1, 2, 3}}), InputError);
    CHECK_THROWS_AS(Clutter(3, {{0, 1}}), InputError);
    const Clutter C(3, {{3, 1}, {1, 3}, {2, 1}});
    CHECK(C.edges() == Sets{{1, 2}, {1, 3}});
  }

  TEST_CASE("incidence matrix and edge ideal") {
    const auto A = incidence_matrix(test::six_vertex_clutter());
    CHECK(A.rows == 6);
    CHECK(A.cols == 4);
    CHECK(A.entries[0] == std::vector<int>{1, 1, 0, 0});
    CHECK(A.entries[5] == std::vector<int>{0, 0, 1, 1});
    const auto I = edge_ideal(test::six_vertex_clutter());
    CHECK(I.size() == 4);
    CHECK(I.contains(ExponentVector{1, 1, 0, 0, 1, 0}));
    CHECK(equigenerated_degree(I) == 3);
  }

  TEST_CASE("minimal vertex covers") {
    CHECK(minimal_vertex_covers(test::six_vertex_clutter()) ==
          Sets{{1, 6}, {2, 4}, {3, 5}, {1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {4, 5, 6}});
    CHECK(minimal_vertex_covers(test::triangle()) == Sets{{1, 2}, {1, 3}, {2, 3}});
    CHECK(minimal_vertex_covers(Clutter(4, {{1, 2}, {3, 4}})) == Sets{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  }

  TEST_CASE("covers are the minimal primes") {
    for (const auto& C : {test::six_vertex_clutter(), test::triangle(), Clutter(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})}) {
      const auto I = edge_ideal(C);
      const auto covers = minimal_vertex_covers(C);
      MonomialIdeal meet = MonomialIdeal::unit(I.ring());
      for (const auto& cover : covers) {
        std::vector<ExponentVector> gens;
        for (std::size_t v : cover) {
          ExponentVector a(C.vertices());
          a[v - 1] = 1;
          gens.push_back(a);
        }
        const MonomialIdeal P(I.ring(), gens);
        CHECK(is_subset(I, P));
        meet = intersect(meet, P);
        // Dropping any vertex loses the cover property.
        for (std::size_t drop = 0; drop < gens.size(); ++drop) {
          auto fewer = gens;
          fewer.erase(fewer.begin() + static_cast<long>(drop));
          CHECK_FALSE(is_subset(I, MonomialIdeal(I.ring(), fewer)));
        }
      }
      CHECK(meet == I);
    }
  }

  TEST_CASE("symbolic powers") {
    const auto C = test::six_vertex_clutter();
    CHECK(symbolic_power(C, 1) == edge_ideal(C));
    CHECK(symbolic_power(C, 2) == closure_of_power(edge_ideal(C), 2));
    const auto T = test::triangle();
    CHECK(symbolic_power(T, 2).contains(ExponentVector{1, 1, 1}));
    CHECK_FALSE(power(edge_ideal(T), 2).contains(ExponentVector{1, 1, 1}));
    for (std::int64_t n = 1; n <= 3; ++n) CHECK(is_subset(symbolic_power(C, n + 1), symbolic_power(C, n)));
  }

  TEST_CASE("Q(A) integrality") {
    CHECK(q_polyhedron_integral(test::six_vertex_clutter()));
    CHECK_FALSE(q_polyhedron_integral(test::triangle()));
    CHECK(q_polyhedron_integral(Clutter(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    CHECK_FALSE(q_polyhedron_integral(Clutter(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})));
  }

  TEST_CASE("symbolic powers against closures") {
    const auto t = compare_symbolic_closure(test::six_vertex_clutter(), 3);
    CHECK(t.q_integral);
    REQUIRE(t.rows.size() == 3);
    for (const auto& row : t.rows) CHECK(row.equal);

    const auto tri = compare_symbolic_closure(test::triangle(), 2);
    CHECK_FALSE(tri.q_integral);
    CHECK(tri.rows[0].equal);
    CHECK_FALSE(tri.rows[1].equal);
    CHECK(tri.rows[1].only_symbolic == std::vector<ExponentVector>{{1, 1, 1}});
    CHECK(tri.rows[1].only_closure.empty());

    CHECK_THROWS_AS(compare_symbolic_closure(test::triangle(), 0), InputError);
    CHECK_THROWS_AS(compare_symbolic_closure(test::triangle(), 4), InputError);
  }

  TEST_CASE("closures sit inside symbolic powers") {
    for (const auto& C : {test::six_vertex_clutter(), test::triangle(), Clutter(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})}) {
      const auto I = edge_ideal(C);
      for (std::int64_t n = 1; n <= 3; ++n) CHECK(is_subset(closure_of_power(I, n), symbolic_power(C, n)));
    }
  }
}
