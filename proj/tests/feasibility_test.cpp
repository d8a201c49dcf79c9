#include <random>

#include "andgraph/characterization.hpp"
#include "andgraph/errors.hpp"
#include "andgraph/feasibility.hpp"
#include "andgraph/models.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace andgraph;

namespace {

using Terms = std::vector<std::pair<int, Rational>>;

LinearConstraintSystem one_var() { return LinearConstraintSystem({"x"}); }

}  // namespace

TEST_CASE("elimination examples") {
  SUBCASE("open unit interval") {
    auto s = one_var();
    Terms neg{{0, Rational(-1)}};
    Terms pos{{0, Rational(1)}};
    s.add(neg, Relation::Less, 0);
    s.add(pos, Relation::Less, 1);
    auto r = eliminate_feasible(s);
    REQUIRE(is_feasible(r));
    const Rational& w = std::get<Feasible>(r).witness[0];
    CHECK(w > 0);
    CHECK(w < 1);
  }
  SUBCASE("empty open interval") {
    auto s = one_var();
    Terms neg{{0, Rational(-1)}};
    Terms pos{{0, Rational(1)}};
    s.add(neg, Relation::Less, -1);
    s.add(pos, Relation::Less, 0);
    CHECK_FALSE(is_feasible(eliminate_feasible(s)));
  }
  SUBCASE("x + y <= 1, x >= 1, y >= 1") {
    LinearConstraintSystem s({"x", "y"});
    Terms sum{{0, Rational(1)}, {1, Rational(1)}};
    Terms x{{0, Rational(-1)}};
    Terms y{{1, Rational(-1)}};
    s.add(sum, Relation::LessEqual, 1);
    s.add(x, Relation::LessEqual, -1);
    s.add(y, Relation::LessEqual, -1);
    CHECK_FALSE(is_feasible(eliminate_feasible(s)));
  }
  SUBCASE("touching closed bounds") {
    auto s = one_var();
    Terms neg{{0, Rational(-1)}};
    Terms pos{{0, Rational(1)}};
    s.add(neg, Relation::LessEqual, -2);
    s.add(pos, Relation::LessEqual, 2);
    auto r = eliminate_feasible(s);
    REQUIRE(is_feasible(r));
    CHECK(std::get<Feasible>(r).witness[0] == 2);
    s.add(pos, Relation::Less, 2);
    CHECK_FALSE(is_feasible(eliminate_feasible(s)));
  }
  SUBCASE("empty system") {
    LinearConstraintSystem s({"a", "b"});
    auto r = eliminate_feasible(s);
    REQUIRE(is_feasible(r));
    CHECK(std::get<Feasible>(r).witness == std::vector<Rational>{0, 0});
  }
  SUBCASE("constant constraints") {
    LinearConstraintSystem s({"a"});
    s.add(LinearConstraint{{Rational(0)}, Relation::Less, 0});
    CHECK_FALSE(is_feasible(eliminate_feasible(s)));
  }
  SUBCASE("arity mismatch") {
    LinearConstraintSystem s({"a"});
    CHECK_THROWS_AS(s.add(LinearConstraint{{1, 2}, Relation::Less, 0}), PreconditionError);
  }
}

TEST_CASE("elimination agrees with grid search") {
  // A grid hit proves feasibility. Thin feasible regions can fall between
  // grid points; there the exact witness check is the certificate.
  std::mt19937_64 rng(12);
  int feasible = 0;
  int grid_hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + trial % 3;
    const auto rows = testing::random_int_system(k, rng);
    const LinearConstraintSystem s = testing::to_system(rows, k);
    auto res = eliminate_feasible(s);
    if (auto* f = std::get_if<Feasible>(&res)) {
      ++feasible;
      CHECK(s.satisfied_by(f->witness));
    }
    const bool hit = testing::grid_feasible(rows, k);
    grid_hits += hit;
    if (hit) CHECK(is_feasible(res));
  }
  CHECK(feasible > 100);
  CHECK(grid_hits > 100);
}

TEST_CASE("central realization for a fixed ordering") {
  auto c4 = cand1_for_ordering(cycle_graph(4), Ordering::identity(4));
  REQUIRE(c4);
  CHECK(is_central(*c4));
  CHECK(verify(*c4, cycle_graph(4)).empty());
  CHECK(r_order(*c4) == Ordering::identity(4));

  auto k2 = cand1_for_ordering(complete_graph(2), Ordering::identity(2));
  REQUIRE(k2);
  CHECK(verify(*k2, complete_graph(2)).empty());

  std::vector<int> parts{2, 3};
  Graph k23 = complete_multipartite_graph(parts);
  std::vector<VertexId> seq{1, 2, 3, 4, 5};
  do {
    CHECK_FALSE(cand1_for_ordering(k23, Ordering(seq)));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("c-AND recognition examples") {
  std::vector<int> k23{2, 3};
  auto no = cand1_recognize(complete_multipartite_graph(k23));
  CHECK(no.not_member());

  auto c5 = cand1_recognize(cycle_graph(5));
  REQUIRE(c5.found());
  CHECK(is_central(c5.realization()));
  CHECK(verify(c5.realization(), cycle_graph(5)).empty());

  std::vector<int> star{1, 3};
  auto s = cand1_recognize(complete_multipartite_graph(star));
  REQUIRE(s.found());
  CHECK(verify(s.realization(), complete_multipartite_graph(star)).empty());

  CHECK(cand1_recognize(Graph(1)).found());
}

TEST_CASE("budgets and the size cap produce Exhausted") {
  std::vector<int> k23{2, 3};
  Graph g = complete_multipartite_graph(k23);
  CHECK(cand1_recognize(g, CandLimits{1'000'000, 3, 7}).exhausted());
  CHECK(cand1_recognize(g, CandLimits{4, 1'000'000, 7}).exhausted());
  CHECK(cand1_recognize(g, CandLimits{1'000'000, 1'000'000, 4}).exhausted());
}

TEST_CASE("disconnected inputs") {
  Graph g(7);
  for (const Edge& e : cycle_graph(4).edges()) g.add_edge(e.u, e.v);
  g.add_edge(5, 7);
  auto res = cand1_recognize(g);
  REQUIRE(res.found());
  CHECK(verify(res.realization(), g).empty());
  CHECK(is_central(res.realization()));
}

TEST_CASE("c-AND recognition agrees with brute force on small graphs") {
  std::mt19937_64 rng(21);
  int members = 0;
  int non_members = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 3;
    Graph g = testing::random_connected_graph(n, 0.35 + 0.1 * (trial % 4), rng);
    auto res = cand1_recognize(g);
    const bool brute = testing::brute_cand1_member(g);
    CHECK(res.found() == brute);
    CHECK(res.found() != res.not_member());
    if (res.found()) {
      ++members;
      CHECK(is_central(res.realization()));
      CHECK(testing::central_adjacency_graph(res.realization()) == g);
      CHECK(and1_recognize(g).found());
    } else {
      ++non_members;
    }
  }
  CHECK(members > 0);
  CHECK(non_members > 0);
}
