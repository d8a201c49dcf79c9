#pragma once

// Test-only oracles and fixtures. Deliberately naive: they share no code with
// the library routines they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "andgraph/feasibility.hpp"
#include "andgraph/graph.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/rational.hpp"
#include "andgraph/realization.hpp"

namespace testing {

using namespace andgraph;

inline Graph paw_graph() {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  return g;
}

inline Realization paw_realization() {
  Realization r(1);
  r.add(Placement::line(1, frac(9, 2), 2));
  r.add(Placement::line(frac(1, 2), frac(19, 4), 3));
  r.add(Placement::line(frac(3, 2), frac(11, 2), 4));
  r.add(Placement::line(frac(9, 4), frac(13, 2), 5));
  return r;
}

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// True iff some x < u < v < y (positions in `seq`) has xv, uy in E and uv not.
inline bool naive_has_violation(const Graph& g, const std::vector<VertexId>& seq) {
  const int n = static_cast<int>(seq.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(seq[a], seq[c]) && g.adjacent(seq[b], seq[d]) &&
              !g.adjacent(seq[b], seq[c]))
            return true;
  return false;
}

/// Lexicographically first violating quadruple by positions, as vertex ids.
inline std::vector<VertexId> naive_first_violation(const Graph& g,
                                                   const std::vector<VertexId>& seq) {
  const int n = static_cast<int>(seq.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(seq[a], seq[c]) && g.adjacent(seq[b], seq[d]) &&
              !g.adjacent(seq[b], seq[c]))
            return {seq[a], seq[b], seq[c], seq[d]};
  return {};
}

/// Scans all n! orderings with the naive check.
inline bool naive_and1_member(const Graph& g) {
  std::vector<VertexId> seq(static_cast<std::size_t>(g.order()));
  std::iota(seq.begin(), seq.end(), 1);
  do {
    if (!naive_has_violation(g, seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

/// Central-adjacency oracle: |p_u - p_v| <= min(r_u, r_v).
inline Graph central_adjacency_graph(const Realization& r) {
  Graph g(r.order());
  for (VertexId u = 1; u <= r.order(); ++u)
    for (VertexId v = u + 1; v <= r.order(); ++v) {
      const Rational d = abs_value(r.point(u) - r.point(v));
      if (d <= radius(r, u) && d <= radius(r, v)) g.add_edge(u, v);
    }
  return g;
}

/// c-AND(1) by brute force: every ordering (no prefilter), every assignment of
/// a short radius to every non-edge, each system solved independently.
/// Unknowns: p_1..p_n by rank, r_1..r_n by vertex.
inline bool brute_cand1_member(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<VertexId> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<Edge> non_edges;
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v)
      if (!g.adjacent(u, v)) non_edges.push_back({u, v});
  using Terms = std::vector<std::pair<int, Rational>>;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) pos[seq[k]] = k;
    auto pvar = [&](VertexId v) { return pos[v]; };
    auto rvar = [&](VertexId v) { return n + v - 1; };
    LinearConstraintSystem base(std::vector<std::string>(static_cast<std::size_t>(2 * n), "x"));
    for (int k = 0; k + 1 < n; ++k) {
      Terms t{{k, Rational(1)}, {k + 1, Rational(-1)}};
      base.add(t, Relation::Less, 0);
    }
    for (VertexId v = 1; v <= n; ++v) {
      Terms t{{rvar(v), Rational(-1)}};
      base.add(t, Relation::Less, 0);
    }
    // d(u, v) = p_right - p_left
    auto dist = [&](VertexId u, VertexId v) {
      VertexId l = pos[u] < pos[v] ? u : v;
      VertexId r = l == u ? v : u;
      return Terms{{pvar(r), Rational(1)}, {pvar(l), Rational(-1)}};
    };
    for (const Edge& e : g.edges()) {
      for (VertexId w : {e.u, e.v}) {
        Terms t = dist(e.u, e.v);
        t.emplace_back(rvar(w), Rational(-1));
        base.add(t, Relation::LessEqual, 0);
      }
    }
    const std::size_t k = non_edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      LinearConstraintSystem s = base;
      for (std::size_t i = 0; i < k; ++i) {
        const Edge& e = non_edges[i];
        const VertexId w = (mask >> i) & 1 ? e.v : e.u;
        Terms t = dist(e.u, e.v);
        for (auto& [j, a] : t) a = -a;
        t.emplace_back(rvar(w), Rational(1));
        s.add(t, Relation::Less, 0);
      }
      if (is_feasible(eliminate_feasible(s))) return true;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

/// Erdos-Renyi sample conditioned on connectivity by resampling.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (VertexId u = 1; u <= n; ++u)
      for (VertexId v = u + 1; v <= n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
}

/// Random dimension-d realization with coordinates k/den, |k| <= span.
inline Realization random_realization(int n, int d, std::mt19937_64& rng, int span = 20,
                                      long den = 4) {
  std::uniform_int_distribution<int> coord(-span, span);
  Realization r(d);
  for (int v = 0; v < n; ++v) {
    Placement pl;
    for (int i = 0; i < d; ++i) {
      int a = coord(rng);
      int b = coord(rng);
      int c = coord(rng);
      int lo = std::min({a, b, c});
      int hi = std::max({a, b, c});
      int mid = a + b + c - lo - hi;
      pl.box.push_back({frac(lo, den), frac(hi, den)});
      pl.point.push_back(frac(mid, den));
    }
    r.add(std::move(pl));
  }
  return r;
}

/// Random central line realization: integer points, radii k/2.
inline Realization random_central_realization(int n, std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::uniform_int_distribution<int> rad(0, span);
  Realization r(1);
  for (int v = 0; v < n; ++v) {
    const Rational p = coord(rng);
    r.add(Placement::centered(p, frac(rad(rng), 2)));
  }
  return r;
}

/// Integer linear system a.x (< or <=) b over k variables, always including
/// the box |x_i| <= 4, so a 1/8 grid over [-4, 4]^k meets every feasible
/// region that has interior or is a grid-aligned face.
struct IntRow {
  std::vector<int> a;
  int b;
  bool strict;
};

inline std::vector<IntRow> random_int_system(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> bound(-4, 4);
  std::uniform_int_distribution<int> count(1, 5);
  std::vector<IntRow> rows;
  for (int j = 0; j < k; ++j) {
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[j] = 1;
    rows.push_back({e, 4, false});
    e[j] = -1;
    rows.push_back({e, 4, false});
  }
  const int extra = count(rng);
  for (int c = 0; c < extra; ++c) {
    IntRow r{std::vector<int>(static_cast<std::size_t>(k)), bound(rng), rng() % 2 == 0};
    for (int& a : r.a) a = coef(rng);
    rows.push_back(r);
  }
  return rows;
}

inline LinearConstraintSystem to_system(const std::vector<IntRow>& rows, int k) {
  LinearConstraintSystem s(std::vector<std::string>(static_cast<std::size_t>(k), "x"));
  for (const IntRow& r : rows) {
    LinearConstraint c{{}, r.strict ? Relation::Less : Relation::LessEqual, r.b};
    for (int a : r.a) c.coeffs.emplace_back(a);
    s.add(c);
  }
  return s;
}

/// Exhaustive scan of the 1/8 grid in [-4, 4]^k with integer arithmetic.
inline bool grid_feasible(const std::vector<IntRow>& rows, int k) {
  std::vector<int> x(static_cast<std::size_t>(k), -32);
  while (true) {
    bool ok = true;
    for (const IntRow& r : rows) {
      long lhs = 0;
      for (int j = 0; j < k; ++j) lhs += static_cast<long>(r.a[j]) * x[j];
      const long rhs = 8L * r.b;
      if (r.strict ? lhs >= rhs : lhs > rhs) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int j = 0;
    while (j < k && x[j] == 32) x[j++] = -32;
    if (j == k) return false;
    ++x[j];
  }
}

}  // namespace testing
