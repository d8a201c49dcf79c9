#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "andgraph/graph.hpp"
#include "andgraph/models.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/rational.hpp"
#include "andgraph/realization.hpp"

namespace andgraph {

// ---------------------------------------------------------------------------
// Interval graphs

/// Snapshot of the greedy interval construction after step `step`.
/// Vertices are addressed by their position 1..n in the left-endpoint order;
/// vertex_at[k - 1] gives the model id at position k.
struct GreedyState {
  int step = 0;
  std::vector<VertexId> vertex_at;
  std::vector<int> left;   // leftmost neighbor position, per position
  std::vector<int> right;  // rightmost neighbor position, per position
  std::vector<Rational> p;  // placed points, positions 1..step
  std::vector<Rational> r;  // placed radii, positions 1..step
  std::optional<Rational> lower;  // L: max R(j) over placed non-neighbors
  Rational upper;                 // R: min R(k) over placed neighbors
  std::optional<Rational> r_prime;  // max R(j) over P_i
  Rational radius;                  // r_i
  std::vector<int> p_set;           // P_i as positions

  Rational box_right(int k) const { return p[k - 1] + r[k - 1]; }
  Rational box_left(int k) const { return p[k - 1] - r[k - 1]; }
};

/// Checks the four construction invariants on positions 1..step:
/// increasing points; right ends ordered like rightmost neighbors; left end
/// strictly before the leftmost neighbor's point; R(k) < p_j iff the
/// rightmost neighbor of k comes before j. Returns an empty string or a
/// description of the first failure.
std::string greedy_invariant_failure(const GreedyState& s);

/// Central realization of the overlap graph of `m` (ids as in the model).
/// Throws PreconditionError when the graph is disconnected or empty.
/// `observe`, when given, sees the state after every step.
Realization interval_to_cand1(const IntervalModel& m,
                              const std::function<void(const GreedyState&)>& observe = {});

// ---------------------------------------------------------------------------
// Cycles and gluing

/// Central realization of C_n (edges i, i+1 and n, 1). The vertex `anchor`
/// gets the leftmost point and is safe; vertex anchor + k - 1 (cyclically)
/// sits at point k. Requires n >= 3, 0 < eps < 1.
Realization cycle_cand1(int n, const Rational& eps, VertexId anchor = 1);

struct GlueParams {
  Rational delta;   // distance from p_{w1} to the nearest other point of r1
  Rational length;  // length of the hull of all boxes of r2
  Rational scale;   // delta / (2 * length); 1 when length is 0
};

/// delta is 1 when r1 has a single vertex. Throws PreconditionError when
/// another point of r1 coincides with p_{w1}.
GlueParams glue_params(const Realization& r1, VertexId w1, const Realization& r2);

struct GlueResult {
  Realization realization;
  /// New id of every vertex of r2 (index v - 1); w2 maps to w1, the others
  /// follow r1's vertices in increasing r2 id.
  std::vector<VertexId> second_ids;
};

/// Identifies w2 with w1. r2 is shrunk around p_{w1} by glue_params; the
/// merged vertex gets the hull of both boxes. Throws PreconditionError unless
/// both are dimension-1 realizations and w2 is safe in r2.
GlueResult glue_at_safe_vertex(const Realization& r1, VertexId w1, const Realization& r2,
                               VertexId w2);

/// One block with its own realization; local vertex v is global
/// local_to_global[v - 1].
struct BlockComponent {
  Realization local;
  std::vector<VertexId> local_to_global;
};

/// For every block, the cut vertex through which a breadth-first traversal of
/// the block tree from block 0 reaches it (0 for block 0).
std::vector<VertexId> block_anchors(const BlockDecomposition& bd);

/// Glues components[i] (realizing bd.blocks[i]) in breadth-first order from
/// block 0. Each non-root block must be safe at its anchor. Vertex v of the
/// result is global vertex v.
Realization assemble_block_tree(const std::vector<BlockComponent>& components,
                                const BlockDecomposition& bd);

/// Central realization of a graph whose blocks are cliques. Clique blocks use
/// points 1..k with radius k, so every vertex is safe.
Realization block_graph_cand1(const Graph& g);

/// C_n and C_m identified along the edge {shared, shared + 1} of C_n.
/// Vertices 1..n are the C_n cycle; the other m - 2 vertices of C_m get ids
/// n + 1 .. n + m - 2 on the path from shared + 1 back to shared.
Graph glued_cycles_graph(int n, int m, VertexId shared = 1);

/// Central realization of glued_cycles_graph(n, m, shared): C_m is built with
/// the shared edge on consecutive points and C_n is shrunk into that gap with
/// the shared vertices as its extremes.
Realization glue_cycles_on_edge(int n, int m, VertexId shared = 1);

/// Central realization of the outerplanar graph described by `m` on n
/// vertices. Throws PreconditionError on an invalid or disconnected model.
Realization outerplanar_cand1(const OuterplanarModel& m, int n);

/// The faces of one dissected polygon, each in cyclic order.
std::vector<std::vector<VertexId>> dissection_faces(const OuterBlock& block);

// ---------------------------------------------------------------------------
// Orderings for AND(1)

/// Orders the vertices by the smallest inverse-DFS rank over their path
/// (DFS visits children by ascending node id; ties by vertex id).
Ordering rdp_ordering(const RootedPathModel& m);

/// The four-point ordering for H graphs with lx in {2, 3}; throws otherwise.
Ordering h_graph_ordering(const HGraphSpec& spec);

}  // namespace andgraph
