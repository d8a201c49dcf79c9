#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "andgraph/graph.hpp"
#include "andgraph/rational.hpp"

namespace andgraph {

/// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  Rational center() const { return midpoint(lo, hi); }
  Rational length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// One closed interval per vertex; intervals[v - 1] belongs to v.
struct IntervalModel {
  std::vector<Interval> intervals;
  bool operator==(const IntervalModel&) const = default;
};

/// A biconnected outerplanar piece: its outer cycle in cyclic order plus
/// non-crossing chords. A two-vertex "cycle" stands for a bridge.
struct OuterBlock {
  std::vector<VertexId> cycle;
  std::vector<Edge> chords;
  bool operator==(const OuterBlock&) const = default;
};

struct OuterplanarModel {
  std::vector<OuterBlock> blocks;
  bool operator==(const OuterplanarModel&) const = default;
};

/// Rooted tree with directed root-to-leaf paths, one per graph vertex.
/// Tree nodes are positive integers; paths[v - 1] lists the nodes of K_v.
struct RootedPathModel {
  std::vector<std::pair<int, int>> arcs;  // (parent, child)
  std::vector<std::vector<int>> paths;
  bool operator==(const RootedPathModel&) const = default;
};

/// Two non-adjacent vertices a, b joined by three internally disjoint paths
/// of edge lengths lx, ly, lz; x[i - 1] is x_i, and so on.
struct HGraphSpec {
  int lx = 2;
  int ly = 2;
  int lz = 2;
  VertexId a = 0;
  VertexId b = 0;
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  std::vector<VertexId> z;
  bool operator==(const HGraphSpec&) const = default;
};

using AuxModel =
    std::variant<std::monostate, IntervalModel, OuterplanarModel, RootedPathModel, HGraphSpec>;

struct GraphBundle {
  Graph graph;
  AuxModel aux;
};

/// Pairwise closed-interval overlap graph.
Graph interval_graph(const IntervalModel& m);

/// Validates the blocks (distinct cycle vertices, chords between
/// non-consecutive cycle vertices, no crossing chords) and returns the union
/// of cycle edges and chords on `n` vertices. Throws PreconditionError.
Graph outerplanar_graph(const OuterplanarModel& m, int n);

/// Parent links and depths of a validated rooted tree.
struct RootedTree {
  int root = 0;
  std::vector<int> nodes;                  // sorted
  std::vector<std::vector<int>> children;  // indexed by node id, sorted
  std::vector<int> parent;                 // indexed by node id, 0 for root / absent
  std::vector<int> depth;                  // indexed by node id
};

/// Throws PreconditionError unless the arcs form a single rooted tree.
RootedTree build_rooted_tree(const std::vector<std::pair<int, int>>& arcs);

/// Throws PreconditionError unless every K_v is a non-empty directed path of
/// the tree. Returns each path ordered from its top node downward.
std::vector<std::vector<int>> normalized_paths(const RootedPathModel& m, const RootedTree& t);

/// Path-intersection graph of a rooted path model.
Graph rooted_path_graph(const RootedPathModel& m);

/// The three-path graph described by `spec`, on 1 + 1 + (lx-1)+(ly-1)+(lz-1) vertices.
Graph h_graph_from_spec(const HGraphSpec& spec);

/// Canonical labeling: a = 1, b = 2, then x_1.., y_1.., z_1...
HGraphSpec make_h_spec(int lx, int ly, int lz);

/// Empty string when the aux model reproduces the graph, otherwise a description.
std::string check_bundle(const GraphBundle& bundle);

}  // namespace andgraph
