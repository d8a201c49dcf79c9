#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace andgraph {

/// Vertices are numbered 1..n.
using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  /// Canonical form with u < v.
  static Edge make(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 1..n.
///
/// Neighbor lists are kept sorted; an adjacency matrix backs O(1) queries.
/// Connectivity is not an invariant: operations that need it check it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws PreconditionError on loops, duplicates, or ids out of range.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  /// Throws PreconditionError on a loop, a duplicate edge, or an id outside 1..n.
  void add_edge(VertexId u, VertexId v);

  bool adjacent(VertexId u, VertexId v) const {
    return u != v && matrix_[index(u, v)] != 0;
  }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v - 1]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v - 1].size()); }
  bool contains(VertexId v) const { return v >= 1 && v <= n_; }

  /// All edges, canonical (u < v) and sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  /// Connected components, each sorted ascending; components ordered by smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  /// Subgraph induced by `vertices`; vertex vertices[i] becomes i + 1.
  Graph induced_subgraph(std::span<const VertexId> vertices) const;

  bool operator==(const Graph& other) const;

 private:
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Pair lists of edges missing from / extra in `actual` relative to `expected`.
struct EdgeDiff {
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  bool empty() const { return missing.empty() && extra.empty(); }
};

/// Requires equal vertex counts.
EdgeDiff diff_edges(const Graph& expected, const Graph& actual);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite_graph(std::span<const int> parts);

/// Maximal biconnected components and the block-cut tree of a connected graph.
struct BlockDecomposition {
  /// Each block sorted ascending; blocks sorted lexicographically.
  std::vector<std::vector<VertexId>> blocks;
  /// Sorted ascending.
  std::vector<VertexId> cut_vertices;
  /// Bipartite block-cut tree edges (block index, cut vertex), sorted.
  std::vector<std::pair<int, VertexId>> tree_edges;

  /// Indices of the blocks containing v.
  std::vector<int> blocks_of(VertexId v) const;
  bool is_cut_vertex(VertexId v) const;
};

/// Throws PreconditionError when g is disconnected.
BlockDecomposition block_decomposition(const Graph& g);

/// True iff n >= 2 and every pair of distinct vertices has two common
/// neighbors that are not adjacent to each other.
bool has_double_nonadjacent_common_neighbors(const Graph& g);

}  // namespace andgraph
