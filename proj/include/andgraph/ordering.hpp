#pragma once

#include <span>
#include <vector>

#include "andgraph/graph.hpp"

namespace andgraph {

/// A total order of the vertices 1..n. Ranks are 1-based.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[i]` is the vertex at rank i + 1. Throws PreconditionError
  /// unless the sequence is a permutation of 1..n.
  explicit Ordering(std::vector<VertexId> sequence);

  static Ordering identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  VertexId at_rank(int rank) const { return sequence_[rank - 1]; }
  int rank(VertexId v) const { return rank_[v - 1]; }
  const std::vector<VertexId>& sequence() const { return sequence_; }

  Ordering reversed() const;

  bool operator==(const Ordering& o) const { return sequence_ == o.sequence_; }

 private:
  std::vector<VertexId> sequence_;
  std::vector<int> rank_;
};

/// Ranks of the leftmost / rightmost member of N[v] for every vertex:
/// left[v - 1] = min rank over N[v], right[v - 1] = max rank over N[v].
struct NeighborhoodSpan {
  std::vector<int> left;
  std::vector<int> right;
};

/// Throws PreconditionError if the ordering does not cover V(g).
NeighborhoodSpan neighborhood_span(const Graph& g, const Ordering& o);

}  // namespace andgraph
