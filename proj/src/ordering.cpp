#include "andgraph/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

Ordering::Ordering(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
  const int n = static_cast<int>(sequence_.size());
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    VertexId v = sequence_[i];
    if (v < 1 || v > n || rank_[v - 1] != 0) {
      throw PreconditionError("ordering is not a permutation of 1.." + std::to_string(n));
    }
    rank_[v - 1] = i + 1;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<VertexId> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
  std::vector<VertexId> seq(sequence_.rbegin(), sequence_.rend());
  return Ordering(std::move(seq));
}

NeighborhoodSpan neighborhood_span(const Graph& g, const Ordering& o) {
  if (g.order() != o.size()) {
    throw PreconditionError("ordering covers " + std::to_string(o.size()) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
  NeighborhoodSpan s;
  const int n = g.order();
  s.left.resize(static_cast<std::size_t>(n));
  s.right.resize(static_cast<std::size_t>(n));
  for (VertexId v = 1; v <= n; ++v) {
    int lo = o.rank(v);
    int hi = lo;
    for (VertexId w : g.neighbors(v)) {
      lo = std::min(lo, o.rank(w));
      hi = std::max(hi, o.rank(w));
    }
    s.left[v - 1] = lo;
    s.right[v - 1] = hi;
  }
  return s;
}

}  // namespace andgraph
