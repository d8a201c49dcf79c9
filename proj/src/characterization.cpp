#include "andgraph/characterization.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>

namespace andgraph {

ViolationError::ViolationError(const Violation& v)
    : PreconditionError("ordering violates the four point condition at (" +
                        std::to_string(v.x) + ", " + std::to_string(v.u) + ", " +
                        std::to_string(v.v) + ", " + std::to_string(v.y) + ")"),
      violation_(v) {}

std::optional<Violation> four_point_check(const Graph& g, const Ordering& o) {
  const NeighborhoodSpan span = neighborhood_span(g, o);
  const int n = g.order();
  // A non-adjacent pair u <v is violated iff v reaches left of u and u reaches
  // right of v. The smallest x for the pair is then v's leftmost neighbor.
  std::tuple<int, int, int> best{n + 1, n + 1, n + 1};
  bool any = false;
  for (int i = 1; i <= n; ++i) {
    const VertexId u = o.at_rank(i);
    if (span.right[u - 1] <= i + 1) continue;
    for (int j = i + 1; j < span.right[u - 1]; ++j) {
      const VertexId v = o.at_rank(j);
      if (g.adjacent(u, v) || span.left[v - 1] >= i) continue;
      std::tuple<int, int, int> cand{span.left[v - 1], i, j};
      if (cand < best) {
        best = cand;
        any = true;
      }
    }
  }
  if (!any) return std::nullopt;
  const auto [x_rank, u_rank, v_rank] = best;
  const VertexId u = o.at_rank(u_rank);
  int y_rank = n + 1;
  for (VertexId w : g.neighbors(u)) {
    const int r = o.rank(w);
    if (r > v_rank) y_rank = std::min(y_rank, r);
  }
  return Violation{o.at_rank(x_rank), u, o.at_rank(v_rank), o.at_rank(y_rank)};
}

Realization realization_from_ordering(const Graph& g, const Ordering& o) {
  if (auto v = four_point_check(g, o)) throw ViolationError(*v);
  const NeighborhoodSpan span = neighborhood_span(g, o);
  Realization r(1);
  for (VertexId v = 1; v <= g.order(); ++v) {
    r.add(Placement::line(span.left[v - 1], span.right[v - 1], o.rank(v)));
  }
  return r;
}

std::vector<ImplicitCode> implicit_encode(const Graph& g, const Ordering& o) {
  if (auto v = four_point_check(g, o)) throw ViolationError(*v);
  const NeighborhoodSpan span = neighborhood_span(g, o);
  std::vector<ImplicitCode> codes;
  codes.reserve(static_cast<std::size_t>(g.order()));
  for (VertexId v = 1; v <= g.order(); ++v) {
    codes.push_back({span.left[v - 1], span.right[v - 1], o.rank(v)});
  }
  return codes;
}

namespace {

// Depth-first placement of vertices from left to right.
//
// When w is placed, first[w] records the rank of its leftmost already placed
// neighbor (or its own rank). Any later completion places the still-unplaced
// neighbors of a vertex u to the right of everything placed so far, so the
// prefix is dead as soon as some placed u, not adjacent to the newly placed w,
// sits strictly right of first[w] and still has an unplaced neighbor. Checking
// this at every placement catches every violating quadruple exactly when its
// v is placed.
class OrderingSearch {
 public:
  OrderingSearch(const Graph& g, std::uint64_t budget,
                 const std::function<bool(const Ordering&)>& visit)
      : g_(g),
        n_(g.order()),
        budget_(budget),
        visit_(visit),
        rank_(n_ + 1, 0),
        first_(n_ + 1, 0),
        open_(n_ + 1, 0) {
    for (VertexId v = 1; v <= n_; ++v) open_[v] = g.degree(v);
    sequence_.reserve(static_cast<std::size_t>(n_));
  }

  // Returns false when the budget ran out.
  bool run() {
    if (n_ == 0) return true;
    if (n_ == 1) {
      ++nodes_;
      visit_(Ordering(std::vector<VertexId>{1}));
      return true;
    }
    extend();
    return !out_of_budget_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Returns false to unwind (stop requested or budget exhausted).
  bool extend() {
    const int k = static_cast<int>(sequence_.size());
    if (k == n_) {
      if (!visit_(Ordering(sequence_))) {
        stopped_ = true;
        return false;
      }
      return true;
    }
    for (VertexId w = 1; w <= n_; ++w) {
      if (rank_[w] != 0) continue;
      if (k == 0 && w == n_) break;  // no larger id left to end the ordering
      if (k > 0 && k == n_ - 1 && w < sequence_.front()) continue;
      if (++nodes_ > budget_) {
        out_of_budget_ = true;
        return false;
      }
      if (place(w)) {
        if (k == 0 || larger_id_remains()) {
          if (!extend()) {
            unplace(w);
            return false;
          }
        }
      }
      unplace(w);
    }
    return true;
  }

  bool larger_id_remains() const {
    const VertexId front = sequence_.front();
    for (VertexId v = front + 1; v <= n_; ++v) {
      if (rank_[v] == 0) return true;
    }
    return static_cast<int>(sequence_.size()) == n_;
  }

  // Places w at the next rank; returns false if the prefix is dead.
  bool place(VertexId w) {
    const int r = static_cast<int>(sequence_.size()) + 1;
    sequence_.push_back(w);
    rank_[w] = r;
    int first = r;
    for (VertexId x : g_.neighbors(w)) {
      --open_[x];
      if (rank_[x] != 0) first = std::min(first, rank_[x]);
    }
    first_[w] = first;
    for (int i = first + 1; i < r; ++i) {
      const VertexId u = sequence_[i - 1];
      if (open_[u] > 0 && !g_.adjacent(u, w)) return false;
    }
    return true;
  }

  void unplace(VertexId w) {
    for (VertexId x : g_.neighbors(w)) ++open_[x];
    rank_[w] = 0;
    sequence_.pop_back();
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  const std::function<bool(const Ordering&)>& visit_;
  std::vector<int> rank_;
  std::vector<int> first_;
  std::vector<int> open_;
  std::vector<VertexId> sequence_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  bool stopped_ = false;
};

}  // namespace

bool for_each_and1_ordering(const Graph& g, std::uint64_t node_budget,
                            const std::function<bool(const Ordering&)>& visit,
                            std::uint64_t* nodes_out) {
  OrderingSearch search(g, node_budget, visit);
  const bool complete = search.run();
  if (nodes_out) *nodes_out = search.nodes();
  return complete;
}

And1Result and1_recognize(const Graph& g, const SearchLimits& limits) {
  And1Result result;
  std::vector<VertexId> sequence;
  std::uint64_t remaining = limits.node_budget;
  for (const auto& comp : g.components()) {
    const Graph sub = g.induced_subgraph(comp);
    std::optional<Ordering> found;
    std::uint64_t used = 0;
    const bool complete = for_each_and1_ordering(
        sub, remaining,
        [&](const Ordering& o) {
          found = o;
          return false;
        },
        &used);
    result.nodes += used;
    remaining = used >= remaining ? 0 : remaining - used;
    if (!found) {
      if (complete) {
        result.verdict = NotMember{};
      } else {
        result.verdict = Exhausted{};
      }
      return result;
    }
    for (VertexId local : found->sequence()) sequence.push_back(comp[local - 1]);
  }
  result.verdict = Found{Ordering(std::move(sequence))};
  return result;
}

CycleLabelReport cycle_label_analysis(const Realization& r) {
  const Graph g = induced_graph(r);
  const int n = g.order();
  bool is_cycle = n >= 3 && g.is_connected();
  for (VertexId v = 1; is_cycle && v <= n; ++v) is_cycle = g.degree(v) == 2;
  if (!is_cycle) throw PreconditionError("realization does not induce a cycle");
  const Ordering o = r_order(r);

  std::vector<VertexId> walk{1};
  VertexId prev = 0;
  VertexId cur = 1;
  while (static_cast<int>(walk.size()) < n) {
    const auto& nb = g.neighbors(cur);
    VertexId next = nb[0] != prev ? nb[0] : nb[1];
    walk.push_back(next);
    prev = cur;
    cur = next;
  }

  CycleLabelReport best;
  best.max_deviation = std::numeric_limits<int>::max();
  for (int start = 0; start < n; ++start) {
    for (int dir : {1, -1}) {
      std::vector<int> label(static_cast<std::size_t>(n));
      int worst = 0;
      for (int t = 0; t < n; ++t) {
        const VertexId v = walk[((start + dir * t) % n + n) % n];
        label[v - 1] = t + 1;
        worst = std::max(worst, std::abs(t + 1 - o.rank(v)));
      }
      if (worst < best.max_deviation) {
        best.max_deviation = worst;
        best.label = std::move(label);
      }
    }
  }
  best.extremes_adjacent = g.adjacent(o.at_rank(1), o.at_rank(n));
  return best;
}

}  // namespace andgraph
