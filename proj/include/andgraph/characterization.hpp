#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "andgraph/errors.hpp"
#include "andgraph/graph.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/realization.hpp"

namespace andgraph {

/// x <u <v <y in the ordering with xv and uy edges but uv missing.
struct Violation {
  VertexId x = 0;
  VertexId u = 0;
  VertexId v = 0;
  VertexId y = 0;
  bool operator==(const Violation&) const = default;
};

/// Returns the lexicographically first violation by ranks (x, u, v, y), or
/// nullopt when the ordering satisfies the four point condition. O(n^2).
std::optional<Violation> four_point_check(const Graph& g, const Ordering& o);

/// p_v = rank of v, B_v = [leftmost, rightmost] rank over N[v].
/// Throws ViolationError when the ordering fails the four point condition.
Realization realization_from_ordering(const Graph& g, const Ordering& o);

class ViolationError : public PreconditionError {
 public:
  explicit ViolationError(const Violation& v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// O(log n)-bit per-vertex code: neighborhood span and own rank.
struct ImplicitCode {
  int left = 0;
  int right = 0;
  int position = 0;
  bool operator==(const ImplicitCode&) const = default;
};

/// codes[v - 1] for vertex v. Throws ViolationError like realization_from_ordering.
std::vector<ImplicitCode> implicit_encode(const Graph& g, const Ordering& o);

/// Four comparisons. Self-pairs are the caller's concern.
inline bool implicit_adjacent(const ImplicitCode& a, const ImplicitCode& b) {
  return b.left <= a.position && a.position <= b.right && a.left <= b.position &&
         b.position <= a.right;
}

struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
};

struct Found {
  Ordering ordering;
};
struct NotMember {};
struct Exhausted {};

struct And1Result {
  std::variant<Found, NotMember, Exhausted> verdict;
  std::uint64_t nodes = 0;  // search-tree node expansions

  bool found() const { return std::holds_alternative<Found>(verdict); }
  bool not_member() const { return std::holds_alternative<NotMember>(verdict); }
  bool exhausted() const { return std::holds_alternative<Exhausted>(verdict); }
  const Ordering& ordering() const { return std::get<Found>(verdict).ordering; }
};

/// Backtracking search for an ordering satisfying the four point condition.
/// Components are searched separately and their orderings concatenated.
And1Result and1_recognize(const Graph& g, const SearchLimits& limits = {});

/// Calls `visit` for every four-point ordering of a connected graph, up to
/// reversal (only orderings whose first vertex has a smaller id than the
/// last one, or n == 1), in lexicographic order of vertex ids. Returning
/// false from `visit` stops the search. Returns false if the node budget ran
/// out before the enumeration finished.
bool for_each_and1_ordering(const Graph& g, std::uint64_t node_budget,
                            const std::function<bool(const Ordering&)>& visit,
                            std::uint64_t* nodes_out = nullptr);

/// Labels of a cycle realization relative to its point order.
struct CycleLabelReport {
  std::vector<int> label;    // label[v - 1] in 1..n
  int max_deviation = 0;     // max |label(v) - rank(v)|
  bool extremes_adjacent = false;
};

/// The realization must induce a cycle (vertex order arbitrary) and have
/// distinct points (dimension 1). Tries all 2n cyclic labelings and keeps the
/// first one with the smallest maximum deviation.
CycleLabelReport cycle_label_analysis(const Realization& r);

}  // namespace andgraph
