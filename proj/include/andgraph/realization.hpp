#pragma once

#include <span>
#include <vector>

#include "andgraph/graph.hpp"
#include "andgraph/models.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/rational.hpp"

namespace andgraph {

/// A box (one closed interval per dimension) with its representative point.
struct Placement {
  std::vector<Interval> box;
  std::vector<Rational> point;

  /// Dimension-1 convenience constructor.
  static Placement line(Rational lo, Rational hi, Rational p);
  /// Dimension-1 box centered at p with half-length r.
  static Placement centered(const Rational& p, const Rational& r);

  int dimension() const { return static_cast<int>(point.size()); }
  bool box_contains(std::span<const Rational> x) const;
  bool operator==(const Placement&) const = default;
};

/// Vertices 1..n each carry a Placement; vertex v is stored at index v - 1.
/// Every point lies inside its own box (checked on insertion).
class Realization {
 public:
  explicit Realization(int dimension = 1);
  Realization(int dimension, std::vector<Placement> placements);

  int dimension() const { return dimension_; }
  int order() const { return static_cast<int>(placements_.size()); }
  const Placement& at(VertexId v) const { return placements_[v - 1]; }
  const std::vector<Placement>& placements() const { return placements_; }

  /// Appends vertex order() + 1. Throws PreconditionError on a dimension
  /// mismatch or a point outside its box.
  VertexId add(Placement p);

  /// Line-realization shortcuts (dimension 1 only).
  const Interval& interval(VertexId v) const { return placements_[v - 1].box[0]; }
  const Rational& point(VertexId v) const { return placements_[v - 1].point[0]; }

  /// Mutual containment: p_v in B_u and p_u in B_v.
  bool adjacent(VertexId u, VertexId v) const;

  bool operator==(const Realization&) const = default;

 private:
  void check(const Placement& p) const;

  int dimension_;
  std::vector<Placement> placements_;
};

/// Edges present in the target graph but not induced, and induced but absent.
struct VerifyReport {
  std::vector<Edge> missing_edges;
  std::vector<Edge> extra_edges;
  bool empty() const { return missing_edges.empty() && extra_edges.empty(); }
};

Graph induced_graph(const Realization& r);

/// Throws PreconditionError when vertex counts differ.
VerifyReport verify(const Realization& r, const Graph& g);

/// Every point is exactly the center of its box.
bool is_central(const Realization& r);

/// x -> scale * x + shift[i] in dimension i. Throws PreconditionError unless
/// scale > 0 and shift has one entry per dimension.
Realization transform(const Realization& r, std::span<const Rational> shift, const Rational& scale);
Realization transform(const Realization& r, const Rational& shift, const Rational& scale);

/// Vertices sorted by point (dimension 1). Throws PreconditionError on ties.
Ordering r_order(const Realization& r);

/// Separates tied points (dimension 1) while keeping the induced graph and
/// centrality. Inputs without ties are returned unchanged.
Realization make_points_distinct(const Realization& r);

/// True iff every box containing p_v belongs to v or to a neighbor of v
/// (dimension 1). Throws PreconditionError for an unknown vertex.
bool is_safe(const Realization& r, VertexId v);

/// Half-length of each box (dimension 1).
Rational radius(const Realization& r, VertexId v);

/// Sub-realization on `vertices`; vertices[i] becomes i + 1.
Realization restrict_to(const Realization& r, std::span<const VertexId> vertices);

}  // namespace andgraph
