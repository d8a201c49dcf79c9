#pragma once

#include <array>
#include <span>
#include <vector>

#include "andgraph/graph.hpp"
#include "andgraph/rational.hpp"
#include "andgraph/realization.hpp"

namespace andgraph {

/// Closed axis-parallel rectangle x × y.
struct PlanarBox {
  Interval x;
  Interval y;

  bool intersects(const PlanarBox& o) const { return x.intersects(o.x) && y.intersects(o.y); }
  bool operator==(const PlanarBox&) const = default;
};

/// Product over source dimensions i of [p_i, R_i] × [-p_i, -L_i]. The
/// lower-left corner of every factor is (p_i, -p_i).
struct CornerBox {
  std::vector<PlanarBox> factors;

  bool intersects(const CornerBox& o) const;
  bool corner_on_diagonal() const;
  bool operator==(const CornerBox&) const = default;
};

struct CornerBoxModel {
  /// Added to every coordinate of the source realization before the map.
  Rational shift;
  std::vector<CornerBox> boxes;
  bool operator==(const CornerBoxModel&) const = default;
};

/// Translates so that every box coordinate is positive (shift is 0 when it
/// already is) and maps each vertex to its corner box.
CornerBoxModel to_corner_boxes(const Realization& r);

/// Edge iff the boxes meet in every planar factor.
Graph corner_box_intersection_graph(std::span<const CornerBox> boxes);

/// Inverse of to_corner_boxes, undoing the recorded shift. Throws
/// PreconditionError when a corner is off the diagonal or the boxes have
/// mixed dimensions.
Realization corner_boxes_to_realization(const CornerBoxModel& m);

struct Point2 {
  Rational x;
  Rational y;
  bool operator==(const Point2&) const = default;
};

/// The lower-left half of the planar box [p, R] × [-p, -L]: the right triangle
/// with the right angle at the corner (p, -p).
struct SemiSquare {
  Point2 corner;
  Point2 right;  // (R, -p)
  Point2 top;    // (p, -L)

  std::array<Point2, 3> vertices() const { return {corner, right, top}; }
  bool isosceles() const { return right.x - corner.x == top.y - corner.y; }
  bool operator==(const SemiSquare&) const = default;
};

struct SemiSquareModel {
  Rational shift;
  std::vector<SemiSquare> triangles;
};

/// Requires a central realization of dimension 1.
SemiSquareModel to_semisquares(const Realization& r);

/// Closed intersection of two (possibly degenerate) triangles, decided by
/// separating axes in exact arithmetic.
bool triangles_intersect(const SemiSquare& a, const SemiSquare& b);

Graph semisquare_intersection_graph(std::span<const SemiSquare> triangles);

}  // namespace andgraph
