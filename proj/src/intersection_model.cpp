#include "andgraph/intersection_model.hpp"

#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

bool CornerBox::intersects(const CornerBox& o) const {
  if (factors.size() != o.factors.size()) throw PreconditionError("corner boxes of mixed dimension");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].intersects(o.factors[i])) return false;
  }
  return true;
}

bool CornerBox::corner_on_diagonal() const {
  for (const PlanarBox& f : factors) {
    if (f.x.lo + f.y.lo != 0) return false;
  }
  return true;
}

namespace {

Rational positive_shift(const Realization& r) {
  if (r.order() == 0) return 0;
  Rational low = r.at(1).box[0].lo;
  for (const Placement& pl : r.placements()) {
    for (const Interval& b : pl.box) low = std::min(low, b.lo);
  }
  return low > 0 ? Rational(0) : Rational(1 - low);
}

}  // namespace

CornerBoxModel to_corner_boxes(const Realization& r) {
  CornerBoxModel m;
  m.shift = positive_shift(r);
  for (const Placement& pl : r.placements()) {
    CornerBox cb;
    for (int i = 0; i < pl.dimension(); ++i) {
      const Rational p = pl.point[i] + m.shift;
      const Rational lo = pl.box[i].lo + m.shift;
      const Rational hi = pl.box[i].hi + m.shift;
      cb.factors.push_back({{p, hi}, {-p, -lo}});
    }
    m.boxes.push_back(std::move(cb));
  }
  return m;
}

Graph corner_box_intersection_graph(std::span<const CornerBox> boxes) {
  const int n = static_cast<int>(boxes.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (boxes[u].intersects(boxes[v])) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

Realization corner_boxes_to_realization(const CornerBoxModel& m) {
  if (m.boxes.empty()) return Realization(1);
  const int d = static_cast<int>(m.boxes[0].factors.size());
  Realization r(d);
  for (std::size_t k = 0; k < m.boxes.size(); ++k) {
    const CornerBox& cb = m.boxes[k];
    if (static_cast<int>(cb.factors.size()) != d) {
      throw PreconditionError("corner boxes of mixed dimension");
    }
    if (!cb.corner_on_diagonal()) {
      throw PreconditionError("corner of box " + std::to_string(k + 1) + " is off the diagonal");
    }
    Placement pl;
    for (const PlanarBox& f : cb.factors) {
      pl.box.push_back({-f.y.hi - m.shift, f.x.hi - m.shift});
      pl.point.push_back(f.x.lo - m.shift);
    }
    r.add(std::move(pl));
  }
  return r;
}

SemiSquareModel to_semisquares(const Realization& r) {
  if (r.dimension() != 1) throw PreconditionError("semi-squares need dimension 1");
  if (!is_central(r)) throw PreconditionError("semi-squares need a central realization");
  SemiSquareModel m;
  m.shift = positive_shift(r);
  for (const Placement& pl : r.placements()) {
    const Rational p = pl.point[0] + m.shift;
    m.triangles.push_back({{p, -p}, {pl.box[0].hi + m.shift, -p}, {p, -(pl.box[0].lo + m.shift)}});
  }
  return m;
}

namespace {

struct Projection {
  Rational lo;
  Rational hi;
};

Projection project(const std::array<Point2, 3>& pts, const Point2& axis) {
  Projection pr{pts[0].x * axis.x + pts[0].y * axis.y, pts[0].x * axis.x + pts[0].y * axis.y};
  for (int i = 1; i < 3; ++i) {
    const Rational t = pts[i].x * axis.x + pts[i].y * axis.y;
    if (t < pr.lo) pr.lo = t;
    if (t > pr.hi) pr.hi = t;
  }
  return pr;
}

void add_axes(const std::array<Point2, 3>& pts, std::vector<Point2>& axes) {
  for (int i = 0; i < 3; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % 3];
    const Point2 dir{b.x - a.x, b.y - a.y};
    if (dir.x == 0 && dir.y == 0) continue;
    axes.push_back(dir);
    axes.push_back({-dir.y, dir.x});
  }
}

}  // namespace

bool triangles_intersect(const SemiSquare& a, const SemiSquare& b) {
  const auto pa = a.vertices();
  const auto pb = b.vertices();
  // Edge normals suffice for proper triangles; edge directions and the
  // coordinate axes cover segments and points.
  std::vector<Point2> axes{{1, 0}, {0, 1}};
  add_axes(pa, axes);
  add_axes(pb, axes);
  for (const Point2& axis : axes) {
    const Projection x = project(pa, axis);
    const Projection y = project(pb, axis);
    if (x.hi < y.lo || y.hi < x.lo) return false;
  }
  return true;
}

Graph semisquare_intersection_graph(std::span<const SemiSquare> triangles) {
  const int n = static_cast<int>(triangles.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (triangles_intersect(triangles[u], triangles[v])) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

}  // namespace andgraph
