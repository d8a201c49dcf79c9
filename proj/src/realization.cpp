#include "andgraph/realization.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

Placement Placement::line(Rational lo, Rational hi, Rational p) {
  Placement pl;
  pl.box.push_back({std::move(lo), std::move(hi)});
  pl.point.push_back(std::move(p));
  return pl;
}

Placement Placement::centered(const Rational& p, const Rational& r) {
  return line(p - r, p + r, p);
}

bool Placement::box_contains(std::span<const Rational> x) const {
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!box[i].contains(x[i])) return false;
  }
  return true;
}

Realization::Realization(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw PreconditionError("dimension must be >= 1");
}

Realization::Realization(int dimension, std::vector<Placement> placements)
    : Realization(dimension) {
  for (auto& p : placements) add(std::move(p));
}

void Realization::check(const Placement& p) const {
  const std::string who = "vertex " + std::to_string(order() + 1);
  if (p.dimension() != dimension_ || static_cast<int>(p.box.size()) != dimension_) {
    throw PreconditionError(who + " has the wrong dimension");
  }
  for (int i = 0; i < dimension_; ++i) {
    if (!p.box[i].contains(p.point[i])) {
      throw PreconditionError(who + ": representative point outside its box in dimension " +
                              std::to_string(i + 1));
    }
  }
}

VertexId Realization::add(Placement p) {
  check(p);
  placements_.push_back(std::move(p));
  return order();
}

bool Realization::adjacent(VertexId u, VertexId v) const {
  const Placement& a = at(u);
  const Placement& b = at(v);
  return a.box_contains(b.point) && b.box_contains(a.point);
}

Graph induced_graph(const Realization& r) {
  Graph g(r.order());
  for (VertexId u = 1; u <= r.order(); ++u) {
    for (VertexId v = u + 1; v <= r.order(); ++v) {
      if (r.adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

VerifyReport verify(const Realization& r, const Graph& g) {
  if (r.order() != g.order()) {
    throw PreconditionError("realization has " + std::to_string(r.order()) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
  EdgeDiff d = diff_edges(g, induced_graph(r));
  return {std::move(d.missing), std::move(d.extra)};
}

bool is_central(const Realization& r) {
  for (const Placement& p : r.placements()) {
    for (int i = 0; i < p.dimension(); ++i) {
      if (p.point[i] != p.box[i].center()) return false;
    }
  }
  return true;
}

Realization transform(const Realization& r, std::span<const Rational> shift,
                      const Rational& scale) {
  if (scale <= 0) throw PreconditionError("scaling factor must be positive");
  if (static_cast<int>(shift.size()) != r.dimension()) {
    throw PreconditionError("translation needs one entry per dimension");
  }
  Realization out(r.dimension());
  for (const Placement& p : r.placements()) {
    Placement q = p;
    for (int i = 0; i < r.dimension(); ++i) {
      q.box[i].lo = scale * p.box[i].lo + shift[i];
      q.box[i].hi = scale * p.box[i].hi + shift[i];
      q.point[i] = scale * p.point[i] + shift[i];
    }
    out.add(std::move(q));
  }
  return out;
}

Realization transform(const Realization& r, const Rational& shift, const Rational& scale) {
  std::vector<Rational> shifts(static_cast<std::size_t>(r.dimension()), shift);
  return transform(r, shifts, scale);
}

namespace {

void require_line(const Realization& r, const char* op) {
  if (r.dimension() != 1) {
    throw PreconditionError(std::string(op) + " is defined for dimension 1 only");
  }
}

}  // namespace

Ordering r_order(const Realization& r) {
  require_line(r, "r_order");
  std::vector<VertexId> seq(static_cast<std::size_t>(r.order()));
  for (VertexId v = 1; v <= r.order(); ++v) seq[v - 1] = v;
  std::stable_sort(seq.begin(), seq.end(),
                   [&](VertexId a, VertexId b) { return r.point(a) < r.point(b); });
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (r.point(seq[i - 1]) == r.point(seq[i])) {
      throw PreconditionError("vertices " + std::to_string(seq[i - 1]) + " and " +
                              std::to_string(seq[i]) +
                              " share a representative point; call make_points_distinct first");
    }
  }
  return Ordering(std::move(seq));
}

Realization make_points_distinct(const Realization& r) {
  require_line(r, "make_points_distinct");
  std::map<Rational, std::vector<VertexId>> by_point;
  for (VertexId v = 1; v <= r.order(); ++v) by_point[r.point(v)].push_back(v);
  if (static_cast<int>(by_point.size()) == r.order()) return r;

  // gap: smallest positive distance between any two coordinates in use.
  std::vector<Rational> coords;
  for (const Placement& p : r.placements()) {
    coords.push_back(p.box[0].lo);
    coords.push_back(p.box[0].hi);
    coords.push_back(p.point[0]);
  }
  std::sort(coords.begin(), coords.end());
  Rational gap = 1;
  bool have_gap = false;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    Rational d = coords[i] - coords[i - 1];
    if (d > 0 && (!have_gap || d < gap)) {
      gap = d;
      have_gap = true;
    }
  }
  // Widening every box by gap/4 keeps all containments and non-containments,
  // and leaves slack of at least gap/4 around every box boundary. Rigid shifts
  // below gap/4 then cannot cross a boundary.
  const Rational widen = gap / 4;
  const Rational step = gap / (4 * (r.order() + 1));
  Realization out(1);
  std::vector<Rational> shift(static_cast<std::size_t>(r.order()), Rational(0));
  for (const auto& [p, group] : by_point) {
    for (std::size_t k = 0; k < group.size(); ++k) shift[group[k] - 1] = step * static_cast<long>(k);
  }
  for (VertexId v = 1; v <= r.order(); ++v) {
    const Interval& b = r.interval(v);
    const Rational& s = shift[v - 1];
    out.add(Placement::line(b.lo - widen + s, b.hi + widen + s, r.point(v) + s));
  }
  return out;
}

bool is_safe(const Realization& r, VertexId v) {
  require_line(r, "is_safe");
  if (v < 1 || v > r.order()) throw PreconditionError("unknown vertex " + std::to_string(v));
  for (VertexId w = 1; w <= r.order(); ++w) {
    if (w == v) continue;
    if (r.interval(w).contains(r.point(v)) && !r.adjacent(v, w)) return false;
  }
  return true;
}

Rational radius(const Realization& r, VertexId v) {
  require_line(r, "radius");
  Rational h = r.interval(v).length();
  h /= 2;
  return h;
}

Realization restrict_to(const Realization& r, std::span<const VertexId> vertices) {
  Realization out(r.dimension());
  for (VertexId v : vertices) out.add(r.at(v));
  return out;
}

}  // namespace andgraph
