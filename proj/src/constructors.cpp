#include "andgraph/constructors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

// ---------------------------------------------------------------------------
// Interval graphs

std::string greedy_invariant_failure(const GreedyState& s) {
  const int i = s.step;
  for (int k = 2; k <= i; ++k) {
    if (!(s.p[k - 2] < s.p[k - 1])) return "points not increasing at position " + std::to_string(k);
  }
  for (int j = 1; j <= i; ++j) {
    if (!(s.box_left(j) < s.p[s.left[j - 1] - 1])) {
      return "left end of position " + std::to_string(j) + " does not pass its leftmost neighbor";
    }
    for (int k = 1; k <= i; ++k) {
      if (s.right[j - 1] < s.right[k - 1] && !(s.box_right(j) < s.box_right(k))) {
        return "right ends of positions " + std::to_string(j) + ", " + std::to_string(k) +
               " out of order";
      }
      const bool before = s.right[k - 1] < j;
      if (before != (s.box_right(k) < s.p[j - 1])) {
        return "right end of position " + std::to_string(k) + " misplaced against point " +
               std::to_string(j);
      }
    }
  }
  return {};
}

Realization interval_to_cand1(const IntervalModel& m,
                              const std::function<void(const GreedyState&)>& observe) {
  const int n = static_cast<int>(m.intervals.size());
  if (n == 0) throw PreconditionError("interval model is empty");
  const Graph g = interval_graph(m);
  if (!g.is_connected()) throw PreconditionError("interval graph must be connected");

  GreedyState s;
  s.vertex_at.resize(static_cast<std::size_t>(n));
  std::iota(s.vertex_at.begin(), s.vertex_at.end(), 1);
  std::sort(s.vertex_at.begin(), s.vertex_at.end(), [&](VertexId a, VertexId b) {
    const Interval& x = m.intervals[a - 1];
    const Interval& y = m.intervals[b - 1];
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.hi != y.hi) return x.hi < y.hi;
    return a < b;
  });
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) pos[s.vertex_at[k - 1]] = k;
  auto adjacent = [&](int j, int k) { return g.adjacent(s.vertex_at[j - 1], s.vertex_at[k - 1]); };
  s.left.resize(static_cast<std::size_t>(n));
  s.right.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int lo = k;
    int hi = k;
    for (VertexId w : g.neighbors(s.vertex_at[k - 1])) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    s.left[k - 1] = lo;
    s.right[k - 1] = hi;
  }

  s.step = 1;
  s.p.push_back(0);
  s.r.push_back(1);
  s.upper = 0;
  s.radius = 1;
  if (observe) observe(s);

  for (int i = 2; i <= n; ++i) {
    s.step = i;
    s.lower.reset();
    std::optional<Rational> upper;
    for (int j = 1; j < i; ++j) {
      const Rational rj = s.box_right(j);
      if (adjacent(j, i)) {
        if (!upper || rj < *upper) upper = rj;
      } else if (!s.lower || rj > *s.lower) {
        s.lower = rj;
      }
    }
    if (!upper) throw std::logic_error("left-endpoint order left a vertex without earlier neighbor");
    s.upper = *upper;
    Rational base = s.p[i - 2];
    if (s.lower && *s.lower > base) base = *s.lower;
    const Rational p_i = midpoint(base, s.upper);

    s.p_set.clear();
    s.r_prime.reset();
    for (int j = 1; j < i; ++j) {
      if (s.right[j - 1] < s.right[i - 1]) {
        s.p_set.push_back(j);
        const Rational rj = s.box_right(j);
        if (!s.r_prime || rj > *s.r_prime) s.r_prime = rj;
      }
    }
    Rational reach = p_i - s.p[s.left[i - 1] - 1];
    if (s.r_prime && *s.r_prime - p_i > reach) reach = *s.r_prime - p_i;
    s.radius = reach + 1;

    s.p.push_back(p_i);
    s.r.push_back(s.radius);
    std::size_t next_in_p = 0;
    for (int j = 1; j < i; ++j) {
      if (next_in_p < s.p_set.size() && s.p_set[next_in_p] == j) {
        ++next_in_p;
        continue;
      }
      s.r[j - 1] += s.radius;
    }
    if (observe) observe(s);
  }

  std::vector<Placement> placements(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    placements[s.vertex_at[k - 1] - 1] = Placement::centered(s.p[k - 1], s.r[k - 1]);
  }
  return Realization(1, std::move(placements));
}

// ---------------------------------------------------------------------------
// Cycles and gluing

Realization cycle_cand1(int n, const Rational& eps, VertexId anchor) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  if (eps <= 0 || eps >= 1) throw PreconditionError("eps must lie strictly between 0 and 1");
  if (anchor < 1 || anchor > n) throw PreconditionError("anchor outside 1..n");
  std::vector<Placement> placements(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const VertexId v = (anchor - 1 + k - 1) % n + 1;
    Placement pl;
    if (k == 1) {
      pl = Placement::line(2 - n - eps, n + eps, 1);
    } else if (k == n) {
      pl = Placement::line(1 - eps, 2 * n - 1 + eps, n);
    } else {
      pl = Placement::line(k - 1 - eps, k + 1 + eps, k);
    }
    placements[v - 1] = std::move(pl);
  }
  return Realization(1, std::move(placements));
}

namespace {

void require_line(const Realization& r, const char* what) {
  if (r.dimension() != 1) throw PreconditionError(std::string(what) + " must have dimension 1");
}

void require_vertex(const Realization& r, VertexId v, const char* what) {
  if (v < 1 || v > r.order()) {
    throw PreconditionError(std::string(what) + " " + std::to_string(v) + " does not exist");
  }
}

}  // namespace

GlueParams glue_params(const Realization& r1, VertexId w1, const Realization& r2) {
  require_line(r1, "first realization");
  require_line(r2, "second realization");
  require_vertex(r1, w1, "vertex");
  GlueParams gp;
  gp.delta = 1;
  bool have = false;
  for (VertexId u = 1; u <= r1.order(); ++u) {
    if (u == w1) continue;
    const Rational d = abs_value(r1.point(u) - r1.point(w1));
    if (d == 0) {
      throw PreconditionError("vertex " + std::to_string(u) + " shares the point of vertex " +
                              std::to_string(w1));
    }
    if (!have || d < gp.delta) {
      gp.delta = d;
      have = true;
    }
  }
  if (r2.order() == 0) throw PreconditionError("second realization is empty");
  Rational lo = r2.interval(1).lo;
  Rational hi = r2.interval(1).hi;
  for (VertexId v = 2; v <= r2.order(); ++v) {
    lo = std::min(lo, r2.interval(v).lo);
    hi = std::max(hi, r2.interval(v).hi);
  }
  gp.length = hi - lo;
  gp.scale = gp.length == 0 ? Rational(1) : Rational(gp.delta / (2 * gp.length));
  return gp;
}

GlueResult glue_at_safe_vertex(const Realization& r1, VertexId w1, const Realization& r2,
                               VertexId w2) {
  require_vertex(r2, w2, "vertex");
  const GlueParams gp = glue_params(r1, w1, r2);
  if (!is_safe(r2, w2)) {
    throw PreconditionError("vertex " + std::to_string(w2) + " is not safe in the second realization");
  }
  auto map = [&](const Rational& x) -> Rational {
    return gp.scale * (x - r2.point(w2)) + r1.point(w1);
  };
  std::vector<Placement> out = r1.placements();
  const Interval& b1 = r1.interval(w1);
  const Interval& b2 = r2.interval(w2);
  out[w1 - 1].box[0] = {std::min(b1.lo, map(b2.lo)), std::max(b1.hi, map(b2.hi))};

  GlueResult result;
  result.second_ids.resize(static_cast<std::size_t>(r2.order()));
  for (VertexId v = 1; v <= r2.order(); ++v) {
    if (v == w2) {
      result.second_ids[v - 1] = w1;
      continue;
    }
    out.push_back(Placement::line(map(r2.interval(v).lo), map(r2.interval(v).hi), map(r2.point(v))));
    result.second_ids[v - 1] = static_cast<VertexId>(out.size());
  }
  result.realization = Realization(1, std::move(out));
  return result;
}

std::vector<VertexId> block_anchors(const BlockDecomposition& bd) {
  const int count = static_cast<int>(bd.blocks.size());
  std::vector<VertexId> anchor(static_cast<std::size_t>(count), 0);
  if (count == 0) return anchor;
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  std::deque<int> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    const int b = todo.front();
    todo.pop_front();
    for (VertexId c : bd.blocks[b]) {
      if (!bd.is_cut_vertex(c)) continue;
      for (int other : bd.blocks_of(c)) {
        if (seen[other]) continue;
        seen[other] = true;
        anchor[other] = c;
        todo.push_back(other);
      }
    }
  }
  return anchor;
}

namespace {

// Breadth-first block order matching block_anchors.
std::vector<int> block_order(const BlockDecomposition& bd) {
  const int count = static_cast<int>(bd.blocks.size());
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  if (count == 0) return order;
  std::deque<int> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    const int b = todo.front();
    todo.pop_front();
    order.push_back(b);
    for (VertexId c : bd.blocks[b]) {
      if (!bd.is_cut_vertex(c)) continue;
      for (int other : bd.blocks_of(c)) {
        if (seen[other]) continue;
        seen[other] = true;
        todo.push_back(other);
      }
    }
  }
  return order;
}

}  // namespace

Realization assemble_block_tree(const std::vector<BlockComponent>& components,
                                const BlockDecomposition& bd) {
  if (components.size() != bd.blocks.size()) {
    throw PreconditionError("need one component per block");
  }
  if (components.empty()) return Realization(1);
  int n = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const BlockComponent& c = components[i];
    std::vector<VertexId> ids = c.local_to_global;
    std::sort(ids.begin(), ids.end());
    if (ids != bd.blocks[i] || c.local.order() != static_cast<int>(ids.size())) {
      throw PreconditionError("component " + std::to_string(i) + " does not match its block");
    }
    require_line(c.local, "block realization");
    n = std::max(n, ids.back());
  }

  const std::vector<VertexId> anchors = block_anchors(bd);
  const std::vector<int> order = block_order(bd);
  std::vector<VertexId> assembled_id(static_cast<std::size_t>(n) + 1, 0);
  Realization assembled = components[order[0]].local;
  for (VertexId v = 1; v <= assembled.order(); ++v) {
    assembled_id[components[order[0]].local_to_global[v - 1]] = v;
  }
  for (std::size_t t = 1; t < order.size(); ++t) {
    const int b = order[t];
    const BlockComponent& c = components[b];
    const VertexId cut = anchors[b];
    const auto it = std::find(c.local_to_global.begin(), c.local_to_global.end(), cut);
    const VertexId w2 = static_cast<VertexId>(it - c.local_to_global.begin()) + 1;
    if (!is_safe(c.local, w2)) {
      throw PreconditionError("cut vertex " + std::to_string(cut) + " is not safe in block " +
                              std::to_string(b));
    }
    GlueResult glued = glue_at_safe_vertex(assembled, assembled_id[cut], c.local, w2);
    for (VertexId v = 1; v <= c.local.order(); ++v) {
      if (v != w2) assembled_id[c.local_to_global[v - 1]] = glued.second_ids[v - 1];
    }
    assembled = std::move(glued.realization);
  }
  std::vector<VertexId> pick;
  for (VertexId g = 1; g <= n; ++g) {
    if (assembled_id[g] == 0) throw PreconditionError("vertex " + std::to_string(g) + " is in no block");
    pick.push_back(assembled_id[g]);
  }
  return restrict_to(assembled, pick);
}

Realization block_graph_cand1(const Graph& g) {
  if (g.order() == 0) return Realization(1);
  const BlockDecomposition bd = block_decomposition(g);
  std::vector<BlockComponent> components;
  for (const auto& block : bd.blocks) {
    const int k = static_cast<int>(block.size());
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (!g.adjacent(block[i], block[j])) throw PreconditionError("a block is not a clique");
      }
    }
    BlockComponent c;
    for (int i = 1; i <= k; ++i) c.local.add(Placement::centered(i, k));
    c.local_to_global = block;
    components.push_back(std::move(c));
  }
  return assemble_block_tree(components, bd);
}

namespace {

// Central line layout keyed by vertex id: point and radius.
class CentralLayout {
 public:
  void put(VertexId v, Rational p, Rational r) { at_[v] = {std::move(p), std::move(r)}; }
  const Rational& point(VertexId v) const { return at_.at(v).first; }
  const Rational& radius(VertexId v) const { return at_.at(v).second; }

  // Places the path a, internal..., b (a face whose edge ab is already
  // realized with a and b on consecutive points) strictly between p_a and
  // p_b: a cycle realization scaled so its extremes land on a and b. The
  // internal boxes reach past p_a and p_b by eps * step, which stays below
  // half the distance to any other point.
  void insert_face(VertexId a, VertexId b, std::vector<VertexId> internal) {
    if (point(a) > point(b)) {
      std::swap(a, b);
      std::reverse(internal.begin(), internal.end());
    }
    const Rational pa = point(a);
    const Rational pb = point(b);
    const int k = static_cast<int>(internal.size()) + 2;
    const Rational step = (pb - pa) / (k - 1);
    std::optional<Rational> clearance;
    for (const auto& [v, pr] : at_) {
      if (v == a || v == b) continue;
      const Rational& p = pr.first;
      Rational d;
      if (p < pa) {
        d = pa - p;
      } else if (p > pb) {
        d = p - pb;
      } else {
        throw std::logic_error("face endpoints are not consecutive points");
      }
      if (!clearance || d < *clearance) clearance = d;
    }
    Rational eps = frac(1, 2);
    if (clearance && *clearance / (2 * step) < eps) eps = *clearance / (2 * step);
    for (int t = 2; t < k; ++t) {
      put(internal[t - 2], pa + (t - 1) * step, (1 + eps) * step);
    }
  }

  Realization realize(int n) const {
    std::vector<Placement> placements;
    for (VertexId v = 1; v <= n; ++v) {
      const auto& [p, r] = at_.at(v);
      placements.push_back(Placement::centered(p, r));
    }
    return Realization(1, std::move(placements));
  }

 private:
  std::map<VertexId, std::pair<Rational, Rational>> at_;
};

}  // namespace

Graph glued_cycles_graph(int n, int m, VertexId shared) {
  if (n < 3 || m < 3) throw PreconditionError("both cycles need at least 3 vertices");
  if (shared < 1 || shared > n) throw PreconditionError("shared edge outside the first cycle");
  Graph g = cycle_graph(n);
  Graph out(n + m - 2);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  const VertexId u = shared;
  const VertexId v = shared % n + 1;
  VertexId prev = v;
  for (VertexId w = n + 1; w <= n + m - 2; ++w) {
    out.add_edge(prev, w);
    prev = w;
  }
  out.add_edge(prev, u);
  return out;
}

Realization glue_cycles_on_edge(int n, int m, VertexId shared) {
  const Graph g = glued_cycles_graph(n, m, shared);
  const VertexId u = shared;
  const VertexId v = shared % n + 1;
  // C_m in cyclic order u, v, n+1, ..., n+m-2; u and v on consecutive
  // non-extreme points when m >= 4.
  std::vector<VertexId> outer{u, v};
  for (VertexId w = n + 1; w <= n + m - 2; ++w) outer.push_back(w);
  const Realization rm = cycle_cand1(m, frac(1, 2), m >= 4 ? m : 1);
  CentralLayout layout;
  for (int local = 1; local <= m; ++local) {
    layout.put(outer[local - 1], rm.point(local), radius(rm, local));
  }
  // The C_n path from u to v that avoids the edge uv.
  std::vector<VertexId> internal;
  for (VertexId w = (u + n - 2) % n + 1; w != v; w = (w + n - 2) % n + 1) internal.push_back(w);
  layout.insert_face(u, v, internal);
  Realization r = layout.realize(g.order());
  if (!verify(r, g).empty()) throw std::logic_error("glued cycles failed verification");
  return r;
}

std::vector<std::vector<VertexId>> dissection_faces(const OuterBlock& block) {
  if (block.cycle.size() < 3) return {};
  std::vector<std::vector<VertexId>> done;
  std::vector<std::vector<VertexId>> todo{block.cycle};
  while (!todo.empty()) {
    std::vector<VertexId> poly = std::move(todo.back());
    todo.pop_back();
    const int k = static_cast<int>(poly.size());
    bool split = false;
    for (const Edge& c : block.chords) {
      const auto iu = std::find(poly.begin(), poly.end(), c.u);
      const auto iv = std::find(poly.begin(), poly.end(), c.v);
      if (iu == poly.end() || iv == poly.end()) continue;
      int i = static_cast<int>(iu - poly.begin());
      int j = static_cast<int>(iv - poly.begin());
      if (i > j) std::swap(i, j);
      if (j - i == 1 || (i == 0 && j == k - 1)) continue;  // already a side
      std::vector<VertexId> first(poly.begin() + i, poly.begin() + j + 1);
      std::vector<VertexId> second(poly.begin() + j, poly.end());
      second.insert(second.end(), poly.begin(), poly.begin() + i + 1);
      todo.push_back(std::move(second));
      todo.push_back(std::move(first));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(poly));
  }
  return done;
}

namespace {

bool face_has_edge(const std::vector<VertexId>& face, VertexId a, VertexId b) {
  const int k = static_cast<int>(face.size());
  for (int i = 0; i < k; ++i) {
    if (Edge::make(face[i], face[(i + 1) % k]) == Edge::make(a, b)) return true;
  }
  return false;
}

// Path from a to b along the face, not using the side ab.
std::vector<VertexId> face_path_internal(const std::vector<VertexId>& face, VertexId a,
                                         VertexId b) {
  const int k = static_cast<int>(face.size());
  const int i = static_cast<int>(std::find(face.begin(), face.end(), a) - face.begin());
  const int dir = face[(i + 1) % k] == b ? -1 : 1;
  std::vector<VertexId> path;
  for (int t = (i + dir + k) % k; face[t] != b; t = (t + dir + k) % k) path.push_back(face[t]);
  return path;
}

// One block of an outerplanar model, with `anchor` (0 for none) at the
// leftmost point so that it is safe.
BlockComponent realize_outer_block(const OuterBlock& block, VertexId anchor) {
  BlockComponent c;
  c.local_to_global = block.cycle;
  std::sort(c.local_to_global.begin(), c.local_to_global.end());
  const int k = static_cast<int>(block.cycle.size());

  // Root edge: the smallest outer edge (through the anchor when there is one).
  std::optional<Edge> root;
  for (int i = 0; i < k; ++i) {
    const Edge e = Edge::make(block.cycle[i], block.cycle[(i + 1) % k]);
    if (anchor != 0 && e.u != anchor && e.v != anchor) continue;
    if (!root || e < *root) root = e;
  }
  if (!root) throw PreconditionError("anchor is not on the block");
  VertexId a0 = root->u;
  VertexId b0 = root->v;
  if (anchor != 0 && anchor != a0) std::swap(a0, b0);

  CentralLayout layout;
  layout.put(a0, 0, 1);
  layout.put(b0, 1, 1);
  if (k >= 3) {
    const auto faces = dissection_faces(block);
    std::vector<bool> placed(faces.size(), false);
    std::deque<std::pair<std::size_t, Edge>> todo;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (face_has_edge(faces[f], a0, b0)) {
        todo.emplace_back(f, Edge{a0, b0});
        placed[f] = true;
        break;
      }
    }
    std::set<Edge> chords(block.chords.begin(), block.chords.end());
    while (!todo.empty()) {
      const auto [f, e] = todo.front();
      todo.pop_front();
      const auto& face = faces[f];
      layout.insert_face(e.u, e.v, face_path_internal(face, e.u, e.v));
      const int fk = static_cast<int>(face.size());
      for (int i = 0; i < fk; ++i) {
        const Edge side = Edge::make(face[i], face[(i + 1) % fk]);
        if (!chords.count(side)) continue;
        for (std::size_t g = 0; g < faces.size(); ++g) {
          if (placed[g] || !face_has_edge(faces[g], side.u, side.v)) continue;
          placed[g] = true;
          todo.emplace_back(g, side);
        }
      }
    }
  }
  std::vector<Placement> placements;
  for (VertexId global : c.local_to_global) {
    placements.push_back(Placement::centered(layout.point(global), layout.radius(global)));
  }
  c.local = Realization(1, std::move(placements));
  return c;
}

}  // namespace

Realization outerplanar_cand1(const OuterplanarModel& m, int n) {
  const Graph g = outerplanar_graph(m, n);
  if (n == 0) return Realization(1);
  if (!g.is_connected()) throw PreconditionError("outerplanar graph must be connected");
  const BlockDecomposition bd = block_decomposition(g);
  const std::vector<VertexId> anchors = block_anchors(bd);
  std::vector<BlockComponent> components;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const auto& vs = bd.blocks[i];
    if (vs.size() == 1) {
      components.push_back({Realization(1, {Placement::centered(0, 1)}), vs});
      continue;
    }
    const OuterBlock* match = nullptr;
    for (const OuterBlock& blk : m.blocks) {
      std::vector<VertexId> sorted = blk.cycle;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == vs) match = &blk;
    }
    if (!match) throw PreconditionError("model blocks do not match the biconnected components");
    components.push_back(realize_outer_block(*match, anchors[i]));
  }
  Realization r = assemble_block_tree(components, bd);
  if (!verify(r, g).empty()) throw std::logic_error("outerplanar realization failed verification");
  return r;
}

// ---------------------------------------------------------------------------
// Orderings for AND(1)

Ordering rdp_ordering(const RootedPathModel& m) {
  const RootedTree t = build_rooted_tree(m.arcs);
  const auto paths = normalized_paths(m, t);
  const int n = static_cast<int>(paths.size());
  std::vector<int> inverse_rank(t.depth.size(), 0);
  if (!t.nodes.empty()) {
    // Preorder, children by ascending id; the last visited node gets rank 1.
    std::vector<int> preorder;
    std::vector<int> todo{t.root};
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      preorder.push_back(v);
      for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) todo.push_back(*it);
    }
    const int total = static_cast<int>(preorder.size());
    for (int i = 0; i < total; ++i) inverse_rank[preorder[i]] = total - i;
  }
  std::vector<int> key(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (t.nodes.empty()) continue;
    int best = inverse_rank[paths[v][0]];
    for (int node : paths[v]) best = std::min(best, inverse_rank[node]);
    key[v] = best;
  }
  std::vector<VertexId> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::stable_sort(seq.begin(), seq.end(),
                   [&](VertexId a, VertexId b) { return key[a - 1] < key[b - 1]; });
  return Ordering(std::move(seq));
}

Ordering h_graph_ordering(const HGraphSpec& spec) {
  h_graph_from_spec(spec);  // validates the labeling
  std::vector<VertexId> seq;
  if (spec.lx == 2) {
    if (spec.ly < 2 || spec.lz < 2) throw PreconditionError("need ly, lz >= 2");
    seq.push_back(spec.a);
    seq.insert(seq.end(), spec.z.begin(), spec.z.end());
    seq.push_back(spec.b);
    seq.push_back(spec.x[0]);
    seq.insert(seq.end(), spec.y.rbegin(), spec.y.rend());
  } else if (spec.lx == 3) {
    if (spec.ly < 3 || spec.lz < 3) throw PreconditionError("need ly, lz >= 3 when lx = 3");
    seq.push_back(spec.y[0]);
    seq.push_back(spec.x[0]);
    seq.push_back(spec.a);
    seq.insert(seq.end(), spec.z.begin(), spec.z.end());
    seq.push_back(spec.b);
    seq.push_back(spec.x[1]);
    seq.insert(seq.end(), spec.y.rbegin(), spec.y.rend() - 1);
  } else {
    throw PreconditionError("explicit orderings exist only for lx = 2 or lx = 3");
  }
  return Ordering(std::move(seq));
}

}  // namespace andgraph
