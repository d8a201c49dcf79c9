#include "andgraph/models.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "andgraph/errors.hpp"

namespace andgraph {

Graph interval_graph(const IntervalModel& m) {
  const int n = static_cast<int>(m.intervals.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    if (m.intervals[u].lo > m.intervals[u].hi) {
      throw PreconditionError("interval of vertex " + std::to_string(u + 1) + " is empty");
    }
    for (int v = u + 1; v < n; ++v) {
      if (m.intervals[u].intersects(m.intervals[v])) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

namespace {

// Positions a < b and c < d on a circle cross iff exactly one of c, d lies strictly inside (a, b).
bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

Graph outerplanar_graph(const OuterplanarModel& m, int n) {
  Graph g(n);
  std::vector<int> uf(static_cast<std::size_t>(n) + 1);
  std::iota(uf.begin(), uf.end(), 0);
  for (std::size_t bi = 0; bi < m.blocks.size(); ++bi) {
    const OuterBlock& blk = m.blocks[bi];
    const int k = static_cast<int>(blk.cycle.size());
    const std::string where = "outer block " + std::to_string(bi + 1);
    if (k < 2) throw PreconditionError(where + " has fewer than 2 vertices");
    std::map<VertexId, int> pos;
    for (int i = 0; i < k; ++i) {
      VertexId v = blk.cycle[i];
      if (!g.contains(v)) throw PreconditionError(where + ": vertex id out of range");
      if (!pos.emplace(v, i).second) throw PreconditionError(where + ": repeated vertex");
    }
    // Blocks must hang together as a tree: no block may touch a component twice.
    std::set<int> roots;
    for (VertexId v : blk.cycle) {
      if (!roots.insert(find_root(uf, v)).second) {
        throw PreconditionError(where + " closes a cycle of blocks");
      }
    }
    for (VertexId v : blk.cycle) uf[find_root(uf, v)] = find_root(uf, blk.cycle[0]);

    if (k == 2) {
      if (!blk.chords.empty()) throw PreconditionError(where + ": a bridge has no chords");
      g.add_edge(blk.cycle[0], blk.cycle[1]);
      continue;
    }
    for (int i = 0; i < k; ++i) g.add_edge(blk.cycle[i], blk.cycle[(i + 1) % k]);
    std::vector<std::pair<int, int>> placed;
    for (const Edge& c : blk.chords) {
      auto iu = pos.find(c.u);
      auto iv = pos.find(c.v);
      if (iu == pos.end() || iv == pos.end()) {
        throw PreconditionError(where + ": chord endpoint not on the outer cycle");
      }
      const int a = iu->second;
      const int b = iv->second;
      const int gap = std::abs(a - b);
      if (gap == 1 || gap == k - 1 || gap == 0) {
        throw PreconditionError(where + ": chord joins consecutive cycle vertices");
      }
      for (auto [pa, pb] : placed) {
        if (chords_cross(a, b, pa, pb)) {
          throw PreconditionError(where + ": crossing chords");
        }
      }
      placed.emplace_back(a, b);
      g.add_edge(c.u, c.v);
    }
  }
  return g;
}

RootedTree build_rooted_tree(const std::vector<std::pair<int, int>>& arcs) {
  RootedTree t;
  std::set<int> nodes;
  int max_id = 0;
  for (auto [p, c] : arcs) {
    if (p <= 0 || c <= 0) throw PreconditionError("tree node ids must be positive");
    nodes.insert(p);
    nodes.insert(c);
    max_id = std::max({max_id, p, c});
  }
  t.parent.assign(max_id + 1, 0);
  t.children.assign(max_id + 1, {});
  t.depth.assign(max_id + 1, -1);
  for (auto [p, c] : arcs) {
    if (p == c) throw PreconditionError("tree arc is a loop");
    if (t.parent[c] != 0) {
      throw PreconditionError("tree node " + std::to_string(c) + " has two parents");
    }
    t.parent[c] = p;
    t.children[p].push_back(c);
  }
  t.nodes.assign(nodes.begin(), nodes.end());
  for (int v : t.nodes) {
    std::sort(t.children[v].begin(), t.children[v].end());
    if (t.parent[v] == 0) {
      if (t.root != 0) throw PreconditionError("tree has more than one root");
      t.root = v;
    }
  }
  if (t.nodes.empty()) return t;
  if (t.root == 0) throw PreconditionError("tree has no root");
  std::vector<int> todo{t.root};
  t.depth[t.root] = 0;
  std::size_t reached = 0;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    ++reached;
    for (int c : t.children[v]) {
      t.depth[c] = t.depth[v] + 1;
      todo.push_back(c);
    }
  }
  if (reached != t.nodes.size()) throw PreconditionError("tree arcs are not connected");
  return t;
}

std::vector<std::vector<int>> normalized_paths(const RootedPathModel& m, const RootedTree& t) {
  std::vector<std::vector<int>> out;
  out.reserve(m.paths.size());
  auto known = [&](int k) {
    return k > 0 && k < static_cast<int>(t.depth.size()) && t.depth[k] >= 0;
  };
  for (std::size_t v = 0; v < m.paths.size(); ++v) {
    std::vector<int> path = m.paths[v];
    const std::string where = "path of vertex " + std::to_string(v + 1);
    if (path.empty()) throw PreconditionError(where + " is empty");
    // A single-node tree has no arcs; accept its lone node.
    if (t.nodes.empty() && path.size() == 1) {
      out.push_back(path);
      continue;
    }
    for (int k : path) {
      if (!known(k)) throw PreconditionError(where + " uses an unknown tree node");
    }
    std::sort(path.begin(), path.end(), [&](int a, int b) { return t.depth[a] < t.depth[b]; });
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (t.parent[path[i]] != path[i - 1]) {
        throw PreconditionError(where + " is not a directed tree path");
      }
    }
    out.push_back(std::move(path));
  }
  return out;
}

Graph rooted_path_graph(const RootedPathModel& m) {
  RootedTree t = build_rooted_tree(m.arcs);
  auto paths = normalized_paths(m, t);
  const int n = static_cast<int>(paths.size());
  for (auto& p : paths) std::sort(p.begin(), p.end());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> common;
      std::set_intersection(paths[u].begin(), paths[u].end(), paths[v].begin(), paths[v].end(),
                            std::back_inserter(common));
      if (!common.empty()) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

HGraphSpec make_h_spec(int lx, int ly, int lz) {
  if (lx < 2 || ly < 2 || lz < 2) {
    throw PreconditionError("three-path graph lengths must be >= 2");
  }
  HGraphSpec s;
  s.lx = lx;
  s.ly = ly;
  s.lz = lz;
  s.a = 1;
  s.b = 2;
  VertexId next = 3;
  for (int i = 1; i < lx; ++i) s.x.push_back(next++);
  for (int i = 1; i < ly; ++i) s.y.push_back(next++);
  for (int i = 1; i < lz; ++i) s.z.push_back(next++);
  return s;
}

Graph h_graph_from_spec(const HGraphSpec& spec) {
  if (spec.lx < 2 || spec.ly < 2 || spec.lz < 2) {
    throw PreconditionError("three-path graph lengths must be >= 2");
  }
  if (static_cast<int>(spec.x.size()) != spec.lx - 1 ||
      static_cast<int>(spec.y.size()) != spec.ly - 1 ||
      static_cast<int>(spec.z.size()) != spec.lz - 1) {
    throw PreconditionError("three-path labeling does not match the path lengths");
  }
  const int n = spec.lx + spec.ly + spec.lz - 1;
  std::set<VertexId> ids{spec.a, spec.b};
  ids.insert(spec.x.begin(), spec.x.end());
  ids.insert(spec.y.begin(), spec.y.end());
  ids.insert(spec.z.begin(), spec.z.end());
  if (static_cast<int>(ids.size()) != n || *ids.begin() != 1 || *ids.rbegin() != n) {
    throw PreconditionError("three-path labeling must use each of 1..n exactly once");
  }
  Graph g(n);
  for (const auto* inner : {&spec.x, &spec.y, &spec.z}) {
    VertexId prev = spec.a;
    for (VertexId v : *inner) {
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, spec.b);
  }
  return g;
}

namespace {

std::string describe_diff(const char* what, const Graph& expected, const Graph& actual) {
  if (expected.order() != actual.order()) {
    return std::string(what) + " covers " + std::to_string(actual.order()) +
           " vertices, graph has " + std::to_string(expected.order());
  }
  EdgeDiff d = diff_edges(expected, actual);
  if (d.empty()) return {};
  return std::string(what) + " disagrees with the graph on " +
         std::to_string(d.missing.size() + d.extra.size()) + " pairs";
}

}  // namespace

std::string check_bundle(const GraphBundle& bundle) {
  try {
    return std::visit(
        [&](const auto& m) -> std::string {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, std::monostate>) {
            return {};
          } else if constexpr (std::is_same_v<M, IntervalModel>) {
            return describe_diff("interval model", bundle.graph, interval_graph(m));
          } else if constexpr (std::is_same_v<M, OuterplanarModel>) {
            return describe_diff("outerplanar model", bundle.graph,
                                 outerplanar_graph(m, bundle.graph.order()));
          } else if constexpr (std::is_same_v<M, RootedPathModel>) {
            return describe_diff("rooted path model", bundle.graph, rooted_path_graph(m));
          } else {
            return describe_diff("three-path spec", bundle.graph, h_graph_from_spec(m));
          }
        },
        bundle.aux);
  } catch (const PreconditionError& e) {
    return e.what();
  }
}

}  // namespace andgraph
