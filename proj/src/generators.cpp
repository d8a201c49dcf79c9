#include "andgraph/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "andgraph/errors.hpp"

namespace andgraph {

namespace {

// Portable bounded draws: std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, so seeds would not reproduce.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  int below(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  std::vector<VertexId> permutation(int n) {
    std::vector<VertexId> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

int param(const FamilySpec& s, std::size_t count, std::size_t i) {
  require(s.params.size() == count, family_name(s.family) + " expects " +
                                        std::to_string(count) + " parameter(s)");
  return s.params[i];
}

GraphBundle random_interval(int n, Rng& rng) {
  require(n >= 1, "interval family needs n >= 1");
  IntervalModel model;
  std::vector<Interval> placed;
  Rational reach = 0;
  Rational left = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) left += frac(rng.between(0, 3), 2);
    if (i > 0 && left > reach) left = reach;  // keeps the union connected
    const int length = rng.between(1, 8);
    const int halves = rng.between(1, 2);
    Rational right = left + frac(length, halves);
    if (right > reach) reach = right;
    placed.push_back({left, right});
  }
  // Shuffle ids so that vertex labels do not follow the left endpoints.
  auto perm = rng.permutation(n);
  model.intervals.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) model.intervals[perm[i] - 1] = placed[i];
  Graph g = interval_graph(model);
  return {std::move(g), std::move(model)};
}

// Recursive ear splitting: cut the polygon `poly` by a random chord and recurse.
void split_polygon(const std::vector<VertexId>& poly, Rng& rng, std::vector<Edge>& chords) {
  const int k = static_cast<int>(poly.size());
  if (k < 4 || rng.below(4) == 0) return;
  const int i = rng.below(k);
  const int span = rng.between(2, k - 2);
  const int j = (i + span) % k;
  chords.push_back(Edge::make(poly[i], poly[j]));
  std::vector<VertexId> first, second;
  for (int t = i;; t = (t + 1) % k) {
    first.push_back(poly[t]);
    if (t == j) break;
  }
  for (int t = j;; t = (t + 1) % k) {
    second.push_back(poly[t]);
    if (t == i) break;
  }
  split_polygon(first, rng, chords);
  split_polygon(second, rng, chords);
}

OuterBlock random_dissection_block(const std::vector<VertexId>& cycle, Rng& rng) {
  OuterBlock blk;
  blk.cycle = cycle;
  split_polygon(cycle, rng, blk.chords);
  std::sort(blk.chords.begin(), blk.chords.end());
  return blk;
}

OuterplanarModel relabel(const OuterplanarModel& m, const std::vector<VertexId>& perm) {
  OuterplanarModel out = m;
  for (auto& blk : out.blocks) {
    for (auto& v : blk.cycle) v = perm[v - 1];
    for (auto& c : blk.chords) c = Edge::make(perm[c.u - 1], perm[c.v - 1]);
    std::sort(blk.chords.begin(), blk.chords.end());
  }
  return out;
}

GraphBundle random_dissection(int n, Rng& rng) {
  require(n >= 3, "dissection family needs n >= 3");
  std::vector<VertexId> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  OuterplanarModel m;
  m.blocks.push_back(random_dissection_block(cycle, rng));
  m = relabel(m, rng.permutation(n));
  Graph g = outerplanar_graph(m, n);
  return {std::move(g), std::move(m)};
}

GraphBundle random_outerplanar(int n, Rng& rng) {
  require(n >= 1, "outerplanar family needs n >= 1");
  OuterplanarModel m;
  int used = 1;
  while (used < n) {
    const VertexId anchor = rng.between(1, used);
    const int size = std::min(rng.between(2, 6), n - used + 1);
    std::vector<VertexId> cycle{anchor};
    for (int i = 1; i < size; ++i) cycle.push_back(++used);
    if (size == 2) {
      m.blocks.push_back({cycle, {}});
    } else {
      // Rotate so the anchor is not always first on its cycle.
      std::rotate(cycle.begin(), cycle.begin() + rng.below(size), cycle.end());
      m.blocks.push_back(random_dissection_block(cycle, rng));
    }
  }
  m = relabel(m, rng.permutation(n));
  Graph g = outerplanar_graph(m, n);
  return {std::move(g), std::move(m)};
}

GraphBundle random_block_graph(int n, Rng& rng) {
  require(n >= 1, "block family needs n >= 1");
  std::vector<std::vector<VertexId>> cliques;
  int used = 1;
  while (used < n) {
    const VertexId anchor = rng.between(1, used);
    const int size = std::min(rng.between(2, 4), n - used + 1);
    std::vector<VertexId> clique{anchor};
    for (int i = 1; i < size; ++i) clique.push_back(++used);
    cliques.push_back(std::move(clique));
  }
  auto perm = rng.permutation(n);
  Graph g(n);
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(perm[c[i] - 1], perm[c[j] - 1]);
    }
  }
  return {std::move(g), std::monostate{}};
}

GraphBundle random_rooted_path(int n, Rng& rng) {
  require(n >= 1, "rooted-path family needs n >= 1");
  const int nodes = std::max(2, n + n / 2);
  RootedPathModel m;
  std::vector<int> parent(static_cast<std::size_t>(nodes) + 1, 0);
  for (int k = 2; k <= nodes; ++k) {
    parent[k] = rng.between(1, k - 1);
    m.arcs.emplace_back(parent[k], k);
  }
  for (int v = 0; v < n; ++v) {
    int node = rng.between(1, nodes);
    std::vector<int> path{node};
    int climb = rng.between(0, 3);
    while (climb-- > 0 && parent[node] != 0) {
      node = parent[node];
      path.insert(path.begin(), node);
    }
    m.paths.push_back(std::move(path));
  }
  Graph g = rooted_path_graph(m);
  return {std::move(g), std::move(m)};
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteMultipartite: return "multipartite";
    case Family::HGraph: return "h";
    case Family::RandomInterval: return "interval";
    case Family::RandomDissection: return "dissection";
    case Family::RandomBlockGraph: return "block";
    case Family::RandomOuterplanar: return "outerplanar";
    case Family::RandomRootedPath: return "rooted-path";
  }
  return "unknown";
}

FamilySpec parse_family(const std::string& name, std::vector<int> params) {
  static const std::map<std::string, Family> names = {
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"multipartite", Family::CompleteMultipartite},
      {"h", Family::HGraph},
      {"interval", Family::RandomInterval},
      {"dissection", Family::RandomDissection},
      {"block", Family::RandomBlockGraph},
      {"outerplanar", Family::RandomOuterplanar},
      {"rooted-path", Family::RandomRootedPath},
  };
  auto it = names.find(name);
  if (it == names.end()) throw PreconditionError("unknown family '" + name + "'");
  return {it->second, std::move(params)};
}

GraphBundle generate(const FamilySpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  switch (spec.family) {
    case Family::Path: {
      int n = param(spec, 1, 0);
      require(n >= 1, "path needs n >= 1");
      return {path_graph(n), std::monostate{}};
    }
    case Family::Cycle: {
      int n = param(spec, 1, 0);
      require(n >= 3, "cycle needs n >= 3");
      return {cycle_graph(n), std::monostate{}};
    }
    case Family::Complete: {
      int n = param(spec, 1, 0);
      require(n >= 1, "complete graph needs n >= 1");
      return {complete_graph(n), std::monostate{}};
    }
    case Family::CompleteMultipartite:
      require(!spec.params.empty(), "multipartite needs at least one part");
      return {complete_multipartite_graph(spec.params), std::monostate{}};
    case Family::HGraph: {
      HGraphSpec h = make_h_spec(param(spec, 3, 0), param(spec, 3, 1), param(spec, 3, 2));
      Graph g = h_graph_from_spec(h);
      return {std::move(g), std::move(h)};
    }
    case Family::RandomInterval: return random_interval(param(spec, 1, 0), rng);
    case Family::RandomDissection: return random_dissection(param(spec, 1, 0), rng);
    case Family::RandomBlockGraph: return random_block_graph(param(spec, 1, 0), rng);
    case Family::RandomOuterplanar: return random_outerplanar(param(spec, 1, 0), rng);
    case Family::RandomRootedPath: return random_rooted_path(param(spec, 1, 0), rng);
  }
  throw PreconditionError("unknown family");
}

}  // namespace andgraph
