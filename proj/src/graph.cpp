#include "andgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <stack>
#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (!contains(u) || !contains(v)) {
    throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " has an id outside 1.." + std::to_string(n_));
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw PreconditionError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  matrix_[index(u, v)] = 1;
  matrix_[index(v, u)] = 1;
  auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u - 1], v);
  insert_sorted(adj_[v - 1], u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 1; u <= n_; ++u) {
    for (VertexId v : adj_[u - 1]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> todo{s};
    seen[s] = 1;
    while (!todo.empty()) {
      VertexId u = todo.back();
      todo.pop_back();
      comp.push_back(u);
      for (VertexId w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::induced_subgraph(std::span<const VertexId> vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) {
        sub.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
      }
    }
  }
  return sub;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && m_ == other.m_ && matrix_ == other.matrix_;
}

EdgeDiff diff_edges(const Graph& expected, const Graph& actual) {
  if (expected.order() != actual.order()) {
    throw PreconditionError("vertex-set mismatch: " + std::to_string(expected.order()) +
                            " vs " + std::to_string(actual.order()) + " vertices");
  }
  EdgeDiff diff;
  for (const Edge& e : expected.edges()) {
    if (!actual.adjacent(e.u, e.v)) diff.missing.push_back(e);
  }
  for (const Edge& e : actual.edges()) {
    if (!expected.adjacent(e.u, e.v)) diff.extra.push_back(e);
  }
  return diff;
}

Graph path_graph(int n) {
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite_graph(std::span<const int> parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw PreconditionError("multipartite part sizes must be >= 1");
    n += parts[i];
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  }
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (part_of[u - 1] != part_of[v - 1]) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<int> BlockDecomposition::blocks_of(VertexId v) const {
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) {
      out.push_back(static_cast<int>(b));
    }
  }
  return out;
}

bool BlockDecomposition::is_cut_vertex(VertexId v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!g.is_connected()) {
    throw PreconditionError("block decomposition assumes a connected graph");
  }
  const int n = g.order();
  BlockDecomposition bd;
  if (n == 0) return bd;
  if (n == 1) {
    bd.blocks.push_back({1});
    return bd;
  }

  // Iterative Hopcroft-Tarjan over an explicit edge stack.
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<std::size_t> next_child(n + 1, 0);
  std::vector<VertexId> parent(n + 1, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexId> call_stack;
  int timer = 0;

  auto pop_block = [&](VertexId u, VertexId w) {
    std::set<VertexId> block;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.u);
      block.insert(e.v);
      if ((e.u == u && e.v == w) || (e.u == w && e.v == u)) break;
    }
    bd.blocks.emplace_back(block.begin(), block.end());
  };

  call_stack.push_back(1);
  disc[1] = low[1] = ++timer;
  while (!call_stack.empty()) {
    VertexId u = call_stack.back();
    const auto& nb = g.neighbors(u);
    if (next_child[u] < nb.size()) {
      VertexId w = nb[next_child[u]++];
      if (disc[w] == 0) {
        parent[w] = u;
        disc[w] = low[w] = ++timer;
        edge_stack.push_back({u, w});
        call_stack.push_back(w);
      } else if (w != parent[u] && disc[w] < disc[u]) {
        edge_stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      call_stack.pop_back();
      VertexId p = parent[u];
      if (p != 0) {
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) pop_block(p, u);
      }
    }
  }

  std::sort(bd.blocks.begin(), bd.blocks.end());
  std::vector<int> count(n + 1, 0);
  for (const auto& b : bd.blocks) {
    for (VertexId v : b) ++count[v];
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (count[v] >= 2) bd.cut_vertices.push_back(v);
  }
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    for (VertexId v : bd.blocks[b]) {
      if (count[v] >= 2) bd.tree_edges.emplace_back(static_cast<int>(b), v);
    }
  }
  std::sort(bd.tree_edges.begin(), bd.tree_edges.end());
  return bd;
}

bool has_double_nonadjacent_common_neighbors(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      std::vector<VertexId> common;
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                            g.neighbors(v).begin(), g.neighbors(v).end(),
                            std::back_inserter(common));
      bool found = false;
      for (std::size_t i = 0; i < common.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace andgraph
