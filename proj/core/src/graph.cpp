#include "outerstring/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace outerstring {

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(n)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop at " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  }
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  const auto& au = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

  Subgraph out{Graph(static_cast<int>(sorted.size())), sorted};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (int w : g.neighbors(sorted[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  }
  if (!g.labels.empty()) {
    for (int v : sorted) out.graph.labels.push_back(g.labels[static_cast<std::size_t>(v)]);
  }
  return out;
}

Subgraph remove_vertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw SizeLimitExceeded("adjacency_masks: more than 64 vertices");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.neighbors(v)) out[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  }
  return out;
}

bool is_connected_subset(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(in.size(), 0);
  std::vector<int> stack{vertices.front()};
  seen[static_cast<std::size_t>(vertices.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v)) {
      if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += c ? 1 : 0;
  return reached == distinct;
}

Graph intersection_graph(const Instance& inst) {
  const auto violations = validate_general_position(inst);
  if (!violations.empty()) {
    throw DegenerateInput("instance is not in general position: " + to_string(violations.front().kind) + " (" +
                          violations.front().detail + ")");
  }
  Graph g(static_cast<int>(inst.size()));
  for (const auto& s : inst.strings) g.labels.push_back(s.id);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      if (strings_intersect(inst.strings[i], inst.strings[j]).intersects) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace outerstring
