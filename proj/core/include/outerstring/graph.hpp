#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

using Edge = std::pair<int, int>;

// Simple undirected graph with sorted adjacency lists. Vertex labels are
// optional and carried through induced subgraphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return m_; }

  // Returns false if the edge was already present. Self-loops throw.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<std::string> labels;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

struct Subgraph {
  Graph graph;
  std::vector<int> original;  // new vertex index -> vertex of the parent graph
};

// Subgraph induced by `keep` (any order; duplicates ignored). New indices
// follow the increasing order of the kept vertices.
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Subgraph induced by all vertices not in `removed`.
Subgraph remove_vertices(const Graph& g, const std::vector<int>& removed);

// Adjacency bitmasks; requires at most 64 vertices.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

bool is_connected_subset(const Graph& g, const std::vector<int>& vertices);

// Graph of `inst` with vertex i for string i and labels set to the ids.
// Throws DegenerateInput when the instance is not in general position.
Graph intersection_graph(const Instance& inst);

// Small named graphs used by tests, benchmarks and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph grid_graph(int rows, int cols);

// G(n, p) with a deterministic 64-bit seed.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace outerstring
