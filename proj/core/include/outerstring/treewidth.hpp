#pragma once

#include <string>
#include <utility>
#include <vector>

#include "outerstring/graph.hpp"

namespace outerstring {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<Edge> tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  // Largest bag size minus one; -1 for an empty decomposition.
  int width() const;
};

struct DecompositionCheck {
  bool valid = false;
  int width = -1;
  std::vector<std::string> violations;
};

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Decomposition induced by eliminating vertices in `order`; width equals the
// largest number of later neighbours at elimination time.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

// Min-fill elimination order; ties broken by the lowest vertex index.
std::vector<int> min_fill_order(const Graph& g);

TreeDecomposition treewidth_heuristic(const Graph& g);

struct TreewidthResult {
  int tw = -1;
  TreeDecomposition td;
};

inline constexpr int kDefaultTreewidthVertexCap = 25;

// Exact treewidth by dynamic programming over vertex subsets, pruned by the
// min-fill upper bound. Throws SizeLimitExceeded above `vertex_cap` (at most 64).
TreewidthResult treewidth_exact(const Graph& g, int vertex_cap = kDefaultTreewidthVertexCap);

}  // namespace outerstring
