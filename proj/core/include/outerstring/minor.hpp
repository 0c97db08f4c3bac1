#pragma once

#include <optional>
#include <vector>

#include "outerstring/graph.hpp"

namespace outerstring {

// Branch set i is the set of graph vertices contracted onto clique vertex i.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;

  int size() const { return static_cast<int>(branch_sets.size()); }
};

// Disjoint, nonempty, connected, pairwise adjacent.
bool verify_minor_model(const Graph& g, const MinorModel& model);

inline constexpr int kDefaultMinorVertexCap = 20;

// Exact search for a K_h minor. Throws SizeLimitExceeded when the graph has
// more than `vertex_cap` vertices (the cap itself may not exceed 32).
std::optional<MinorModel> find_clique_minor(const Graph& g, int h, int vertex_cap = kDefaultMinorVertexCap);

// Contraction heuristic with no size limit: repeatedly contracts a
// minimum-degree vertex into a neighbour until the remainder is complete.
// The result is always a valid model, but not necessarily the largest.
MinorModel greedy_clique_minor(const Graph& g);

}  // namespace outerstring
