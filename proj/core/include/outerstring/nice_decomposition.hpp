#pragma once

#include <vector>

#include "outerstring/graph.hpp"
#include "outerstring/treewidth.hpp"

namespace outerstring {

enum class NiceKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<int> bag;  // sorted
  int vertex = -1;       // introduced or forgotten vertex
  Edge edge{-1, -1};     // introduced edge
  std::vector<int> children;
};

// Rooted nice decomposition with introduce-edge nodes. Leaves and the root
// have empty bags; every edge of the graph is introduced exactly once, just
// below the first forget of one of its endpoints; join nodes are binary.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
};

// Throws std::invalid_argument if `td` is not a valid decomposition of `g`.
NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

}  // namespace outerstring
