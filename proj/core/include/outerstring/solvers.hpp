#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outerstring/graph.hpp"
#include "outerstring/treewidth.hpp"

namespace outerstring {

enum class Problem {
  IndependentSet,
  VertexCover,
  DominatingSet,
  FeedbackVertexSet,
  Coloring,      // proper q-colouring, q = ProblemOptions::colors
  ListColoring,  // lists drawn from {1, 2, 3}
  InducedMatching,
  CyclePacking,
};

std::string to_string(Problem p);
// Accepts the names printed by to_string plus the short CLI spellings
// (independentset, vertexcover, dominatingset, fvs, coloring, list3coloring,
// inducedmatching, cyclepacking). Case-insensitive.
std::optional<Problem> parse_problem(const std::string& name);

using ColorLists = std::vector<std::vector<int>>;

struct ProblemOptions {
  int colors = 3;
  ColorLists lists;  // required for ListColoring, one list per vertex
  int width_cap = 12;
};

enum class SolutionKind { VertexSet, EdgeSet, CycleSet, Coloring, Infeasible };

struct Solution {
  SolutionKind kind = SolutionKind::Infeasible;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cycles;  // each cycle as a vertex sequence
  std::vector<int> colors;               // colour of each vertex, 1-based

  bool feasible() const { return kind != SolutionKind::Infeasible; }
  // Size of the payload: vertices, edges, cycles, or distinct colours used.
  int value() const;
};

Solution infeasible();

// Problem-specific certificate check. Optimality is not checked.
bool verify_solution(Problem p, const Graph& g, const Solution& s, const ProblemOptions& opts = {});

// Optimal solution by dynamic programming over a nice version of `td`.
// Throws WidthLimitExceeded when td is wider than opts.width_cap.
Solution solve_td(Problem p, const Graph& g, const TreeDecomposition& td, const ProblemOptions& opts = {});

// solve_td on the min-fill decomposition.
Solution solve(Problem p, const Graph& g, const ProblemOptions& opts = {});

// Exhaustive search. Size caps: 16 vertices for the subset problems and
// colourings, 12 for InducedMatching and CyclePacking.
Solution brute_force(Problem p, const Graph& g, const ProblemOptions& opts = {});

// Vertex cover of size <= k, or infeasible.
Solution vc_branch(const Graph& g, int k, const ProblemOptions& opts = {});

// Feedback vertex set of size <= k, or infeasible.
Solution fvs_branch(const Graph& g, int k, const ProblemOptions& opts = {});

// Maximum induced matching.
Solution induced_matching_branch(const Graph& g, const ProblemOptions& opts = {});

// List colouring with lists from {1, 2, 3}, or infeasible.
Solution list3_branch(const Graph& g, const ColorLists& lists, const ProblemOptions& opts = {});

struct CyclePackingResult {
  Solution solution;
  std::vector<std::vector<int>> stripped;  // short cycles removed first
  Graph remainder;
  std::vector<int> remainder_vertices;  // remainder index -> vertex of g
};

// Greedy removal of cycles of length <= 4 followed by an exact packing of
// the remainder.
CyclePackingResult cycle_packing_4approx(const Graph& g, const ProblemOptions& opts = {});

// Shortest cycle through any vertex with length <= max_len, or empty.
std::vector<int> short_cycle(const Graph& g, int max_len);

// Proper colouring with at most degeneracy + 1 colours (1-based).
std::vector<int> greedy_color(const Graph& g);

}  // namespace outerstring
