#pragma once

#include "fixtures.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/graph.hpp"

namespace fixtures {

inline outerstring::Graph petersen() {
  outerstring::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline outerstring::Graph two_triangles() {
  return outerstring::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline outerstring::Graph folk_graph(int m) {
  return outerstring::intersection_graph(outerstring::lowerbound_instance(m));
}

inline outerstring::Graph random8_graph() { return outerstring::intersection_graph(load("random8.json")); }

// Reference values from the brute-force oracle.
struct Expected {
  const char* name;
  outerstring::Graph (*make)();
  int n, m, degeneracy, arboricity;
  bool k22;
  int tw, is, vc, ds, fvs, chromatic, im, cp;
};

inline const std::vector<Expected>& expected_graphs() {
  using namespace outerstring;
  static const std::vector<Expected> table = {
      {"petersen", &petersen, 10, 15, 3, 2, false, 4, 4, 6, 3, 3, 3, 3, 2},
      {"grid3x3", [] { return grid_graph(3, 3); }, 9, 12, 2, 2, true, 3, 5, 4, 3, 2, 2, 2, 1},
      {"k5", [] { return complete_graph(5); }, 5, 10, 4, 3, true, 4, 1, 4, 1, 3, 5, 1, 1},
      {"k33", [] { return complete_bipartite(3, 3); }, 6, 9, 3, 2, true, 3, 3, 3, 2, 2, 2, 1, 1},
      {"c5", [] { return cycle_graph(5); }, 5, 5, 2, 2, false, 2, 2, 3, 2, 1, 3, 1, 1},
      {"two_triangles", &two_triangles, 6, 6, 2, 2, false, 2, 2, 4, 2, 2, 3, 2, 2},
      {"k4", [] { return complete_graph(4); }, 4, 6, 3, 2, true, 3, 1, 3, 1, 2, 4, 1, 1},
      {"folk2", [] { return folk_graph(2); }, 6, 6, 2, 2, true, 2, 3, 3, 2, 1, 2, 1, 1},
      {"random8", &random8_graph, 8, 10, 3, 3, true, 3, 5, 3, 3, 2, 4, 1, 1},
  };
  return table;
}

}  // namespace fixtures
