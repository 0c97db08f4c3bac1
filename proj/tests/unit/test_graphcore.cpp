#include <doctest.h>

#include <algorithm>
#include <bit>

#include "graphs.hpp"
#include "outerstring/minor.hpp"
#include "outerstring/sparsity.hpp"

using namespace outerstring;

namespace {

bool brute_biclique(const Graph& g, int t) {
  const int n = g.vertex_count();
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != t) continue;
    int common = 0;
    for (int v = 0; v < n; ++v) {
      if (a & (1u << v)) continue;
      bool all = true;
      for (int u = 0; u < n && all; ++u) {
        if (a & (1u << u)) all = g.has_edge(u, v);
      }
      common += all;
    }
    if (common >= t) return true;
  }
  return false;
}

// Tries every assignment of vertices to h branch sets or to none.
bool brute_clique_minor(const Graph& g, int h) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  while (true) {
    MinorModel m;
    m.branch_sets.resize(static_cast<std::size_t>(h));
    for (int v = 0; v < n; ++v) {
      if (label[v] > 0) m.branch_sets[static_cast<std::size_t>(label[v] - 1)].push_back(v);
    }
    if (verify_minor_model(g, m)) return true;
    int i = 0;
    while (i < n && label[i] == h) label[i++] = 0;
    if (i == n) return false;
    ++label[i];
  }
}

}  // namespace

TEST_SUITE("graphcore") {
  TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.add_edge(2, 1));
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS(g.add_edge(3, 3));

    const auto sub = induced_subgraph(g, {2, 1, 1});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.original == std::vector<int>{1, 2});
    CHECK(sub.graph.has_edge(0, 1));

    const auto rest = remove_vertices(g, {1});
    CHECK(rest.graph.edge_count() == 0);
    CHECK(rest.original == std::vector<int>{0, 2, 3});

    CHECK(is_connected_subset(g, {0, 1, 2}));
    CHECK_FALSE(is_connected_subset(g, {0, 2}));
  }

  TEST_CASE("named graphs") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(path_graph(7).edge_count() == 6);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(grid_graph(3, 4).edge_count() == 17);
    CHECK(random_graph(12, 0.4, 5) == random_graph(12, 0.4, 5));
  }

  TEST_CASE("intersection graph") {
    const auto g = intersection_graph(fixtures::load("triangle.json"));
    CHECK(g == complete_graph(3));
    CHECK(g.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(intersection_graph(fixtures::load("single.json")).edge_count() == 0);
  }

  TEST_CASE("sparsity values match the oracle") {
    for (const auto& e : fixtures::expected_graphs()) {
      CAPTURE(e.name);
      const Graph g = e.make();
      CHECK(g.vertex_count() == e.n);
      CHECK(static_cast<int>(g.edge_count()) == e.m);
      CHECK(degeneracy(g).value == e.degeneracy);
      CHECK(arboricity(g) == e.arboricity);
      CHECK(arboricity_at_most(g, e.arboricity));
      CHECK_FALSE(arboricity_at_most(g, e.arboricity - 1));
      const auto b = find_biclique(g, 2);
      CHECK(b.has_value() == e.k22);
      if (b) CHECK(is_biclique(g, *b));
    }
  }

  TEST_CASE("folk graphs stay sparse") {
    for (int m = 1; m <= 6; ++m) {
      const auto g = fixtures::folk_graph(m);
      CHECK(arboricity(g) <= 2);
      CHECK(degeneracy(g).value <= 2);
    }
  }

  TEST_CASE("degeneracy order peels") {
    const auto g = fixtures::petersen();
    const auto d = degeneracy(g);
    auto order = d.order;
    std::sort(order.begin(), order.end());
    CHECK(order == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(k_core(g, 3).size() == 10);
    CHECK(k_core(g, 4).empty());
    CHECK(k_core(cycle_graph(5), 2).size() == 5);
    CHECK(k_core(path_graph(5), 2).empty());
  }

  TEST_CASE("biclique search agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto g = random_graph(10, 0.45, seed);
      for (int t = 1; t <= 3; ++t) {
        const auto b = find_biclique(g, t);
        CHECK(b.has_value() == brute_biclique(g, t));
        if (b) {
          CHECK(static_cast<int>(b->a.size()) == t);
          CHECK(is_biclique(g, *b));
        }
      }
    }
    CHECK(find_biclique(complete_bipartite(3, 3), 3).has_value());
    CHECK_FALSE(find_biclique(complete_bipartite(3, 3), 4).has_value());
  }

  TEST_CASE("clique minors") {
    CHECK(find_clique_minor(complete_graph(4), 4).has_value());
    CHECK_FALSE(find_clique_minor(path_graph(6), 3).has_value());
    CHECK(find_clique_minor(grid_graph(3, 3), 4).has_value());
    CHECK_FALSE(find_clique_minor(grid_graph(3, 3), 5).has_value());

    const auto p = fixtures::petersen();
    const auto k5 = find_clique_minor(p, 5);
    REQUIRE(k5.has_value());
    CHECK(verify_minor_model(p, *k5));
    CHECK_FALSE(find_clique_minor(p, 6).has_value());

    CHECK_THROWS_AS(find_clique_minor(grid_graph(5, 5), 4), SizeLimitExceeded);
  }

  TEST_CASE("clique minor search agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto g = random_graph(7, 0.35 + 0.01 * static_cast<double>(seed % 20), seed);
      for (int h = 4; h <= 5; ++h) {
        CAPTURE(seed);
        CAPTURE(h);
        const auto found = find_clique_minor(g, h);
        CHECK(found.has_value() == brute_clique_minor(g, h));
        if (found) CHECK(verify_minor_model(g, *found));
      }
    }
  }

  TEST_CASE("greedy minors are valid") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto g = random_graph(30, 0.2, seed);
      CHECK(verify_minor_model(g, greedy_clique_minor(g)));
    }
    CHECK(greedy_clique_minor(complete_graph(6)).size() == 6);
  }

  TEST_CASE("model verification") {
    const auto g = cycle_graph(6);
    CHECK(verify_minor_model(g, {{{0, 1}, {2, 3}, {4, 5}}}));
    CHECK_FALSE(verify_minor_model(g, {{{0, 2}, {1}, {3}}}));       // disconnected branch set
    CHECK_FALSE(verify_minor_model(g, {{{0, 1}, {1, 2}, {3}}}));    // overlap
    CHECK_FALSE(verify_minor_model(g, {{{0}, {2}, {4}}}));          // not adjacent
    CHECK_FALSE(verify_minor_model(g, {{{0}, {}}}));                // empty set
    CHECK_FALSE(verify_minor_model(g, {{{0}, {9}}}));               // no such vertex
  }

  TEST_CASE("folk contraction models") {
    for (int m = 1; m <= 5; ++m) {
      const auto inst = lowerbound_instance(m);
      const auto model = folk_contraction_model(inst);
      CHECK(model.size() == m);
      CHECK(verify_minor_model(intersection_graph(inst), model));
    }
  }
}
