#include <doctest.h>

#include <functional>
#include <set>

#include "graphs.hpp"
#include "outerstring/nice_decomposition.hpp"
#include "outerstring/treewidth.hpp"

using namespace outerstring;

TEST_SUITE("treewidth") {
  TEST_CASE("exact treewidth matches the oracle") {
    for (const auto& e : fixtures::expected_graphs()) {
      CAPTURE(e.name);
      const Graph g = e.make();
      const auto r = treewidth_exact(g);
      CHECK(r.tw == e.tw);
      const auto check = validate_decomposition(g, r.td);
      CHECK(check.valid);
      CHECK(check.width == e.tw);
      CHECK(treewidth_heuristic(g).width() >= e.tw);
    }
  }

  TEST_CASE("small families") {
    CHECK(treewidth_exact(path_graph(8)).tw == 1);
    CHECK(treewidth_exact(cycle_graph(8)).tw == 2);
    CHECK(treewidth_exact(complete_graph(7)).tw == 6);
    CHECK(treewidth_exact(grid_graph(4, 4)).tw == 4);
    CHECK(treewidth_exact(Graph(3)).tw == 0);
    for (int m = 2; m <= 4; ++m) CHECK(treewidth_exact(fixtures::folk_graph(m), 32).tw == m);
  }

  TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(treewidth_exact(grid_graph(6, 6)), SizeLimitExceeded);
    CHECK(treewidth_exact(grid_graph(5, 5)).tw == 5);
  }

  TEST_CASE("heuristic decompositions are valid") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto g = random_graph(40, 0.1, seed);
      const auto td = treewidth_heuristic(g);
      CHECK(validate_decomposition(g, td).valid);
      const auto order = min_fill_order(g);
      CHECK(order.size() == 40);
      CHECK(decomposition_from_order(g, order).width() == td.width());
    }
  }

  TEST_CASE("validation finds problems") {
    const auto g = cycle_graph(4);
    TreeDecomposition missing_edge{{{0, 1, 2}, {2, 3}}, {{0, 1}}};
    CHECK_FALSE(validate_decomposition(g, missing_edge).valid);

    TreeDecomposition split_vertex{{{0, 1, 3}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    const auto c = validate_decomposition(g, split_vertex);
    CHECK_FALSE(c.valid);
    CHECK_FALSE(c.violations.empty());

    TreeDecomposition cyclic{{{0, 1, 2}, {0, 2, 3}, {0, 2}}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK_FALSE(validate_decomposition(g, cyclic).valid);

    TreeDecomposition good{{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}};
    CHECK(validate_decomposition(g, good).valid);
    CHECK(good.width() == 2);
  }

  TEST_CASE("nice decompositions") {
    for (const auto& e : fixtures::expected_graphs()) {
      CAPTURE(e.name);
      const Graph g = e.make();
      const auto td = treewidth_exact(g).td;
      const auto nice = make_nice(g, td);
      CHECK(nice.width() == td.width());
      REQUIRE(nice.root >= 0);
      CHECK(nice.nodes[nice.root].bag.empty());

      std::multiset<Edge> introduced;
      std::multiset<int> forgotten;
      for (const auto& node : nice.nodes) {
        switch (node.kind) {
          case NiceKind::Leaf:
            CHECK(node.bag.empty());
            CHECK(node.children.empty());
            break;
          case NiceKind::IntroduceVertex: {
            REQUIRE(node.children.size() == 1);
            auto child = nice.nodes[node.children[0]].bag;
            child.insert(std::lower_bound(child.begin(), child.end(), node.vertex), node.vertex);
            CHECK(child == node.bag);
            break;
          }
          case NiceKind::Forget: {
            REQUIRE(node.children.size() == 1);
            auto bag = node.bag;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), node.vertex), node.vertex);
            CHECK(bag == nice.nodes[node.children[0]].bag);
            forgotten.insert(node.vertex);
            break;
          }
          case NiceKind::IntroduceEdge:
            REQUIRE(node.children.size() == 1);
            CHECK(nice.nodes[node.children[0]].bag == node.bag);
            CHECK(g.has_edge(node.edge.first, node.edge.second));
            introduced.insert(std::minmax(node.edge.first, node.edge.second));
            break;
          case NiceKind::Join:
            REQUIRE(node.children.size() == 2);
            CHECK(nice.nodes[node.children[0]].bag == node.bag);
            CHECK(nice.nodes[node.children[1]].bag == node.bag);
            break;
        }
      }
      const auto edges = g.edges();
      CHECK(introduced == std::multiset<Edge>(edges.begin(), edges.end()));
      CHECK(forgotten.size() == static_cast<std::size_t>(g.vertex_count()));
      CHECK(std::set<int>(forgotten.begin(), forgotten.end()).size() == forgotten.size());
    }
    TreeDecomposition bad{{{0, 1}}, {}};
    CHECK_THROWS_AS(make_nice(cycle_graph(4), bad), std::invalid_argument);
  }
}
