#include <doctest.h>

#include "graphs.hpp"
#include "outerstring/solvers.hpp"

using namespace outerstring;

namespace {

int optimum(Problem p, const fixtures::Expected& e) {
  switch (p) {
    case Problem::IndependentSet: return e.is;
    case Problem::VertexCover: return e.vc;
    case Problem::DominatingSet: return e.ds;
    case Problem::FeedbackVertexSet: return e.fvs;
    case Problem::InducedMatching: return e.im;
    case Problem::CyclePacking: return e.cp;
    default: return -1;
  }
}

const Problem kValued[] = {Problem::IndependentSet,    Problem::VertexCover,     Problem::DominatingSet,
                           Problem::FeedbackVertexSet, Problem::InducedMatching, Problem::CyclePacking};

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("problem names") {
    CHECK(parse_problem("fvs") == Problem::FeedbackVertexSet);
    CHECK(parse_problem("VertexCover") == Problem::VertexCover);
    CHECK(parse_problem("list3coloring") == Problem::ListColoring);
    CHECK_FALSE(parse_problem("hamiltonicity").has_value());
    for (Problem p : kValued) CHECK(parse_problem(to_string(p)) == p);
  }

  TEST_CASE("dynamic programming matches the oracle") {
    for (const auto& e : fixtures::expected_graphs()) {
      CAPTURE(e.name);
      const Graph g = e.make();
      for (Problem p : kValued) {
        CAPTURE(to_string(p));
        const auto s = solve(p, g);
        REQUIRE(s.feasible());
        CHECK(verify_solution(p, g, s));
        CHECK(s.value() == optimum(p, e));
      }
      // Colourings are supported up to three colours.
      for (int q = 1; q <= 3; ++q) {
        ProblemOptions opts;
        opts.colors = q;
        const auto col = solve(Problem::Coloring, g, opts);
        CHECK(col.feasible() == (q >= e.chromatic));
        if (col.feasible()) CHECK(verify_solution(Problem::Coloring, g, col, opts));
      }
    }
  }

  TEST_CASE("brute force matches the oracle") {
    for (const auto& e : fixtures::expected_graphs()) {
      CAPTURE(e.name);
      const Graph g = e.make();
      for (Problem p : kValued) CHECK(brute_force(p, g).value() == optimum(p, e));
    }
  }

  TEST_CASE("branching solvers") {
    const auto k33 = complete_bipartite(3, 3);
    CHECK(vc_branch(k33, 3).feasible());
    CHECK(verify_solution(Problem::VertexCover, k33, vc_branch(k33, 3)));
    CHECK_FALSE(vc_branch(k33, 2).feasible());

    const auto k4 = complete_graph(4);
    CHECK_FALSE(fvs_branch(k4, 1).feasible());
    const auto f = fvs_branch(k4, 2);
    REQUIRE(f.feasible());
    CHECK(verify_solution(Problem::FeedbackVertexSet, k4, f));

    const auto p = fixtures::petersen();
    CHECK(induced_matching_branch(p).value() == 3);
    CHECK(fvs_branch(p, 3).feasible());
    CHECK_FALSE(fvs_branch(p, 2).feasible());

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const auto g = random_graph(11, 0.3, seed);
      const int vc = brute_force(Problem::VertexCover, g).value();
      CHECK(vc_branch(g, vc).feasible());
      if (vc > 0) CHECK_FALSE(vc_branch(g, vc - 1).feasible());
      const int fvs = brute_force(Problem::FeedbackVertexSet, g).value();
      CHECK(fvs_branch(g, fvs).feasible());
      if (fvs > 0) CHECK_FALSE(fvs_branch(g, fvs - 1).feasible());
      CHECK(induced_matching_branch(g).value() == brute_force(Problem::InducedMatching, g).value());
    }
  }

  TEST_CASE("list colouring") {
    const auto c5 = cycle_graph(5);
    ProblemOptions opts;
    opts.lists = ColorLists(5, std::vector<int>{1, 2});
    CHECK_FALSE(solve(Problem::ListColoring, c5, opts).feasible());
    CHECK_FALSE(list3_branch(c5, opts.lists).feasible());

    opts.lists[2] = {3};
    const auto s = solve(Problem::ListColoring, c5, opts);
    REQUIRE(s.feasible());
    CHECK(verify_solution(Problem::ListColoring, c5, s, opts));
    CHECK(s.colors[2] == 3);
    const auto b = list3_branch(c5, opts.lists);
    REQUIRE(b.feasible());
    CHECK(verify_solution(Problem::ListColoring, c5, b, opts));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const auto g = random_graph(9, 0.35, seed);
      ProblemOptions lo;
      for (int v = 0; v < 9; ++v) {
        const int mask = 1 + static_cast<int>((seed * 7 + static_cast<std::uint64_t>(v) * 13) % 7);
        std::vector<int> list;
        for (int c = 1; c <= 3; ++c) {
          if (mask & (1 << (c - 1))) list.push_back(c);
        }
        lo.lists.push_back(list);
      }
      const bool feasible = brute_force(Problem::ListColoring, g, lo).feasible();
      CHECK(solve(Problem::ListColoring, g, lo).feasible() == feasible);
      CHECK(list3_branch(g, lo.lists).feasible() == feasible);
    }
  }

  TEST_CASE("colour count is limited to three") {
    ProblemOptions opts;
    opts.colors = 4;
    CHECK_THROWS_AS(solve(Problem::Coloring, complete_graph(4), opts), std::invalid_argument);
  }

  TEST_CASE("width cap") {
    ProblemOptions opts;
    opts.width_cap = 3;
    CHECK_THROWS_AS(solve(Problem::IndependentSet, complete_graph(6), opts), WidthLimitExceeded);
  }

  TEST_CASE("cycle packing approximation") {
    const auto t = fixtures::two_triangles();
    const auto r = cycle_packing_4approx(t);
    CHECK(r.solution.value() == 2);
    CHECK(verify_solution(Problem::CyclePacking, t, r.solution));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const auto g = random_graph(10, 0.3, seed);
      const auto a = cycle_packing_4approx(g);
      CHECK(verify_solution(Problem::CyclePacking, g, a.solution));
      CHECK(4 * a.solution.value() >= brute_force(Problem::CyclePacking, g).value());
      CHECK(short_cycle(a.remainder, 4).empty());
    }
  }

  TEST_CASE("helpers") {
    CHECK(short_cycle(path_graph(5), 4).empty());
    CHECK(short_cycle(cycle_graph(4), 4).size() == 4);
    CHECK(short_cycle(cycle_graph(5), 4).empty());
    CHECK(short_cycle(complete_graph(4), 4).size() == 3);

    const auto p = fixtures::petersen();
    const auto colors = greedy_color(p);
    Solution s;
    s.kind = SolutionKind::Coloring;
    s.colors = colors;
    ProblemOptions four;
    four.colors = 4;
    CHECK(verify_solution(Problem::Coloring, p, s, four));
  }

  TEST_CASE("certificates are checked") {
    const auto g = cycle_graph(4);
    Solution s;
    s.kind = SolutionKind::VertexSet;
    s.vertices = {0, 1};
    CHECK_FALSE(verify_solution(Problem::IndependentSet, g, s));
    CHECK_FALSE(verify_solution(Problem::VertexCover, g, s));
    s.vertices = {0, 2};
    CHECK(verify_solution(Problem::IndependentSet, g, s));
    CHECK(verify_solution(Problem::VertexCover, g, s));
    CHECK(verify_solution(Problem::DominatingSet, g, s));
  }
}
