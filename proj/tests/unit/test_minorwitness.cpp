#include <doctest.h>

#include "graphs.hpp"
#include "outerstring/arrangement.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/crossing_level.hpp"
#include "outerstring/minor_witness.hpp"

using namespace outerstring;
using fixtures::pt;
using fixtures::str;

namespace {

// Four segments crossing pairwise: a K4 drawn with its ground points in
// order 0, 1, 2, 3.
Instance four_segments() {
  return Instance{{str("a", {pt(0, 0), pt(12, 12)}), str("b", {pt(3, 0), pt(10, 12)}),
                   str("c", {pt(6, 0), pt(7, 12)}), str("d", {pt(12, 0), pt(0, 12)})}};
}

}  // namespace

TEST_SUITE("minorwitness") {
  TEST_CASE("circular order") {
    std::vector<DoubleGroundedCurve> ok{{"g1", {pt(0, 0), pt(2, 3), pt(4, 0)}},
                                        {"g2", {pt(1, 0), pt(3, 3), pt(5, 0)}}};
    CHECK(is_circularly_ordered(ok));
    std::vector<DoubleGroundedCurve> nested{{"g1", {pt(0, 0), pt(3, 3), pt(5, 0)}},
                                            {"g2", {pt(1, 0), pt(2, 1), pt(4, 0)}}};
    CHECK_FALSE(is_circularly_ordered(nested));
    std::vector<DoubleGroundedCurve> apart{{"g1", {pt(0, 0), pt(1, 3), pt(2, 0)}},
                                           {"g2", {pt(3, 0), pt(4, 1), pt(5, 0)}}};
    CHECK_FALSE(is_circularly_ordered(apart));
  }

  TEST_CASE("curves from a K4 model interleave") {
    const auto inst = four_segments();
    REQUIRE(validate_general_position(inst).empty());
    REQUIRE(intersection_graph(inst) == complete_graph(4));
    const MinorModel model{{{0}, {1}, {2}, {3}}};
    const auto curves = extract_circular_curves(inst, model);
    REQUIRE(curves.size() == 2);
    CHECK(curves[0].start() == pt(0, 0));
    CHECK(curves[0].end() == pt(6, 0));
    CHECK(curves[1].start() == pt(3, 0));
    CHECK(curves[1].end() == pt(12, 0));
    CHECK(is_circularly_ordered(curves));
    CHECK(validate_curves(curve_points(curves), curve_ids(curves), true).empty());
  }

  TEST_CASE("bad models are rejected") {
    const auto inst = four_segments();
    CHECK_THROWS_AS(extract_circular_curves(inst, {{{0, 1}, {1}, {2}, {3}}}), NotAModel);
    CHECK_THROWS_AS(extract_circular_curves(inst, {{{0}, {1}, {2}}}), NotAModel);
  }

  TEST_CASE("witness from a folk model") {
    const auto inst = lowerbound_instance(3);
    const auto g = intersection_graph(inst);
    const auto model = find_clique_minor(g, 4);
    REQUIRE(model.has_value());
    const auto curves = extract_circular_curves(inst, *model);
    REQUIRE(curves.size() == 2);
    const auto w = find_witness_point(curves);
    CHECK(w.k == 1);
    CHECK(w.guaranteed == 0);
    CHECK(w.level >= 0);
    const auto check = check_dgcoc(inst, curves);
    CHECK(check.pass);
  }

  TEST_CASE("witness level on random families") {
    for (int k = 1; k <= 4; ++k) {
      for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        CAPTURE(k);
        CAPTURE(seed);
        const auto fam = circular_family(k, seed);
        const auto w = find_witness_point(fam);
        CHECK(w.k == k);
        CHECK(w.k_used == (k % 2 == 0 ? k : k - 1));
        CHECK(w.guaranteed == w.k_used / 2);
        CHECK(w.level >= w.guaranteed);

        const auto arr = Arrangement::build_curves(curve_points(fam), curve_ids(fam), true);
        CHECK(point_level(arr, crossing_levels_exact(arr), w.p) == w.level);
        if (k % 2 == 0) {
          CHECK_FALSE(w.trace1.empty());
          CHECK_FALSE(w.trace2.empty());
        }
      }
    }
  }

  TEST_CASE("precondition") {
    std::vector<DoubleGroundedCurve> nested{{"g1", {pt(0, 0), pt(3, 3), pt(5, 0)}},
                                            {"g2", {pt(1, 0), pt(2, 1), pt(4, 0)}}};
    CHECK_THROWS_AS(find_witness_point(nested), PreconditionViolated);
  }

  TEST_CASE("curves realised inside split instances") {
    for (int k = 1; k <= 3; ++k) {
      const auto fam = circular_family(k, 11);
      const auto inst = instance_from_family(fam);
      std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
      for (int i = 0; i < 2 * k; ++i) pairs.push_back({{2 * i}, {2 * i + 1}});
      const auto curves = realize_double_grounded(inst, pairs);
      REQUIRE(curves.size() == static_cast<std::size_t>(2 * k));
      CHECK(is_circularly_ordered(curves));
      const auto check = check_dgcoc(inst, curves);
      CHECK(check.pass);
      CHECK(check.instance_level >= check.family_level);
    }
  }

  TEST_CASE("disconnected pair") {
    const Instance inst{{str("a", {pt(0, 0), pt(1, 1)}), str("b", {pt(5, 0), pt(6, 1)})}};
    CHECK_THROWS_AS(realize_double_grounded(inst, {{{0}, {1}}}), DisconnectedPair);
  }
}
