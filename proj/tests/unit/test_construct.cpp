#include <doctest.h>

#include "graphs.hpp"
#include "outerstring/arrangement.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/crossing_level.hpp"
#include "outerstring/sparsity.hpp"

using namespace outerstring;
using fixtures::pt;

TEST_SUITE("construct") {
  TEST_CASE("folk layout") {
    const auto f = folk(Rational(4), 2, Rational(0));
    REQUIRE(f.size() == 4);
    CHECK(f[0].id == "F.1L");
    CHECK(f[1].id == "F.1R");
    CHECK(f[0].ground_point() == pt(21, 10, 0, 1));
    CHECK(f[1].ground_point() == pt(19, 10, 0, 1));
    CHECK(f[2].ground_point() == pt(61, 10, 0, 1));
    // The two arms of one V cross; arms of different Vs meet only at the top.
    CHECK(strings_intersect(f[0], f[1]).intersects);
    CHECK(strings_intersect(f[1], f[2]).intersects);
    CHECK_FALSE(strings_intersect(f[0], f[2]).intersects);
    CHECK_FALSE(strings_intersect(f[0], f[3]).intersects);

    const auto shifted = folk(Rational(2), 1, Rational(10), "G");
    CHECK(shifted[0].id == "G.1L");
    CHECK(shifted[0].ground_point() == pt(111, 10, 0, 1));

    CHECK_THROWS_AS(folk(Rational(0), 1, Rational(0)), PreconditionViolated);
  }

  TEST_CASE("lower-bound instances") {
    for (int m = 1; m <= 8; ++m) {
      CAPTURE(m);
      const auto inst = lowerbound_instance(m);
      CHECK(inst.size() == static_cast<std::size_t>(2 * ((1 << m) - 1)));
      CHECK(validate_general_position(inst).empty());
      for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.size(); ++j) {
          CHECK(strings_intersect(inst.strings[i], inst.strings[j]).points.size() <= 1);
        }
      }
      const auto g = intersection_graph(inst);
      CHECK(degeneracy(g).value <= 2);
    }
    CHECK_THROWS_AS(lowerbound_instance(0), PreconditionViolated);
    CHECK_THROWS_AS(lowerbound_instance(21), SizeLimitExceeded);
  }

  TEST_CASE("crossing level grows with m") {
    const int expected[] = {0, 1, 1, 2, 2, 3};
    for (int m = 1; m <= 6; ++m) {
      CHECK(max_crossing_level(Arrangement::build(lowerbound_instance(m))).r == expected[m - 1]);
    }
  }

  TEST_CASE("alpha copies") {
    for (int m = 2; m <= 3; ++m) {
      for (int alpha = 2; alpha <= 3; ++alpha) {
        CAPTURE(m);
        CAPTURE(alpha);
        const auto inst = lowerbound_instance_alpha(m, alpha);
        CHECK(inst.size() == static_cast<std::size_t>(alpha * 2 * ((1 << m) - 1)));
        CHECK(validate_general_position(inst).empty());
        const auto g = intersection_graph(inst);
        const auto model = folk_contraction_model(inst);
        CHECK(model.size() == alpha * m);
        CHECK(verify_minor_model(g, model));
        CHECK(arboricity(g) <= 4 * alpha);
      }
    }
    CHECK(lowerbound_instance_alpha(3, 1).size() == lowerbound_instance(3).size());
    CHECK_THROWS_AS(lowerbound_instance_alpha(2, 0), PreconditionViolated);
  }

  TEST_CASE("random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto a = random_instance(12, 3, seed);
      const auto b = random_instance(12, 3, seed);
      REQUIRE(a.size() == 12);
      CHECK(validate_general_position(a).empty());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.strings[i].id == "s" + std::to_string(i + 1));
        CHECK(a.strings[i].vertices == b.strings[i].vertices);
        CHECK(a.strings[i].vertices.size() <= 5);
        for (const auto& v : a.strings[i].vertices) CHECK(v.x.get_den() == 1);
      }
    }
    CHECK(random_instance(5, 0, 3).strings[0].vertices.size() == 2);
  }

  TEST_CASE("circular families") {
    for (int k = 1; k <= 4; ++k) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto fam = circular_family(k, seed);
        REQUIRE(fam.size() == static_cast<std::size_t>(2 * k));
        CHECK(is_circularly_ordered(fam));
        CHECK(validate_curves(curve_points(fam), curve_ids(fam), true).empty());
        for (std::size_t i = 0; i < fam.size(); ++i) {
          for (std::size_t j = 0; j < fam.size(); ++j) {
            if (i != j) CHECK(polyline_crossings(fam[i].vertices, fam[j].vertices).size() % 2 == 1);
          }
        }
      }
    }
  }

  TEST_CASE("split instances") {
    const auto fam = circular_family(3, 7);
    const auto inst = instance_from_family(fam);
    REQUIRE(inst.size() == 12);
    CHECK(validate_general_position(inst).empty());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CHECK(inst.strings[2 * i].ground_point() == fam[i].start());
      CHECK(inst.strings[2 * i + 1].ground_point() == fam[i].end());
      CHECK(strings_intersect(inst.strings[2 * i], inst.strings[2 * i + 1]).intersects);
    }
  }
}
