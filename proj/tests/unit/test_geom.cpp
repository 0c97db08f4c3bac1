#include <doctest.h>

#include "fixtures.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/geom.hpp"

using namespace outerstring;
using fixtures::pt;
using fixtures::str;

TEST_SUITE("geom") {
  TEST_CASE("segment intersection kinds") {
    const auto x = segment_intersection({pt(0, 0), pt(2, 2)}, {pt(2, 0), pt(0, 2)});
    CHECK(x.kind == ContactKind::Proper);
    CHECK(*x.point == pt(1, 1));
    CHECK(x.ta == fixtures::q(1, 2));

    CHECK(segment_intersection({pt(0, 0), pt(1, 1)}, {pt(3, 0), pt(4, 1)}).kind == ContactKind::Empty);
    CHECK(segment_intersection({pt(0, 0), pt(2, 2)}, {pt(1, 1), pt(3, 1)}).kind == ContactKind::Degenerate);
    // Shared endpoint and collinear overlap are degenerate too.
    CHECK(segment_intersection({pt(0, 0), pt(2, 2)}, {pt(2, 2), pt(3, 0)}).kind == ContactKind::Degenerate);
    CHECK(segment_intersection({pt(0, 0), pt(2, 2)}, {pt(1, 1), pt(3, 3)}).kind == ContactKind::Degenerate);
    // Collinear but apart.
    CHECK(segment_intersection({pt(0, 0), pt(1, 1)}, {pt(2, 2), pt(3, 3)}).kind == ContactKind::Empty);
  }

  TEST_CASE("segment intersection is symmetric") {
    const std::vector<Segment> segs = {{pt(0, 0), pt(2, 2)}, {pt(2, 0), pt(0, 2)}, {pt(1, 1), pt(3, 1)},
                                       {pt(0, 1), pt(5, 1)}, {pt(1, 0), pt(1, 5)}, {pt(3, 3), pt(4, 0)}};
    for (const auto& a : segs) {
      for (const auto& b : segs) {
        const auto ab = segment_intersection(a, b);
        const auto ba = segment_intersection(b, a);
        CHECK(ab.kind == ba.kind);
        if (ab.kind == ContactKind::Proper) CHECK(*ab.point == *ba.point);
      }
    }
  }

  TEST_CASE("strings_intersect") {
    const auto a = str("a", {pt(0, 0), pt(2, 2)});
    const auto b = str("b", {pt(2, 0), pt(0, 2)});
    const auto r = strings_intersect(a, b);
    CHECK(r.intersects);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0] == pt(1, 1));

    // Two arms of different V-shapes that stay apart.
    CHECK_FALSE(strings_intersect(str("l", {pt(0, 0), pt(-4, 7)}), str("r", {pt(1, 0), pt(5, 7)})).intersects);

    // A zig-zag crossing y = x/2 twice, at (4/3, 2/3) and (5/2, 5/4).
    const auto line = str("line", {pt(0, 0), pt(4, 2)});
    const auto zig = str("zig", {pt(1, 0), pt(2, 2), pt(3, 1, 1, 2)});
    const auto two = strings_intersect(line, zig);
    REQUIRE(two.points.size() == 2);
    CHECK(two.points[0] == pt(4, 3, 2, 3));
    CHECK(two.points[1] == pt(5, 2, 5, 4));
    CHECK(strings_intersect(zig, line).points.size() == 2);

    CHECK_THROWS_AS(strings_intersect(a, str("t", {pt(3, 0), pt(1, 1)})), DegenerateContact);
  }

  TEST_CASE("general position violations") {
    Instance triple{{str("a", {pt(0, 0), pt(2, 2)}), str("b", {pt(2, 0), pt(0, 2)}), str("c", {pt(1, 0), pt(1, 2)})}};
    auto v = validate_general_position(triple);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::ConcurrentTriple);
    CHECK(v[0].ids.size() == 3);

    // b bends back at a point of a without crossing it.
    Instance touch{{str("a", {pt(0, 0), pt(3, 3)}), str("b", {pt(4, 0), pt(2, 2), pt(4, 3)})}};
    v = validate_general_position(touch);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::NonTransversal);

    Instance same_ground{{str("a", {pt(0, 0), pt(1, 1)}), str("b", {pt(0, 0), pt(-1, 1)})}};
    v = validate_general_position(same_ground);
    bool duplicate = false;
    for (const auto& x : v) duplicate = duplicate || x.kind == ViolationKind::DuplicateGroundX;
    CHECK(duplicate);

    Instance ground_touch{{str("a", {pt(0, 0), pt(1, 1), pt(2, 0), pt(3, 2)})}};
    v = validate_general_position(ground_touch);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].kind == ViolationKind::GroundTouch);

    Instance malformed{{str("a", {pt(0, 0)}), str("b", {pt(1, 1), pt(2, 2)})}};
    v = validate_general_position(malformed);
    CHECK(v.size() == 2);
    for (const auto& x : v) CHECK(x.kind == ViolationKind::MalformedString);

    Instance self_crossing{{str("a", {pt(0, 0), pt(4, 4), pt(4, 2), pt(1, 3)})}};
    CHECK(validate_general_position(self_crossing).size() == 1);

    Instance dup{{str("a", {pt(0, 0), pt(1, 1)}), str("a", {pt(5, 0), pt(6, 1)})}};
    v = validate_general_position(dup);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::DuplicateId);

    CHECK(validate_general_position(lowerbound_instance(3)).empty());
  }

  TEST_CASE("perturbed copies") {
    const auto s = str("s", {pt(0, 0), pt(2, 2)});
    auto one = perturb_copies(s, 1, fixtures::q(1, 10));
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices == s.vertices);

    auto two = perturb_copies(s, 2, fixtures::q(1, 10));
    REQUIRE(two.size() == 2);
    CHECK(two[0].id == "s");
    CHECK(two[1].id == "s~1");
    CHECK(strings_intersect(two[0], two[1]).intersects);

    auto four = perturb_copies(str("p", {pt(0, 0), pt(1, 3), pt(4, 5)}), 4, fixtures::q(1, 20));
    CHECK(validate_general_position(Instance{four}).empty());
    for (std::size_t i = 0; i < four.size(); ++i) {
      for (std::size_t j = i + 1; j < four.size(); ++j) CHECK(strings_intersect(four[i], four[j]).intersects);
    }

    // Copies that move across the neighbour change the intersection graph.
    Instance near{{str("a", {pt(0, 0), pt(1, 4)}), str("b", {pt(3, 0), pt(2, 4)})}};
    CHECK_THROWS_AS(perturb_copies(near, 0, 3, Rational(100)), EpsilonTooLarge);
    const auto ok = perturb_copies(near, 0, 3, fixtures::q(1, 100));
    for (const auto& c : ok) CHECK_FALSE(strings_intersect(c, near.strings[1]).intersects);

    CHECK_THROWS_AS(perturb_copies(s, 0, Rational(1)), std::invalid_argument);
  }

  TEST_CASE("feature gap") {
    Instance x{{str("a", {pt(0, 0), pt(2, 2)}), str("b", {pt(2, 0), pt(0, 2)})}};
    CHECK(feature_gap(x) == 1);
    CHECK(feature_gap(Instance{}) == 1);
  }
}
