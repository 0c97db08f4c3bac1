#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "outerstring/arrangement.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/crossing_level.hpp"

using namespace outerstring;
using fixtures::pt;

namespace {

std::vector<int> sorted_levels(const Arrangement& arr) { return fixtures::sorted(crossing_levels_exact(arr)); }

int count_of(const std::vector<int>& v, int x) { return static_cast<int>(std::count(v.begin(), v.end(), x)); }

// Checks shared by every arrangement we build.
void check_structure(const Arrangement& arr) {
  const auto nodes = static_cast<long>(arr.nodes().size());
  const auto arcs = static_cast<long>(arr.arcs().size());
  CHECK(nodes - arcs + arr.face_count() == 1);

  const auto exact = crossing_levels_exact(arr);
  const auto upper = crossing_levels_upper(arr);
  REQUIRE(exact.size() == static_cast<std::size_t>(arr.face_count()));
  for (int f = 0; f < arr.face_count(); ++f) {
    CHECK(exact[f] <= upper[f]);
    CHECK((exact[f] == 0) == arr.face_touches_ground(f));
    CHECK(arr.locate(arr.face_sample(f)) == f);
  }
  for (int f = 0; f < arr.face_count(); ++f) {
    for (const auto& [g, label] : arr.dual()[f]) CHECK(std::abs(exact[f] - exact[g]) <= 1);
  }
}

}  // namespace

TEST_SUITE("arrangement") {
  TEST_CASE("single string") {
    const auto arr = Arrangement::build(fixtures::load("single.json"));
    check_structure(arr);
    CHECK(arr.face_count() == 1);
    CHECK(max_crossing_level(arr).r == 0);
    CHECK(arr.crossing_count() == 0);
  }

  TEST_CASE("two crossing segments leave two grounded faces") {
    const auto arr = Arrangement::build(fixtures::load("x.json"));
    check_structure(arr);
    CHECK(arr.face_count() == 2);
    CHECK(arr.crossing_count() == 1);
    CHECK(sorted_levels(arr) == std::vector<int>{0, 0});
  }

  TEST_CASE("triangle encloses one face") {
    const auto arr = Arrangement::build(fixtures::load("triangle.json"));
    check_structure(arr);
    CHECK(arr.face_count() == 4);
    CHECK(arr.crossing_count() == 3);
    const auto levels = crossing_levels_exact(arr);
    CHECK(fixtures::sorted(levels) == std::vector<int>{0, 0, 0, 1});
    CHECK(point_level(arr, levels, fixtures::pt(2, 1, 3, 2)) == 1);
    // A point on string a, on the rim of the inner face, takes the lower side.
    CHECK(point_level(arr, levels, fixtures::pt(1, 1)) == 0);
    CHECK(crossing_levels_by_removal(arr) == levels);
  }

  TEST_CASE("double crossing: exact level beats crossing count") {
    const auto arr = Arrangement::build(fixtures::load("double_crossing.json"));
    check_structure(arr);
    CHECK(arr.face_count() == 8);
    const auto exact = crossing_levels_exact(arr);
    const auto upper = crossing_levels_upper(arr);
    CHECK(fixtures::sorted(exact) == std::vector<int>{0, 0, 1, 1, 1, 1, 1, 1});
    int gaps = 0;
    for (int f = 0; f < arr.face_count(); ++f) gaps += upper[f] != exact[f];
    CHECK(gaps == 1);
    CHECK(*std::max_element(upper.begin(), upper.end()) == 2);
    CHECK(crossing_levels_by_removal(arr) == exact);
  }

  TEST_CASE("random fixtures match the removal oracle") {
    const auto r6 = Arrangement::build(fixtures::load("random6.json"));
    check_structure(r6);
    CHECK(r6.face_count() == 14);
    auto l6 = crossing_levels_exact(r6);
    CHECK(count_of(l6, 0) == 6);
    CHECK(count_of(l6, 1) == 8);
    CHECK(crossing_levels_by_removal(r6) == l6);

    const auto r8 = Arrangement::build(fixtures::load("random8.json"));
    check_structure(r8);
    CHECK(r8.face_count() == 20);
    auto l8 = crossing_levels_exact(r8);
    CHECK(count_of(l8, 0) == 6);
    CHECK(count_of(l8, 1) == 12);
    CHECK(count_of(l8, 2) == 2);
    CHECK(crossing_levels_by_removal(r8) == l8);
    const auto u8 = crossing_levels_upper(r8);
    int gaps = 0;
    for (int f = 0; f < r8.face_count(); ++f) {
      if (u8[f] != l8[f]) {
        ++gaps;
        CHECK(u8[f] == 2);
        CHECK(l8[f] == 1);
      }
    }
    CHECK(gaps == 1);
  }

  TEST_CASE("folk instances") {
    const auto f1 = Arrangement::build(lowerbound_instance(1));
    CHECK(sorted_levels(f1) == std::vector<int>{0, 0});

    const auto f2 = Arrangement::build(lowerbound_instance(2));
    check_structure(f2);
    CHECK(f2.face_count() == 7);
    CHECK(count_of(crossing_levels_exact(f2), 1) == 1);
    CHECK(max_crossing_level(f2).r == 1);

    const auto f3 = Arrangement::build(lowerbound_instance(3));
    check_structure(f3);
    CHECK(f3.face_count() == 20);
    const auto l3 = crossing_levels_exact(f3);
    CHECK(count_of(l3, 0) == 14);
    CHECK(count_of(l3, 1) == 6);
  }

  TEST_CASE("curve arcs chain along each curve") {
    const auto arr = Arrangement::build(fixtures::load("random8.json"));
    for (int c = 0; c < arr.label_count(); ++c) {
      const auto& seq = arr.curve_arcs(c);
      REQUIRE_FALSE(seq.empty());
      CHECK(arr.nodes()[arr.arcs()[seq.front()].tail].p == arr.curves()[c].front());
      CHECK(arr.nodes()[arr.arcs()[seq.back()].head].p == arr.curves()[c].back());
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(arr.arcs()[seq[i]].head == arr.arcs()[seq[i + 1]].tail);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(arr.arcs()[seq[i]].label == c);
        CHECK(arr.arcs()[seq[i]].index_on_curve == static_cast<int>(i));
      }
    }
  }

  TEST_CASE("level regions nest") {
    for (int m = 2; m <= 5; ++m) {
      const auto arr = Arrangement::build(lowerbound_instance(m));
      const auto prof = level_regions(arr);
      REQUIRE(prof.regions.size() == static_cast<std::size_t>(prof.r + 1));
      for (int i = 1; i <= prof.r; ++i) {
        const auto& inner = prof.regions[i].faces;
        const auto& outer = prof.regions[i - 1].faces;
        for (int f : inner) CHECK(std::find(outer.begin(), outer.end(), f) != outer.end());
        CHECK(prof.regions[i].gamma.size() <= prof.regions[i - 1].gamma.size() + arr.label_count());
      }
      CHECK(std::find(prof.regions[prof.r].faces.begin(), prof.regions[prof.r].faces.end(), prof.witness) !=
            prof.regions[prof.r].faces.end());
    }
  }

  TEST_CASE("halving check on a synthetic profile") {
    LevelProfile prof;
    prof.r = 9;
    prof.regions.resize(10);
    const int sizes[] = {64, 40, 30, 20, 32, 20, 14, 10, 16, 11};
    for (int i = 0; i < 10; ++i) {
      prof.regions[i].level = i;
      prof.regions[i].gamma.resize(static_cast<std::size_t>(sizes[i]));
    }
    const auto checks = check_halving(prof, 1);
    REQUIRE(checks.size() == 6);
    CHECK(checks[0].i == 4);
    CHECK(checks[0].pass);       // 64 vs 32
    CHECK(checks[1].pass);       // 40 vs 20
    CHECK(checks[2].pass);       // 30 vs 14
    CHECK(checks[3].pass);       // 20 vs 10
    CHECK(checks[4].pass);       // 32 vs 16
    CHECK_FALSE(checks[5].pass); // 20 vs 11
    CHECK(checks[5].gamma_prev == 20);

    CHECK(check_halving(prof, 3).empty());
    CHECK(check_halving(prof, 0).size() == 6);
  }

  TEST_CASE("level bound") {
    CHECK(level_bound(2, 14) == 32);
    CHECK(level_bound(1, 1) == 4);
    CHECK(level_bound(1, 8) == 16);
  }

  TEST_CASE("removal oracle refuses large inputs") {
    const auto arr = Arrangement::build(lowerbound_instance(4));
    CHECK_THROWS_AS(crossing_levels_by_removal(arr, 10), SizeLimitExceeded);
  }

  TEST_CASE("degenerate input is rejected") {
    Instance bad{{fixtures::str("a", {pt(0, 0), pt(2, 2)}), fixtures::str("b", {pt(2, 0), pt(0, 2)}),
                  fixtures::str("c", {pt(1, 0), pt(1, 2)})}};
    CHECK_THROWS_AS(Arrangement::build(bad), DegenerateInput);
  }
}
