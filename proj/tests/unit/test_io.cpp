#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "graphs.hpp"
#include "outerstring/io.hpp"

using namespace outerstring;
using fixtures::pt;

TEST_SUITE("io") {
  TEST_CASE("points") {
    CHECK(point_from_json(Json::parse("[3, 4]")) == pt(3, 4));
    CHECK(point_from_json(Json::parse("[1, 2, 6, 4]")) == pt(1, 2, 3, 2));
    CHECK(point_from_json(Json::parse(R"(["123456789012345678901234567890", 1, 0, 1])")).x ==
          Rational(mpz_class("123456789012345678901234567890")));
    CHECK(point_to_json(pt(3, 4)) == Json::parse("[3, 4]"));
    CHECK(point_to_json(pt(1, 2, 3, 1)) == Json::parse("[1, 2, 3, 1]"));
    const Point big(Rational(mpz_class("99999999999999999999999")), Rational(1));
    CHECK(point_from_json(point_to_json(big)) == big);

    CHECK_THROWS_AS(point_from_json(Json::parse("[1]")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse("[1.5, 2]")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse("[1, 0, 2, 1]")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse(R"(["12x", 1])")), ParseError);
  }

  TEST_CASE("instances round trip") {
    const auto inst = lowerbound_instance_alpha(2, 2);
    const auto back = instance_from_json(instance_to_json(inst));
    REQUIRE(back.size() == inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
      CHECK(back.strings[i].id == inst.strings[i].id);
      CHECK(back.strings[i].vertices == inst.strings[i].vertices);
    }
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"strings": [{"vertices": [[0, 0], [1, 1]]}]})")), ParseError);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"lines": []})")), ParseError);
  }

  TEST_CASE("graphs and decompositions round trip") {
    const auto g = fixtures::petersen();
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 1]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": -1, "edges": []})")), ParseError);

    const auto td = treewidth_heuristic(g);
    const auto back = decomposition_from_json(decomposition_to_json(td));
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
    const auto j = decomposition_to_json(td);
    CHECK(j.contains("nodes"));
    CHECK(j.contains("treeEdges"));
    CHECK(j["bags"].contains("0"));
  }

  TEST_CASE("models and lists") {
    const auto inst = fixtures::load("triangle.json");
    const auto m = model_from_json(Json::parse(R"({"branchSets": [["a"], ["b", "c"]]})"), &inst);
    CHECK(m.branch_sets == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(model_from_json(Json::parse("[[0], [2]]")).branch_sets == std::vector<std::vector<int>>{{0}, {2}});
    CHECK(model_from_json(model_to_json(m)).branch_sets == m.branch_sets);
    CHECK_THROWS_AS(model_from_json(Json::parse(R"({"branchSets": [["zz"]]})"), &inst), ParseError);
    CHECK_THROWS_AS(model_from_json(Json::parse(R"({"branchSets": [["a"]]})")), ParseError);

    CHECK(lists_from_json(Json::parse(R"({"lists": [[1, 2], [3]]})")) == ColorLists{{1, 2}, {3}});
    CHECK(lists_from_json(Json::parse("[[1]]")) == ColorLists{{1}});
  }

  TEST_CASE("curves round trip") {
    const auto fam = circular_family(2, 4);
    const auto back = curves_from_json(curves_to_json(fam));
    REQUIRE(back.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CHECK(back[i].id == fam[i].id);
      CHECK(back[i].vertices == fam[i].vertices);
    }
  }

  TEST_CASE("solutions") {
    Solution s;
    s.kind = SolutionKind::VertexSet;
    s.vertices = {1, 3};
    const auto j = solution_to_json(s);
    CHECK(j["feasible"] == true);
    CHECK(j["vertices"] == Json::parse("[1, 3]"));
    CHECK(j["value"] == 2);
    const auto none = solution_to_json(infeasible());
    CHECK(none["feasible"] == false);
    CHECK_FALSE(none.contains("value"));
  }

  TEST_CASE("files") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
    const auto path = std::filesystem::temp_directory_path() / "outerstring_io_bad.json";
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(read_json_file(path.string()), ParseError);
    std::filesystem::remove(path);
  }
}
