#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "outerstring/geom.hpp"
#include "outerstring/graph.hpp"
#include "outerstring/minor.hpp"
#include "outerstring/minor_witness.hpp"
#include "outerstring/solvers.hpp"
#include "outerstring/treewidth.hpp"

namespace outerstring {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

// Integers may be JSON numbers or decimal strings (for values beyond 64 bits).
Rational rational_from_json(const Json& num, const Json& den);
// [x, y] or [x_num, x_den, y_num, y_den].
Point point_from_json(const Json& j);
Json point_to_json(const Point& p);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// {"nodes": [0, 1, ...], "treeEdges": [[a, b], ...], "bags": {"0": [...], ...}}
TreeDecomposition decomposition_from_json(const Json& j);
Json decomposition_to_json(const TreeDecomposition& td);

// {"branchSets": [[...], ...]}. Entries are vertex indices, or string ids
// when `inst` is given.
MinorModel model_from_json(const Json& j, const Instance* inst = nullptr);
Json model_to_json(const MinorModel& model);

// {"lists": [[1, 2], ...]} or a bare array of lists.
ColorLists lists_from_json(const Json& j);

std::vector<DoubleGroundedCurve> curves_from_json(const Json& j);
Json curves_to_json(const std::vector<DoubleGroundedCurve>& curves);

Json solution_to_json(const Solution& s);

}  // namespace outerstring
