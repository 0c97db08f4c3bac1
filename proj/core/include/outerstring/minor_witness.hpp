#pragma once

#include <string>
#include <utility>
#include <vector>

#include "outerstring/arrangement.hpp"
#include "outerstring/geom.hpp"
#include "outerstring/minor.hpp"

namespace outerstring {

// A simple polyline from the ground point x (first vertex) to the ground
// point y (last vertex), otherwise strictly above the ground.
struct DoubleGroundedCurve {
  std::string id;
  std::vector<Point> vertices;

  const Point& start() const { return vertices.front(); }
  const Point& end() const { return vertices.back(); }
};

std::vector<std::vector<Point>> curve_points(const std::vector<DoubleGroundedCurve>& curves);
std::vector<std::string> curve_ids(const std::vector<DoubleGroundedCurve>& curves);

// Start points in increasing x, all before the end points, which are also
// increasing in x in the same index order.
bool is_circularly_ordered(const std::vector<DoubleGroundedCurve>& curves);

// Curves drawn inside unions of strings: curve i runs from the ground point
// of pairs[i].first to that of pairs[i].second through the strings of both
// sets. A set's ground point is that of its lexicographically smallest id.
// Throws DisconnectedPair when the union is not connected.
std::vector<DoubleGroundedCurve> realize_double_grounded(
    const Instance& inst, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs);

// From a model of K_{4k} whose branch sets are string indices: sort branch
// sets by ground point and pair the i-th with the (i+2k)-th. Throws
// NotAModel or DisconnectedPair.
std::vector<DoubleGroundedCurve> extract_circular_curves(const Instance& inst, const MinorModel& model);

struct WitnessResult {
  Point p;
  int k = 0;           // half the number of input curves
  int k_used = 0;      // after dropping a pair when k is odd
  int guaranteed = 0;  // k_used / 2
  int level = 0;       // exact crossing-level of p among all input curves
  std::vector<int> trace1;  // arcs of the first traversal (in its own arrangement)
  std::vector<int> trace2;
};

// Throws PreconditionViolated if the curves are not circularly ordered, and
// TraversalStuck if a traversal invariant fails.
WitnessResult find_witness_point(const std::vector<DoubleGroundedCurve>& curves);

struct DgcocCheck {
  int instance_level = 0;
  int family_level = 0;
  bool pass = false;
};

DgcocCheck check_dgcoc(const Instance& inst, const std::vector<DoubleGroundedCurve>& curves);

}  // namespace outerstring
