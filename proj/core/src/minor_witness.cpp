#include "outerstring/minor_witness.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "outerstring/crossing_level.hpp"
#include "outerstring/graph.hpp"

namespace outerstring {

std::vector<std::vector<Point>> curve_points(const std::vector<DoubleGroundedCurve>& curves) {
  std::vector<std::vector<Point>> out;
  for (const auto& c : curves) out.push_back(c.vertices);
  return out;
}

std::vector<std::string> curve_ids(const std::vector<DoubleGroundedCurve>& curves) {
  std::vector<std::string> out;
  for (const auto& c : curves) out.push_back(c.id);
  return out;
}

bool is_circularly_ordered(const std::vector<DoubleGroundedCurve>& curves) {
  for (const auto& c : curves) {
    if (c.vertices.size() < 2 || c.start().y != 0 || c.end().y != 0) return false;
  }
  for (std::size_t i = 0; i + 1 < curves.size(); ++i) {
    if (!(curves[i].start().x < curves[i + 1].start().x)) return false;
    if (!(curves[i].end().x < curves[i + 1].end().x)) return false;
  }
  return curves.empty() || curves.back().start().x < curves.front().end().x;
}

namespace {

int ground_string(const Instance& inst, const std::vector<int>& set) {
  int best = -1;
  for (int s : set) {
    if (best < 0 || inst.strings[static_cast<std::size_t>(s)].id < inst.strings[static_cast<std::size_t>(best)].id) best = s;
  }
  return best;
}

// Shortest (fewest pieces) path between two ground points inside the union
// of the given strings.
std::vector<Point> path_in_union(const Instance& inst, const std::vector<int>& strings, int from, int to) {
  std::map<Point, int> index;
  std::vector<Point> points;
  std::vector<std::set<int>> adj;
  auto node = [&](const Point& p) {
    auto [it, fresh] = index.emplace(p, static_cast<int>(points.size()));
    if (fresh) {
      points.push_back(p);
      adj.emplace_back();
    }
    return it->second;
  };
  for (int s : strings) {
    const auto& v = inst.strings[static_cast<std::size_t>(s)].vertices;
    std::vector<std::pair<std::pair<std::size_t, Rational>, Point>> marks;
    for (int t : strings) {
      if (t == s) continue;
      for (auto& c : polyline_crossings(v, inst.strings[static_cast<std::size_t>(t)].vertices)) {
        marks.push_back({{c.segA, c.tA}, c.point});
      }
    }
    std::sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> seq;
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      seq.push_back(node(v[i]));
      while (k < marks.size() && marks[k].first.first == i) seq.push_back(node(marks[k++].second));
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      adj[static_cast<std::size_t>(seq[i])].insert(seq[i + 1]);
      adj[static_cast<std::size_t>(seq[i + 1])].insert(seq[i]);
    }
  }
  const int source = node(inst.strings[static_cast<std::size_t>(from)].ground_point());
  const int target = node(inst.strings[static_cast<std::size_t>(to)].ground_point());
  std::vector<int> parent(points.size(), -1);
  std::vector<char> seen(points.size(), 0);
  std::queue<int> q;
  q.push(source);
  seen[static_cast<std::size_t>(source)] = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == target) break;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(target)]) return {};
  std::vector<Point> path;
  for (int x = target; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(points[static_cast<std::size_t>(x)]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<DoubleGroundedCurve> realize_double_grounded(
    const Instance& inst, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  std::vector<DoubleGroundedCurve> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [left, right] = pairs[i];
    if (left.empty() || right.empty()) throw NotAModel("realize_double_grounded: empty string set");
    const int from = ground_string(inst, left);
    const int to = ground_string(inst, right);
    std::vector<int> all = left;
    all.insert(all.end(), right.begin(), right.end());
    std::vector<Point> path = path_in_union(inst, all, from, to);
    if (path.empty()) {
      throw DisconnectedPair("realize_double_grounded: strings of pair " + std::to_string(i) + " are not connected");
    }
    out.push_back({"g" + std::to_string(i + 1), std::move(path)});
  }
  return out;
}

std::vector<DoubleGroundedCurve> extract_circular_curves(const Instance& inst, const MinorModel& model) {
  const Graph g = intersection_graph(inst);
  if (!verify_minor_model(g, model)) throw NotAModel("extract_circular_curves: not a valid clique minor model");
  if (model.size() < 4 || model.size() % 4 != 0) {
    throw NotAModel("extract_circular_curves: model size " + std::to_string(model.size()) + " is not a positive multiple of 4");
  }
  std::vector<std::pair<Rational, int>> order;
  for (int i = 0; i < model.size(); ++i) {
    const int s = ground_string(inst, model.branch_sets[static_cast<std::size_t>(i)]);
    order.push_back({inst.strings[static_cast<std::size_t>(s)].ground_point().x, i});
  }
  std::sort(order.begin(), order.end());
  const std::size_t half = order.size() / 2;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (std::size_t i = 0; i < half; ++i) {
    pairs.push_back({model.branch_sets[static_cast<std::size_t>(order[i].second)],
                     model.branch_sets[static_cast<std::size_t>(order[i + half].second)]});
  }
  return realize_double_grounded(inst, pairs);
}

namespace {

// Closed region between a curve and the ground segment joining its ends.
bool in_closed_region(const std::vector<Point>& curve, const Point& p) {
  const std::size_t n = curve.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = curve[i];
    const Point& b = curve[(i + 1) % n];
    if (on_segment(a, b, p)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational lhs = (p.x - a.x) * (b.y - a.y);
      const Rational rhs = (b.x - a.x) * (p.y - a.y);
      if ((b.y > a.y) ? rhs > lhs : rhs < lhs) inside = !inside;
    }
  }
  return inside;
}

// Follows the curve starting at `start`, switching to the crossing curve's
// forward direction at every crossing, until a ground point is reached.
std::vector<int> trace(const Arrangement& arr, int start, int expected_depth) {
  const auto& arcs = arr.arcs();
  std::vector<int> out;
  std::set<int> visited;
  int arc = arr.curve_arcs(start).front();
  while (true) {
    if (!visited.insert(arc).second) throw TraversalStuck("traversal revisits arc " + std::to_string(arc));
    out.push_back(arc);
    const Arc& a = arcs[static_cast<std::size_t>(arc)];
    const Point mid = Rational(1, 2) * (arr.nodes()[static_cast<std::size_t>(a.tail)].p + arr.nodes()[static_cast<std::size_t>(a.head)].p);
    int depth = 0;
    for (const auto& c : arr.curves()) depth += in_closed_region(c, mid) ? 1 : 0;
    if (depth != expected_depth) {
      throw TraversalStuck("arc " + std::to_string(arc) + " lies in " + std::to_string(depth) + " regions, expected " +
                           std::to_string(expected_depth));
    }
    const ArrNode& head = arr.nodes()[static_cast<std::size_t>(a.head)];
    if (head.kind == NodeKind::Ground) return out;
    int curve = a.label;
    if (head.kind == NodeKind::Crossing) {
      curve = head.labels[0] == a.label ? head.labels[1] : head.labels[0];
    }
    int next = -1;
    for (int b : arr.curve_arcs(curve)) {
      if (arcs[static_cast<std::size_t>(b)].tail == a.head) {
        next = b;
        break;
      }
    }
    if (next < 0) throw TraversalStuck("no outgoing arc at node " + std::to_string(a.head));
    arc = next;
  }
}

std::vector<Point> trace_polyline(const Arrangement& arr, const std::vector<int>& arcs) {
  std::vector<Point> out;
  for (int a : arcs) {
    const Arc& arc = arr.arcs()[static_cast<std::size_t>(a)];
    if (out.empty()) out.push_back(arr.nodes()[static_cast<std::size_t>(arc.tail)].p);
    out.push_back(arr.nodes()[static_cast<std::size_t>(arc.head)].p);
  }
  return out;
}

Point direction_at(const std::vector<Point>& curve, const Point& p) {
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (on_segment(curve[i], curve[i + 1], p)) return curve[i + 1] - curve[i];
  }
  throw TraversalStuck("crossing point not on curve");
}

// Point just beside p in direction d: the segment from p to it meets no
// curve except at p itself, so it lies in the face of that sector.
Point step_into_face(const Arrangement& full, const Point& p, const Point& d) {
  Rational t(1, 4);
  for (int iter = 0; iter < 256; ++iter, t /= 2) {
    const Point q = p + t * d;
    bool clear = true;
    for (const auto& curve : full.curves()) {
      for (std::size_t i = 0; i + 1 < curve.size() && clear; ++i) {
        if (on_segment(curve[i], curve[i + 1], p)) continue;
        clear = segment_intersection(Segment{p, q}, Segment{curve[i], curve[i + 1]}).kind == ContactKind::Empty;
      }
      if (!clear) break;
    }
    if (clear && full.locate(q) >= 0) return q;
  }
  throw TraversalStuck("could not step off the crossing point");
}

}  // namespace

WitnessResult find_witness_point(const std::vector<DoubleGroundedCurve>& curves) {
  if (curves.empty() || curves.size() % 2 != 0) {
    throw PreconditionViolated("find_witness_point: need a positive even number of curves");
  }
  if (!is_circularly_ordered(curves)) throw PreconditionViolated("find_witness_point: curves are not circularly ordered");

  WitnessResult out;
  out.k = static_cast<int>(curves.size()) / 2;
  const Arrangement full = Arrangement::build_curves(curve_points(curves), curve_ids(curves), true);
  const std::vector<int> full_levels = crossing_levels_exact(full);

  std::vector<DoubleGroundedCurve> used = curves;
  if (out.k % 2 == 1) {
    // Drop gamma_k and gamma_2k.
    used.erase(used.begin() + 2 * out.k - 1);
    used.erase(used.begin() + out.k - 1);
  }
  out.k_used = static_cast<int>(used.size()) / 2;
  out.guaranteed = out.k_used / 2;

  if (out.k_used == 0) {
    // Nothing to guarantee: any face interior point will do.
    out.p = full.face_sample(0);
    out.level = point_level(full, full_levels, out.p);
    return out;
  }

  const std::size_t k = static_cast<std::size_t>(out.k_used);
  const std::vector<DoubleGroundedCurve> h1(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(k));
  const std::vector<DoubleGroundedCurve> h2(used.begin() + static_cast<std::ptrdiff_t>(k), used.end());
  const Arrangement a1 = Arrangement::build_curves(curve_points(h1), curve_ids(h1), true);
  const Arrangement a2 = Arrangement::build_curves(curve_points(h2), curve_ids(h2), true);
  const int half = out.k_used / 2;
  out.trace1 = trace(a1, half - 1, half);
  out.trace2 = trace(a2, half - 1, half);

  const std::vector<Point> p1 = trace_polyline(a1, out.trace1);
  const std::vector<Point> p2 = trace_polyline(a2, out.trace2);
  const auto crossings = polyline_crossings(p1, p2);
  if (crossings.empty()) throw TraversalStuck("the two traversals do not cross");
  const Point c = crossings.front().point;

  // c is a crossing of some curve of H_1 with some curve of H_2. Step into the
  // sector to the right of both, where the region count is unchanged.
  const auto on_curve = [&c](const std::vector<DoubleGroundedCurve>& family) -> const std::vector<Point>& {
    for (const auto& curve : family) {
      for (std::size_t i = 0; i + 1 < curve.vertices.size(); ++i) {
        if (on_segment(curve.vertices[i], curve.vertices[i + 1], c)) return curve.vertices;
      }
    }
    throw TraversalStuck("crossing point lies on no curve");
  };
  const Point u = direction_at(on_curve(h1), c);
  const Point w = direction_at(on_curve(h2), c);
  const Point d = cross(u, w) > 0 ? u - w : w - u;
  out.p = step_into_face(full, c, d);
  out.level = point_level(full, full_levels, out.p);
  return out;
}

DgcocCheck check_dgcoc(const Instance& inst, const std::vector<DoubleGroundedCurve>& curves) {
  DgcocCheck out;
  out.instance_level = max_crossing_level(Arrangement::build(inst)).r;
  out.family_level = curves.empty() ? 0 : max_crossing_level(Arrangement::build_curves(curve_points(curves), curve_ids(curves), true)).r;
  out.pass = out.instance_level >= out.family_level;
  return out;
}

}  // namespace outerstring
