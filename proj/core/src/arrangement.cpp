#include "outerstring/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace outerstring {

namespace {

// Upper half (including the positive x direction) before the lower half.
int half(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool ccw_less(const Point& a, const Point& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::string describe(const std::vector<Violation>& v) {
  return to_string(v.front().kind) + " (" + v.front().detail + ")";
}

}  // namespace

Arrangement Arrangement::build(const Instance& inst) {
  std::vector<std::vector<Point>> curves;
  std::vector<std::string> ids;
  for (const auto& s : inst.strings) {
    curves.push_back(s.vertices);
    ids.push_back(s.id);
  }
  return build_curves(curves, ids, false);
}

Arrangement Arrangement::build_curves(const std::vector<std::vector<Point>>& curves,
                                      const std::vector<std::string>& ids, bool double_grounded) {
  if (curves.size() != ids.size()) throw std::invalid_argument("build_curves: one id per curve required");
  const auto violations = validate_curves(curves, ids, double_grounded);
  if (!violations.empty()) throw DegenerateInput("arrangement input is not in general position: " + describe(violations));
  Arrangement arr;
  arr.assemble(curves, ids);
  return arr;
}

std::size_t Arrangement::crossing_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const ArrNode& n) { return n.kind == NodeKind::Crossing; }));
}

void Arrangement::assemble(const std::vector<std::vector<Point>>& curves, const std::vector<std::string>& ids) {
  ids_ = ids;
  curves_ = curves;
  const std::size_t n = curves.size();

  // Crossing points per curve: (segment, parameter, point, other curve).
  struct Mark {
    std::size_t seg;
    Rational t;
    Point p;
    int other;
  };
  std::vector<std::vector<Mark>> marks(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (auto& c : polyline_crossings(curves[i], curves[j])) {
        marks[i].push_back({c.segA, c.tA, c.point, static_cast<int>(j)});
        marks[j].push_back({c.segB, c.tB, c.point, static_cast<int>(i)});
      }
    }
  }

  std::map<Point, int> node_index;
  auto node_at = [&](const Point& p, NodeKind kind) {
    auto [it, fresh] = node_index.emplace(p, static_cast<int>(nodes_.size()));
    if (fresh) nodes_.push_back({p, kind, {}});
    return it->second;
  };
  auto add_label = [&](int node, int label) {
    auto& l = nodes_[static_cast<std::size_t>(node)].labels;
    if (std::find(l.begin(), l.end(), label) == l.end()) l.push_back(label);
  };

  Rational minx = 0;
  Rational maxx = 0;
  Rational maxy = 0;
  bool first = true;
  for (const auto& c : curves) {
    for (const auto& v : c) {
      if (first) {
        minx = maxx = v.x;
        maxy = v.y;
        first = false;
      }
      minx = std::min(minx, v.x);
      maxx = std::max(maxx, v.x);
      maxy = std::max(maxy, v.y);
    }
  }
  frame_min_ = Point(Rational(minx - 1), Rational(0));
  frame_max_ = Point(Rational(maxx + 1), Rational(maxy + 1));

  curve_arcs_.assign(n, {});
  std::vector<int> ground_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    auto& m = marks[i];
    std::sort(m.begin(), m.end(), [](const Mark& a, const Mark& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      return a.t < b.t;
    });
    const auto& c = curves[i];
    std::vector<int> seq;
    std::size_t k = 0;
    for (std::size_t s = 0; s < c.size(); ++s) {
      NodeKind kind = NodeKind::Bend;
      if (c[s].y == 0) {
        kind = NodeKind::Ground;
      } else if (s + 1 == c.size()) {
        kind = NodeKind::Endpoint;
      }
      const int v = node_at(c[s], kind);
      add_label(v, static_cast<int>(i));
      if (kind == NodeKind::Ground) ground_nodes.push_back(v);
      seq.push_back(v);
      while (k < m.size() && m[k].seg == s) {
        const int x = node_at(m[k].p, NodeKind::Crossing);
        add_label(x, static_cast<int>(i));
        add_label(x, m[k].other);
        seq.push_back(x);
        ++k;
      }
    }
    for (std::size_t s = 0; s + 1 < seq.size(); ++s) {
      curve_arcs_[i].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({seq[s], seq[s + 1], ArcKind::String, static_cast<int>(i), static_cast<int>(s)});
    }
  }

  // Ground and frame.
  const int bl = node_at(frame_min_, NodeKind::Corner);
  const int br = node_at(Point(frame_max_.x, Rational(0)), NodeKind::Corner);
  const int tr = node_at(frame_max_, NodeKind::Corner);
  const int tl = node_at(Point(frame_min_.x, frame_max_.y), NodeKind::Corner);
  std::sort(ground_nodes.begin(), ground_nodes.end(), [this](int a, int b) {
    return nodes_[static_cast<std::size_t>(a)].p.x < nodes_[static_cast<std::size_t>(b)].p.x;
  });
  std::vector<int> ground{bl};
  ground.insert(ground.end(), ground_nodes.begin(), ground_nodes.end());
  ground.push_back(br);
  for (std::size_t s = 0; s + 1 < ground.size(); ++s) arcs_.push_back({ground[s], ground[s + 1], ArcKind::Ground, -1, -1});
  arcs_.push_back({br, tr, ArcKind::Frame, -1, -1});
  arcs_.push_back({tr, tl, ArcKind::Frame, -1, -1});
  arcs_.push_back({tl, bl, ArcKind::Frame, -1, -1});

  // Rotation system.
  const std::size_t halves = arcs_.size() * 2;
  std::vector<std::vector<int>> outgoing(nodes_.size());
  for (std::size_t h = 0; h < halves; ++h) outgoing[static_cast<std::size_t>(tail(static_cast<int>(h)))].push_back(static_cast<int>(h));
  std::vector<int> slot(halves, -1);
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    auto& out = outgoing[v];
    const Point& origin = nodes_[v].p;
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      return ccw_less(nodes_[static_cast<std::size_t>(head(a))].p - origin, nodes_[static_cast<std::size_t>(head(b))].p - origin);
    });
    for (std::size_t i = 0; i < out.size(); ++i) slot[static_cast<std::size_t>(out[i])] = static_cast<int>(i);
  }
  next_.assign(halves, -1);
  for (std::size_t h = 0; h < halves; ++h) {
    const int t = twin(static_cast<int>(h));
    const auto& out = outgoing[static_cast<std::size_t>(tail(t))];
    const std::size_t k = static_cast<std::size_t>(slot[static_cast<std::size_t>(t)]);
    next_[h] = out[(k + out.size() - 1) % out.size()];
  }

  // Faces from the cycles of next; the single clockwise cycle is the outside.
  face_.assign(halves, -2);
  for (std::size_t h0 = 0; h0 < halves; ++h0) {
    if (face_[h0] != -2) continue;
    std::vector<int> cycle;
    int h = static_cast<int>(h0);
    Rational area2 = 0;
    do {
      cycle.push_back(h);
      face_[static_cast<std::size_t>(h)] = -3;
      area2 += cross(nodes_[static_cast<std::size_t>(tail(h))].p, nodes_[static_cast<std::size_t>(head(h))].p);
      h = next_[static_cast<std::size_t>(h)];
    } while (h != static_cast<int>(h0));
    int id = -1;
    if (area2 > 0) {
      id = static_cast<int>(boundary_.size());
      boundary_.push_back(cycle);
      grounded_.push_back(0);
    }
    for (int e : cycle) {
      face_[static_cast<std::size_t>(e)] = id;
      if (id >= 0 && (e & 1) == 0 && arcs_[static_cast<std::size_t>(e >> 1)].kind == ArcKind::Ground) {
        grounded_[static_cast<std::size_t>(id)] = 1;
      }
    }
  }

  dual_.assign(boundary_.size(), {});
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a].kind != ArcKind::String) continue;
    const int f = face_[2 * a];
    const int g = face_[2 * a + 1];
    if (f == g || f < 0 || g < 0) continue;
    dual_[static_cast<std::size_t>(f)].push_back({g, arcs_[a].label});
    dual_[static_cast<std::size_t>(g)].push_back({f, arcs_[a].label});
  }
}

bool Arrangement::face_contains(int f, const Point& p) const {
  bool inside = false;
  for (int h : boundary_[static_cast<std::size_t>(f)]) {
    const Point& a = nodes_[static_cast<std::size_t>(tail(h))].p;
    const Point& b = nodes_[static_cast<std::size_t>(head(h))].p;
    if (on_segment(a, b, p)) return false;
    if ((a.y > p.y) != (b.y > p.y)) {
      // x of the edge at height p.y, compared without division.
      const Rational lhs = (p.x - a.x) * (b.y - a.y);
      const Rational rhs = (b.x - a.x) * (p.y - a.y);
      const bool right_of_point = (b.y > a.y) ? rhs > lhs : rhs < lhs;
      if (right_of_point) inside = !inside;
    }
  }
  return inside;
}

int Arrangement::locate(const Point& p) const {
  if (p.y <= 0 || p.x <= frame_min_.x || p.x >= frame_max_.x || p.y >= frame_max_.y) return -1;
  for (const auto& a : arcs_) {
    if (on_segment(nodes_[static_cast<std::size_t>(a.tail)].p, nodes_[static_cast<std::size_t>(a.head)].p, p)) return -1;
  }
  for (int f = 0; f < face_count(); ++f) {
    if (face_contains(f, p)) return f;
  }
  return -1;
}

Point Arrangement::face_sample(int f) const {
  // Step off the midpoint of a boundary arc into the face, shrinking the
  // step until the point is strictly inside.
  for (int h : boundary_[static_cast<std::size_t>(f)]) {
    if (face_[static_cast<std::size_t>(twin(h))] == f) continue;
    const Point& a = nodes_[static_cast<std::size_t>(tail(h))].p;
    const Point& b = nodes_[static_cast<std::size_t>(head(h))].p;
    const Point mid = Rational(1, 2) * (a + b);
    const Point d = b - a;
    const Point normal(Rational(-d.y), Rational(d.x));
    Rational step(1, 4);
    for (int iter = 0; iter < 256; ++iter) {
      const Point p = mid + step * normal;
      if (face_contains(f, p)) return p;
      step /= 2;
    }
  }
  throw Error("face_sample: no interior point found for face " + std::to_string(f));
}

}  // namespace outerstring
