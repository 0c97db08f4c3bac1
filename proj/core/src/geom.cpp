#include "outerstring/geom.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace outerstring {

Point operator+(const Point& a, const Point& b) { return {Rational(a.x + b.x), Rational(a.y + b.y)}; }
Point operator-(const Point& a, const Point& b) { return {Rational(a.x - b.x), Rational(a.y - b.y)}; }
Point operator*(const Rational& s, const Point& p) { return {Rational(s * p.x), Rational(s * p.y)}; }

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(Rational(cross(b - a, c - a)));
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

namespace {

bool boxes_disjoint(const Segment& s, const Segment& t) {
  const auto& [sminx, smaxx] = std::minmax(s.a.x, s.b.x);
  const auto& [tminx, tmaxx] = std::minmax(t.a.x, t.b.x);
  if (smaxx < tminx || tmaxx < sminx) return true;
  const auto& [sminy, smaxy] = std::minmax(s.a.y, s.b.y);
  const auto& [tminy, tmaxy] = std::minmax(t.a.y, t.b.y);
  return smaxy < tminy || tmaxy < sminy;
}

}  // namespace

SegmentContact segment_intersection(const Segment& a, const Segment& b) {
  SegmentContact out;
  if (boxes_disjoint(a, b)) return out;

  const int o1 = orientation(a.a, a.b, b.a);
  const int o2 = orientation(a.a, a.b, b.b);
  const int o3 = orientation(b.a, b.b, a.a);
  const int o4 = orientation(b.a, b.b, a.b);

  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    if (o1 != o2 && o3 != o4) {
      const Point r = a.b - a.a;
      const Point s = b.b - b.a;
      const Point qp = b.a - a.a;
      const Rational denom = cross(r, s);
      out.kind = ContactKind::Proper;
      out.ta = cross(qp, s) / denom;
      out.tb = cross(qp, r) / denom;
      out.point = a.a + out.ta * r;
    }
    return out;
  }

  if ((o1 == 0 && on_segment(a.a, a.b, b.a)) || (o2 == 0 && on_segment(a.a, a.b, b.b)) ||
      (o3 == 0 && on_segment(b.a, b.b, a.a)) || (o4 == 0 && on_segment(b.a, b.b, a.b))) {
    out.kind = ContactKind::Degenerate;
  }
  return out;
}

std::vector<PolylineCrossing> polyline_crossings(const std::vector<Point>& a,
                                                 const std::vector<Point>& b) {
  std::vector<PolylineCrossing> out;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const Segment sa{a[i], a[i + 1]};
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const SegmentContact c = segment_intersection(sa, Segment{b[j], b[j + 1]});
      if (c.kind == ContactKind::Degenerate) {
        throw DegenerateContact("degenerate contact between segment " + std::to_string(i) +
                                " and segment " + std::to_string(j));
      }
      if (c.kind == ContactKind::Proper) out.push_back({*c.point, i, c.ta, j, c.tb});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolylineCrossing& l, const PolylineCrossing& r) {
    if (l.segA != r.segA) return l.segA < r.segA;
    return l.tA < r.tA;
  });
  return out;
}

StringIntersection strings_intersect(const GroundedString& a, const GroundedString& b) {
  StringIntersection out;
  for (auto& c : polyline_crossings(a.vertices, b.vertices)) out.points.push_back(std::move(c.point));
  out.intersects = !out.points.empty();
  return out;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ConcurrentTriple: return "ConcurrentTriple";
    case ViolationKind::NonTransversal: return "NonTransversal";
    case ViolationKind::DuplicateGroundX: return "DuplicateGroundX";
    case ViolationKind::GroundTouch: return "GroundTouch";
    case ViolationKind::MalformedString: return "MalformedString";
    case ViolationKind::DuplicateId: return "DuplicateId";
  }
  return "Unknown";
}

namespace {

// Shape checks on a single curve; returns false if the curve is unusable for
// pairwise checks.
bool check_shape(const std::vector<Point>& v, const std::string& id, bool double_grounded,
                 std::vector<Violation>& out) {
  const std::size_t min_vertices = double_grounded ? 3 : 2;
  if (v.size() < min_vertices) {
    out.push_back({ViolationKind::MalformedString, {id}, "too few vertices"});
    return false;
  }
  if (v.front().y != 0 || (double_grounded && v.back().y != 0)) {
    out.push_back({ViolationKind::MalformedString, {id}, "endpoint not on the ground"});
    return false;
  }
  bool ok = true;
  const std::size_t last_interior = double_grounded ? v.size() - 1 : v.size();
  for (std::size_t i = 1; i < last_interior; ++i) {
    if (v[i].y <= 0) {
      out.push_back({ViolationKind::GroundTouch, {id}, "vertex " + std::to_string(i) + " not above the ground"});
      ok = false;
    }
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] == v[i + 1]) {
      out.push_back({ViolationKind::MalformedString, {id}, "repeated vertex " + std::to_string(i)});
      return false;
    }
  }
  // Simplicity: adjacent segments may only share their common vertex, others
  // must be disjoint.
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Segment si{v[i], v[i + 1]};
    for (std::size_t j = i + 1; j + 1 < v.size(); ++j) {
      if (j == i + 1) {
        if (orientation(v[i], v[i + 1], v[i + 2]) == 0 && dot(v[i] - v[i + 1], v[i + 2] - v[i + 1]) > 0) {
          out.push_back({ViolationKind::MalformedString, {id}, "polyline folds back at vertex " + std::to_string(i + 1)});
          ok = false;
        }
        continue;
      }
      if (segment_intersection(si, Segment{v[j], v[j + 1]}).kind != ContactKind::Empty) {
        out.push_back({ViolationKind::MalformedString, {id}, "polyline is not simple"});
        return false;
      }
    }
  }
  return ok;
}

}  // namespace

std::vector<Violation> validate_curves(const std::vector<std::vector<Point>>& curves,
                                       const std::vector<std::string>& ids, bool double_grounded) {
  std::vector<Violation> out;
  const std::size_t n = curves.size();

  {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second) out.push_back({ViolationKind::DuplicateId, {id}, "duplicate id"});
    }
  }

  std::vector<char> usable(n, 0);
  for (std::size_t i = 0; i < n; ++i) usable[i] = check_shape(curves[i], ids[i], double_grounded, out);

  {
    std::map<Rational, std::vector<std::string>> grounds;
    for (std::size_t i = 0; i < n; ++i) {
      if (curves[i].empty()) continue;
      grounds[curves[i].front().x].push_back(ids[i]);
      if (double_grounded && curves[i].size() > 1) grounds[curves[i].back().x].push_back(ids[i]);
    }
    for (auto& [x, who] : grounds) {
      if (who.size() > 1) out.push_back({ViolationKind::DuplicateGroundX, who, "shared ground x = " + x.get_str()});
    }
  }

  std::map<Point, std::set<std::size_t>> crossing_owners;
  for (std::size_t i = 0; i < n; ++i) {
    if (!usable[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!usable[j]) continue;
      bool degenerate = false;
      for (std::size_t a = 0; a + 1 < curves[i].size() && !degenerate; ++a) {
        const Segment sa{curves[i][a], curves[i][a + 1]};
        for (std::size_t b = 0; b + 1 < curves[j].size(); ++b) {
          const SegmentContact c = segment_intersection(sa, Segment{curves[j][b], curves[j][b + 1]});
          if (c.kind == ContactKind::Degenerate) {
            degenerate = true;
            break;
          }
          if (c.kind == ContactKind::Proper) {
            auto& owners = crossing_owners[*c.point];
            owners.insert(i);
            owners.insert(j);
          }
        }
      }
      if (degenerate) {
        out.push_back({ViolationKind::NonTransversal, {ids[i], ids[j]}, "curves touch without crossing"});
      }
    }
  }
  for (const auto& [p, owners] : crossing_owners) {
    if (owners.size() >= 3) {
      std::vector<std::string> who;
      for (auto o : owners) who.push_back(ids[o]);
      out.push_back({ViolationKind::ConcurrentTriple, who,
                     "three or more curves through (" + p.x.get_str() + ", " + p.y.get_str() + ")"});
    }
  }
  return out;
}

std::vector<Violation> validate_general_position(const Instance& inst) {
  std::vector<std::vector<Point>> curves;
  std::vector<std::string> ids;
  curves.reserve(inst.size());
  ids.reserve(inst.size());
  for (const auto& s : inst.strings) {
    curves.push_back(s.vertices);
    ids.push_back(s.id);
  }
  return validate_curves(curves, ids, false);
}

namespace {

// Small integer directions, ordered by length, used as the translation
// direction for the non-ground vertices of a copy.
std::vector<Point> candidate_directions() {
  std::vector<std::pair<int, Point>> dirs;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      if (std::gcd(a, b) != 1) continue;
      dirs.push_back({a * a + b * b, Point(a, b)});
    }
  }
  std::stable_sort(dirs.begin(), dirs.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Point> out;
  for (auto& d : dirs) out.push_back(d.second);
  return out;
}

std::vector<GroundedString> make_copies(const GroundedString& s, int count, const Rational& epsilon) {
  if (count < 1) throw std::invalid_argument("perturb_copies: count must be >= 1");
  if (count == 1) return {s};
  if (epsilon <= 0) throw std::invalid_argument("perturb_copies: epsilon must be positive");
  if (s.vertices.size() < 2) throw DegenerateInput("perturb_copies: string " + s.id + " has fewer than two vertices");

  const Point first = s.vertices[1] - s.vertices[0];
  std::optional<Point> direction;
  for (const Point& d : candidate_directions()) {
    if (cross(first, d) >= 0) continue;
    bool parallel = false;
    for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) {
      if (cross(s.vertices[i + 1] - s.vertices[i], d) == 0) {
        parallel = true;
        break;
      }
    }
    if (!parallel) {
      direction = d;
      break;
    }
  }
  if (!direction) throw EpsilonTooLarge("perturb_copies: no admissible perturbation direction for " + s.id);

  // Ground shifts grow linearly and tail shifts quadratically in the copy
  // index, so copies j and l cross at a parameter depending on j + l and no
  // three copies are concurrent.
  const Rational c(count);
  std::vector<GroundedString> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    GroundedString copy;
    copy.id = j == 0 ? s.id : s.id + "~" + std::to_string(j);
    const Rational ground_shift = epsilon * j / c;
    const Rational tail_shift = epsilon * (j + j * j) / (c * (c + 1));
    copy.vertices.reserve(s.vertices.size());
    copy.vertices.push_back(Point(s.vertices[0].x + ground_shift, s.vertices[0].y));
    for (std::size_t i = 1; i < s.vertices.size(); ++i) {
      copy.vertices.push_back(s.vertices[i] - tail_shift * *direction);
    }
    out.push_back(std::move(copy));
  }
  return out;
}

void check_copies_among_themselves(const std::vector<GroundedString>& copies) {
  Instance tmp{copies};
  if (!validate_general_position(tmp).empty()) {
    throw EpsilonTooLarge("perturb_copies: copies lose general position");
  }
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      if (!strings_intersect(copies[i], copies[j]).intersects) {
        throw EpsilonTooLarge("perturb_copies: copies " + copies[i].id + " and " + copies[j].id + " do not cross");
      }
    }
  }
}

}  // namespace

std::vector<GroundedString> perturb_copies(const GroundedString& s, int count, const Rational& epsilon) {
  auto copies = make_copies(s, count, epsilon);
  if (count > 1) check_copies_among_themselves(copies);
  return copies;
}

std::vector<GroundedString> perturb_copies(const Instance& inst, std::size_t index, int count,
                                           const Rational& epsilon) {
  if (index >= inst.size()) throw std::out_of_range("perturb_copies: index out of range");
  const GroundedString& original = inst.strings[index];
  auto copies = perturb_copies(original, count, epsilon);
  if (count == 1) return copies;

  Instance combined;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i != index) combined.strings.push_back(inst.strings[i]);
  }
  for (const auto& c : copies) combined.strings.push_back(c);
  if (!validate_general_position(combined).empty()) {
    throw EpsilonTooLarge("perturb_copies: general position lost for copies of " + original.id);
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i == index) continue;
    const bool expected = strings_intersect(original, inst.strings[i]).intersects;
    for (const auto& c : copies) {
      if (strings_intersect(c, inst.strings[i]).intersects != expected) {
        throw EpsilonTooLarge("perturb_copies: copy " + c.id + " changes its relation to " + inst.strings[i].id);
      }
    }
  }
  return copies;
}

Rational feature_gap(const Instance& inst) {
  std::set<Rational> xs;
  std::set<Rational> ys;
  for (const auto& s : inst.strings) {
    for (const auto& v : s.vertices) {
      xs.insert(v.x);
      ys.insert(v.y);
    }
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      for (std::size_t a = 0; a < inst.strings[i].segment_count(); ++a) {
        for (std::size_t b = 0; b < inst.strings[j].segment_count(); ++b) {
          const auto c = segment_intersection(inst.strings[i].segment(a), inst.strings[j].segment(b));
          if (c.kind == ContactKind::Proper) {
            xs.insert(c.point->x);
            ys.insert(c.point->y);
          }
        }
      }
    }
  }
  std::optional<Rational> best;
  auto scan = [&best](const std::set<Rational>& values) {
    const Rational* prev = nullptr;
    for (const auto& v : values) {
      if (prev != nullptr) {
        Rational gap = v - *prev;
        if (!best || gap < *best) best = gap;
      }
      prev = &v;
    }
  };
  scan(xs);
  scan(ys);
  return best.value_or(Rational(1));
}

}  // namespace outerstring
