#pragma once

#include <gmpxx.h>

#include "outerstring/errors.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace outerstring {

/// Exact coordinate type. Every geometric decision in the library is made on
/// these values; nothing is rounded.
using Rational = mpq_class;

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// True when p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

struct Segment {
  Point a;
  Point b;
};

enum class ContactKind { Empty, Proper, Degenerate };

/// Result of intersecting two closed segments. For a proper crossing `point`
/// is set and `ta`, `tb` are the crossing parameters in (0, 1) along the two
/// segments.
struct SegmentContact {
  ContactKind kind = ContactKind::Empty;
  std::optional<Point> point;
  Rational ta;
  Rational tb;
};

/// Classifies the contact of two closed segments. "Proper" means the
/// interiors cross transversally at a single point; any other contact
/// (endpoint touching, collinear overlap, shared endpoint) is "Degenerate".
SegmentContact segment_intersection(const Segment& a, const Segment& b);

struct GroundedString {
  std::string id;
  std::vector<Point> vertices;

  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Segment segment(std::size_t i) const { return {vertices[i], vertices[i + 1]}; }
  const Point& ground_point() const { return vertices.front(); }
};

struct Instance {
  std::vector<GroundedString> strings;

  std::size_t size() const { return strings.size(); }
};

/// A crossing of two polylines: the point, and for each polyline the
/// segment index and the parameter along that segment.
struct PolylineCrossing {
  Point point;
  std::size_t segA = 0;
  Rational tA;
  std::size_t segB = 0;
  Rational tB;
};

/// All proper crossings between two polylines, ordered along the first one.
/// Throws DegenerateContact if any segment pair touches degenerately.
std::vector<PolylineCrossing> polyline_crossings(const std::vector<Point>& a,
                                                 const std::vector<Point>& b);

struct StringIntersection {
  bool intersects = false;
  std::vector<Point> points;  // in order along the first string
};

StringIntersection strings_intersect(const GroundedString& a, const GroundedString& b);

enum class ViolationKind {
  ConcurrentTriple,
  NonTransversal,
  DuplicateGroundX,
  GroundTouch,
  MalformedString,
  DuplicateId,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> ids;
  std::string detail;
};

std::vector<Violation> validate_general_position(const Instance& inst);

/// Same checks for curves whose first vertex, and optionally last vertex,
/// lies on the ground. Used for double-grounded curve families.
std::vector<Violation> validate_curves(const std::vector<std::vector<Point>>& curves,
                                       const std::vector<std::string>& ids,
                                       bool double_grounded);

/// `count` near-copies of `s` that pairwise cross. The copies are checked
/// among themselves; EpsilonTooLarge is thrown if they fail to pairwise
/// intersect or lose general position.
std::vector<GroundedString> perturb_copies(const GroundedString& s, int count,
                                           const Rational& epsilon);

/// Copies of `inst.strings[index]`, additionally verified against every other
/// string of the instance: each copy must meet exactly the strings the
/// original meets, and general position must survive.
std::vector<GroundedString> perturb_copies(const Instance& inst, std::size_t index, int count,
                                           const Rational& epsilon);

/// Smallest positive gap between distinct coordinates of vertices and
/// pairwise crossing points, measured per axis. A conservative scale for
/// perturbation sizes.
Rational feature_gap(const Instance& inst);

}  // namespace outerstring
