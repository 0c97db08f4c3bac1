#pragma once

#include <string>
#include <utility>
#include <vector>

#include "outerstring/geom.hpp"

namespace outerstring {

enum class NodeKind { Ground, Crossing, Bend, Endpoint, Corner };
enum class ArcKind { String, Ground, Frame };

struct ArrNode {
  Point p;
  NodeKind kind = NodeKind::Bend;
  std::vector<int> labels;  // curves through the node
};

// A straight piece of a curve, the ground, or the bounding frame. String arcs
// are oriented along their curve.
struct Arc {
  int tail = -1;
  int head = -1;
  ArcKind kind = ArcKind::String;
  int label = -1;          // curve index for string arcs
  int index_on_curve = -1; // position in the curve's arc sequence
};

// Planar subdivision of the part of the upper half-plane inside a bounding
// frame by a set of grounded curves. Half-edge 2a runs along arc a, 2a+1
// against it; each bounded face lies to the left of its half-edges. Faces
// are the open regions of the half-plane minus the curves; the region outside
// the frame is not a face.
class Arrangement {
 public:
  // Validates general position first; throws DegenerateInput otherwise.
  static Arrangement build(const Instance& inst);
  static Arrangement build_curves(const std::vector<std::vector<Point>>& curves, const std::vector<std::string>& ids,
                                  bool double_grounded);

  const std::vector<ArrNode>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  static int twin(int h) { return h ^ 1; }
  static int arc_of(int h) { return h >> 1; }
  int tail(int h) const { return (h & 1) ? arcs_[static_cast<std::size_t>(h >> 1)].head : arcs_[static_cast<std::size_t>(h >> 1)].tail; }
  int head(int h) const { return tail(h ^ 1); }
  int next(int h) const { return next_[static_cast<std::size_t>(h)]; }
  // Face to the left of h, or -1 for the region outside the frame.
  int face(int h) const { return face_[static_cast<std::size_t>(h)]; }

  int face_count() const { return static_cast<int>(boundary_.size()); }
  const std::vector<int>& face_boundary(int f) const { return boundary_[static_cast<std::size_t>(f)]; }
  bool face_touches_ground(int f) const { return grounded_[static_cast<std::size_t>(f)] != 0; }

  int label_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& label_ids() const { return ids_; }
  const std::vector<std::vector<Point>>& curves() const { return curves_; }
  const std::vector<int>& curve_arcs(int label) const { return curve_arcs_[static_cast<std::size_t>(label)]; }

  std::size_t crossing_count() const;

  // Faces across each string arc: (neighbour face, label). Arcs with the
  // same face on both sides are omitted.
  const std::vector<std::vector<std::pair<int, int>>>& dual() const { return dual_; }

  // Face strictly containing p, or -1 if p lies on an arc or outside the frame.
  int locate(const Point& p) const;
  bool face_contains(int f, const Point& p) const;

  // A point in the interior of face f.
  Point face_sample(int f) const;

  // Smallest and largest corner of the frame.
  Point frame_min() const { return frame_min_; }
  Point frame_max() const { return frame_max_; }

 private:
  void assemble(const std::vector<std::vector<Point>>& curves, const std::vector<std::string>& ids);

  std::vector<ArrNode> nodes_;
  std::vector<Arc> arcs_;
  std::vector<int> next_;
  std::vector<int> face_;
  std::vector<std::vector<int>> boundary_;
  std::vector<char> grounded_;
  std::vector<std::string> ids_;
  std::vector<std::vector<Point>> curves_;
  std::vector<std::vector<int>> curve_arcs_;
  std::vector<std::vector<std::pair<int, int>>> dual_;
  Point frame_min_;
  Point frame_max_;
};

}  // namespace outerstring
