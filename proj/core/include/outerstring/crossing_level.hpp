#pragma once

#include <vector>

#include "outerstring/arrangement.hpp"

namespace outerstring {

// Exact crossing-level of every face: the fewest distinct curves a path from
// the face to the ground must cross. Label-set best-first search keeping only
// inclusion-minimal label sets per face.
std::vector<int> crossing_levels_exact(const Arrangement& arr);
int crossing_level_exact(const Arrangement& arr, int face);

// Upper bound counting every crossing: BFS distance in the face graph.
std::vector<int> crossing_levels_upper(const Arrangement& arr);
int crossing_level_upper(const Arrangement& arr, int face);

// Reference oracle: smallest |S| such that the face reaches the ground once
// the curves in S are removed. Throws SizeLimitExceeded above `label_cap`
// curves (at most 24).
std::vector<int> crossing_levels_by_removal(const Arrangement& arr, int label_cap = 20);

// Level of an arbitrary point: face level, or for points on curves the
// minimum over the incident faces.
int point_level(const Arrangement& arr, const std::vector<int>& face_levels, const Point& p);

struct MaxLevel {
  int r = 0;
  int witness = -1;  // lowest-index face attaining r
};

MaxLevel max_crossing_level(const Arrangement& arr);
MaxLevel max_crossing_level(const std::vector<int>& face_levels);

struct LevelRegion {
  int level = 0;
  std::vector<int> faces;           // component of U_i holding the witness
  std::vector<int> boundary_arcs;   // arcs with exactly one side in `faces`
  std::vector<int> gamma;           // sorted curve indices meeting the boundary
};

struct LevelProfile {
  std::vector<int> face_levels;
  int r = 0;
  int witness = -1;
  std::vector<LevelRegion> regions;  // index i = level i, 0..r
};

LevelProfile level_regions(const Arrangement& arr);
LevelProfile level_regions(const Arrangement& arr, const std::vector<int>& face_levels);

struct HalvingCheck {
  int i = 0;
  int gamma_i = 0;
  int gamma_prev = 0;  // |Gamma_{i - 4 alpha}|
  bool pass = false;
};

// 2 |Gamma_i| <= |Gamma_{i - 4 alpha}| for every i >= 4 alpha. Alpha below 1
// is treated as 1.
std::vector<HalvingCheck> check_halving(const LevelProfile& profile, int alpha);

// 4 alpha (floor(log2 n) + 1).
long long level_bound(int alpha, int n);

}  // namespace outerstring
