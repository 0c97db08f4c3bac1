#include "outerstring/crossing_level.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

namespace outerstring {

namespace {

template <std::size_t W>
struct LabelSet {
  std::array<std::uint64_t, W> w{};

  bool has(int l) const { return (w[static_cast<std::size_t>(l) >> 6] >> (l & 63)) & 1U; }
  void add(int l) { w[static_cast<std::size_t>(l) >> 6] |= std::uint64_t{1} << (l & 63); }
  bool subset_of(const LabelSet& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] & ~o.w[i]) return false;
    }
    return true;
  }
};

template <std::size_t W>
std::vector<int> exact_levels(const Arrangement& arr) {
  using Set = LabelSet<W>;
  const int faces = arr.face_count();
  std::vector<std::vector<Set>> minimal(static_cast<std::size_t>(faces));
  std::vector<int> level(static_cast<std::size_t>(faces), -1);
  int settled = 0;

  auto dominated = [&minimal](int f, const Set& s) {
    for (const Set& t : minimal[static_cast<std::size_t>(f)]) {
      if (t.subset_of(s)) return true;
    }
    return false;
  };

  // Bucket d holds states whose label set has d elements. Sets only grow
  // along a path, so buckets are processed in increasing order and a set
  // kept for a face is never a superset of one kept later.
  std::vector<std::vector<std::pair<int, Set>>> buckets(1);
  for (int f = 0; f < faces; ++f) {
    if (arr.face_touches_ground(f)) buckets[0].push_back({f, Set{}});
  }
  for (std::size_t d = 0; d < buckets.size() && settled < faces; ++d) {
    while (!buckets[d].empty() && settled < faces) {
      auto [f, s] = buckets[d].back();
      buckets[d].pop_back();
      if (dominated(f, s)) continue;
      minimal[static_cast<std::size_t>(f)].push_back(s);
      if (level[static_cast<std::size_t>(f)] < 0) {
        level[static_cast<std::size_t>(f)] = static_cast<int>(d);
        ++settled;
      }
      for (const auto& [g, label] : arr.dual()[static_cast<std::size_t>(f)]) {
        Set t = s;
        std::size_t size = d;
        if (!t.has(label)) {
          t.add(label);
          ++size;
        }
        if (dominated(g, t)) continue;
        if (buckets.size() <= size) buckets.resize(size + 1);
        buckets[size].push_back({g, t});
      }
    }
  }
  return level;
}

}  // namespace

std::vector<int> crossing_levels_exact(const Arrangement& arr) {
  const int labels = arr.label_count();
  if (labels <= 64) return exact_levels<1>(arr);
  if (labels <= 256) return exact_levels<4>(arr);
  if (labels <= 1024) return exact_levels<16>(arr);
  throw SizeLimitExceeded("crossing_levels_exact: more than 1024 curves");
}

int crossing_level_exact(const Arrangement& arr, int face) {
  return crossing_levels_exact(arr).at(static_cast<std::size_t>(face));
}

std::vector<int> crossing_levels_upper(const Arrangement& arr) {
  const int faces = arr.face_count();
  std::vector<int> dist(static_cast<std::size_t>(faces), -1);
  std::queue<int> q;
  for (int f = 0; f < faces; ++f) {
    if (arr.face_touches_ground(f)) {
      dist[static_cast<std::size_t>(f)] = 0;
      q.push(f);
    }
  }
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (const auto& [g, label] : arr.dual()[static_cast<std::size_t>(f)]) {
      (void)label;
      if (dist[static_cast<std::size_t>(g)] < 0) {
        dist[static_cast<std::size_t>(g)] = dist[static_cast<std::size_t>(f)] + 1;
        q.push(g);
      }
    }
  }
  return dist;
}

int crossing_level_upper(const Arrangement& arr, int face) {
  return crossing_levels_upper(arr).at(static_cast<std::size_t>(face));
}

std::vector<int> crossing_levels_by_removal(const Arrangement& arr, int label_cap) {
  const int labels = arr.label_count();
  if (labels > std::min(label_cap, 24)) {
    throw SizeLimitExceeded("crossing_levels_by_removal: " + std::to_string(labels) + " curves exceed the cap");
  }
  const int faces = arr.face_count();
  std::vector<int> level(static_cast<std::size_t>(faces), -1);
  int settled = 0;
  std::vector<int> parent(static_cast<std::size_t>(faces));
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const std::uint32_t limit = std::uint32_t{1} << labels;
  for (int k = 0; k <= labels && settled < faces; ++k) {
    // Gosper's hack over masks with k bits.
    std::uint32_t mask = k == 0 ? 0 : (std::uint32_t{1} << k) - 1;
    while (mask < limit && settled < faces) {
      std::iota(parent.begin(), parent.end(), 0);
      for (int f = 0; f < faces; ++f) {
        for (const auto& [g, label] : arr.dual()[static_cast<std::size_t>(f)]) {
          if (!((mask >> label) & 1U)) continue;
          const int a = find(f);
          const int b = find(g);
          if (a != b) parent[static_cast<std::size_t>(b)] = a;
        }
      }
      std::vector<char> ground(static_cast<std::size_t>(faces), 0);
      for (int f = 0; f < faces; ++f) {
        if (arr.face_touches_ground(f)) ground[static_cast<std::size_t>(find(f))] = 1;
      }
      for (int f = 0; f < faces; ++f) {
        if (level[static_cast<std::size_t>(f)] < 0 && ground[static_cast<std::size_t>(find(f))]) {
          level[static_cast<std::size_t>(f)] = k;
          ++settled;
        }
      }
      if (k == 0) break;
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return level;
}

int point_level(const Arrangement& arr, const std::vector<int>& face_levels, const Point& p) {
  const int f = arr.locate(p);
  if (f >= 0) return face_levels[static_cast<std::size_t>(f)];
  int best = -1;
  const auto& arcs = arr.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!on_segment(arr.nodes()[static_cast<std::size_t>(arcs[a].tail)].p, arr.nodes()[static_cast<std::size_t>(arcs[a].head)].p, p)) continue;
    for (int h : {static_cast<int>(2 * a), static_cast<int>(2 * a + 1)}) {
      const int face = arr.face(h);
      if (face < 0) continue;
      const int l = face_levels[static_cast<std::size_t>(face)];
      if (best < 0 || l < best) best = l;
    }
  }
  return best;
}

MaxLevel max_crossing_level(const std::vector<int>& face_levels) {
  MaxLevel out;
  for (std::size_t f = 0; f < face_levels.size(); ++f) {
    if (out.witness < 0 || face_levels[f] > out.r) {
      out.r = face_levels[f];
      out.witness = static_cast<int>(f);
    }
  }
  return out;
}

MaxLevel max_crossing_level(const Arrangement& arr) { return max_crossing_level(crossing_levels_exact(arr)); }

LevelProfile level_regions(const Arrangement& arr) { return level_regions(arr, crossing_levels_exact(arr)); }

LevelProfile level_regions(const Arrangement& arr, const std::vector<int>& face_levels) {
  LevelProfile out;
  out.face_levels = face_levels;
  const MaxLevel m = max_crossing_level(face_levels);
  out.r = m.r;
  out.witness = m.witness;
  const int faces = arr.face_count();
  const auto& arcs = arr.arcs();

  LevelRegion zero;
  zero.level = 0;
  for (int f = 0; f < faces; ++f) zero.faces.push_back(f);
  zero.gamma.resize(static_cast<std::size_t>(arr.label_count()));
  std::iota(zero.gamma.begin(), zero.gamma.end(), 0);
  out.regions.push_back(std::move(zero));

  for (int i = 1; i <= out.r; ++i) {
    LevelRegion region;
    region.level = i;
    std::vector<char> in(static_cast<std::size_t>(faces), 0);
    std::vector<int> stack{out.witness};
    in[static_cast<std::size_t>(out.witness)] = 1;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      region.faces.push_back(f);
      for (const auto& [g, label] : arr.dual()[static_cast<std::size_t>(f)]) {
        (void)label;
        if (!in[static_cast<std::size_t>(g)] && face_levels[static_cast<std::size_t>(g)] >= i) {
          in[static_cast<std::size_t>(g)] = 1;
          stack.push_back(g);
        }
      }
    }
    std::sort(region.faces.begin(), region.faces.end());
    std::set<int> gamma;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const int f = arr.face(static_cast<int>(2 * a));
      const int g = arr.face(static_cast<int>(2 * a + 1));
      const bool fin = f >= 0 && in[static_cast<std::size_t>(f)];
      const bool gin = g >= 0 && in[static_cast<std::size_t>(g)];
      if (fin == gin) continue;
      region.boundary_arcs.push_back(static_cast<int>(a));
      if (arcs[a].label >= 0) gamma.insert(arcs[a].label);
      // Curves through the arc's end nodes also meet the boundary.
      for (int node : {arcs[a].tail, arcs[a].head}) {
        for (int l : arr.nodes()[static_cast<std::size_t>(node)].labels) gamma.insert(l);
      }
    }
    region.gamma.assign(gamma.begin(), gamma.end());
    out.regions.push_back(std::move(region));
  }
  return out;
}

std::vector<HalvingCheck> check_halving(const LevelProfile& profile, int alpha) {
  const int step = 4 * std::max(alpha, 1);
  std::vector<HalvingCheck> out;
  for (int i = step; i <= profile.r; ++i) {
    HalvingCheck c;
    c.i = i;
    c.gamma_i = static_cast<int>(profile.regions[static_cast<std::size_t>(i)].gamma.size());
    c.gamma_prev = static_cast<int>(profile.regions[static_cast<std::size_t>(i - step)].gamma.size());
    c.pass = 2 * c.gamma_i <= c.gamma_prev;
    out.push_back(c);
  }
  return out;
}

long long level_bound(int alpha, int n) {
  const int log2n = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n)) - 1;
  return 4LL * alpha * (log2n + 1);
}

}  // namespace outerstring
