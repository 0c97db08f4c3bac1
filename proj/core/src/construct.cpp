#include "outerstring/construct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "outerstring/graph.hpp"

namespace outerstring {

std::vector<GroundedString> folk(const Rational& width, int size, const Rational& x_offset,
                                 const std::string& prefix, const FolkShape& shape) {
  if (width <= 0) throw PreconditionViolated("folk: width must be positive");
  if (size < 1) throw PreconditionViolated("folk: size must be at least 1");
  const Rational& eta = shape.eta;
  const Rational top = (width + 2 * eta) / 8 + shape.tau;
  const Point left_dir(-4, 7);
  const Point right_dir(4, 7);
  std::vector<GroundedString> out;
  for (int j = 0; j < size; ++j) {
    const Rational apex = x_offset + width / 2 + width * j;
    const std::string base = prefix + "." + std::to_string(j + 1);
    const Point l0(Rational(apex + eta), Rational(0));
    const Point r0(Rational(apex - eta), Rational(0));
    out.push_back({base + "L", {l0, l0 + top * left_dir}});
    out.push_back({base + "R", {r0, r0 + top * right_dir}});
  }
  return out;
}

Instance lowerbound_instance(int m) {
  if (m < 1) throw PreconditionViolated("lowerbound_instance: m must be at least 1");
  if (m > 20) throw SizeLimitExceeded("lowerbound_instance: m above 20");
  Instance inst;
  const long n = 1L << m;
  for (int i = 1; i <= m; ++i) {
    const long width = 1L << i;
    auto strings = folk(Rational(width), static_cast<int>(n / width), Rational(0), "F" + std::to_string(i));
    inst.strings.insert(inst.strings.end(), strings.begin(), strings.end());
  }
  return inst;
}

MinorModel folk_contraction_model(const Instance& inst) {
  // Key: (folk number, copy index).
  std::map<std::pair<int, int>, std::vector<int>> sets;
  for (std::size_t s = 0; s < inst.size(); ++s) {
    const std::string& id = inst.strings[s].id;
    if (id.size() < 2 || id[0] != 'F') throw NotAModel("folk_contraction_model: unexpected string id " + id);
    const auto dot = id.find('.');
    if (dot == std::string::npos) throw NotAModel("folk_contraction_model: unexpected string id " + id);
    const int folk_index = std::stoi(id.substr(1, dot - 1));
    int copy = 0;
    const auto tilde = id.find('~');
    if (tilde != std::string::npos) copy = std::stoi(id.substr(tilde + 1));
    sets[{folk_index, copy}].push_back(static_cast<int>(s));
  }
  MinorModel model;
  for (auto& [key, vertices] : sets) model.branch_sets.push_back(std::move(vertices));
  return model;
}

Instance lowerbound_instance_alpha(int m, int alpha, int epsilon_divisor) {
  if (alpha < 1) throw PreconditionViolated("lowerbound_instance_alpha: alpha must be at least 1");
  if (epsilon_divisor < 1) throw PreconditionViolated("lowerbound_instance_alpha: epsilon divisor must be positive");
  Instance inst = lowerbound_instance(m);
  if (alpha == 1) return inst;
  Rational epsilon = feature_gap(inst) / epsilon_divisor;
  const std::size_t original = inst.size();
  // Copies of string s are appended at the end; the original is always the
  // first element, so it can be replaced in place.
  for (std::size_t s = 0; s < original; ++s) {
    for (int attempt = 0;; ++attempt) {
      try {
        auto copies = perturb_copies(inst, s, alpha, epsilon);
        inst.strings[s] = copies[0];
        inst.strings.insert(inst.strings.end(), copies.begin() + 1, copies.end());
        break;
      } catch (const EpsilonTooLarge&) {
        if (attempt >= 40) throw;
        epsilon /= 2;
      }
    }
  }
  // Keep each folk's strings together, copies after originals.
  std::stable_sort(inst.strings.begin(), inst.strings.end(),
                   [](const GroundedString& a, const GroundedString& b) { return a.id < b.id; });
  return inst;
}

namespace {

// Incremental general-position check for a candidate string against the
// accepted ones. `crossings` holds every accepted crossing point.
bool accept_candidate(const std::vector<GroundedString>& accepted, const GroundedString& cand,
                      const std::set<Point>& crossings, const std::set<Rational>& grounds,
                      std::vector<Point>& new_points) {
  if (grounds.count(cand.ground_point().x) != 0) return false;
  Instance single{{cand}};
  if (!validate_general_position(single).empty()) return false;
  new_points.clear();
  for (const auto& s : accepted) {
    for (std::size_t a = 0; a < cand.segment_count(); ++a) {
      for (std::size_t b = 0; b < s.segment_count(); ++b) {
        const SegmentContact c = segment_intersection(cand.segment(a), s.segment(b));
        if (c.kind == ContactKind::Degenerate) return false;
        if (c.kind == ContactKind::Proper) {
          if (crossings.count(*c.point) != 0) return false;
          new_points.push_back(*c.point);
        }
      }
    }
  }
  std::sort(new_points.begin(), new_points.end());
  return std::adjacent_find(new_points.begin(), new_points.end()) == new_points.end();
}

}  // namespace

Instance random_instance(int n, int max_bends, std::uint64_t seed) {
  if (n < 1) throw PreconditionViolated("random_instance: n must be at least 1");
  if (max_bends < 0) throw PreconditionViolated("random_instance: max_bends must be non-negative");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  const long span = 100L * n;
  Instance inst;
  std::set<Point> crossings;
  std::set<Rational> grounds;
  std::vector<Point> new_points;
  for (int i = 0; i < n; ++i) {
    GroundedString cand;
    cand.id = "s" + std::to_string(i + 1);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw DegenerateInput("random_instance: rejection sampling did not converge");
      const long g = uniform(0, span);
      const long window = 100L * uniform(1, 5);
      const int bends = static_cast<int>(uniform(0, max_bends));
      cand.vertices.assign(1, Point(g, 0));
      for (int b = 0; b <= bends; ++b) cand.vertices.emplace_back(uniform(g - window, g + window), uniform(1, 1000));
      if (accept_candidate(inst.strings, cand, crossings, grounds, new_points)) break;
    }
    grounds.insert(cand.ground_point().x);
    crossings.insert(new_points.begin(), new_points.end());
    inst.strings.push_back(std::move(cand));
  }
  return inst;
}

std::vector<DoubleGroundedCurve> circular_family(int k, std::uint64_t seed) {
  if (k < 1) throw PreconditionViolated("circular_family: k must be at least 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  const int count = 2 * k;
  const long span = 40L * count;
  std::vector<long> xs;
  {
    std::set<long> chosen;
    while (static_cast<int>(chosen.size()) < 2 * count) chosen.insert(uniform(0, span));
    xs.assign(chosen.begin(), chosen.end());
  }

  std::vector<DoubleGroundedCurve> curves;
  for (int i = 0; i < count; ++i) {
    const long x = xs[static_cast<std::size_t>(i)];
    const long y = xs[static_cast<std::size_t>(i + count)];
    DoubleGroundedCurve cand;
    cand.id = "g" + std::to_string(i + 1);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw DegenerateInput("circular_family: rejection sampling did not converge");
      const int interior = static_cast<int>(uniform(1, 3));
      std::set<long> inner;
      // Scale x by 4 inside the curve so there is always room for interior
      // vertices between the two ground points.
      while (static_cast<int>(inner.size()) < interior) inner.insert(uniform(4 * x + 1, 4 * y - 1));
      cand.vertices.assign(1, Point(4 * x, 0));
      for (long ix : inner) cand.vertices.emplace_back(ix, uniform(1, 40L * count));
      cand.vertices.emplace_back(4 * y, 0);
      std::vector<DoubleGroundedCurve> trial = curves;
      trial.push_back(cand);
      if (validate_curves(curve_points(trial), curve_ids(trial), true).empty()) break;
    }
    curves.push_back(std::move(cand));
  }
  return curves;
}

Instance instance_from_family(const std::vector<DoubleGroundedCurve>& curves) {
  const Rational s(1, 4);
  Rational e(1, 8);
  for (int attempt = 0; attempt < 40; ++attempt, e /= 2) {
    Instance inst;
    for (const auto& c : curves) {
      const auto& v = c.vertices;
      if (v.size() < 3) throw PreconditionViolated("instance_from_family: curve " + c.id + " has fewer than 3 vertices");
      const std::size_t mid = (v.size() - 1) / 2;
      const Point& p = v[mid];
      const Point& q = v[mid + 1];
      const Point dir = q - p;
      const Point normal(Rational(-dir.y), dir.x);
      GroundedString a{c.id + "a", std::vector<Point>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid) + 1)};
      a.vertices.push_back(p + (Rational(1, 2) + s) * dir + e * normal);
      GroundedString b{c.id + "b", {}};
      for (std::size_t i = v.size(); i-- > mid + 1;) b.vertices.push_back(v[i]);
      b.vertices.push_back(p + (Rational(1, 2) - s) * dir + e * normal);
      inst.strings.push_back(std::move(a));
      inst.strings.push_back(std::move(b));
    }
    if (!validate_general_position(inst).empty()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < inst.size() && ok; i += 2) {
      ok = strings_intersect(inst.strings[i], inst.strings[i + 1]).intersects;
    }
    if (ok) return inst;
  }
  throw EpsilonTooLarge("instance_from_family: no valid split offset found");
}

}  // namespace outerstring
