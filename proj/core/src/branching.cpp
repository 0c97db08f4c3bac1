#include <algorithm>
#include <cmath>
#include <queue>

#include "outerstring/solvers.hpp"
#include "outerstring/sparsity.hpp"

namespace outerstring {

namespace {

int ceil_sqrt(int k) {
  int t = static_cast<int>(std::sqrt(static_cast<double>(k)));
  while (t * t < k) ++t;
  while (t > 0 && (t - 1) * (t - 1) >= k) --t;
  return t;
}

std::vector<int> to_original(const Subgraph& sub, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(sub.original[static_cast<std::size_t>(v)]);
  return out;
}

Subgraph identity(const Graph& g) {
  Subgraph s{g, {}};
  s.original.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) s.original[static_cast<std::size_t>(v)] = v;
  return s;
}

// Child subgraph expressed in the root graph's vertex ids.
Subgraph restrict(const Subgraph& parent, const std::vector<int>& keep_local) {
  Subgraph child = induced_subgraph(parent.graph, keep_local);
  for (int& v : child.original) v = parent.original[static_cast<std::size_t>(v)];
  return child;
}

Subgraph drop(const Subgraph& parent, const std::vector<int>& removed_local) {
  Subgraph child = remove_vertices(parent.graph, removed_local);
  for (int& v : child.original) v = parent.original[static_cast<std::size_t>(v)];
  return child;
}

// ---------------------------------------------------------------- vertex cover

std::optional<std::vector<int>> vc_rec(Subgraph sub, int k, const ProblemOptions& opts) {
  std::vector<int> forced;
  // High-degree rule: a vertex of degree > k is in every cover of size <= k.
  while (true) {
    if (k < 0) return std::nullopt;
    int high = -1;
    for (int v = 0; v < sub.graph.vertex_count(); ++v) {
      if (sub.graph.degree(v) > k) {
        high = v;
        break;
      }
    }
    if (high < 0) break;
    forced.push_back(sub.original[static_cast<std::size_t>(high)]);
    sub = drop(sub, {high});
    --k;
  }
  const auto m = static_cast<long long>(sub.graph.edge_count());
  if (m > static_cast<long long>(k) * k) return std::nullopt;
  if (m == 0) return forced;

  const int t = ceil_sqrt(k);
  if (auto bc = find_biclique(sub.graph, t)) {
    for (const auto* side : {&bc->a, &bc->b}) {
      if (auto rest = vc_rec(drop(sub, *side), k - t, opts)) {
        std::vector<int> cover = forced;
        const auto taken = to_original(sub, *side);
        cover.insert(cover.end(), taken.begin(), taken.end());
        cover.insert(cover.end(), rest->begin(), rest->end());
        return cover;
      }
    }
    return std::nullopt;
  }
  const Solution s = solve(Problem::VertexCover, sub.graph, opts);
  if (static_cast<int>(s.vertices.size()) > k) return std::nullopt;
  std::vector<int> cover = forced;
  const auto local = to_original(sub, s.vertices);
  cover.insert(cover.end(), local.begin(), local.end());
  return cover;
}

// ------------------------------------------------------- feedback vertex set

bool is_forest(const Graph& g) {
  // |E| = |V| - components.
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int components = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    ++components;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = s;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return static_cast<long long>(g.edge_count()) == g.vertex_count() - components;
}

std::optional<std::vector<int>> fvs_rec(Subgraph sub, int k, const ProblemOptions& opts) {
  if (k < 0) return std::nullopt;
  // Vertices of degree <= 1 lie on no cycle.
  while (true) {
    std::vector<int> low;
    for (int v = 0; v < sub.graph.vertex_count(); ++v) {
      if (sub.graph.degree(v) <= 1) low.push_back(v);
    }
    if (low.empty()) break;
    sub = drop(sub, low);
  }
  if (is_forest(sub.graph)) return std::vector<int>{};

  const int t = ceil_sqrt(k);
  if (t >= 2) {
    if (auto bc = find_biclique(sub.graph, t)) {
      // Any FVS keeps at most one vertex of A or at most one of B.
      for (const auto* side : {&bc->a, &bc->b}) {
        for (int keep : *side) {
          std::vector<int> removed;
          for (int x : *side) {
            if (x != keep) removed.push_back(x);
          }
          if (auto rest = fvs_rec(drop(sub, removed), k - (t - 1), opts)) {
            std::vector<int> out = to_original(sub, removed);
            out.insert(out.end(), rest->begin(), rest->end());
            return out;
          }
        }
      }
      return std::nullopt;
    }
  }
  const Solution s = solve(Problem::FeedbackVertexSet, sub.graph, opts);
  if (static_cast<int>(s.vertices.size()) > k) return std::nullopt;
  return to_original(sub, s.vertices);
}

// ---------------------------------------------------------- induced matching

std::vector<Edge> im_rec(const Subgraph& sub, const ProblemOptions& opts) {
  const int n = sub.graph.vertex_count();
  if (sub.graph.edge_count() == 0) return {};
  const int t = ceil_sqrt(n);
  std::optional<Biclique> bc;
  if (t >= 2) bc = find_biclique(sub.graph, t);
  if (!bc) {
    const Solution s = solve(Problem::InducedMatching, sub.graph, opts);
    std::vector<Edge> out;
    for (const auto& [u, v] : s.edges) {
      const int a = sub.original[static_cast<std::size_t>(u)];
      const int b = sub.original[static_cast<std::size_t>(v)];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
  }

  // Either M avoids A, or avoids B, or V(M) meets A + B in exactly one
  // vertex of each side (then those two are matched together).
  std::vector<Edge> best = im_rec(drop(sub, bc->a), opts);
  auto consider = [&best](std::vector<Edge> cand) {
    if (cand.size() > best.size()) best = std::move(cand);
  };
  consider(im_rec(drop(sub, bc->b), opts));
  std::vector<char> in_ab(static_cast<std::size_t>(n), 0);
  for (int x : bc->a) in_ab[static_cast<std::size_t>(x)] = 1;
  for (int x : bc->b) in_ab[static_cast<std::size_t>(x)] = 1;
  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!in_ab[static_cast<std::size_t>(v)]) outside.push_back(v);
  }
  for (int u : bc->a) {
    for (int v : bc->b) {
      std::vector<int> keep = outside;
      keep.push_back(u);
      keep.push_back(v);
      consider(im_rec(restrict(sub, keep), opts));
    }
  }
  return best;
}

// ------------------------------------------------------------ list colouring

std::optional<std::vector<int>> list_rec(const Subgraph& sub, const ColorLists& lists, const ProblemOptions& opts) {
  const int n = sub.graph.vertex_count();
  for (const auto& l : lists) {
    if (l.empty()) return std::nullopt;
  }
  if (n == 0) return std::vector<int>{};
  const int t = ceil_sqrt(n);
  std::optional<Biclique> bc;
  if (t >= 2) bc = find_biclique(sub.graph, t);
  if (!bc) {
    ProblemOptions local = opts;
    local.lists = lists;
    const Solution s = solve(Problem::ListColoring, sub.graph, local);
    if (!s.feasible()) return std::nullopt;
    return s.colors;
  }

  // In a 3-colouring of K_{t,t} (t >= 2) one side is monochromatic. For a
  // side S coloured i: S must be independent with i in every list; delete S
  // and remove i from the lists of its neighbours.
  for (const auto* side : {&bc->a, &bc->b}) {
    bool independent = true;
    for (std::size_t x = 0; x < side->size() && independent; ++x) {
      for (std::size_t y = x + 1; y < side->size(); ++y) {
        if (sub.graph.has_edge((*side)[x], (*side)[y])) {
          independent = false;
          break;
        }
      }
    }
    if (!independent) continue;
    for (int i = 1; i <= 3; ++i) {
      bool allowed = true;
      for (int x : *side) {
        const auto& l = lists[static_cast<std::size_t>(x)];
        if (std::find(l.begin(), l.end(), i) == l.end()) allowed = false;
      }
      if (!allowed) continue;
      std::vector<char> in_side(static_cast<std::size_t>(n), 0);
      std::vector<char> near(static_cast<std::size_t>(n), 0);
      for (int x : *side) {
        in_side[static_cast<std::size_t>(x)] = 1;
        for (int w : sub.graph.neighbors(x)) near[static_cast<std::size_t>(w)] = 1;
      }
      Subgraph child = remove_vertices(sub.graph, *side);
      ColorLists child_lists;
      for (int v : child.original) {
        std::vector<int> l = lists[static_cast<std::size_t>(v)];
        if (near[static_cast<std::size_t>(v)]) l.erase(std::remove(l.begin(), l.end(), i), l.end());
        child_lists.push_back(std::move(l));
      }
      const std::vector<int> local_ids = child.original;
      for (int& v : child.original) v = sub.original[static_cast<std::size_t>(v)];
      if (auto sol = list_rec(child, child_lists, opts)) {
        std::vector<int> colors(static_cast<std::size_t>(n), i);
        for (std::size_t j = 0; j < local_ids.size(); ++j) colors[static_cast<std::size_t>(local_ids[j])] = (*sol)[j];
        return colors;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Solution vc_branch(const Graph& g, int k, const ProblemOptions& opts) {
  auto cover = vc_rec(identity(g), k, opts);
  if (!cover) return infeasible();
  Solution s;
  s.kind = SolutionKind::VertexSet;
  s.vertices = std::move(*cover);
  std::sort(s.vertices.begin(), s.vertices.end());
  return s;
}

Solution fvs_branch(const Graph& g, int k, const ProblemOptions& opts) {
  auto fvs = fvs_rec(identity(g), k, opts);
  if (!fvs) return infeasible();
  Solution s;
  s.kind = SolutionKind::VertexSet;
  s.vertices = std::move(*fvs);
  std::sort(s.vertices.begin(), s.vertices.end());
  return s;
}

Solution induced_matching_branch(const Graph& g, const ProblemOptions& opts) {
  Solution s;
  s.kind = SolutionKind::EdgeSet;
  s.edges = im_rec(identity(g), opts);
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Solution list3_branch(const Graph& g, const ColorLists& lists, const ProblemOptions& opts) {
  if (static_cast<int>(lists.size()) != g.vertex_count()) {
    throw std::invalid_argument("list3_branch: one list per vertex required");
  }
  auto colors = list_rec(identity(g), lists, opts);
  if (!colors) return infeasible();
  Solution s;
  s.kind = SolutionKind::Coloring;
  s.colors = std::move(*colors);
  return s;
}

std::vector<int> short_cycle(const Graph& g, int max_len) {
  const int n = g.vertex_count();
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (2 * dist[static_cast<std::size_t>(x)] + 1 > max_len) break;
      for (int y : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          q.push(y);
          continue;
        }
        if (y == parent[static_cast<std::size_t>(x)]) continue;
        const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
        if (len > max_len || (!best.empty() && len >= static_cast<int>(best.size()))) continue;
        std::vector<int> px;
        std::vector<int> py;
        for (int v = x; v != -1; v = parent[static_cast<std::size_t>(v)]) px.push_back(v);
        for (int v = y; v != -1; v = parent[static_cast<std::size_t>(v)]) py.push_back(v);
        // Simple only if the two tree paths meet just at s.
        std::vector<int> a(px.begin(), px.end() - 1);
        std::vector<int> b(py.begin(), py.end() - 1);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) continue;
        std::vector<int> cycle(px.rbegin(), px.rend());
        cycle.insert(cycle.end(), py.begin(), py.end() - 1);
        best = std::move(cycle);
      }
    }
  }
  return best;
}

CyclePackingResult cycle_packing_4approx(const Graph& g, const ProblemOptions& opts) {
  CyclePackingResult out;
  Subgraph cur = identity(g);
  while (true) {
    const std::vector<int> c = short_cycle(cur.graph, 4);
    if (c.empty()) break;
    out.stripped.push_back(to_original(cur, c));
    cur = drop(cur, c);
  }
  out.remainder = cur.graph;
  out.remainder_vertices = cur.original;
  const Solution rest = solve(Problem::CyclePacking, cur.graph, opts);
  out.solution.kind = SolutionKind::CycleSet;
  out.solution.cycles = out.stripped;
  for (const auto& c : rest.cycles) out.solution.cycles.push_back(to_original(cur, c));
  return out;
}

std::vector<int> greedy_color(const Graph& g) {
  const Degeneracy d = degeneracy(g);
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
    std::vector<char> used(static_cast<std::size_t>(g.degree(*it)) + 2, 0);
    for (int w : g.neighbors(*it)) {
      const int c = colors[static_cast<std::size_t>(w)];
      if (c > 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    colors[static_cast<std::size_t>(*it)] = c;
  }
  return colors;
}

}  // namespace outerstring
