#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "outerstring/solvers.hpp"

namespace outerstring {

namespace {

using Mask = std::uint32_t;

std::vector<int> bits(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool is_forest_after_removing(const Graph& g, const std::vector<Mask>& adj, Mask removed) {
  const int n = g.vertex_count();
  const Mask keep = ((Mask{1} << n) - 1) & ~removed;
  int edges = 0;
  for (int v : bits(keep)) edges += std::popcount(adj[static_cast<std::size_t>(v)] & keep);
  edges /= 2;
  // A graph is a forest iff |E| = |V| - #components.
  int components = 0;
  Mask unseen = keep;
  while (unseen != 0) {
    ++components;
    Mask frontier = unseen & (~unseen + 1);
    Mask comp = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : bits(frontier)) next |= adj[static_cast<std::size_t>(v)] & keep;
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    unseen &= ~comp;
  }
  return edges == std::popcount(keep) - components;
}

Solution vertex_set(Mask m) {
  Solution s;
  s.kind = SolutionKind::VertexSet;
  s.vertices = bits(m);
  return s;
}

Solution best_subset(int n, bool maximize, const std::function<bool(Mask)>& ok) {
  const Mask limit = Mask{1} << n;
  bool found = false;
  Mask best = 0;
  for (Mask m = 0; m < limit; ++m) {
    if (found && (maximize ? std::popcount(m) <= std::popcount(best) : std::popcount(m) >= std::popcount(best))) continue;
    if (ok(m)) {
      best = m;
      found = true;
    }
  }
  return found ? vertex_set(best) : infeasible();
}

Solution color_backtrack(const Graph& g, const std::function<std::vector<int>(int)>& allowed) {
  const int n = g.vertex_count();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int c : allowed(v)) {
      bool clash = false;
      for (int w : g.neighbors(v)) {
        if (w < v && colors[static_cast<std::size_t>(w)] == c) clash = true;
      }
      if (clash) continue;
      colors[static_cast<std::size_t>(v)] = c;
      if (rec(v + 1)) return true;
    }
    colors[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  if (!rec(0)) return infeasible();
  Solution s;
  s.kind = SolutionKind::Coloring;
  s.colors = colors;
  return s;
}

Solution brute_induced_matching(const Graph& g, const std::vector<Mask>& adj) {
  const int n = g.vertex_count();
  Mask best = 0;
  for (Mask w = 0; w < (Mask{1} << n); ++w) {
    if (std::popcount(w) <= std::popcount(best) || std::popcount(w) % 2 != 0) continue;
    bool ok = true;
    for (int v : bits(w)) {
      if (std::popcount(adj[static_cast<std::size_t>(v)] & w) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) best = w;
  }
  Solution s;
  s.kind = SolutionKind::EdgeSet;
  for (int v : bits(best)) {
    const int u = std::countr_zero(adj[static_cast<std::size_t>(v)] & best);
    if (v < u) s.edges.emplace_back(v, u);
  }
  return s;
}

Solution brute_cycle_packing(const Graph& g, const std::vector<Mask>& adj) {
  const int n = g.vertex_count();
  const Mask full = Mask{1} << n;
  // ends[m]: vertices v such that a path from the lowest vertex of m to v
  // visits exactly m.
  std::vector<Mask> ends(full, 0);
  for (int v = 0; v < n; ++v) ends[Mask{1} << v] = Mask{1} << v;
  for (Mask m = 1; m < full; ++m) {
    if (std::popcount(m) < 2) continue;
    const int low = std::countr_zero(m);
    for (int v : bits(m & ~(Mask{1} << low))) {
      const Mask prev = m & ~(Mask{1} << v);
      if (ends[prev] & adj[static_cast<std::size_t>(v)]) ends[m] |= Mask{1} << v;
    }
  }
  auto has_cycle = [&](Mask m) {
    if (std::popcount(m) < 3) return false;
    const int low = std::countr_zero(m);
    return (ends[m] & adj[static_cast<std::size_t>(low)]) != 0;
  };
  std::vector<int> best(full, 0);
  std::vector<Mask> choice(full, 0);
  for (Mask m = 1; m < full; ++m) {
    const int low = std::countr_zero(m);
    const Mask lowbit = Mask{1} << low;
    best[m] = best[m & ~lowbit];
    const Mask rest = m & ~lowbit;
    // Cycles through the lowest vertex.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask c = sub | lowbit;
      if (has_cycle(c) && 1 + best[m & ~c] > best[m]) {
        best[m] = 1 + best[m & ~c];
        choice[m] = c;
      }
      if (sub == 0) break;
    }
  }
  Solution s;
  s.kind = SolutionKind::CycleSet;
  Mask m = full - 1;
  while (m != 0) {
    if (choice[m] == 0) {
      m &= m - 1;
      continue;
    }
    const Mask c = choice[m];
    // Walk the Hamiltonian path backwards, then close it.
    std::vector<int> cycle;
    const int low = std::countr_zero(c);
    int v = std::countr_zero(ends[c] & adj[static_cast<std::size_t>(low)]);
    Mask cur = c;
    while (true) {
      cycle.push_back(v);
      if (std::popcount(cur) == 1) break;
      const Mask prev = cur & ~(Mask{1} << v);
      v = std::countr_zero(ends[prev] & adj[static_cast<std::size_t>(v)]);
      cur = prev;
    }
    std::reverse(cycle.begin(), cycle.end());
    s.cycles.push_back(cycle);
    m &= ~c;
  }
  return s;
}

}  // namespace

Solution brute_force(Problem p, const Graph& g, const ProblemOptions& opts) {
  const int n = g.vertex_count();
  const int cap = (p == Problem::InducedMatching || p == Problem::CyclePacking) ? 12 : 16;
  if (n > cap) {
    throw SizeLimitExceeded("brute_force(" + to_string(p) + "): " + std::to_string(n) + " vertices exceed the cap of " +
                            std::to_string(cap));
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  const Mask all = (Mask{1} << n) - 1;
  switch (p) {
    case Problem::IndependentSet:
      return best_subset(n, true, [&](Mask m) {
        for (int v : bits(m)) {
          if (adj[static_cast<std::size_t>(v)] & m) return false;
        }
        return true;
      });
    case Problem::VertexCover:
      return best_subset(n, false, [&](Mask m) {
        for (int v : bits(all & ~m)) {
          if (adj[static_cast<std::size_t>(v)] & ~m & all) return false;
        }
        return true;
      });
    case Problem::DominatingSet:
      return best_subset(n, false, [&](Mask m) {
        for (int v : bits(all & ~m)) {
          if (!(adj[static_cast<std::size_t>(v)] & m)) return false;
        }
        return true;
      });
    case Problem::FeedbackVertexSet:
      return best_subset(n, false, [&](Mask m) { return is_forest_after_removing(g, adj, m); });
    case Problem::Coloring: {
      std::vector<int> palette;
      for (int c = 1; c <= opts.colors; ++c) palette.push_back(c);
      return color_backtrack(g, [&](int) { return palette; });
    }
    case Problem::ListColoring:
      if (static_cast<int>(opts.lists.size()) != n) throw std::invalid_argument("list colouring needs one list per vertex");
      return color_backtrack(g, [&](int v) { return opts.lists[static_cast<std::size_t>(v)]; });
    case Problem::InducedMatching:
      return brute_induced_matching(g, adj);
    case Problem::CyclePacking:
      return brute_cycle_packing(g, adj);
  }
  return infeasible();
}

}  // namespace outerstring
