#include "outerstring/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace outerstring {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  DecompositionCheck out;
  out.width = td.width();
  const int n = g.vertex_count();
  const int nodes = td.node_count();

  // The tree itself: nodes-1 edges, connected, no self loops.
  if (nodes == 0 && n > 0) out.violations.push_back("decomposition has no bags");
  if (nodes > 0 && static_cast<int>(td.tree_edges.size()) != nodes - 1) {
    out.violations.push_back("tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                             std::to_string(nodes) + " nodes");
  }
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      out.violations.push_back("bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
      continue;
    }
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  if (nodes > 0) {
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : tree[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != nodes) out.violations.push_back("tree is disconnected");
  }

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  std::vector<std::set<int>> bag_sets(static_cast<std::size_t>(nodes));
  for (int x = 0; x < nodes; ++x) {
    for (int v : td.bags[static_cast<std::size_t>(x)]) {
      if (v < 0 || v >= n) {
        out.violations.push_back("bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
        continue;
      }
      holders[static_cast<std::size_t>(v)].push_back(x);
      bag_sets[static_cast<std::size_t>(x)].insert(v);
    }
  }

  for (int v = 0; v < n; ++v) {
    const auto& hv = holders[static_cast<std::size_t>(v)];
    if (hv.empty()) {
      out.violations.push_back("vertex " + std::to_string(v) + " is in no bag");
      continue;
    }
    // Bags holding v must form a connected subtree.
    std::set<int> want(hv.begin(), hv.end());
    std::set<int> seen{hv.front()};
    std::vector<int> stack{hv.front()};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree[static_cast<std::size_t>(x)]) {
        if (want.count(y) && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (seen.size() != want.size()) {
      out.violations.push_back("bags holding vertex " + std::to_string(v) + " are not connected");
    }
  }

  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (int x : holders[static_cast<std::size_t>(u)]) {
      if (bag_sets[static_cast<std::size_t>(x)].count(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  out.valid = out.violations.empty();
  return out;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("decomposition_from_order: order is not a permutation");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("decomposition_from_order: order is not a permutation");
    }
    position[static_cast<std::size_t>(v)] = i;
  }

  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());

  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    std::vector<int> later(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    auto& bag = td.bags[static_cast<std::size_t>(i)];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    int next = -1;
    for (int w : later) {
      if (next < 0 || position[static_cast<std::size_t>(w)] < next) next = position[static_cast<std::size_t>(w)];
    }
    parent[static_cast<std::size_t>(i)] = next;
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[static_cast<std::size_t>(later[a])].insert(later[b]);
        adj[static_cast<std::size_t>(later[b])].insert(later[a]);
      }
    }
    for (int w : later) adj[static_cast<std::size_t>(w)].erase(v);
    adj[static_cast<std::size_t>(v)].clear();
  }
  // Roots of separate components are chained so the result is one tree.
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[static_cast<std::size_t>(i)] >= 0) {
      td.tree_edges.emplace_back(i, parent[static_cast<std::size_t>(i)]);
    } else {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));

  auto fill = [&adj](int v) {
    const auto& nv = adj[static_cast<std::size_t>(v)];
    long long missing = 0;
    for (auto a = nv.begin(); a != nv.end(); ++a) {
      for (auto b = std::next(a); b != nv.end(); ++b) {
        if (!adj[static_cast<std::size_t>(*a)].count(*b)) ++missing;
      }
    }
    return missing;
  };

  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      const long long f = fill(v);
      if (best < 0 || f < best_fill) {
        best = v;
        best_fill = f;
        if (f == 0) break;
      }
    }
    order.push_back(best);
    gone[static_cast<std::size_t>(best)] = 1;
    std::vector<int> nb(adj[static_cast<std::size_t>(best)].begin(), adj[static_cast<std::size_t>(best)].end());
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[static_cast<std::size_t>(nb[a])].insert(nb[b]);
        adj[static_cast<std::size_t>(nb[b])].insert(nb[a]);
      }
    }
    for (int w : nb) adj[static_cast<std::size_t>(w)].erase(best);
    adj[static_cast<std::size_t>(best)].clear();
  }
  return order;
}

TreeDecomposition treewidth_heuristic(const Graph& g) { return decomposition_from_order(g, min_fill_order(g)); }

namespace {

using Mask = std::uint64_t;

// Contraction degeneracy estimate (minor-min-width): a lower bound on treewidth.
int minor_min_width(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::set<int> alive;
  for (int v = 0; v < n; ++v) alive.insert(v);
  int lb = 0;
  while (alive.size() > 1) {
    int v = -1;
    for (int x : alive) {
      if (v < 0 || adj[static_cast<std::size_t>(x)].size() < adj[static_cast<std::size_t>(v)].size()) v = x;
    }
    lb = std::max(lb, static_cast<int>(adj[static_cast<std::size_t>(v)].size()));
    if (adj[static_cast<std::size_t>(v)].empty()) {
      alive.erase(v);
      continue;
    }
    int u = -1;
    std::size_t best_common = 0;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      std::size_t common = 0;
      for (int x : adj[static_cast<std::size_t>(w)]) common += adj[static_cast<std::size_t>(v)].count(x);
      if (u < 0 || common < best_common) {
        u = w;
        best_common = common;
      }
    }
    for (int x : adj[static_cast<std::size_t>(v)]) {
      adj[static_cast<std::size_t>(x)].erase(v);
      if (x != u) {
        adj[static_cast<std::size_t>(x)].insert(u);
        adj[static_cast<std::size_t>(u)].insert(x);
      }
    }
    adj[static_cast<std::size_t>(v)].clear();
    alive.erase(v);
  }
  return lb;
}

// |Q(S, v)|: vertices outside S + v adjacent to the component of v in G[S + v].
int q_size(const std::vector<Mask>& adj, Mask s, int v) {
  Mask comp = Mask{1} << v;
  Mask frontier = comp;
  Mask reach = adj[static_cast<std::size_t>(v)];
  while (frontier != 0) {
    Mask next = 0;
    Mask f = frontier;
    while (f != 0) {
      const int x = std::countr_zero(f);
      f &= f - 1;
      next |= adj[static_cast<std::size_t>(x)] & s & ~comp;
    }
    comp |= next;
    frontier = next;
    Mask g = next;
    while (g != 0) {
      const int x = std::countr_zero(g);
      g &= g - 1;
      reach |= adj[static_cast<std::size_t>(x)];
    }
  }
  return std::popcount(reach & ~comp & ~s);
}

// Decides tw <= k over the subset lattice. Returns an elimination order on
// success, empty otherwise.
std::vector<int> elimination_order_within(const std::vector<Mask>& adj, int n, int k) {
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  // parent[S] = last vertex added to reach S.
  std::vector<std::unordered_map<Mask, int>> layers(static_cast<std::size_t>(n) + 1);
  layers[0].emplace(0, -1);

  auto finish = [&](Mask s, int size) {
    std::vector<int> order;
    Mask cur = s;
    for (int level = size; level > 0; --level) {
      const int v = layers[static_cast<std::size_t>(level)].at(cur);
      order.push_back(v);
      cur &= ~(Mask{1} << v);
    }
    std::reverse(order.begin(), order.end());
    for (int v = 0; v < n; ++v) {
      if (!(s & (Mask{1} << v))) order.push_back(v);
    }
    return order;
  };

  for (int size = 0; size <= n; ++size) {
    auto& layer = layers[static_cast<std::size_t>(size)];
    if (layer.empty()) return {};
    // Once at most k+1 vertices remain they can be eliminated in any order.
    if (n - size - 1 <= k) return finish(layer.begin()->first, size);
    if (size == n) return finish(all, size);
    auto& next_layer = layers[static_cast<std::size_t>(size) + 1];
    for (const auto& [s, unused] : layer) {
      (void)unused;
      Mask rest = all & ~s;
      while (rest != 0) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const Mask t = s | (Mask{1} << v);
        if (next_layer.count(t)) continue;
        if (q_size(adj, s, v) <= k) next_layer.emplace(t, v);
      }
    }
  }
  return {};
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int vertex_cap) {
  const int n = g.vertex_count();
  vertex_cap = std::min(vertex_cap, 64);
  if (n > vertex_cap) {
    throw SizeLimitExceeded("treewidth_exact: " + std::to_string(n) + " vertices exceed the cap of " +
                            std::to_string(vertex_cap));
  }
  TreewidthResult out;
  if (n == 0) return out;

  TreeDecomposition heuristic = treewidth_heuristic(g);
  const int ub = heuristic.width();
  const int lb = std::max(minor_min_width(g), 0);
  if (lb >= ub) {
    out.tw = ub;
    out.td = std::move(heuristic);
    return out;
  }
  const std::vector<Mask> adj = adjacency_masks(g);
  for (int k = lb; k < ub; ++k) {
    std::vector<int> order = elimination_order_within(adj, n, k);
    if (!order.empty()) {
      out.td = decomposition_from_order(g, order);
      out.tw = out.td.width();
      return out;
    }
  }
  out.tw = ub;
  out.td = std::move(heuristic);
  return out;
}

}  // namespace outerstring
