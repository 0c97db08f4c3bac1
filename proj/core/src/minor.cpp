#include "outerstring/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace outerstring {

bool verify_minor_model(const Graph& g, const MinorModel& model) {
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < model.size(); ++i) {
    const auto& set = model.branch_sets[static_cast<std::size_t>(i)];
    if (set.empty()) return false;
    for (int v : set) {
      if (v < 0 || v >= g.vertex_count()) return false;
      if (owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = i;
    }
    if (!is_connected_subset(g, set)) return false;
  }
  const int h = model.size();
  std::vector<std::vector<char>> joined(static_cast<std::size_t>(h), std::vector<char>(static_cast<std::size_t>(h), 0));
  for (const auto& [u, v] : g.edges()) {
    const int a = owner[static_cast<std::size_t>(u)];
    const int b = owner[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0 && a != b) {
      joined[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      joined[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
  }
  for (int a = 0; a < h; ++a) {
    for (int b = a + 1; b < h; ++b) {
      if (!joined[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// A minor of the input graph: each node carries the set of original vertices
// contracted into it; adjacency is kept explicitly so that edge deletions can
// be represented. An edge in `fixed` has been ruled out for contraction: its
// endpoints must end up in different branch sets (or unused).
struct State {
  std::vector<Mask> sets;
  std::vector<Mask> adj;    // adjacency over node indices
  std::vector<Mask> fixed;  // subset of adj

  int size() const { return static_cast<int>(sets.size()); }
  int degree(int i) const { return std::popcount(adj[static_cast<std::size_t>(i)]); }
  Mask free_edges(int i) const { return adj[static_cast<std::size_t>(i)] & ~fixed[static_cast<std::size_t>(i)]; }
  int edge_count() const {
    int total = 0;
    for (Mask a : adj) total += std::popcount(a);
    return total / 2;
  }

  static Mask relabel(Mask m, int from, int to) {
    if (m & (Mask{1} << from)) {
      m &= ~(Mask{1} << from);
      m |= Mask{1} << to;
    }
    return m;
  }

  void remove_node(int i) {
    const int last = size() - 1;
    const Mask bit = ~(Mask{1} << i);
    for (int j = 0; j <= last; ++j) {
      adj[static_cast<std::size_t>(j)] &= bit;
      fixed[static_cast<std::size_t>(j)] &= bit;
    }
    // Move the last node into slot i.
    if (i != last) {
      sets[static_cast<std::size_t>(i)] = sets[static_cast<std::size_t>(last)];
      adj[static_cast<std::size_t>(i)] = adj[static_cast<std::size_t>(last)];
      fixed[static_cast<std::size_t>(i)] = fixed[static_cast<std::size_t>(last)];
      for (int j = 0; j < last; ++j) {
        adj[static_cast<std::size_t>(j)] = relabel(adj[static_cast<std::size_t>(j)], last, i);
        fixed[static_cast<std::size_t>(j)] = relabel(fixed[static_cast<std::size_t>(j)], last, i);
      }
    }
    sets.pop_back();
    adj.pop_back();
    fixed.pop_back();
  }

  // Merge node j into node i, then drop j. A neighbour fixed against either
  // endpoint stays fixed against the merged node.
  void contract(int i, int j) {
    sets[static_cast<std::size_t>(i)] |= sets[static_cast<std::size_t>(j)];
    const Mask ends = (Mask{1} << i) | (Mask{1} << j);
    const Mask merged = (adj[static_cast<std::size_t>(i)] | adj[static_cast<std::size_t>(j)]) & ~ends;
    const Mask merged_fixed = (fixed[static_cast<std::size_t>(i)] | fixed[static_cast<std::size_t>(j)]) & ~ends;
    adj[static_cast<std::size_t>(i)] = merged;
    fixed[static_cast<std::size_t>(i)] = merged_fixed;
    for (int k = 0; k < size(); ++k) {
      if (merged & (Mask{1} << k)) adj[static_cast<std::size_t>(k)] |= Mask{1} << i;
      if (merged_fixed & (Mask{1} << k)) fixed[static_cast<std::size_t>(k)] |= Mask{1} << i;
    }
    remove_node(j);
  }

  void fix_edge(int i, int j) {
    fixed[static_cast<std::size_t>(i)] |= Mask{1} << j;
    fixed[static_cast<std::size_t>(j)] |= Mask{1} << i;
  }

  // Canonical form independent of node order.
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> out;
    out.reserve(2 * sets.size());
    for (int i = 0; i < size(); ++i) {
      Mask neighbours = 0;
      Mask fixed_neighbours = 0;
      for (int j : mask_vertices(adj[static_cast<std::size_t>(i)])) neighbours |= sets[static_cast<std::size_t>(j)];
      for (int j : mask_vertices(fixed[static_cast<std::size_t>(i)])) fixed_neighbours |= sets[static_cast<std::size_t>(j)];
      out.push_back((std::uint64_t{sets[static_cast<std::size_t>(i)]} << 32) | neighbours);
      out.push_back((std::uint64_t{sets[static_cast<std::size_t>(i)]} << 32) | fixed_neighbours);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : k) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

bool find_clique(const State& s, int h, Mask candidates, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == h) return true;
  while (candidates != 0) {
    if (static_cast<int>(chosen.size()) + std::popcount(candidates) < h) return false;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    chosen.push_back(v);
    if (find_clique(s, h, candidates & s.adj[static_cast<std::size_t>(v)], chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Every K_h model arises by contracting a spanning tree of each branch set,
// so branching on "contract this edge" versus "never contract it" and then
// looking for an h-clique among the nodes is complete.
class MinorSearch {
 public:
  explicit MinorSearch(int h) : h_(h) {}

  std::optional<MinorModel> run(State s) {
    reduce(s);
    if (s.size() < h_ || s.edge_count() < h_ * (h_ - 1) / 2) return std::nullopt;

    Mask eligible = 0;
    for (int i = 0; i < s.size(); ++i) {
      if (s.degree(i) >= h_ - 1) eligible |= Mask{1} << i;
    }
    std::vector<int> clique;
    if (find_clique(s, h_, eligible, clique)) {
      MinorModel model;
      for (int i : clique) model.branch_sets.push_back(mask_vertices(s.sets[static_cast<std::size_t>(i)]));
      return model;
    }

    // Branch on a contractible edge at the node of smallest degree.
    int u = -1;
    for (int i = 0; i < s.size(); ++i) {
      if (s.free_edges(i) != 0 && (u < 0 || s.degree(i) < s.degree(u))) u = i;
    }
    if (u < 0) return std::nullopt;

    auto key = s.key();
    if (failed_.count(key)) return std::nullopt;

    int v = -1;
    for (int j : mask_vertices(s.free_edges(u))) {
      if (v < 0 || s.degree(j) > s.degree(v)) v = j;
    }

    State contracted = s;
    contracted.contract(std::min(u, v), std::max(u, v));
    if (auto found = run(std::move(contracted))) return found;

    State kept = std::move(s);
    kept.fix_edge(u, v);
    if (auto found = run(std::move(kept))) return found;

    failed_.insert(std::move(key));
    return std::nullopt;
  }

 private:
  // Safe reductions. A node of degree <= 1 is never needed for h >= 3. A node
  // whose edges are all fixed can only be a singleton branch set, which needs
  // degree h - 1. For h >= 4 a degree-2 node with both edges contractible can
  // be merged into a neighbour: it is a leaf of its branch set or a path
  // vertex inside one, and either way the merge keeps the model.
  void reduce(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < s.size(); ++i) {
        const int d = s.degree(i);
        if (d <= 1 || (s.free_edges(i) == 0 && d < h_ - 1)) {
          s.remove_node(i);
          changed = true;
          break;
        }
        if (d == 2 && h_ >= 4 && s.free_edges(i) == s.adj[static_cast<std::size_t>(i)]) {
          const int j = std::countr_zero(s.adj[static_cast<std::size_t>(i)]);
          s.contract(std::min(i, j), std::max(i, j));
          changed = true;
          break;
        }
      }
    }
  }

  int h_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed_;
};

// K_3 minors are cycles: split one into three paths.
std::optional<MinorModel> triangle_minor(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (depth[static_cast<std::size_t>(w)] >= 0) {
          // Non-tree edge v-w closes a cycle through their tree paths.
          std::vector<int> a{v};
          std::vector<int> b{w};
          int x = v;
          int y = w;
          while (x != y) {
            if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
              x = parent[static_cast<std::size_t>(x)];
              a.push_back(x);
            } else {
              y = parent[static_cast<std::size_t>(y)];
              b.push_back(y);
            }
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          std::vector<int> cycle = a;
          cycle.insert(cycle.end(), b.begin(), b.end());
          MinorModel model;
          model.branch_sets.push_back({cycle[0]});
          model.branch_sets.push_back({cycle[1]});
          model.branch_sets.push_back(std::vector<int>(cycle.begin() + 2, cycle.end()));
          return model;
        }
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MinorModel> find_clique_minor(const Graph& g, int h, int vertex_cap) {
  if (h < 1) throw std::invalid_argument("find_clique_minor: h must be >= 1");
  vertex_cap = std::min(vertex_cap, 32);
  if (g.vertex_count() > vertex_cap) {
    throw SizeLimitExceeded("find_clique_minor: " + std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                            std::to_string(vertex_cap));
  }
  if (h == 1) {
    if (g.vertex_count() == 0) return std::nullopt;
    return MinorModel{{{0}}};
  }
  if (h == 2) {
    const auto edges = g.edges();
    if (edges.empty()) return std::nullopt;
    return MinorModel{{{edges[0].first}, {edges[0].second}}};
  }
  if (h == 3) return triangle_minor(g);

  State s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    s.sets.push_back(Mask{1} << v);
    Mask a = 0;
    for (int w : g.neighbors(v)) a |= Mask{1} << w;
    s.adj.push_back(a);
    s.fixed.push_back(0);
  }
  MinorSearch search(h);
  auto model = search.run(std::move(s));
  if (model) {
    for (auto& set : model->branch_sets) std::sort(set.begin(), set.end());
  }
  return model;
}

MinorModel greedy_clique_minor(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  std::set<int> alive;
  for (int v = 0; v < n; ++v) {
    sets[static_cast<std::size_t>(v)] = {v};
    adj[static_cast<std::size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    alive.insert(v);
  }
  MinorModel best;
  while (!alive.empty()) {
    // The component of a minimum-degree node; isolated leftovers are dropped.
    int u = *alive.begin();
    for (int v : alive) {
      if (adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(u)].size()) u = v;
    }
    const std::size_t k = alive.size();
    bool complete = true;
    for (int v : alive) {
      if (adj[static_cast<std::size_t>(v)].size() != k - 1) {
        complete = false;
        break;
      }
    }
    if (complete) {
      MinorModel model;
      for (int v : alive) model.branch_sets.push_back(sets[static_cast<std::size_t>(v)]);
      if (model.size() > best.size()) best = std::move(model);
      break;
    }
    if (adj[static_cast<std::size_t>(u)].empty()) {
      if (best.size() < 1) best = MinorModel{{sets[static_cast<std::size_t>(u)]}};
      alive.erase(u);
      continue;
    }
    // Contract u into the neighbour sharing the fewest neighbours with it.
    int target = -1;
    std::size_t best_common = 0;
    for (int w : adj[static_cast<std::size_t>(u)]) {
      std::size_t common = 0;
      for (int x : adj[static_cast<std::size_t>(w)]) common += adj[static_cast<std::size_t>(u)].count(x);
      if (target < 0 || common < best_common) {
        target = w;
        best_common = common;
      }
    }
    auto& into = sets[static_cast<std::size_t>(target)];
    into.insert(into.end(), sets[static_cast<std::size_t>(u)].begin(), sets[static_cast<std::size_t>(u)].end());
    std::sort(into.begin(), into.end());
    for (int x : adj[static_cast<std::size_t>(u)]) {
      adj[static_cast<std::size_t>(x)].erase(u);
      if (x != target) {
        adj[static_cast<std::size_t>(x)].insert(target);
        adj[static_cast<std::size_t>(target)].insert(x);
      }
    }
    adj[static_cast<std::size_t>(u)].clear();
    alive.erase(u);
  }
  if (best.size() == 0 && n > 0) best = MinorModel{{{0}}};
  return best;
}

}  // namespace outerstring
