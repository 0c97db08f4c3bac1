#include "outerstring/sparsity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace outerstring {

Degeneracy degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  Degeneracy out;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.insert({g.degree(v), v});
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.value = std::max(out.value, d);
    out.order.push_back(v);
    removed[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      auto& dw = deg[static_cast<std::size_t>(w)];
      queue.erase({dw, w});
      --dw;
      queue.insert({dw, w});
    }
  }
  return out;
}

std::vector<int> k_core(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) < k) {
      removed[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] < k) {
        removed[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

namespace {

class Dinic {
 public:
  explicit Dinic(int n) : graph_(static_cast<std::size_t>(n)), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  void add(int u, int v, long long cap) {
    graph_[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    graph_[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0});
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (long long pushed = dfs(s, t, kInf)) flow += pushed;
    }
    return flow;
  }

  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

 private:
  struct Arc {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int id : graph_[static_cast<std::size_t>(u)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    auto& i = it_[static_cast<std::size_t>(u)];
    const auto& out = graph_[static_cast<std::size_t>(u)];
    for (; i < static_cast<int>(out.size()); ++i) {
      Arc& a = arcs_[static_cast<std::size_t>(out[static_cast<std::size_t>(i)])];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      const long long pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[static_cast<std::size_t>(out[static_cast<std::size_t>(i)] ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

bool arboricity_at_most(const Graph& g, int k) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const long long m = static_cast<long long>(edges.size());
  if (m == 0) return k >= 0;
  if (k <= 0) return false;

  // Densest-subgraph closure: with v forced to the source side, the min cut
  // equals m - max_{S containing v} (e(S) - k|S|). Vertices already checked
  // are forced to the sink side, since any violating set through them was
  // ruled out earlier.
  const int source = 0;
  const int sink = 1;
  auto vnode = [](int v) { return 2 + v; };
  auto enode = [n](std::size_t e) { return 2 + n + static_cast<int>(e); };

  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    Dinic flow(2 + n + static_cast<int>(m));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      flow.add(source, enode(e), 1);
      flow.add(enode(e), vnode(edges[e].first), Dinic::kInf);
      flow.add(enode(e), vnode(edges[e].second), Dinic::kInf);
    }
    for (int u = 0; u < n; ++u) {
      if (u < v) {
        flow.add(vnode(u), sink, Dinic::kInf);
      } else {
        flow.add(vnode(u), sink, k);
      }
    }
    flow.add(source, vnode(v), Dinic::kInf);
    const long long cut = flow.max_flow(source, sink);
    if (m - cut > -static_cast<long long>(k)) return false;
  }
  return true;
}

int arboricity(const Graph& g) {
  const int n = g.vertex_count();
  const long long m = static_cast<long long>(g.edge_count());
  if (m == 0) return 0;
  const int lower = static_cast<int>((m + n - 2) / (n - 1));
  const int upper = std::max(lower, degeneracy(g).value);
  for (int k = std::max(1, lower); k < upper; ++k) {
    if (arboricity_at_most(g, k)) return k;
  }
  return upper;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool extend_biclique(const Graph& g, const std::vector<int>& candidates, std::size_t from, int t,
                     std::vector<int>& chosen, const std::vector<int>& common, Biclique& out) {
  if (static_cast<int>(chosen.size()) == t) {
    out.a = chosen;
    out.b.assign(common.begin(), common.begin() + t);
    return true;
  }
  const std::size_t need = static_cast<std::size_t>(t) - chosen.size();
  for (std::size_t i = from; i + need <= candidates.size(); ++i) {
    const int v = candidates[i];
    std::vector<int> next = chosen.empty() ? g.neighbors(v) : intersect_sorted(common, g.neighbors(v));
    if (static_cast<int>(next.size()) < t) continue;
    chosen.push_back(v);
    if (extend_biclique(g, candidates, i + 1, t, chosen, next, out)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Biclique> find_biclique(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("find_biclique: t must be >= 1");
  // Every vertex of a K_{t,t} has degree >= t inside it, so the t-core
  // contains all of them.
  const std::vector<int> core = k_core(g, t);
  if (static_cast<int>(core.size()) < 2 * t) return std::nullopt;
  const Subgraph sub = induced_subgraph(g, core);
  std::vector<int> candidates(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) candidates[i] = static_cast<int>(i);
  std::vector<int> chosen;
  Biclique found;
  if (!extend_biclique(sub.graph, candidates, 0, t, chosen, {}, found)) return std::nullopt;
  for (int& v : found.a) v = sub.original[static_cast<std::size_t>(v)];
  for (int& v : found.b) v = sub.original[static_cast<std::size_t>(v)];
  return found;
}

bool is_biclique(const Graph& g, const Biclique& b) {
  std::vector<int> all = b.a;
  all.insert(all.end(), b.b.begin(), b.b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int u : b.a) {
    for (int v : b.b) {
      if (!g.has_edge(u, v)) return false;
    }
  }
  return true;
}

}  // namespace outerstring
