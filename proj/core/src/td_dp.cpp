#include "outerstring/nice_decomposition.hpp"
#include "outerstring/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace outerstring {

std::string to_string(Problem p) {
  switch (p) {
    case Problem::IndependentSet: return "IndependentSet";
    case Problem::VertexCover: return "VertexCover";
    case Problem::DominatingSet: return "DominatingSet";
    case Problem::FeedbackVertexSet: return "FeedbackVertexSet";
    case Problem::Coloring: return "Coloring";
    case Problem::ListColoring: return "List3Coloring";
    case Problem::InducedMatching: return "InducedMatching";
    case Problem::CyclePacking: return "CyclePacking";
  }
  return "Unknown";
}

std::optional<Problem> parse_problem(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  static const std::map<std::string, Problem> names = {
      {"independentset", Problem::IndependentSet}, {"is", Problem::IndependentSet},
      {"vertexcover", Problem::VertexCover},       {"vc", Problem::VertexCover},
      {"dominatingset", Problem::DominatingSet},   {"ds", Problem::DominatingSet},
      {"feedbackvertexset", Problem::FeedbackVertexSet}, {"fvs", Problem::FeedbackVertexSet},
      {"coloring", Problem::Coloring},             {"qcoloring", Problem::Coloring},
      {"list3coloring", Problem::ListColoring},    {"listcoloring", Problem::ListColoring},
      {"inducedmatching", Problem::InducedMatching}, {"cyclepacking", Problem::CyclePacking},
  };
  auto it = names.find(key);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

int Solution::value() const {
  switch (kind) {
    case SolutionKind::VertexSet: return static_cast<int>(vertices.size());
    case SolutionKind::EdgeSet: return static_cast<int>(edges.size());
    case SolutionKind::CycleSet: return static_cast<int>(cycles.size());
    case SolutionKind::Coloring: return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    case SolutionKind::Infeasible: return -1;
  }
  return -1;
}

Solution infeasible() { return Solution{}; }

namespace {

using State = std::u16string;

struct Transition {
  State state;
  long long gain = 0;
  bool used = false;
};

State erase_at(const State& s, std::size_t pos) {
  State out = s;
  out.erase(pos, 1);
  return out;
}

State insert_at(const State& s, std::size_t pos, char16_t value) {
  State out = s;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return out;
}

// Renumbers labels >= first so they appear in increasing order of first use.
void canonicalize(State& s, char16_t first) {
  std::map<char16_t, char16_t> remap;
  char16_t next = first;
  for (auto& c : s) {
    if (c < first) continue;
    auto it = remap.find(c);
    if (it == remap.end()) it = remap.emplace(c, next++).first;
    c = it->second;
  }
}

class Policy {
 public:
  virtual ~Policy() = default;
  virtual bool maximize() const = 0;
  virtual void introduce(const State& child, std::size_t pos, int v, std::vector<Transition>& out) const = 0;
  // Default: the edge imposes no change.
  virtual void introduce_edge(const State& s, std::size_t, std::size_t, std::vector<Transition>& out) const {
    out.push_back({s, 0, false});
  }
  virtual bool forget(const State& child, std::size_t pos, Transition& out) const = 0;
  virtual State join_key(const State& s) const { return s; }
  virtual bool join(const State& a, const State& b, Transition& out) const {
    if (a != b) return false;
    out.state = a;
    return true;
  }
};

// ---- Independent set: 0 out, 1 in. ----
class IndependentSetPolicy : public Policy {
 public:
  bool maximize() const override { return true; }
  void introduce(const State& c, std::size_t pos, int, std::vector<Transition>& out) const override {
    out.push_back({insert_at(c, pos, 0)});
    out.push_back({insert_at(c, pos, 1)});
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    if (s[pu] == 1 && s[pv] == 1) return;
    out.push_back({s});
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    out.state = erase_at(c, pos);
    out.gain = c[pos] == 1 ? 1 : 0;
    return true;
  }
};

// ---- Dominating set: 0 undominated, 1 dominated, 2 in D. ----
class DominatingSetPolicy : public Policy {
 public:
  bool maximize() const override { return false; }
  void introduce(const State& c, std::size_t pos, int, std::vector<Transition>& out) const override {
    out.push_back({insert_at(c, pos, 0)});
    out.push_back({insert_at(c, pos, 2)});
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    State t = s;
    if (t[pu] == 2 && t[pv] == 0) t[pv] = 1;
    if (t[pv] == 2 && t[pu] == 0) t[pu] = 1;
    out.push_back({t});
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    if (c[pos] == 0) return false;
    out.state = erase_at(c, pos);
    out.gain = c[pos] == 2 ? 1 : 0;
    return true;
  }
  State join_key(const State& s) const override {
    State k = s;
    for (auto& c : k) c = c == 2 ? 1 : 0;
    return k;
  }
  bool join(const State& a, const State& b, Transition& out) const override {
    out.state = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.state[i] = std::max(a[i], b[i]);
    return true;
  }
};

// Union-find over small index ranges.
struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

// ---- Feedback vertex set: 0 deleted, otherwise forest component label. ----
class FeedbackVertexSetPolicy : public Policy {
 public:
  bool maximize() const override { return false; }
  void introduce(const State& c, std::size_t pos, int, std::vector<Transition>& out) const override {
    out.push_back({insert_at(c, pos, 0)});
    State kept = insert_at(c, pos, 0xFFFF);
    canonicalize(kept, 1);
    out.push_back({kept});
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    if (s[pu] == 0 || s[pv] == 0) {
      out.push_back({s});
      return;
    }
    if (s[pu] == s[pv]) return;  // would close a cycle
    State t = s;
    const char16_t from = s[pv];
    for (auto& c : t) {
      if (c == from) c = s[pu];
    }
    canonicalize(t, 1);
    out.push_back({t});
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    out.state = erase_at(c, pos);
    canonicalize(out.state, 1);
    out.gain = c[pos] == 0 ? 1 : 0;
    return true;
  }
  State join_key(const State& s) const override {
    State k = s;
    for (auto& c : k) c = c == 0 ? 0 : 1;
    return k;
  }
  bool join(const State& a, const State& b, Transition& out) const override {
    const std::size_t w = a.size();
    Dsu dsu(w);
    for (const State* side : {&a, &b}) {
      std::map<char16_t, std::size_t> first;
      for (std::size_t i = 0; i < w; ++i) {
        const char16_t label = (*side)[i];
        if (label == 0) continue;
        auto [it, fresh] = first.emplace(label, i);
        if (!fresh && !dsu.unite(it->second, i)) return false;
      }
    }
    out.state = a;
    for (std::size_t i = 0; i < w; ++i) {
      if (a[i] != 0) out.state[i] = static_cast<char16_t>(1 + dsu.find(i));
    }
    canonicalize(out.state, 1);
    return true;
  }
};

// ---- Colourings: state is the colour. ----
class ColoringPolicy : public Policy {
 public:
  ColoringPolicy(int colors, const ColorLists* lists) : colors_(colors), lists_(lists) {}
  bool maximize() const override { return true; }
  void introduce(const State& c, std::size_t pos, int v, std::vector<Transition>& out) const override {
    if (lists_ != nullptr) {
      for (int col : (*lists_)[static_cast<std::size_t>(v)]) out.push_back({insert_at(c, pos, static_cast<char16_t>(col))});
    } else {
      for (int col = 1; col <= colors_; ++col) out.push_back({insert_at(c, pos, static_cast<char16_t>(col))});
    }
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    if (s[pu] != s[pv]) out.push_back({s});
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    out.state = erase_at(c, pos);
    return true;
  }

 private:
  int colors_;
  const ColorLists* lists_;
};

// ---- Induced matching: 0 outside V(M), 1 in V(M) unmatched, 2 matched. ----
class InducedMatchingPolicy : public Policy {
 public:
  bool maximize() const override { return true; }
  void introduce(const State& c, std::size_t pos, int, std::vector<Transition>& out) const override {
    out.push_back({insert_at(c, pos, 0)});
    out.push_back({insert_at(c, pos, 1)});
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    if (s[pu] == 0 || s[pv] == 0) {
      out.push_back({s});
      return;
    }
    // Both ends in V(M): the edge is in G[V(M)], so it must be a matching edge.
    if (s[pu] == 1 && s[pv] == 1) {
      State t = s;
      t[pu] = 2;
      t[pv] = 2;
      out.push_back({t, 1, true});
    }
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    if (c[pos] == 1) return false;
    out.state = erase_at(c, pos);
    return true;
  }
  State join_key(const State& s) const override {
    State k = s;
    for (auto& c : k) c = c == 0 ? 0 : 1;
    return k;
  }
  bool join(const State& a, const State& b, Transition& out) const override {
    out.state = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 2 && b[i] == 2) return false;
      out.state[i] = std::max(a[i], b[i]);
    }
    return true;
  }
};

// ---- Cycle packing: 0 degree 0, 1 degree 2, labels >= 2 pair up the two
// ends of a partial path. ----
class CyclePackingPolicy : public Policy {
 public:
  static constexpr char16_t kFree = 0;
  static constexpr char16_t kFull = 1;
  static constexpr char16_t kFirstLabel = 2;

  bool maximize() const override { return true; }
  void introduce(const State& c, std::size_t pos, int, std::vector<Transition>& out) const override {
    out.push_back({insert_at(c, pos, kFree)});
  }
  void introduce_edge(const State& s, std::size_t pu, std::size_t pv, std::vector<Transition>& out) const override {
    out.push_back({s});
    const char16_t a = s[pu];
    const char16_t b = s[pv];
    if (a == kFull || b == kFull) return;
    State t = s;
    long long gain = 0;
    if (a == kFree && b == kFree) {
      t[pu] = 0xFFFF;
      t[pv] = 0xFFFF;
    } else if (a == kFree) {
      t[pu] = b;
      t[pv] = kFull;
    } else if (b == kFree) {
      t[pv] = a;
      t[pu] = kFull;
    } else if (a == b) {
      t[pu] = kFull;
      t[pv] = kFull;
      gain = 1;
    } else {
      t[pu] = kFull;
      t[pv] = kFull;
      for (auto& c : t) {
        if (c == b) c = a;
      }
    }
    canonicalize(t, kFirstLabel);
    out.push_back({t, gain, true});
  }
  bool forget(const State& c, std::size_t pos, Transition& out) const override {
    if (c[pos] >= kFirstLabel) return false;
    out.state = erase_at(c, pos);
    canonicalize(out.state, kFirstLabel);
    return true;
  }
  State join_key(const State&) const override { return State(); }
  bool join(const State& a, const State& b, Transition& out) const override {
    const std::size_t w = a.size();
    auto degree = [](char16_t c) { return c == kFree ? 0 : (c == kFull ? 2 : 1); };
    std::vector<int> deg(w);
    for (std::size_t i = 0; i < w; ++i) {
      deg[i] = degree(a[i]) + degree(b[i]);
      if (deg[i] > 2) return false;
    }
    // Auxiliary multigraph on bag positions: one edge per partial path.
    std::vector<std::vector<std::size_t>> aux(w);
    for (const State* side : {&a, &b}) {
      std::map<char16_t, std::size_t> first;
      for (std::size_t i = 0; i < w; ++i) {
        const char16_t label = (*side)[i];
        if (label < kFirstLabel) continue;
        auto [it, fresh] = first.emplace(label, i);
        if (!fresh) {
          aux[it->second].push_back(i);
          aux[i].push_back(it->second);
        }
      }
    }
    out.state.assign(w, kFree);
    out.gain = 0;
    std::vector<char> seen(w, 0);
    char16_t next_label = kFirstLabel;
    for (std::size_t i = 0; i < w; ++i) {
      if (a[i] == kFull || b[i] == kFull) out.state[i] = kFull;
    }
    for (std::size_t i = 0; i < w; ++i) {
      if (seen[i] || aux[i].empty()) continue;
      // Collect the component.
      std::vector<std::size_t> comp;
      std::vector<std::size_t> stack{i};
      seen[i] = 1;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (std::size_t y : aux[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      std::vector<std::size_t> ends;
      for (std::size_t x : comp) {
        if (deg[x] == 1) ends.push_back(x);
      }
      if (ends.empty()) {
        ++out.gain;
        for (std::size_t x : comp) out.state[x] = kFull;
      } else {
        for (std::size_t x : comp) out.state[x] = kFull;
        out.state[ends[0]] = next_label;
        out.state[ends[1]] = next_label;
        ++next_label;
      }
    }
    canonicalize(out.state, kFirstLabel);
    return true;
  }
};

struct Entry {
  State state;
  long long value = 0;
  int left = -1;
  int right = -1;
  bool used = false;
};

struct Table {
  std::vector<Entry> entries;
  std::unordered_map<State, int> index;

  void offer(Entry e, bool maximize) {
    auto [it, fresh] = index.emplace(e.state, static_cast<int>(entries.size()));
    if (fresh) {
      entries.push_back(std::move(e));
      return;
    }
    Entry& cur = entries[static_cast<std::size_t>(it->second)];
    if (maximize ? e.value > cur.value : e.value < cur.value) cur = std::move(e);
  }
};

struct DpResult {
  bool feasible = false;
  long long value = 0;
  std::vector<int> forgotten;  // value of each vertex at its forget node, -1 if never forgotten
  std::vector<Edge> used_edges;
};

std::size_t position(const std::vector<int>& bag, int v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

DpResult run_dp(const Graph& g, const NiceDecomposition& nice, const Policy& policy) {
  const bool maximize = policy.maximize();
  std::vector<Table> tables(nice.nodes.size());
  std::vector<Transition> buffer;
  for (std::size_t x = 0; x < nice.nodes.size(); ++x) {
    const NiceNode& node = nice.nodes[x];
    Table& table = tables[x];
    switch (node.kind) {
      case NiceKind::Leaf:
        table.offer({State(), 0, -1, -1, false}, maximize);
        break;
      case NiceKind::IntroduceVertex: {
        const Table& child = tables[static_cast<std::size_t>(node.children[0])];
        const std::size_t pos = position(node.bag, node.vertex);
        for (std::size_t i = 0; i < child.entries.size(); ++i) {
          buffer.clear();
          policy.introduce(child.entries[i].state, pos, node.vertex, buffer);
          for (auto& t : buffer) {
            table.offer({std::move(t.state), child.entries[i].value + t.gain, static_cast<int>(i), -1, false}, maximize);
          }
        }
        break;
      }
      case NiceKind::IntroduceEdge: {
        const Table& child = tables[static_cast<std::size_t>(node.children[0])];
        const std::size_t pu = position(node.bag, node.edge.first);
        const std::size_t pv = position(node.bag, node.edge.second);
        for (std::size_t i = 0; i < child.entries.size(); ++i) {
          buffer.clear();
          policy.introduce_edge(child.entries[i].state, pu, pv, buffer);
          for (auto& t : buffer) {
            table.offer({std::move(t.state), child.entries[i].value + t.gain, static_cast<int>(i), -1, t.used}, maximize);
          }
        }
        break;
      }
      case NiceKind::Forget: {
        const Table& child = tables[static_cast<std::size_t>(node.children[0])];
        const std::size_t pos = position(nice.nodes[static_cast<std::size_t>(node.children[0])].bag, node.vertex);
        for (std::size_t i = 0; i < child.entries.size(); ++i) {
          Transition t;
          if (!policy.forget(child.entries[i].state, pos, t)) continue;
          table.offer({std::move(t.state), child.entries[i].value + t.gain, static_cast<int>(i), -1, false}, maximize);
        }
        break;
      }
      case NiceKind::Join: {
        const Table& left = tables[static_cast<std::size_t>(node.children[0])];
        const Table& right = tables[static_cast<std::size_t>(node.children[1])];
        std::unordered_map<State, std::vector<int>> buckets;
        for (std::size_t j = 0; j < right.entries.size(); ++j) {
          buckets[policy.join_key(right.entries[j].state)].push_back(static_cast<int>(j));
        }
        for (std::size_t i = 0; i < left.entries.size(); ++i) {
          auto it = buckets.find(policy.join_key(left.entries[i].state));
          if (it == buckets.end()) continue;
          for (int j : it->second) {
            Transition t;
            if (!policy.join(left.entries[i].state, right.entries[static_cast<std::size_t>(j)].state, t)) continue;
            table.offer({std::move(t.state),
                         left.entries[i].value + right.entries[static_cast<std::size_t>(j)].value + t.gain,
                         static_cast<int>(i), j, false},
                        maximize);
          }
        }
        break;
      }
    }
  }

  DpResult out;
  out.forgotten.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  const Table& root = tables[static_cast<std::size_t>(nice.root)];
  auto it = root.index.find(State());
  if (it == root.index.end()) return out;
  out.feasible = true;
  out.value = root.entries[static_cast<std::size_t>(it->second)].value;

  std::vector<std::pair<int, int>> stack{{nice.root, it->second}};
  while (!stack.empty()) {
    const auto [x, e] = stack.back();
    stack.pop_back();
    const NiceNode& node = nice.nodes[static_cast<std::size_t>(x)];
    const Entry& entry = tables[static_cast<std::size_t>(x)].entries[static_cast<std::size_t>(e)];
    if (node.kind == NiceKind::Forget) {
      const int c = node.children[0];
      const Entry& child = tables[static_cast<std::size_t>(c)].entries[static_cast<std::size_t>(entry.left)];
      out.forgotten[static_cast<std::size_t>(node.vertex)] =
          child.state[position(nice.nodes[static_cast<std::size_t>(c)].bag, node.vertex)];
    }
    if (node.kind == NiceKind::IntroduceEdge && entry.used) out.used_edges.push_back(node.edge);
    if (!node.children.empty()) stack.push_back({node.children[0], entry.left});
    if (node.children.size() > 1) stack.push_back({node.children[1], entry.right});
  }
  std::sort(out.used_edges.begin(), out.used_edges.end());
  return out;
}

// Splits an edge set in which every touched vertex has degree 2 into cycles.
std::vector<std::vector<int>> edges_to_cycles(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)] || adj[static_cast<std::size_t>(s)].empty()) continue;
    std::vector<int> cycle{s};
    seen[static_cast<std::size_t>(s)] = 1;
    int prev = s;
    int cur = adj[static_cast<std::size_t>(s)][0];
    while (cur != s) {
      cycle.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      const auto& a = adj[static_cast<std::size_t>(cur)];
      const int next = a[0] == prev ? a[1] : a[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

void check_lists(const Graph& g, const ColorLists& lists) {
  if (static_cast<int>(lists.size()) != g.vertex_count()) {
    throw std::invalid_argument("list colouring needs one list per vertex");
  }
  for (const auto& l : lists) {
    for (int c : l) {
      if (c < 1 || c > 3) throw std::invalid_argument("list colours must be in {1, 2, 3}");
    }
  }
}

}  // namespace

Solution solve_td(Problem p, const Graph& g, const TreeDecomposition& td, const ProblemOptions& opts) {
  if (td.width() > opts.width_cap) {
    throw WidthLimitExceeded("decomposition width " + std::to_string(td.width()) + " exceeds the cap of " +
                             std::to_string(opts.width_cap));
  }
  if (p == Problem::VertexCover) {
    Solution is = solve_td(Problem::IndependentSet, g, td, opts);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : is.vertices) in[static_cast<std::size_t>(v)] = 1;
    Solution out;
    out.kind = SolutionKind::VertexSet;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
    }
    return out;
  }
  if (p == Problem::ListColoring) check_lists(g, opts.lists);
  if (p == Problem::Coloring && (opts.colors < 1 || opts.colors > 3)) {
    throw std::invalid_argument("Coloring supports 1 to 3 colours");
  }

  const NiceDecomposition nice = make_nice(g, td);
  std::unique_ptr<Policy> policy;
  switch (p) {
    case Problem::IndependentSet: policy = std::make_unique<IndependentSetPolicy>(); break;
    case Problem::DominatingSet: policy = std::make_unique<DominatingSetPolicy>(); break;
    case Problem::FeedbackVertexSet: policy = std::make_unique<FeedbackVertexSetPolicy>(); break;
    case Problem::Coloring: policy = std::make_unique<ColoringPolicy>(opts.colors, nullptr); break;
    case Problem::ListColoring: policy = std::make_unique<ColoringPolicy>(3, &opts.lists); break;
    case Problem::InducedMatching: policy = std::make_unique<InducedMatchingPolicy>(); break;
    case Problem::CyclePacking: policy = std::make_unique<CyclePackingPolicy>(); break;
    case Problem::VertexCover: break;
  }
  const DpResult r = run_dp(g, nice, *policy);
  if (!r.feasible) return infeasible();

  Solution out;
  switch (p) {
    case Problem::IndependentSet:
    case Problem::DominatingSet:
    case Problem::FeedbackVertexSet: {
      const int marker = p == Problem::IndependentSet ? 1 : (p == Problem::DominatingSet ? 2 : 0);
      out.kind = SolutionKind::VertexSet;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (r.forgotten[static_cast<std::size_t>(v)] == marker) out.vertices.push_back(v);
      }
      break;
    }
    case Problem::Coloring:
    case Problem::ListColoring:
      out.kind = SolutionKind::Coloring;
      out.colors = r.forgotten;
      break;
    case Problem::InducedMatching:
      out.kind = SolutionKind::EdgeSet;
      out.edges = r.used_edges;
      break;
    case Problem::CyclePacking:
      out.kind = SolutionKind::CycleSet;
      out.cycles = edges_to_cycles(g.vertex_count(), r.used_edges);
      break;
    case Problem::VertexCover: break;
  }
  return out;
}

Solution solve(Problem p, const Graph& g, const ProblemOptions& opts) {
  return solve_td(p, g, treewidth_heuristic(g), opts);
}

bool verify_solution(Problem p, const Graph& g, const Solution& s, const ProblemOptions& opts) {
  const int n = g.vertex_count();
  if (!s.feasible()) return true;
  auto membership = [n](const std::vector<int>& vs, std::vector<char>& in) {
    in.assign(static_cast<std::size_t>(n), 0);
    for (int v : vs) {
      if (v < 0 || v >= n || in[static_cast<std::size_t>(v)]) return false;
      in[static_cast<std::size_t>(v)] = 1;
    }
    return true;
  };
  std::vector<char> in;
  switch (p) {
    case Problem::IndependentSet:
      if (s.kind != SolutionKind::VertexSet || !membership(s.vertices, in)) return false;
      for (const auto& [u, v] : g.edges()) {
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) return false;
      }
      return true;
    case Problem::VertexCover:
      if (s.kind != SolutionKind::VertexSet || !membership(s.vertices, in)) return false;
      for (const auto& [u, v] : g.edges()) {
        if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)]) return false;
      }
      return true;
    case Problem::DominatingSet:
      if (s.kind != SolutionKind::VertexSet || !membership(s.vertices, in)) return false;
      for (int v = 0; v < n; ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        bool dominated = false;
        for (int w : g.neighbors(v)) dominated = dominated || in[static_cast<std::size_t>(w)];
        if (!dominated) return false;
      }
      return true;
    case Problem::FeedbackVertexSet: {
      if (s.kind != SolutionKind::VertexSet || !membership(s.vertices, in)) return false;
      Dsu dsu(static_cast<std::size_t>(n));
      for (const auto& [u, v] : g.edges()) {
        if (in[static_cast<std::size_t>(u)] || in[static_cast<std::size_t>(v)]) continue;
        if (!dsu.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) return false;
      }
      return true;
    }
    case Problem::Coloring:
    case Problem::ListColoring: {
      if (s.kind != SolutionKind::Coloring || static_cast<int>(s.colors.size()) != n) return false;
      for (int v = 0; v < n; ++v) {
        const int c = s.colors[static_cast<std::size_t>(v)];
        if (p == Problem::Coloring && (c < 1 || c > opts.colors)) return false;
        if (p == Problem::ListColoring) {
          const auto& l = opts.lists.at(static_cast<std::size_t>(v));
          if (std::find(l.begin(), l.end(), c) == l.end()) return false;
        }
      }
      for (const auto& [u, v] : g.edges()) {
        if (s.colors[static_cast<std::size_t>(u)] == s.colors[static_cast<std::size_t>(v)]) return false;
      }
      return true;
    }
    case Problem::InducedMatching: {
      if (s.kind != SolutionKind::EdgeSet) return false;
      std::vector<int> vs;
      for (const auto& [u, v] : s.edges) {
        if (!g.has_edge(u, v)) return false;
        vs.push_back(u);
        vs.push_back(v);
      }
      if (!membership(vs, in)) return false;
      // G[V(M)] must be exactly M.
      std::size_t inside = 0;
      for (const auto& [u, v] : g.edges()) {
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) ++inside;
      }
      return inside == s.edges.size();
    }
    case Problem::CyclePacking: {
      if (s.kind != SolutionKind::CycleSet) return false;
      std::vector<int> vs;
      for (const auto& c : s.cycles) {
        if (c.size() < 3) return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
          vs.push_back(c[i]);
        }
      }
      return membership(vs, in);
    }
  }
  return false;
}

}  // namespace outerstring
