#include "outerstring/nice_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace outerstring {

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

namespace {

class Builder {
 public:
  Builder(const Graph& g, const TreeDecomposition& td) : g_(g), td_(td) {
    tree_.resize(static_cast<std::size_t>(td.node_count()));
    for (const auto& [a, b] : td.tree_edges) {
      tree_[static_cast<std::size_t>(a)].push_back(b);
      tree_[static_cast<std::size_t>(b)].push_back(a);
    }
  }

  NiceDecomposition run() {
    if (td_.node_count() == 0) {
      out_.root = add({NiceKind::Leaf, {}, -1, {-1, -1}, {}});
      return std::move(out_);
    }
    // Iterative post-order so deep trees do not exhaust the stack.
    const int n = td_.node_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : tree_[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          parent[static_cast<std::size_t>(y)] = x;
          stack.push_back(y);
        }
      }
    }
    std::vector<int> built(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> child_results(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int x = *it;
      const auto& bag = td_.bags[static_cast<std::size_t>(x)];
      std::vector<int> adapted;
      for (int c : child_results[static_cast<std::size_t>(x)]) adapted.push_back(adapt(c, bag));
      int node;
      if (adapted.empty()) {
        node = adapt(add({NiceKind::Leaf, {}, -1, {-1, -1}, {}}), bag);
      } else {
        node = adapted.front();
        for (std::size_t i = 1; i < adapted.size(); ++i) {
          node = add({NiceKind::Join, bag, -1, {-1, -1}, {node, adapted[i]}});
        }
      }
      built[static_cast<std::size_t>(x)] = node;
      if (parent[static_cast<std::size_t>(x)] >= 0) child_results[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])].push_back(node);
    }
    out_.root = adapt(built[0], {});
    return std::move(out_);
  }

 private:
  int add(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  // Chain forget and introduce nodes above `node` until its bag equals `target`.
  int adapt(int node, const std::vector<int>& target_unsorted) {
    std::vector<int> target = target_unsorted;
    std::sort(target.begin(), target.end());
    std::vector<int> bag = out_.nodes[static_cast<std::size_t>(node)].bag;
    std::vector<int> drop;
    std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(), std::back_inserter(drop));
    for (int v : drop) {
      for (int w : bag) {
        if (w == v || !g_.has_edge(v, w)) continue;
        const Edge e{std::min(v, w), std::max(v, w)};
        if (introduced_edges_.insert(e).second) {
          node = add({NiceKind::IntroduceEdge, bag, -1, e, {node}});
        }
      }
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add({NiceKind::Forget, bag, v, {-1, -1}, {node}});
    }
    std::vector<int> gain;
    std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(), std::back_inserter(gain));
    for (int v : gain) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      node = add({NiceKind::IntroduceVertex, bag, v, {-1, -1}, {node}});
    }
    return node;
  }

  const Graph& g_;
  const TreeDecomposition& td_;
  std::vector<std::vector<int>> tree_;
  std::set<Edge> introduced_edges_;
  NiceDecomposition out_;
};

}  // namespace

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  const DecompositionCheck check = validate_decomposition(g, td);
  if (!check.valid) throw std::invalid_argument("make_nice: invalid decomposition: " + check.violations.front());
  NiceDecomposition nice = Builder(g, td).run();
  return nice;
}

}  // namespace outerstring
