#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "outerstring/graph.hpp"

namespace outerstring {

struct Degeneracy {
  int value = 0;
  std::vector<int> order;  // peeling order, smallest current degree first
};

// Min-degree peeling; ties go to the lowest vertex index.
Degeneracy degeneracy(const Graph& g);

// Exact Nash-Williams arboricity, max over subgraphs H of
// ceil(|E(H)| / (|V(H)| - 1)). Zero for edgeless graphs.
int arboricity(const Graph& g);

// True when every subgraph H with at least two vertices has
// |E(H)| <= k (|V(H)| - 1).
bool arboricity_at_most(const Graph& g, int k);

struct Biclique {
  std::vector<int> a;
  std::vector<int> b;
};

// A K_{t,t} subgraph (not necessarily induced), or nullopt. A is the
// lexicographically first t-set with at least t common neighbours and B is
// the first t of those neighbours.
std::optional<Biclique> find_biclique(const Graph& g, int t);

bool is_biclique(const Graph& g, const Biclique& b);

// Vertices of the k-core (maximal subgraph of minimum degree >= k).
std::vector<int> k_core(const Graph& g, int k);

}  // namespace outerstring
