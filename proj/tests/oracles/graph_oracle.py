"""Independent brute-force values for graph fixtures.

Usage: python3 graph_oracle.py
Prints, for each named graph, degeneracy, arboricity, biclique presence,
treewidth and the optimum of each solver problem.
"""
import itertools
import json
import sys
from functools import lru_cache

import networkx as nx
from shapely.geometry import LineString


def intersection_graph(path):
    with open(path) as f:
        data = json.load(f)
    lines = []
    for s in data["strings"]:
        pts = []
        for v in s["vertices"]:
            if len(v) == 2:
                pts.append((float(v[0]), float(v[1])))
            else:
                pts.append((int(v[0]) / int(v[1]), int(v[2]) / int(v[3])))
        lines.append(LineString(pts))
    g = nx.Graph()
    g.add_nodes_from(range(len(lines)))
    for i, j in itertools.combinations(range(len(lines)), 2):
        if lines[i].intersects(lines[j]):
            g.add_edge(i, j)
    return g


def arboricity(g):
    n = g.number_of_nodes()
    best = 0
    nodes = list(g.nodes)
    if n > 16:
        # Only exact when the density bound meets the degeneracy bound.
        lo = -(-g.number_of_edges() // max(1, n - 1))
        hi = max(nx.core_number(g).values(), default=0)
        return lo if lo == hi else (lo, hi)
    for size in range(2, n + 1):
        for sub in itertools.combinations(nodes, size):
            e = g.subgraph(sub).number_of_edges()
            best = max(best, -(-e // (size - 1)))
    return best


def has_biclique(g, t):
    nodes = list(g.nodes)
    for a in itertools.combinations(nodes, t):
        common = set(nodes) - set(a)
        for v in a:
            common &= set(g[v])
        if len(common) >= t:
            return True
    return False


def treewidth(g):
    nodes = list(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    adj = [0] * n
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]

    def q(s, v):
        # vertices outside s + v reachable from v through s
        seen = 1 << v
        stack = [v]
        out = 0
        while stack:
            x = stack.pop()
            nb = adj[x] & ~seen
            seen |= nb
            out |= nb & ~s
            inside = nb & s
            while inside:
                b = inside & -inside
                stack.append(b.bit_length() - 1)
                inside ^= b
        return bin(out & ~(1 << v)).count("1")

    @lru_cache(maxsize=None)
    def tw(s):
        if s == 0:
            return -1
        best = n
        x = s
        while x:
            b = x & -x
            v = b.bit_length() - 1
            x ^= b
            best = min(best, max(tw(s & ~b), q(s & ~b, v)))
        return best

    return tw((1 << n) - 1) if n else -1


def subsets(g):
    nodes = list(g.nodes)
    for size in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, size):
            yield set(s)


def independent(g, s):
    return all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def solve_all(g):
    nodes = set(g.nodes)
    out = {}
    out["is"] = max(len(s) for s in subsets(g) if independent(g, s))
    out["vc"] = min(len(s) for s in subsets(g) if independent(g, nodes - s))
    out["ds"] = min(len(s) for s in subsets(g) if all(v in s or set(g[v]) & s for v in nodes))
    out["fvs"] = min(len(s) for s in subsets(g) if len(s) == len(nodes) or nx.is_forest(g.subgraph(nodes - s)))
    out["chromatic"] = next(k for k in range(len(nodes) + 1) if colorable(g, k))
    out["im"] = induced_matching(g)
    out["cp"] = cycle_packing(g)
    return out


def colorable(g, k):
    nodes = list(g.nodes)
    if not nodes:
        return True
    for colors in itertools.product(range(k), repeat=len(nodes)):
        c = dict(zip(nodes, colors))
        if all(c[u] != c[v] for u, v in g.edges):
            return True
    return False


def induced_matching(g):
    best = 0
    edges = list(g.edges)
    for size in range(1, len(edges) + 1):
        found = False
        for m in itertools.combinations(edges, size):
            verts = [v for e in m for v in e]
            if len(set(verts)) != 2 * size:
                continue
            if g.subgraph(verts).number_of_edges() == size:
                found = True
                break
        if not found:
            break
        best = size
    return best


def cycle_packing(g):
    cycles = [frozenset(c) for c in nx.simple_cycles(g.to_directed()) if len(c) >= 3]
    cycles = list(set(cycles))
    best = 0

    def rec(start, used, count):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(cycles)):
            if not (cycles[i] & used):
                rec(i + 1, used | cycles[i], count + 1)

    rec(0, frozenset(), 0)
    return best


def report(name, g):
    core = max(nx.core_number(g).values(), default=0)
    line = {"n": g.number_of_nodes(), "m": g.number_of_edges(), "degeneracy": core,
            "arboricity": arboricity(g), "k22": has_biclique(g, 2)}
    if g.number_of_nodes() <= 16:
        line["tw"] = treewidth(g)
    if g.number_of_nodes() <= 10:
        line.update(solve_all(g))
    print(name, json.dumps(line))


def main():
    graphs = {
        "petersen": nx.petersen_graph(),
        "grid3x3": nx.grid_2d_graph(3, 3),
        "k5": nx.complete_graph(5),
        "k33": nx.complete_bipartite_graph(3, 3),
        "c5": nx.cycle_graph(5),
        "two_triangles": nx.disjoint_union(nx.complete_graph(3), nx.complete_graph(3)),
        "k4": nx.complete_graph(4),
    }
    for name, g in graphs.items():
        report(name, nx.convert_node_labels_to_integers(g))
    for path in sys.argv[1:]:
        report(path, intersection_graph(path))


if __name__ == "__main__":
    main()
