"""Independent oracle for face counts and crossing levels.

Faces come from shapely's polygonize over the strings, the ground segment
and the frame. The level of a face is the smallest number of strings whose
removal lets the face reach the ground, found by trying subsets in order of
size. The multiplicity bound is a BFS over faces sharing a string piece.

Usage: python3 arrangement_oracle.py instance.json [x y ...]
Prints the face count, the maximum level, and the level of each query point.
"""
import itertools
import json
import sys
from fractions import Fraction

from shapely.geometry import LineString, Point
from shapely.ops import polygonize, unary_union


def parse_point(p):
    if len(p) == 2:
        return float(Fraction(int(p[0]))), float(Fraction(int(p[1])))
    return float(Fraction(int(p[0]), int(p[1]))), float(Fraction(int(p[2]), int(p[3])))


def load(path):
    with open(path) as f:
        data = json.load(f)
    return [[parse_point(v) for v in s["vertices"]] for s in data["strings"]]


def frame_of(strings):
    xs = [x for s in strings for x, _ in s]
    ys = [y for s in strings for _, y in s]
    return min(xs) - 1, max(xs) + 1, max(ys) + 1


def faces(strings, frame):
    x0, x1, top = frame
    lines = [LineString(s) for s in strings]
    lines.append(LineString([(x0, 0), (x1, 0)]))
    lines.append(LineString([(x1, 0), (x1, top), (x0, top), (x0, 0)]))
    return list(polygonize(unary_union(lines)))


def touches_ground(poly, frame):
    x0, x1, _ = frame
    return poly.boundary.intersection(LineString([(x0, 0), (x1, 0)])).length > 1e-9


def grounded(strings, frame, point):
    for poly in faces(strings, frame):
        if poly.contains(point):
            return touches_ground(poly, frame)
    raise ValueError("point on a curve")


def level(strings, frame, point):
    n = len(strings)
    for size in range(n + 1):
        for removed in itertools.combinations(range(n), size):
            kept = [s for i, s in enumerate(strings) if i not in removed]
            if grounded(kept, frame, point):
                return size
    return n


def upper_levels(fs, frame):
    dist = [0 if touches_ground(f, frame) else None for f in fs]
    frontier = [i for i, d in enumerate(dist) if d == 0]
    while frontier:
        nxt = []
        for i in frontier:
            for j, g in enumerate(fs):
                if dist[j] is None and fs[i].boundary.intersection(g.boundary).length > 1e-9:
                    dist[j] = dist[i] + 1
                    nxt.append(j)
        frontier = nxt
    return dist


def main():
    strings = load(sys.argv[1])
    frame = frame_of(strings)
    fs = faces(strings, frame)
    levels = [level(strings, frame, f.representative_point()) for f in fs]
    print("faces", len(fs))
    print("max_level", max(levels) if levels else 0)
    print("levels", sorted(levels))
    uppers = upper_levels(fs, frame)
    print("upper_gaps", sorted((u, l) for u, l in zip(uppers, levels) if u != l))
    coords = [float(Fraction(c)) for c in sys.argv[2:]]
    for x, y in zip(coords[::2], coords[1::2]):
        print("point", x, y, "level", level(strings, frame, Point(x, y)))


if __name__ == "__main__":
    main()
