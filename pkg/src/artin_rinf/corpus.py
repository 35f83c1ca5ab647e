"""Constructors for the standard graphs used throughout the package."""

from __future__ import annotations

import itertools

from .graph import COXETER, INF, PRESENTATION, LabeledGraph


def type_a(n: int) -> LabeledGraph:
    vs = [f"t{i}" for i in range(1, n + 1)]
    return LabeledGraph.from_edges(vs, [(vs[i], vs[i + 1], 3) for i in range(n - 1)], COXETER)


def type_b(n: int) -> LabeledGraph:
    vs = [f"t{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[i + 1], 3) for i in range(n - 2)] + [(vs[n - 2], vs[n - 1], 4)]
    return LabeledGraph.from_edges(vs, edges, COXETER)


def type_d(n: int) -> LabeledGraph:
    """Path t1..t_{n-2} with the fork t_{n-2}-t_{n-1}, t_{n-2}-t_n."""
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    vs = [f"t{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[i + 1], 3) for i in range(n - 3)]
    edges += [(vs[n - 3], vs[n - 2], 3), (vs[n - 3], vs[n - 1], 3)]
    return LabeledGraph.from_edges(vs, edges, COXETER)


def type_e(n: int) -> LabeledGraph:
    # branch at t3 of the path t1..t_{n-1}, extra vertex t_n attached to t3
    vs = [f"t{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[i + 1], 3) for i in range(n - 2)] + [(vs[2], vs[n - 1], 3)]
    return LabeledGraph.from_edges(vs, edges, COXETER)


def type_f4() -> LabeledGraph:
    vs = ["t1", "t2", "t3", "t4"]
    return LabeledGraph.from_edges(vs, [("t1", "t2", 3), ("t2", "t3", 4), ("t3", "t4", 3)], COXETER)


def type_h(n: int) -> LabeledGraph:
    vs = [f"t{i}" for i in range(1, n + 1)]
    edges = [(vs[0], vs[1], 5)] + [(vs[i], vs[i + 1], 3) for i in range(1, n - 1)]
    return LabeledGraph.from_edges(vs, edges, COXETER)


def dihedral(m, names=("a", "b")) -> LabeledGraph:
    return LabeledGraph.from_edges(list(names), [(names[0], names[1], m)], PRESENTATION)


def triangle(l1, l2, l3) -> LabeledGraph:
    """Presentation triangle a-b, b-c, a-c with the given labels."""
    return LabeledGraph.from_edges(["a", "b", "c"], [("a", "b", l1), ("b", "c", l2), ("a", "c", l3)])


def cycle(n: int, label=3) -> LabeledGraph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return LabeledGraph.from_edges(vs, [(vs[i], vs[(i + 1) % n], label) for i in range(n)])


def path(n: int, label=3) -> LabeledGraph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return LabeledGraph.from_edges(vs, [(vs[i], vs[i + 1], label) for i in range(n - 1)])


def complete(n: int, label=3) -> LabeledGraph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return LabeledGraph.from_edges(vs, [(u, v, label) for u, v in itertools.combinations(vs, 2)])


def octahedron(label=4) -> LabeledGraph:
    """1-skeleton of the octahedron: poles v1, v2 over the 4-cycle w1 w2 w3 w4."""
    ring = ["w1", "w2", "w3", "w4"]
    edges = [(ring[i], ring[(i + 1) % 4], label) for i in range(4)]
    edges += [(p, w, label) for p in ("v1", "v2") for w in ring]
    return LabeledGraph.from_edges(["v1", "v2"] + ring, edges)


def wheel(k: int, label=4) -> LabeledGraph:
    """Hub v1 joined to every vertex of a k-cycle."""
    ring = [f"w{i}" for i in range(1, k + 1)]
    edges = [(ring[i], ring[(i + 1) % k], label) for i in range(k)] + [("v1", w, label) for w in ring]
    return LabeledGraph.from_edges(["v1"] + ring, edges)


def with_labels(g: LabeledGraph, label) -> LabeledGraph:
    """Same presentation edges, every finite label replaced by ``label``."""
    return LabeledGraph.from_edges(
        g.vertices, [(u, v, label) for u, v, m in g.labeled_edges() if m is not INF], g.convention
    )
