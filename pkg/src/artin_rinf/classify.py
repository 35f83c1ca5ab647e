"""Graph predicates and recognition of finite Coxeter types."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .graph import INF, LabeledGraph

GRAM_TOL = 1e-9


@dataclass(frozen=True)
class ClassificationReport:
    is_large: bool
    is_free_of_infinity: bool
    is_xxxl: bool
    is_hyperbolic_type: Optional[bool]
    spherical_type: Optional[list[str]]
    is_twistless: bool
    is_twistless_star: bool
    vertex_count: int

    def to_json(self) -> dict:
        return asdict(self)


def is_large(g: LabeledGraph) -> bool:
    return all(m >= 3 for _, _, m in g.pairs())


def is_xxxl(g: LabeledGraph) -> bool:
    return all(m >= 6 for _, _, m in g.pairs())


def is_free_of_infinity(g: LabeledGraph) -> bool:
    return all(m is not INF for _, _, m in g.pairs())


def has_333_triangle(g: LabeledGraph) -> bool:
    mat = g.matrix
    threes = [[mat[i][j] == 3 for j in range(g.n)] for i in range(g.n)]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not threes[i][j]:
                continue
            for k in range(j + 1, g.n):
                if threes[i][k] and threes[j][k]:
                    return True
    return False


def is_hyperbolic_type(g: LabeledGraph) -> Optional[bool]:
    """Only decided for large type: no triangle labelled (3, 3, 3)."""
    if not is_large(g):
        return None
    return not has_333_triangle(g)


# -- connectivity on bitmasks -------------------------------------------------


def _lowbit_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def component_masks(adj, mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, ordered by lowest vertex."""
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            i = _lowbit_index(frontier)
            frontier &= frontier - 1
            new = adj[i] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(adj, mask: int) -> bool:
    # empty and single-vertex vertex sets count as connected
    return len(component_masks(adj, mask)) <= 1


def is_connected(g: LabeledGraph) -> bool:
    return is_connected_mask(g.adjacency, (1 << g.n) - 1)


def twistless_mask(adj, mask: int) -> bool:
    if not mask or not is_connected_mask(adj, mask):
        return False
    rest = mask
    while rest:
        bit = rest & -rest
        rest &= rest - 1
        if not is_connected_mask(adj, mask & ~bit):
            return False
        i = _lowbit_index(bit)
        nbrs = adj[i] & mask
        while nbrs:
            other = nbrs & -nbrs
            nbrs &= nbrs - 1
            if other > bit and not is_connected_mask(adj, mask & ~bit & ~other):
                return False
    return True


def twistless_star_mask(adj, mask: int) -> bool:
    rest = mask
    hub = False
    while rest:
        bit = rest & -rest
        rest &= rest - 1
        if (adj[_lowbit_index(bit)] | bit) & mask == mask:
            hub = True
            break
    return hub and twistless_mask(adj, mask)


def is_twistless(g: LabeledGraph) -> bool:
    """Connected, no cut vertex, and no edge whose removal together with its
    two endpoints disconnects the rest.  Edges are the finite labels."""
    return twistless_mask(g.adjacency, (1 << g.n) - 1)


def is_twistless_star(g: LabeledGraph) -> bool:
    return twistless_star_mask(g.adjacency, (1 << g.n) - 1)


# -- Gram matrix --------------------------------------------------------------


def gram_matrix(g: LabeledGraph) -> np.ndarray:
    """Cosine matrix: 1 on the diagonal, -cos(pi/m) off it, -1 for ``inf``."""
    n = g.n
    out = np.eye(n)
    for i, j, m in g.pairs():
        out[i, j] = out[j, i] = -1.0 if m is INF else -math.cos(math.pi / m)
    return out


def leading_minors(mat: np.ndarray) -> list[float]:
    return [float(np.linalg.det(mat[:k, :k])) for k in range(1, mat.shape[0] + 1)]


def gram_positive_definite(g: LabeledGraph, tol: float = GRAM_TOL) -> bool:
    return all(d > tol for d in leading_minors(gram_matrix(g)))


# -- catalog ------------------------------------------------------------------

# order of W for each irreducible finite type
def type_order(name: str) -> int:
    if name.startswith("I2("):
        return 2 * int(name[3:-1])
    family, rank = name[0], int(name[1:])
    if family == "A":
        return math.factorial(rank + 1)
    if family == "B":
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}[name]


def _coxeter_components(g: LabeledGraph) -> list[list[int]]:
    mat = g.matrix
    adj = [0] * g.n
    for i, j, m in g.pairs():
        if m != 2:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    comps = component_masks(adj, (1 << g.n) - 1)
    return [[i for i in range(g.n) if c >> i & 1] for c in comps]


def _path_order(verts: list[int], nbrs: dict[int, list[int]]) -> Optional[list[int]]:
    ends = [v for v in verts if len(nbrs[v]) == 1]
    if len(ends) != 2 or any(len(nbrs[v]) > 2 for v in verts):
        return None
    order = [min(ends)]
    while len(order) < len(verts):
        nxt = [w for w in nbrs[order[-1]] if len(order) < 2 or w != order[-2]]
        order.append(nxt[0])
    return order


def _match_component(mat, verts: list[int]) -> Optional[str]:
    k = len(verts)
    if k == 1:
        return "A1"
    if k == 2:
        m = mat[verts[0]][verts[1]]
        return None if m is INF else f"I2({m})"
    nbrs = {v: [w for w in verts if w != v and mat[v][w] != 2] for v in verts}
    edge_count = sum(len(x) for x in nbrs.values()) // 2
    if edge_count != k - 1:
        return None  # contains a cycle
    labels = [mat[v][w] for v in verts for w in nbrs[v] if v < w]
    if any(m is INF or m > 5 for m in labels):
        return None
    path = _path_order(verts, nbrs)
    if path is not None:
        seq = [mat[path[i]][path[i + 1]] for i in range(k - 1)]
        big = [i for i, m in enumerate(seq) if m > 3]
        if not big:
            return f"A{k}"
        if len(big) > 1:
            return None
        pos, m = big[0], seq[big[0]]
        at_end = pos in (0, k - 2)
        if m == 4 and at_end:
            return f"B{k}"
        if m == 4 and k == 4 and pos == 1:
            return "F4"
        if m == 5 and at_end and k in (3, 4):
            return f"H{k}"
        return None
    if any(m != 3 for m in labels):
        return None
    branch = [v for v in verts if len(nbrs[v]) == 3]
    if len(branch) != 1 or any(len(nbrs[v]) > 3 for v in verts):
        return None
    hub = branch[0]
    arms = []
    for start in nbrs[hub]:
        length, prev, cur = 1, hub, start
        while len(nbrs[cur]) == 2:
            prev, cur = cur, next(w for w in nbrs[cur] if w != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{k}"
    return None


def spherical_type(g: LabeledGraph) -> Optional[list[str]]:
    """Sorted irreducible finite types of the Coxeter-graph components, or ``None``."""
    mat = g.matrix
    names = []
    for comp in _coxeter_components(g):
        name = _match_component(mat, comp)
        if name is None:
            return None
        names.append(name)
    return sorted(names)


def classify(g: LabeledGraph) -> ClassificationReport:
    return ClassificationReport(
        is_large=is_large(g),
        is_free_of_infinity=is_free_of_infinity(g),
        is_xxxl=is_xxxl(g),
        is_hyperbolic_type=is_hyperbolic_type(g),
        spherical_type=spherical_type(g),
        is_twistless=is_twistless(g),
        is_twistless_star=is_twistless_star(g),
        vertex_count=g.n,
    )
