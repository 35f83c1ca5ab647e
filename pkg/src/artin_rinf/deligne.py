"""Finite balls in the link of a rank-2 vertex of the Deligne complex.

For the dihedral Artin group ``A = <a, b>`` the link of the vertex ``A`` is
the bipartite graph whose vertices are the elements ``g`` of ``A`` and the
cosets ``g<a>``, ``g<b>``, with ``g`` joined to its two cosets.  A loop of
``k`` syllables ``a^n1 b^n2 ...`` has length ``2k``.

A ball keeps the elements ``Delta^d x_1 ... x_r`` with ``d >= -1`` and
``|d| + r <= cap``; the minimal relator loop sits at weight at most 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .corpus import dihedral
from .garside import Garside, NormalForm, garside
from .graph import INF
from .words import Word, alternating, inverse

ELEMENT, COSET_A, COSET_B = "element", "cosetA", "cosetB"


@dataclass(frozen=True)
class LinkVertex:
    tag: str
    payload: NormalForm  # the element, or the canonical coset representative


@dataclass
class LinkBall:
    m: int
    cap: int
    vertices: list[LinkVertex]
    edges: list[tuple[int, int]]  # (element vertex, coset vertex)
    boundary: set[int]
    warnings: list[str] = field(default_factory=list)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def element_index(self, nf: NormalForm) -> Optional[int]:
        for i, v in enumerate(self.vertices):
            if v.tag == ELEMENT and v.payload == nf:
                return i
        return None

    def to_json(self, G: Garside) -> dict:
        return {
            "m": self.m,
            "cap": self.cap,
            "vertices": [
                {"tag": v.tag, "nf": G.to_json(v.payload), "boundary": i in self.boundary}
                for i, v in enumerate(self.vertices)
            ],
            "edges": [list(e) for e in self.edges],
            "warnings": list(self.warnings),
        }

    def edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def _weight(nf: NormalForm) -> int:
    return abs(nf.delta) + len(nf.factors)


def _nf_key(nf: NormalForm) -> tuple:
    return (_weight(nf), nf.delta, nf.factors)


def ball_elements(G: Garside, cap: int) -> list[NormalForm]:
    """Normal forms with ``delta >= -1`` and ``|delta| + factors <= cap``."""
    simples = [x for x in range(1, G.w0)]
    ldes, rdes = G._ldes, G._rdes
    chains: list[tuple[int, ...]] = [()]
    by_len = [[()]]
    for r in range(1, cap + 2):
        nxt = []
        for c in by_len[-1]:
            for y in simples:
                if not c or ldes[y] & ~rdes[c[-1]] == 0:
                    nxt.append(c + (y,))
        by_len.append(nxt)
        chains.extend(nxt)
    out = []
    for d in range(-1, cap + 1):
        for c in chains:
            if abs(d) + len(c) <= cap:
                out.append(NormalForm(d, c))
    return sorted(out, key=_nf_key)


def build_link_ball(m: int, cap: int) -> LinkBall:
    if m is INF or not isinstance(m, int) or m < 3:
        raise ValueError("m must be a finite integer >= 3")
    if cap < 0:
        raise ValueError("cap must be non-negative")
    G = garside(dihedral(m))
    elements = ball_elements(G, cap)
    words = {nf: G.to_word(nf) for nf in elements}
    vertices = [LinkVertex(ELEMENT, nf) for nf in elements]
    edges: list[tuple[int, int]] = []
    boundary = {i for i, nf in enumerate(elements) if _weight(nf) >= cap}
    for tag, gen in ((COSET_A, "a"), (COSET_B, "b")):
        # h^-1 g in <gen>  <=>  g and h lie in the same coset
        classes: list[list[int]] = []
        for i, g in enumerate(elements):
            for cls in classes:
                h = elements[cls[0]]
                if G.is_generator_power(G.normal_form(inverse(words[h]) + words[g]), gen):
                    cls.append(i)
                    break
            else:
                classes.append([i])
        for cls in classes:
            rep = min((elements[i] for i in cls), key=_nf_key)
            c = len(vertices)
            vertices.append(LinkVertex(tag, rep))
            for i in cls:
                edges.append((i, c))
            # every coset is infinite; it counts as rim only if reached solely from the rim
            if all(i in boundary for i in cls):
                boundary.add(c)
    ball = LinkBall(m, cap, vertices, edges, boundary)
    if shortest_cycle(ball) is None:
        ball.warnings.append(f"cap {cap} is too small to contain a loop")
    return ball


def shortest_cycle(ball: LinkBall, avoid: frozenset[int] | set[int] = frozenset()) -> Optional[list[int]]:
    """A shortest cycle avoiding ``avoid``, as a vertex sequence without repetition.

    Per-vertex BFS, ignoring the edge back to the BFS parent.
    """
    adj = ball.adjacency()
    best: Optional[list[int]] = None
    for root in range(len(adj)):
        if root in avoid:
            continue
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in adj[u]:
                if w == parent[u] or w in avoid:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                    continue
                length = dist[u] + dist[w] + 1
                if best is None or length < len(best):
                    pu, pw = [u], [w]
                    while parent[pu[-1]] != -1:
                        pu.append(parent[pu[-1]])
                    while parent[pw[-1]] != -1:
                        pw.append(parent[pw[-1]])
                    cyc = pu[::-1] + pw[:-1]
                    if len(set(cyc)) == len(cyc) == length:
                        best = cyc
    return best


@dataclass
class GirthReport:
    bound: object  # int, or INF for an acyclic ball
    exact: bool
    witness: Optional[list[int]]


def girth_report(ball: LinkBall) -> GirthReport:
    """Shortest cycle of the ball; ``exact`` when a cycle of that length also
    exists among interior (non-rim) vertices, which is then the witness."""
    cyc = shortest_cycle(ball)
    if cyc is None:
        return GirthReport(INF, False, None)
    inner = shortest_cycle(ball, frozenset(ball.boundary))
    if inner is not None and len(inner) == len(cyc):
        return GirthReport(len(cyc), True, inner)
    return GirthReport(len(cyc), False, cyc)


def girth_lower_bound(ball: LinkBall) -> tuple:
    """``(length, exact)``; length is ``INF`` for an acyclic ball."""
    rep = girth_report(ball)
    return rep.bound, rep.exact


def count_syllables(G: Garside, ball: LinkBall, cycle: list[int]) -> list[tuple[str, int]]:
    """Syllables ``(generator, exponent)`` of a loop, read from its element vertices."""
    start = next(i for i, v in enumerate(cycle) if ball.vertices[v].tag == ELEMENT)
    seq = cycle[start:] + cycle[:start]
    elems = [ball.vertices[v].payload for v in seq[::2]] + [ball.vertices[seq[0]].payload]
    sylls = []
    for k, (g, h) in enumerate(zip(elems, elems[1:])):
        coset_tag = ball.vertices[seq[2 * k + 1]].tag
        gen = "a" if coset_tag == COSET_A else "b"
        step = G.normal_form(inverse(G.to_word(g)) + G.to_word(h))
        exp = step.delta * G.table.elem_length[G.w0] + sum(G.table.elem_length[x] for x in step.factors)
        sylls.append((gen, exp))
    return sylls


def relator_word(m: int) -> Word:
    """``Pi(a,b,m) Pi(b,a,m)^-1``."""
    return alternating("a", "b", m) + inverse(alternating("b", "a", m))


def relator_loop(ball: LinkBall) -> Optional[list[int]]:
    """The loop traced by the prefixes of the relator word, if it lies in the ball."""
    G = garside(dihedral(ball.m))
    rel = relator_word(ball.m)
    prefixes = [G.normal_form(rel[:k]) for k in range(len(rel))]
    idx = [ball.element_index(nf) for nf in prefixes]
    if any(i is None for i in idx):
        return None
    adj = ball.adjacency()
    loop = []
    for k, i in enumerate(idx):
        j = idx[(k + 1) % len(idx)]
        common = [c for c in adj[i] if c in adj[j]]
        if len(common) != 1:
            return None
        loop += [i, common[0]]
    return loop
