"""Admissible decompositions and twistless hierarchies.

A decomposition ``G = G1 u G2`` into induced subgraphs covers every edge
exactly when no edge joins the private parts ``G1 - G2`` and ``G2 - G1``, so
the intersection is a vertex set whose removal splits the rest.  Decompositions
are therefore enumerated from separators: pick ``C``, split ``G - C`` into
components, and distribute the components over two nonempty groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .classify import component_masks, is_connected_mask, twistless_star_mask
from .graph import LabeledGraph

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Decomposition:
    part1: tuple[str, ...]
    part2: tuple[str, ...]
    intersection: tuple[str, ...]
    twistless: bool

    def to_json(self) -> dict:
        return {"part1": list(self.part1), "part2": list(self.part2)}


@dataclass(frozen=True)
class HierarchyTree:
    graph: tuple[str, ...]
    decomposition: Optional[Decomposition] = None
    children: tuple["HierarchyTree", ...] = ()

    @property
    def leaf(self) -> bool:
        return self.decomposition is None

    def depth(self) -> int:
        return 0 if self.leaf else 1 + max(c.depth() for c in self.children)

    def leaves(self) -> list["HierarchyTree"]:
        if self.leaf:
            return [self]
        return [x for c in self.children for x in c.leaves()]

    def to_json(self) -> dict:
        return {
            "graph": list(self.graph),
            "leaf": self.leaf,
            "decomposition": None if self.leaf else self.decomposition.to_json(),
            "children": [c.to_json() for c in self.children],
        }


@dataclass
class HierarchySearch:
    """Outcome of :func:`find_twistless_hierarchy`.

    ``tree is None and not exhausted`` means no hierarchy exists.
    """

    tree: Optional[HierarchyTree]
    exhausted: bool
    explored: int

    @property
    def status(self) -> str:
        if self.tree is not None:
            return "found"
        return "exhausted" if self.exhausted else "none"


def _names(g: LabeledGraph, mask: int) -> tuple[str, ...]:
    return tuple(v for i, v in enumerate(g.vertices) if mask >> i & 1)


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def twistless_intersection(adj, inter: int) -> bool:
    count = bin(inter).count("1")
    if count == 0 or count == 1:
        return False
    if count == 2:
        i, j = _bits(inter)
        return not adj[i] >> j & 1
    return True


def _decompositions_mask(adj, mask: int, connected_parts: bool):
    """Yield ``(part1, part2, inter)`` masks, private part of ``part1`` first
    in lexicographic order of sorted vertex indices."""
    members = _bits(mask)
    found = []
    for r in range(len(members) + 1):
        for sep in itertools.combinations(members, r):
            inter = sum(1 << i for i in sep)
            comps = component_masks(adj, mask & ~inter)
            if len(comps) < 2:
                continue
            first, others = comps[0], comps[1:]
            # first component always on side one; 2^(k-1) - 1 splits
            for choice in itertools.product((0, 1), repeat=len(others)):
                if not any(choice):
                    continue
                side1 = first | sum(c for c, b in zip(others, choice) if not b)
                side2 = sum(c for c, b in zip(others, choice) if b)
                if _bits(side2) < _bits(side1):
                    side1, side2 = side2, side1
                p1, p2 = side1 | inter, side2 | inter
                if connected_parts and not (is_connected_mask(adj, p1) and is_connected_mask(adj, p2)):
                    continue
                found.append((_bits(side1), _bits(side2), p1, p2, inter))
    found.sort(key=lambda x: (x[0], x[1]))
    for _, _, p1, p2, inter in found:
        yield p1, p2, inter


def admissible_decompositions(
    g: LabeledGraph, twistless_only: bool = False, connected_parts: bool = False
) -> list[Decomposition]:
    """All admissible decompositions of ``g`` into two proper induced subgraphs.

    Each unordered pair appears once.  ``connected_parts`` additionally demands
    that both parts induce connected subgraphs.
    """
    adj = g.adjacency
    out = []
    for p1, p2, inter in _decompositions_mask(adj, (1 << g.n) - 1, connected_parts):
        tw = twistless_intersection(adj, inter)
        if twistless_only and not tw:
            continue
        out.append(Decomposition(_names(g, p1), _names(g, p2), _names(g, inter), tw))
    return out


class _Exhausted(Exception):
    pass


def find_twistless_hierarchy(
    g: LabeledGraph, budget: int = DEFAULT_BUDGET, connected_parts: bool = False
) -> HierarchySearch:
    """Search for successive twistless decompositions ending in twistless stars.

    ``budget`` caps the number of distinct vertex subsets examined.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    adj = g.adjacency
    memo: dict[int, Optional[HierarchyTree]] = {}

    def solve(mask: int) -> Optional[HierarchyTree]:
        if mask in memo:
            return memo[mask]
        if len(memo) >= budget:
            raise _Exhausted
        memo[mask] = None  # placeholder; children are strict subsets
        if twistless_star_mask(adj, mask):
            result = HierarchyTree(_names(g, mask))
        else:
            result = None
            for p1, p2, inter in _decompositions_mask(adj, mask, connected_parts):
                if not twistless_intersection(adj, inter):
                    continue
                left = solve(p1)
                if left is None:
                    continue
                right = solve(p2)
                if right is None:
                    continue
                dec = Decomposition(_names(g, p1), _names(g, p2), _names(g, inter), True)
                result = HierarchyTree(_names(g, mask), dec, (left, right))
                break
        memo[mask] = result
        return result

    try:
        tree = solve((1 << g.n) - 1)
    except _Exhausted:
        return HierarchySearch(None, True, len(memo))
    return HierarchySearch(tree, False, len(memo))


def validate_hierarchy(g: LabeledGraph, tree: HierarchyTree) -> list[str]:
    """Re-check every node of a witness; returns a list of problems (empty if valid)."""
    adj = g.adjacency
    problems: list[str] = []

    def mask_of(names) -> int:
        return sum(1 << g.index[v] for v in names)

    def visit(node: HierarchyTree) -> None:
        mask = mask_of(node.graph)
        if node.leaf:
            if not twistless_star_mask(adj, mask):
                problems.append(f"leaf {node.graph} is not a twistless star")
            return
        d = node.decomposition
        p1, p2 = mask_of(d.part1), mask_of(d.part2)
        inter = p1 & p2
        if p1 | p2 != mask or p1 == mask or p2 == mask:
            problems.append(f"parts of {node.graph} do not form a proper cover")
        for i in _bits(p1 & ~inter):
            if adj[i] & (p2 & ~inter):
                problems.append(f"edge between private parts at {g.vertices[i]}")
        if not twistless_intersection(adj, inter) or mask_of(d.intersection) != inter:
            problems.append(f"decomposition of {node.graph} is not twistless")
        if len(node.children) != 2 or (node.children[0].graph, node.children[1].graph) != (d.part1, d.part2):
            problems.append(f"children of {node.graph} do not match the parts")
        for c in node.children:
            visit(c)

    visit(tree)
    return problems
