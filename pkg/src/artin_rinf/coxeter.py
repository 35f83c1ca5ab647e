"""Finite Coxeter groups as tables, twisted conjugacy and Reidemeister numbers.

Elements of ``W`` are enumerated by breadth-first closure of the geometric
representation; matrices are hashed after rounding to a 1e-6 grid.  Element
``0`` is the identity and elements appear in order of Coxeter length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Mapping, Optional, Sequence

import numpy as np

from .classify import gram_matrix, spherical_type
from .graph import GraphAutomorphism, GraphError, LabeledGraph, automorphism_from_mapping, is_label_preserving

SIZE_BOUND = 10**6
FULL_TABLE_LIMIT = 6000
_GRID = 1e6


class NotSphericalError(ValueError):
    pass


class SizeBoundError(RuntimeError):
    def __init__(self, reached: int, bound: int):
        super().__init__(f"group exceeds size bound {bound} (reached {reached} elements)")
        self.reached = reached
        self.bound = bound


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda c: c[0])


class GroupTable:
    """Finite group on indices ``0..size-1`` with ``0`` the identity.

    ``mul`` is a full ``size x size`` table; ``gens`` maps generator names to
    element indices.  ``elem_length`` is set only for Coxeter groups.
    """

    def __init__(self, mul: np.ndarray, gens: Mapping[str, int], elem_length: Optional[Sequence[int]] = None):
        self._mul = np.asarray(mul, dtype=np.int64)
        self.size = int(self._mul.shape[0])
        self.gens = dict(gens)
        self.elem_length = None if elem_length is None else list(elem_length)

    @property
    def mul(self) -> np.ndarray:
        return self._mul

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mul == 0, axis=1)

    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def closure_of_gens(self) -> int:
        seen = {0}
        frontier = [0]
        gens = list(self.gens.values())
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = int(self.mul[x, s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    def to_json(self) -> dict:
        return {"size": self.size, "gens": dict(self.gens)}

    def mul_table_text(self) -> str:
        return "\n".join(" ".join(str(int(v)) for v in row) for row in self.mul) + "\n"


class CoxeterTable(GroupTable):
    """Table of a finite Coxeter group ``W[g]``.

    Besides the group structure this keeps right/left multiplication by
    simple reflections, lengths, descent bitmasks and a reduced word per
    element, which is what the Garside machinery needs.  The full
    multiplication table is built lazily and only for small groups.
    """

    def __init__(self, graph: LabeledGraph, right: np.ndarray, left: np.ndarray, length: np.ndarray,
                 parent: np.ndarray, last: np.ndarray):
        self.graph = graph
        self.rank = graph.n
        self.size = int(right.shape[0])
        self.right = right
        self.left = left
        self.elem_length = [int(x) for x in length]
        self.parent = parent
        self.last = last
        self.gens = {v: int(right[0, i]) for i, v in enumerate(graph.vertices)}
        self.gen_list = [self.gens[v] for v in graph.vertices]
        self._right_rows = right.tolist()
        self._left_rows = left.tolist()
        self.right_descents = [sum(1 << i for i in range(self.rank) if self._right_rows[x][i] < x)
                               for x in range(self.size)]
        self.left_descents = [sum(1 << i for i in range(self.rank) if self._left_rows[x][i] < x)
                              for x in range(self.size)]
        self.longest = self.size - 1

    # elements are in BFS (length) order, so "smaller index" after a generator
    # step means "shorter"; see enumerate_group.

    @cached_property
    def mul(self) -> np.ndarray:
        if self.size > FULL_TABLE_LIMIT:
            raise MemoryError(f"full table for |W| = {self.size} is too large; use multiply()")
        table = np.empty((self.size, self.size), dtype=np.int64)
        table[:, 0] = np.arange(self.size)
        for y in range(1, self.size):
            table[:, y] = self.right[table[:, self.parent[y]], self.last[y]]
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        inv = np.zeros(self.size, dtype=np.int64)
        for y in range(1, self.size):
            inv[y] = self.left[inv[self.parent[y]], self.last[y]]
        return inv

    def reduced_word(self, x: int) -> list[int]:
        """Generator indices of a reduced word for ``x``."""
        word = []
        while x:
            word.append(int(self.last[x]))
            x = int(self.parent[x])
        return word[::-1]

    def reduced_word_names(self, x: int) -> list[str]:
        return [self.graph.vertices[i] for i in self.reduced_word(x)]

    def right_mul_gen(self, x: int, s: int) -> int:
        return self._right_rows[x][s]

    def left_mul_gen(self, s: int, x: int) -> int:
        return self._left_rows[x][s]

    def multiply(self, x: int, y: int) -> int:
        rows = self._right_rows
        for s in self.reduced_word(y):
            x = rows[x][s]
        return x

    def element_of_word(self, gens: Sequence[int]) -> int:
        x = 0
        rows = self._right_rows
        for s in gens:
            x = rows[x][s]
        return x

    def conj(self, g: int, x: int) -> int:
        return self.multiply(self.multiply(g, x), int(self.inv[g]))


def _key(mats: np.ndarray) -> list[bytes]:
    rounded = np.rint(mats * _GRID).astype(np.int64)
    return [r.tobytes() for r in rounded]


def reflection_matrices(g: LabeledGraph) -> np.ndarray:
    """Simple reflections ``x -> x - 2 B(x, a_s) a_s`` in the simple-root basis."""
    gram = gram_matrix(g)
    n = g.n
    mats = np.repeat(np.eye(n)[None, :, :], n, axis=0)
    for s in range(n):
        mats[s, s, :] -= 2 * gram[s, :]
    return mats


def enumerate_group(g: LabeledGraph, size_bound: int = SIZE_BOUND) -> CoxeterTable:
    """Enumerate ``W[g]`` through its geometric representation."""
    if spherical_type(g) is None:
        raise NotSphericalError("W[g] is infinite; enumeration needs a spherical graph")
    return _enumerate_cached(g, size_bound)


@lru_cache(maxsize=32)
def _enumerate_cached(g: LabeledGraph, size_bound: int) -> CoxeterTable:
    n = g.n
    refl = reflection_matrices(g)
    mats = [np.eye(n)]
    index = {_key(np.eye(n)[None])[0]: 0}
    parent, last, length = [0], [0], [0]
    right_pairs: list[tuple[int, int, int]] = []
    frontier = [0]
    depth = 0
    all_mats = np.eye(n)[None]
    while frontier:
        depth += 1
        block = all_mats[frontier]
        nxt = []
        for s in range(n):
            prods = block @ refl[s]
            for x, key, mat in zip(frontier, _key(prods), prods):
                y = index.get(key)
                if y is None:
                    y = len(mats)
                    if y >= size_bound:
                        raise SizeBoundError(y, size_bound)
                    index[key] = y
                    mats.append(mat)
                    parent.append(x)
                    last.append(s)
                    length.append(depth)
                    nxt.append(y)
                right_pairs.append((x, s, y))
        if nxt:
            all_mats = np.concatenate([all_mats, np.array([mats[y] for y in nxt])])
        frontier = nxt
    size = len(mats)
    right = np.full((size, n), -1, dtype=np.int64)
    for x, s, y in right_pairs:
        right[x, s] = y
    left = np.empty((size, n), dtype=np.int64)
    for s in range(n):
        for x, key in enumerate(_key(refl[s] @ all_mats)):
            left[x, s] = index[key]
    # BFS guarantees the longest element comes last
    return CoxeterTable(g, right, left, np.array(length), np.array(parent), np.array(last))


def group_order_formula(types: Sequence[str]) -> int:
    from .classify import type_order

    return math.prod(type_order(t) for t in types)


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class GroupAutomorphism:
    """Permutation ``perm[x] = phi(x)`` of the element indices."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``self o other``."""
        return GroupAutomorphism(tuple(self.perm[y] for y in other.perm))

    def power(self, k: int) -> "GroupAutomorphism":
        result = GroupAutomorphism(tuple(range(len(self.perm))))
        for _ in range(k):
            result = self.compose(result)
        return result

    def order(self) -> int:
        seen = [False] * len(self.perm)
        out = 1
        for i in range(len(self.perm)):
            if seen[i]:
                continue
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                k += 1
            out = math.lcm(out, k)
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def is_automorphism_of(self, t: GroupTable) -> bool:
        p = np.array(self.perm)
        if p[0] != 0 or sorted(self.perm) != list(range(t.size)):
            return False
        return bool(np.array_equal(p[t.mul], t.mul[np.ix_(p, p)]))


def identity_automorphism(t: GroupTable) -> GroupAutomorphism:
    return GroupAutomorphism(tuple(range(t.size)))


def inner_automorphism(t: GroupTable, g: int) -> GroupAutomorphism:
    return GroupAutomorphism(tuple(t.conj(g, x) for x in range(t.size)))


def extend_generator_map(t: CoxeterTable, images: Mapping[str, int]) -> GroupAutomorphism:
    """Extend ``gens[v] -> images[v]`` along the Cayley graph and verify it."""
    perm = [0] * t.size
    img = [images[v] for v in t.graph.vertices]
    for y in range(1, t.size):
        perm[y] = t.multiply(perm[t.parent[y]], img[t.last[y]])
    for x in range(t.size):
        for s in range(t.rank):
            if perm[t.right_mul_gen(x, s)] != t.multiply(perm[x], img[s]):
                raise GraphError("generator map does not extend to a homomorphism")
    if len(set(perm)) != t.size:
        raise GraphError("generator map is not bijective")
    return GroupAutomorphism(tuple(perm))


def induced_automorphism(t: CoxeterTable, sigma: GraphAutomorphism | Mapping[str, str]) -> GroupAutomorphism:
    """Automorphism of ``W`` sending ``gens[v]`` to ``gens[sigma(v)]``."""
    if not isinstance(sigma, GraphAutomorphism):
        sigma = automorphism_from_mapping(t.graph, sigma)  # unlisted vertices are fixed
    mapping = sigma.as_dict()
    if not is_label_preserving(t.graph, mapping):
        raise GraphError("sigma is not a label-preserving automorphism")
    return extend_generator_map(t, {v: t.gens[mapping[v]] for v in t.graph.vertices})


def inversion_automorphism(t: CoxeterTable) -> GroupAutomorphism:
    """Image of the global inversion ``s -> s^-1``; trivial since each ``s`` is an involution."""
    return extend_generator_map(t, {v: int(t.inv[t.gens[v]]) for v in t.graph.vertices})


# -- conjugacy ----------------------------------------------------------------


def conjugacy_classes(t: GroupTable) -> list[list[int]]:
    """Orbits of conjugation, each sorted; classes ordered by smallest member."""
    ds = DisjointSet(t.size)
    mul, inv = t.mul, t.inv
    xs = np.arange(t.size)
    for g in t.gens.values():
        images = mul[mul[g, xs], inv[g]]
        for x, y in zip(xs.tolist(), images.tolist()):
            ds.union(x, y)
    return ds.classes()


def has_full_table(t: GroupTable) -> bool:
    return not isinstance(t, CoxeterTable) or t.size <= FULL_TABLE_LIMIT


def twisted_classes(t: GroupTable, phi: GroupAutomorphism) -> list[list[int]]:
    """Orbits of ``x . g = x g phi(x)^-1``.

    Unions over all pairs ``(x, g)`` when the full table fits; for larger
    Coxeter groups ``x`` runs over the simple reflections only, which
    generate the same orbits.
    """
    ds = DisjointSet(t.size)
    if has_full_table(t):
        mul, inv = t.mul, t.inv
        phi_inv = inv[np.array(phi.perm)]
        for x in range(t.size):
            images = mul[mul[x], phi_inv[x]]
            for g, h in enumerate(images.tolist()):
                ds.union(g, h)
        return ds.classes()
    for v in t.graph.vertices:
        s = t.gens[v]
        twist = t.reduced_word(int(t.inv[phi.perm[s]]))
        for g in range(t.size):
            h = t.left_mul_gen(t.graph.index[v], g)
            for r in twist:
                h = t.right_mul_gen(h, r)
            ds.union(g, h)
    return ds.classes()


def reidemeister_number(t: GroupTable, phi: GroupAutomorphism) -> int:
    return len(twisted_classes(t, phi))


def reidemeister_via_coset(t: GroupTable, phi: GroupAutomorphism) -> int:
    """Count conjugacy classes of ``G x| <c>`` that meet the coset ``G c``."""
    from .torus import realize_finite

    k = phi.order()
    if t.size * k > FULL_TABLE_LIMIT:
        raise MemoryError(f"semidirect product of order {t.size * k} is too large to tabulate")
    big = realize_finite(t, phi)
    n = t.size
    coset = set(range(n, 2 * n)) if k > 1 else set(range(n))
    return sum(1 for cls in conjugacy_classes(big) if coset.intersection(cls))
