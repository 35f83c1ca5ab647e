"""Coset enumeration for Coxeter presentations.

Used as an independent check on the reflection-representation enumeration:
it only sees the relators ``s^2`` and ``(st)^m``, never a matrix.
"""

from __future__ import annotations

from collections import deque

from .graph import INF, LabeledGraph


class CosetLimit(RuntimeError):
    pass


def coxeter_relators(g: LabeledGraph) -> list[list[int]]:
    rels = []
    for i, j, m in g.pairs():
        if m is not INF:
            rels.append([i, j] * m)
    return rels


def enumerate_cosets(n_gens: int, relators: list[list[int]], max_cosets: int = 2_000_000) -> list[list[int]]:
    """HLT enumeration of the cosets of the trivial subgroup.

    Every generator is an involution, so each table column is its own
    inverse column.  Returns the compacted coset table.
    """
    table: list[list[int]] = [[-1] * n_gens]
    forward = [0]  # forward[c] == c for live cosets

    def find(c: int) -> int:
        root = c
        while forward[root] != root:
            root = forward[root]
        while forward[c] != root:
            forward[c], c = root, forward[c]
        return root

    def define(c: int, s: int) -> int:
        if len(table) >= max_cosets:
            raise CosetLimit(f"more than {max_cosets} cosets")
        d = len(table)
        table.append([-1] * n_gens)
        forward.append(d)
        table[c][s] = d
        table[d][s] = c
        return d

    def coincidence(a: int, b: int) -> None:
        queue = deque([(a, b)])
        while queue:
            a, b = queue.popleft()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            forward[b] = a
            for s in range(n_gens):
                e = table[b][s]
                if e < 0:
                    continue
                table[b][s] = -1
                if table[e][s] == b:
                    table[e][s] = -1
                e, a2 = find(e), find(a)
                if table[a2][s] >= 0:
                    queue.append((table[a2][s], e))
                else:
                    table[a2][s] = e
                if table[e][s] >= 0:
                    queue.append((table[e][s], a2))
                else:
                    table[e][s] = a2

    def scan_and_fill(c: int, word: list[int]) -> None:
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j]] >= 0:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                s = word[i]
                table[f][s] = b
                table[b][s] = f
                return
            define(f, word[i])

    c = 0
    while c < len(table):
        for rel in relators:
            if find(c) != c:
                break
            scan_and_fill(c, rel)
        if find(c) == c:
            for s in range(n_gens):
                if table[c][s] < 0:
                    define(c, s)
        c += 1

    live = [x for x in range(len(table)) if find(x) == x]
    renum = {x: k for k, x in enumerate(live)}
    return [[renum[find(table[x][s])] for s in range(n_gens)] for x in live]


def coset_order(g: LabeledGraph, max_cosets: int = 2_000_000) -> int:
    """Order of ``W[g]`` by coset enumeration (diverges for infinite groups)."""
    return len(enumerate_cosets(g.n, coxeter_relators(g), max_cosets))
