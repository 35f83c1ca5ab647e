"""Mapping-torus presentations and their finite realizations.

For an automorphism ``phi`` of ``G`` of order ``m`` in ``Out(G)`` the group
``G_phi`` adds a stable letter ``t`` with ``t g t^-1 = phi(g)`` and, when
``m`` is finite, ``t^m = p``.  For a finite table we build the plain
semidirect product ``G x| <c>`` with ``c`` of the order of ``phi``; conjugating
``(g, 1)`` by ``(x, 0)`` gives ``(x g phi(x)^-1, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .coxeter import GroupAutomorphism, GroupTable
from .graph import INF, LabeledGraph
from .words import Word, alternating, format_letter, inverse, parse_word


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        known = set(self.generators)
        for rel in self.relators:
            bad = {n for n, _ in rel} - known
            if bad:
                raise PresentationError(f"relator uses undeclared generators {sorted(bad)}")

    def to_json(self) -> dict:
        return {
            "gens": list(self.generators),
            "relators": [[format_letter(x) for x in rel] for rel in self.relators],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Presentation":
        rels = tuple(parse_word(" ".join(r)) for r in data["relators"])
        return cls(tuple(data["gens"]), rels)


def artin_presentation(g: LabeledGraph) -> Presentation:
    """Generators the vertices; one relator ``Pi(s,t,m) Pi(t,s,m)^-1`` per finite label."""
    rels = []
    for i, j, m in g.pairs():
        if m is INF:
            continue
        s, t = g.vertices[i], g.vertices[j]
        rels.append(alternating(s, t, m) + inverse(alternating(t, s, m)))
    return Presentation(g.vertices, tuple(rels))


def _stable_letter(gens: Sequence[str]) -> str:
    name = "t"
    while name in gens:
        name += "_"
    return name


def build_G_phi(
    p: Presentation,
    phi: Mapping[str, Word],
    m=INF,
    p_elt: Optional[Word] = None,
    stable_letter: Optional[str] = None,
) -> Presentation:
    """Presentation of the mapping torus of ``phi``.

    ``phi`` maps each generator to its image word; ``m`` is the order of
    ``phi`` in ``Out`` (``INF`` allowed) and ``p_elt`` the element with
    ``phi^m = conj(p_elt)``, required when ``m`` is finite.
    """
    t = stable_letter or _stable_letter(p.generators)
    if t in p.generators:
        raise PresentationError(f"stable letter {t!r} clashes with a generator")
    missing = set(p.generators) - set(phi)
    if missing:
        raise PresentationError(f"phi has no image for {sorted(missing)}")
    known = set(p.generators)
    for gname, img in phi.items():
        if gname not in known or {n for n, _ in img} - known:
            raise PresentationError(f"phi({gname}) uses an unknown generator")
    rels = list(p.relators)
    for gname in p.generators:
        rels.append(((t, 1), (gname, 1), (t, -1)) + inverse(phi[gname]))
    if m is not INF:
        if not isinstance(m, int) or m < 1:
            raise PresentationError("m must be a positive integer or INF")
        if p_elt is None:
            raise PresentationError("p_elt is required when m is finite")
        if {n for n, _ in p_elt} - known:
            raise PresentationError("p_elt uses an unknown generator")
        rels.append(((t, 1),) * m + inverse(p_elt))
    return Presentation(p.generators + (t,), tuple(rels))


def relators_vanish_under(p: Presentation, weights: Mapping[str, int]) -> bool:
    """True if ``gen -> weights[gen]`` defines a homomorphism to the integers."""
    return all(sum(e * weights.get(n, 0) for n, e in rel) == 0 for rel in p.relators)


def realize_finite(t: GroupTable, phi: GroupAutomorphism) -> GroupTable:
    """Table of ``G x| <c>``, ``c`` acting by ``phi`` and of order ``ord(phi)``.

    Element ``(g, i)`` has index ``i * |G| + g``; multiplication is
    ``(g, i)(h, j) = (g phi^i(h), i + j mod k)``.
    """
    k = phi.order()
    n = t.size
    if k == 1:
        return t
    mul = np.asarray(t.mul)
    powers = [np.arange(n)]
    p = np.array(phi.perm)
    for _ in range(1, k):
        powers.append(p[powers[-1]])
    big = np.empty((n * k, n * k), dtype=np.int64)
    for i in range(k):
        twisted = mul[:, powers[i]]
        for j in range(k):
            big[i * n:(i + 1) * n, j * n:(j + 1) * n] = twisted + ((i + j) % k) * n
    gens = dict(t.gens)
    gens[_stable_letter(list(gens))] = n
    return GroupTable(big, gens)


def split(index: int, n: int) -> tuple[int, int]:
    """``(g, i)`` for a semidirect-product index."""
    return index % n, index // n
