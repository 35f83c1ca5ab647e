"""Left-weighted Garside normal forms for spherical Artin groups.

The simple elements are the elements of the finite Coxeter group ``W``
(indices into a :class:`~artin_rinf.coxeter.CoxeterTable`); ``Delta`` is the
lift of the longest element ``w0``.  Every element of ``A`` is written
uniquely as ``Delta^k x_1 ... x_r`` with each ``x_i`` neither trivial nor
``w0`` and every left descent of ``x_{i+1}`` a right descent of ``x_i``.

Inverse letters use ``s^-1 = Delta^-1 (w0 s)`` and ``x Delta^-1 = Delta^-1 tau(x)``
where ``tau`` is conjugation by ``w0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .classify import spherical_type
from .coxeter import CoxeterTable, NotSphericalError, enumerate_group
from .corpus import type_d
from .graph import GraphError, LabeledGraph, is_label_preserving
from .words import Word, WordError, exponent_sum, inverse, parse_word, power, word

MAX_WORD = 10_000


@dataclass(frozen=True)
class NormalForm:
    delta: int
    factors: tuple[int, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


class Garside:
    """Normal-form engine for one spherical graph."""

    def __init__(self, graph: LabeledGraph):
        if spherical_type(graph) is None:
            raise NotSphericalError("Garside normal forms need a spherical graph")
        self.graph = graph
        self.table: CoxeterTable = enumerate_group(graph)
        t = self.table
        self.rank = t.rank
        self.w0 = t.longest
        self._right = t._right_rows
        self._left = t._left_rows
        self._rdes = t.right_descents
        self._ldes = t.left_descents
        # tau(s) = w0 s w0 is again a simple reflection
        tau_gen = []
        for s in range(self.rank):
            img = t.multiply(t.multiply(self.w0, t.gen_list[s]), self.w0)
            tau_gen.append(t.gen_list.index(img))
        self.tau_gen = tau_gen
        tau = [0] * t.size
        for y in range(1, t.size):
            tau[y] = self._right[tau[t.parent[y]]][tau_gen[t.last[y]]]
        self.tau = tau
        # w0 s, the complement used for inverse letters
        self._neg = [self._right[self.w0][s] for s in range(self.rank)]

    # -- core operations -------------------------------------------------

    def _slide(self, u: int, v: int) -> tuple[int, int]:
        """Move left descents of ``v`` into ``u`` until ``(u, v)`` is left-weighted."""
        right, left, rdes, ldes = self._right, self._left, self._rdes, self._ldes
        while True:
            bad = ldes[v] & ~rdes[u]
            if not bad:
                return u, v
            s = (bad & -bad).bit_length() - 1
            u = right[u][s]
            v = left[v][s]

    def _normalize(self, delta: int, factors: list[int]) -> NormalForm:
        changed = True
        while changed:
            changed = False
            for i in range(len(factors) - 1, 0, -1):
                u, v = self._slide(factors[i - 1], factors[i])
                if (u, v) != (factors[i - 1], factors[i]):
                    factors[i - 1], factors[i] = u, v
                    changed = True
        start = 0
        while start < len(factors) and factors[start] == self.w0:
            start += 1
        end = len(factors)
        while end > start and factors[end - 1] == 0:
            end -= 1
        return NormalForm(delta + start, tuple(factors[start:end]))

    def _times_simple(self, nf: NormalForm, y: int) -> NormalForm:
        if y == 0:
            return nf
        return self._normalize(nf.delta, list(nf.factors) + [y])

    def _times_delta_inverse(self, nf: NormalForm) -> NormalForm:
        tau = self.tau
        return NormalForm(nf.delta - 1, tuple(tau[x] for x in nf.factors))

    def _gen_index(self, name: str) -> int:
        try:
            return self.graph.index[name]
        except KeyError:
            raise WordError(f"unknown generator {name!r}") from None

    def multiply_word(self, nf: NormalForm, w: Sequence[tuple[str, int]]) -> NormalForm:
        gens = self.table.gen_list
        for name, e in w:
            s = self._gen_index(name)
            if e == 1:
                nf = self._times_simple(nf, gens[s])
            elif e == -1:
                nf = self._times_simple(self._times_delta_inverse(nf), self._neg[s])
            else:
                raise WordError(f"exponent must be +-1, got {e}")
        return nf

    def normal_form(self, w: Sequence[tuple[str, int]] | str) -> NormalForm:
        if isinstance(w, str):
            w = parse_word(w)
        if len(w) > MAX_WORD:
            raise WordError(f"word longer than {MAX_WORD} letters")
        return self.multiply_word(NormalForm(0), w)

    def equal(self, u, v) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    # -- conversions -----------------------------------------------------

    def simple_word(self, x: int) -> Word:
        return tuple((n, 1) for n in self.table.reduced_word_names(x))

    def delta_word(self) -> Word:
        return self.simple_word(self.w0)

    def to_word(self, nf: NormalForm) -> Word:
        out = power(self.delta_word(), nf.delta)
        for x in nf.factors:
            out += self.simple_word(x)
        return out

    def inverse_nf(self, nf: NormalForm) -> NormalForm:
        return self.normal_form(inverse(self.to_word(nf)))

    def to_json(self, nf: NormalForm) -> dict:
        return {"delta": nf.delta, "factors": [list(self.table.reduced_word_names(x)) for x in nf.factors]}

    def is_left_weighted(self, nf: NormalForm) -> bool:
        f = nf.factors
        if any(x in (0, self.w0) for x in f):
            return False
        return all(self._ldes[v] & ~self._rdes[u] == 0 for u, v in zip(f, f[1:]))

    def is_generator_power(self, nf: NormalForm, name: str) -> bool:
        """Whether ``nf`` is ``name^k`` for some integer ``k`` (including 0)."""
        k = nf.delta * len(self.delta_word()) + sum(self.table.elem_length[x] for x in nf.factors)
        return nf == self.normal_form(power(word(name), k))

    def random_word(self, length: int, rng: random.Random) -> Word:
        return tuple((rng.choice(self.graph.vertices), rng.choice((1, -1))) for _ in range(length))


@lru_cache(maxsize=16)
def garside(graph: LabeledGraph) -> Garside:
    return Garside(graph)


def normal_form(g: LabeledGraph, w) -> NormalForm:
    return garside(g).normal_form(w)


def equal(g: LabeledGraph, u, v) -> bool:
    return garside(g).equal(u, v)


# -- type D_n identities --------------------------------------------------------


def delta_word_Dn(n: int) -> Word:
    """Blocks ``(t_i ... t_{n-2} t_{n-1} t_n t_{n-2} ... t_i)`` for ``i = 1..n-2``,
    then ``(t_{n-1} t_n)``; total length ``n(n-1)``."""
    if n < 4:
        raise ValueError("delta_word_Dn needs n >= 4")
    out: list[str] = []
    for i in range(1, n - 1):
        up = [f"t{k}" for k in range(i, n - 1)]
        out += up + [f"t{n - 1}", f"t{n}"] + up[::-1]
    out += [f"t{n - 1}", f"t{n}"]
    return word(*out)


def dn_blocks(n: int) -> list[Word]:
    """``delta_word_Dn(n)`` split into its parenthesized blocks."""
    blocks = []
    for i in range(1, n - 1):
        up = [f"t{k}" for k in range(i, n - 1)]
        blocks.append(word(*(up + [f"t{n - 1}", f"t{n}"] + up[::-1])))
    blocks.append(word(f"t{n - 1}", f"t{n}"))
    return blocks


def zeta(n: int) -> dict[str, str]:
    """Graph automorphism of ``D_n`` exchanging ``t_{n-1}`` and ``t_n``."""
    m = {f"t{i}": f"t{i}" for i in range(1, n + 1)}
    m[f"t{n - 1}"], m[f"t{n}"] = f"t{n}", f"t{n - 1}"
    return m


def apply_graph_automorphism(g: LabeledGraph, sigma: Mapping[str, str], w: Iterable[tuple[str, int]]) -> Word:
    full = {v: sigma.get(v, v) for v in g.vertices}
    if not is_label_preserving(g, full):
        raise GraphError("sigma is not label-preserving")
    return tuple((full[n], e) for n, e in w)


def apply_inversion(w: Iterable[tuple[str, int]]) -> Word:
    """Global inversion: every generator to its inverse, letter by letter."""
    return tuple((n, -e) for n, e in w)


def apply_automorphism(g: LabeledGraph, kind: str, w, sigma: Mapping[str, str] | None = None) -> Word:
    if kind == "inversion":
        return apply_inversion(w)
    if kind == "graph":
        if sigma is None:
            raise GraphError("graph automorphism needs sigma")
        return apply_graph_automorphism(g, sigma, w)
    raise ValueError(f"unknown automorphism kind {kind!r}")


def abelianized_sum(w: Iterable[tuple[str, int]]) -> int:
    """Image under ``A -> Z``, every generator to 1."""
    return exponent_sum(w)


def equal_mod_center(g: LabeledGraph, u, v) -> bool:
    """For type ``D_n``: is ``u v^-1`` central (a power of Delta, or of Delta^2 for odd n)?"""
    types = spherical_type(g)
    if not types or len(types) != 1 or not types[0].startswith("D"):
        raise NotSphericalError("equal_mod_center needs a graph of type D_n")
    n = int(types[0][1:])
    G = garside(g)
    u = parse_word(u) if isinstance(u, str) else tuple(u)
    v = parse_word(v) if isinstance(v, str) else tuple(v)
    nf = G.normal_form(u + inverse(v))
    if nf.factors:
        return False
    return n % 2 == 0 or nf.delta % 2 == 0


def conjugate(x: Word, w: Word) -> Word:
    """``x w x^-1``."""
    return tuple(x) + tuple(w) + inverse(x)


def check_dn_identities(n: int, samples: int = 100, seed: int = 0) -> list[tuple[str, bool]]:
    """Run the Delta / zeta / chi identity suite for ``A[D_n]``.

    Returns ``(description, passed)`` pairs.
    """
    g = type_d(n)
    G = garside(g)
    D = delta_word_Dn(n)
    gens = [f"t{i}" for i in range(1, n + 1)]
    results: list[tuple[str, bool]] = []
    results.append((f"delta word has length {n * (n - 1)}", len(D) == n * (n - 1)))
    results.append(("delta word is the Garside element", G.normal_form(D) == NormalForm(1)))
    if n % 2 == 0:
        for s in gens:
            results.append((f"Delta {s} = {s} Delta", G.equal(D + word(s), word(s) + D)))
    else:
        swap = zeta(n)
        for s in gens:
            results.append((f"Delta {s} Delta^-1 = {swap[s]}", G.equal(conjugate(D, word(s)), word(swap[s]))))
        D2 = D + D
        for s in gens:
            results.append((f"Delta^2 {s} = {s} Delta^2", G.equal(D2 + word(s), word(s) + D2)))
    results.append(("Delta generates the center mod Z", equal_mod_center(g, D, ()) == (n % 2 == 0)))
    results.append(("Delta^2 is central", equal_mod_center(g, D + D, ())))
    rng = random.Random(seed)
    z = zeta(n)
    ok_order = ok_commute = ok_conj = ok_abel = True
    for _ in range(samples):
        w = G.random_word(rng.randint(0, 12), rng)
        zw = apply_graph_automorphism(g, z, w)
        ok_order &= apply_graph_automorphism(g, z, zw) == w and apply_inversion(apply_inversion(w)) == w
        ok_commute &= apply_graph_automorphism(g, z, apply_inversion(w)) == apply_inversion(zw)
        ok_abel &= abelianized_sum(apply_inversion(w)) == -abelianized_sum(w)
        if n % 2 == 1:
            ok_conj &= G.equal(zw, conjugate(D, w))
    results.append(("zeta^2 = chi^2 = id", ok_order))
    results.append(("zeta chi = chi zeta", ok_commute))
    results.append(("xi(chi(w)) = -xi(w)", ok_abel))
    if n % 2 == 1:
        results.append(("zeta = conjugation by Delta", ok_conj))
    results.append(("chi is not inner (abelianization)", abelianized_sum(apply_inversion(word("t1"))) != abelianized_sum(word("t1"))))
    return results
