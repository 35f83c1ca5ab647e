"""Labeled Coxeter / presentation graphs.

A :class:`LabeledGraph` stores a Coxeter matrix over a finite ordered vertex
set.  Two edge conventions are supported:

* ``presentation``: an edge ``{s, t}`` is drawn iff ``m_st`` is finite; a
  missing pair means ``m_st = inf``.
* ``coxeter``: an edge is drawn iff ``m_st >= 3`` (including ``inf``); a
  missing pair means ``m_st = 2``.

The full matrix is the same object under either convention; only the stored
edges differ.  Stored edges are normalized so that a pair carrying the
implicit default label is never stored.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

PRESENTATION = "presentation"
COXETER = "coxeter"
CONVENTIONS = (PRESENTATION, COXETER)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class _Infinity:
    """The label ``inf``.  Compares greater than every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return "INF"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()

Label = Union[int, _Infinity]


class GraphError(ValueError):
    """Invalid graph data (bad label, unknown vertex, ...)."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def _check_label(m) -> Label:
    if m is INF:
        return m
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphError(f"label must be an integer >= 2 or INF, got {m!r}")
    if m < 2:
        raise GraphError(f"label must be >= 2, got {m}")
    return m


def default_label(convention: str) -> Label:
    return INF if convention == PRESENTATION else 2


@dataclass(frozen=True)
class LabeledGraph:
    """Coxeter matrix on named vertices, with a stored-edge convention.

    ``edges`` holds ``(i, j, m)`` with ``i < j`` vertex indices, sorted, and
    never the default label of the convention.  Build instances through
    :meth:`from_edges` rather than the raw constructor.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, Label], ...]
    convention: str = PRESENTATION

    @classmethod
    def from_edges(
        cls,
        vertices: Sequence[str],
        edges: Iterable[tuple[str, str, Label]] = (),
        convention: str = PRESENTATION,
    ) -> "LabeledGraph":
        if convention not in CONVENTIONS:
            raise GraphError(f"unknown convention {convention!r}")
        vertices = tuple(vertices)
        index = {}
        for v in vertices:
            if not isinstance(v, str) or not NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        if not vertices:
            raise GraphError("graph needs at least one vertex")
        labels: dict[tuple[int, int], Label] = {}
        for u, v, m in edges:
            m = _check_label(m)
            if u not in index or v not in index:
                raise GraphError(f"unknown vertex in edge {u} {v}")
            i, j = sorted((index[u], index[v]))
            if i == j:
                raise GraphError(f"self-loop on {u}")
            if labels.get((i, j), m) != m:
                raise GraphError(f"conflicting labels for edge {u} {v}")
            labels[(i, j)] = m
        dflt = default_label(convention)
        stored = tuple(sorted((i, j, m) for (i, j), m in labels.items() if m != dflt))
        return cls(vertices, stored, convention)

    @classmethod
    def from_matrix(
        cls, vertices: Sequence[str], matrix: Sequence[Sequence[Label]], convention: str = PRESENTATION
    ) -> "LabeledGraph":
        n = len(vertices)
        edges = []
        for i, j in itertools.combinations(range(n), 2):
            if matrix[i][j] != matrix[j][i]:
                raise GraphError("Coxeter matrix must be symmetric")
            edges.append((vertices[i], vertices[j], matrix[i][j]))
        return cls.from_edges(vertices, edges, convention)

    # -- matrix access ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def matrix(self) -> tuple[tuple[Label, ...], ...]:
        """Full Coxeter matrix, diagonal 1."""
        dflt = default_label(self.convention)
        rows = [[dflt] * self.n for _ in range(self.n)]
        for i in range(self.n):
            rows[i][i] = 1
        for i, j, m in self.edges:
            rows[i][j] = rows[j][i] = m
        return tuple(tuple(r) for r in rows)

    def label(self, s: str, t: str) -> Label:
        try:
            return self.matrix[self.index[s]][self.index[t]]
        except KeyError as exc:
            raise GraphError(f"unknown vertex {exc.args[0]!r}") from None

    def pairs(self) -> Iterator[tuple[int, int, Label]]:
        """All unordered index pairs with their labels."""
        mat = self.matrix
        for i, j in itertools.combinations(range(self.n), 2):
            yield i, j, mat[i][j]

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Presentation-graph adjacency as bitmasks (edge iff label finite)."""
        adj = [0] * self.n
        for i, j, m in self.pairs():
            if m is not INF:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return tuple(adj)

    def labeled_edges(self) -> list[tuple[str, str, Label]]:
        """Stored edges by vertex name."""
        return [(self.vertices[i], self.vertices[j], m) for i, j, m in self.edges]

    def same_matrix(self, other: "LabeledGraph") -> bool:
        return self.vertices == other.vertices and self.matrix == other.matrix

    def relabel(self, mapping: Mapping[str, str], order: Sequence[str] | None = None) -> "LabeledGraph":
        """Rename vertices; ``order`` optionally fixes the new declaration order."""
        names = [mapping[v] for v in self.vertices]
        new = order if order is not None else names
        edges = [(mapping[u], mapping[v], m) for u, v, m in self.labeled_edges()]
        return LabeledGraph.from_edges(new, edges, self.convention)

    # -- serialization ---------------------------------------------------

    def to_dsl(self) -> str:
        lines = [f"convention {self.convention}", "vertices " + " ".join(self.vertices)]
        for u, v, m in self.labeled_edges():
            lines.append(f"edge {u} {v} {m}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        edges = []
        for u, v, m in self.labeled_edges():
            u, v = sorted((u, v))
            edges.append({"u": u, "v": v, "m": "inf" if m is INF else m})
        edges.sort(key=lambda e: (e["u"], e["v"]))
        return {"convention": self.convention, "vertices": list(self.vertices), "edges": edges}

    @classmethod
    def from_json(cls, data: Mapping) -> "LabeledGraph":
        try:
            edges = [(e["u"], e["v"], INF if e["m"] == "inf" else e["m"]) for e in data["edges"]]
            return cls.from_edges(data["vertices"], edges, data["convention"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from None

    def __str__(self) -> str:
        return json.dumps(self.to_json())


# -- parser ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"[^\s;#]+")


def _tokens(text: str):
    """Yield (statement tokens) where each token is (value, line, column)."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stmt = []
        pos = 0
        for piece in re.split(r"(;)", line):
            if piece == ";":
                if stmt:
                    yield stmt
                stmt = []
            else:
                for m in _TOKEN_RE.finditer(piece):
                    stmt.append((m.group(), lineno, pos + m.start() + 1))
            pos += len(piece)
        if stmt:
            yield stmt


def parse_graph(text: str) -> LabeledGraph:
    """Parse the line-oriented graph DSL.

    >>> g = parse_graph("convention presentation; vertices a b; edge a b 3")
    >>> g.label("a", "b")
    3
    """
    convention = None
    vertices: list[str] = []
    seen: dict[str, tuple[int, int]] = {}
    edges: dict[tuple[str, str], tuple[Label, int, int]] = {}
    last = (1, 1)
    for stmt in _tokens(text):
        (word, line, col), args = stmt[0], stmt[1:]
        last = (line, col)
        if word == "convention":
            if len(args) != 1 or args[0][0] not in CONVENTIONS:
                raise ParseError("expected 'convention presentation|coxeter'", line, col)
            if convention is not None and convention != args[0][0]:
                raise ParseError("conflicting convention directives", line, col)
            convention = args[0][0]
        elif word == "vertices":
            if not args:
                raise ParseError("'vertices' needs at least one name", line, col)
            for name, l, c in args:
                if not NAME_RE.match(name) or name == "inf":
                    raise ParseError(f"invalid vertex name {name!r}", l, c)
                if name in seen:
                    raise ParseError(f"duplicate vertex {name!r}", l, c)
                seen[name] = (l, c)
                vertices.append(name)
        elif word == "edge":
            if len(args) != 3:
                raise ParseError("expected 'edge <name> <name> <label>'", line, col)
            (u, lu, cu), (v, lv, cv), (lab, ll, cl) = args
            for name, l, c in ((u, lu, cu), (v, lv, cv)):
                if name not in seen:
                    raise ParseError(f"unknown vertex {name!r}", l, c)
            if u == v:
                raise ParseError(f"self-loop on {u!r}", lu, cu)
            if lab == "inf":
                m: Label = INF
            elif re.fullmatch(r"[0-9]+", lab):
                m = int(lab)
                if m < 2:
                    raise ParseError(f"label must be >= 2, got {m}", ll, cl)
            else:
                raise ParseError(f"invalid label {lab!r}", ll, cl)
            key = tuple(sorted((u, v)))
            if key in edges and edges[key][0] != m:
                raise ParseError(f"conflicting labels for edge {u} {v}", line, col)
            edges[key] = (m, line, col)
        else:
            raise ParseError(f"unknown directive {word!r}", line, col)
    if not vertices:
        raise ParseError("graph needs at least one vertex", *last)
    return LabeledGraph.from_edges(
        vertices, [(u, v, m) for (u, v), (m, _, _) in edges.items()], convention or PRESENTATION
    )


def convert(g: LabeledGraph, target: str) -> LabeledGraph:
    """Re-express ``g`` in another edge convention; the matrix is unchanged."""
    if target not in CONVENTIONS:
        raise GraphError(f"unknown convention {target!r}")
    if target == g.convention:
        return g
    return LabeledGraph.from_matrix(g.vertices, g.matrix, target)


def induced_subgraph(g: LabeledGraph, vs: Iterable[str]) -> LabeledGraph:
    """Full subgraph on ``vs``, kept in the ambient declaration order."""
    wanted = set(vs)
    unknown = wanted - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    keep = [v for v in g.vertices if v in wanted]
    idx = [g.index[v] for v in keep]
    mat = g.matrix
    sub = [[mat[i][j] for j in idx] for i in idx]
    return LabeledGraph.from_matrix(keep, sub, g.convention)


def induced_by_mask(g: LabeledGraph, mask: int) -> LabeledGraph:
    return induced_subgraph(g, [v for i, v in enumerate(g.vertices) if mask >> i & 1])


# -- automorphisms --------------------------------------------------------


@dataclass(frozen=True)
class GraphAutomorphism:
    """Label-preserving vertex permutation, stored as ``images[i] = sigma(i)``."""

    vertices: tuple[str, ...]
    images: tuple[int, ...]

    def __call__(self, v: str) -> str:
        return self.vertices[self.images[self.vertices.index(v)]]

    def as_dict(self) -> dict[str, str]:
        return {v: self.vertices[self.images[i]] for i, v in enumerate(self.vertices)}

    def compose(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        """``self o other`` (apply ``other`` first)."""
        return GraphAutomorphism(self.vertices, tuple(self.images[j] for j in other.images))

    def inverse(self) -> "GraphAutomorphism":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return GraphAutomorphism(self.vertices, tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[str, ...]]:
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(self.vertices[j])
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return ",".join("(" + " ".join(c) + ")" for c in cyc) if cyc else "()"


def is_label_preserving(g: LabeledGraph, mapping: Mapping[str, str]) -> bool:
    if sorted(mapping) != sorted(g.vertices) or sorted(mapping.values()) != sorted(g.vertices):
        return False
    return all(g.label(mapping[u], mapping[v]) == g.label(u, v) for u, v in itertools.combinations(g.vertices, 2))


def automorphism_from_mapping(g: LabeledGraph, mapping: Mapping[str, str]) -> GraphAutomorphism:
    unknown = set(mapping) - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    full = {v: mapping.get(v, v) for v in g.vertices}
    if not is_label_preserving(g, full):
        raise GraphError(f"not a label-preserving automorphism: {dict(mapping)}")
    return GraphAutomorphism(g.vertices, tuple(g.index[full[v]] for v in g.vertices))


def parse_cycles(g: LabeledGraph, spec: str) -> GraphAutomorphism:
    """Parse a cycle spec such as ``"(t5 t6)"`` or ``"(a b c),(d e)"``."""
    mapping: dict[str, str] = {}
    spec = spec.strip()
    if spec not in ("", "()"):
        for body in re.findall(r"\(([^()]*)\)", spec):
            names = body.replace(",", " ").split()
            for a, b in zip(names, names[1:] + names[:1]):
                if a in mapping:
                    raise GraphError(f"vertex {a!r} appears in two cycles")
                mapping[a] = b
        if re.sub(r"\([^()]*\)|[\s,]", "", spec):
            raise GraphError(f"malformed cycle spec {spec!r}")
    for v in mapping:
        if v not in g.index:
            raise GraphError(f"unknown vertex {v!r}")
    return automorphism_from_mapping(g, mapping)


def _signature(mat, i: int) -> tuple:
    return tuple(sorted((m is INF, 0 if m is INF else m) for k, m in enumerate(mat[i]) if k != i))


def graph_automorphisms(g: LabeledGraph) -> list[GraphAutomorphism]:
    """All label-preserving permutations, in lexicographic order of images.

    Backtracking over vertices in declaration order; candidates are pruned by
    the multiset of labels on each row of the Coxeter matrix.
    """
    n = g.n
    mat = g.matrix
    sig = [_signature(mat, i) for i in range(n)]
    cands = [[j for j in range(n) if sig[j] == sig[i]] for i in range(n)]
    out: list[GraphAutomorphism] = []
    images = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            out.append(GraphAutomorphism(g.vertices, tuple(images)))
            return
        for j in cands[i]:
            if used[j]:
                continue
            if all(mat[i][k] == mat[j][images[k]] for k in range(i)):
                images[i] = j
                used[j] = True
                extend(i + 1)
                used[j] = False
        images[i] = -1

    extend(0)
    return out
