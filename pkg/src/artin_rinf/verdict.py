"""Rule engine: which known result gives property R-infinity for ``A[g]``.

Rules are tried in a fixed order and the first match wins.  Every predicate
consulted is recorded in the trace so it can be re-evaluated independently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import classify as C
from .graph import LabeledGraph
from .hierarchy import DEFAULT_BUDGET, HierarchyTree, find_twistless_hierarchy, validate_hierarchy

ESTABLISHED = "R_INFINITY_ESTABLISHED"
CONJECTURED = "CONJECTURED"
UNKNOWN = "UNKNOWN"
STATUSES = (ESTABLISHED, CONJECTURED, UNKNOWN)

CITATIONS = {
    "R1": "Theorem 1.1",
    "R2": "CalSor1 (type D4)",
    "R3": "Conjecture 1",
    "R4": "Theorem 4.6 proof; CalSor1 Theorem 1 (dihedral)",
    "R5": "Corollary 4.6",
    "R6": "Corollary 4.9",
    "R7": "Corollary 4.11",
    "R8": "FeGoDa1 (braid groups); CalSor1 (B_n, I2(m), m >= 5)",
}


@dataclass
class Verdict:
    status: str
    rule_id: str
    hypothesis_trace: list[tuple[str, Any]]
    citation: str
    witness: Optional[HierarchyTree] = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "rule_id": self.rule_id,
            "hypothesis_trace": [[k, v] for k, v in self.hypothesis_trace],
            "citation": self.citation,
            "witness": None if self.witness is None else self.witness.to_json(),
            "notes": list(self.notes),
        }


def default_budget() -> int:
    raw = os.environ.get("ARTIN_RINF_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _hierarchy_status(g: LabeledGraph, budget: int) -> str:
    return find_twistless_hierarchy(g, budget).status


# name -> evaluator; used for tracing and for re-checking traces
PREDICATES: dict[str, Callable[..., Any]] = {
    "spherical_type": C.spherical_type,
    "vertex_count": lambda g: g.n,
    "is_large": C.is_large,
    "is_hyperbolic_type": C.is_hyperbolic_type,
    "is_free_of_infinity": C.is_free_of_infinity,
    "is_xxxl": C.is_xxxl,
    "is_twistless": C.is_twistless,
    "is_connected": C.is_connected,
}


def _single_type(types, family: str) -> Optional[int]:
    if types and len(types) == 1 and types[0].startswith(family) and not types[0].startswith("I2"):
        return int(types[0][len(family):])
    return None


def verdict(g: LabeledGraph, budget: Optional[int] = None) -> Verdict:
    budget = default_budget() if budget is None else budget
    trace: list[tuple[str, Any]] = []
    cache: dict[str, Any] = {}

    def ask(name: str):
        if name not in cache:
            if name == "twistless_hierarchy":
                search = find_twistless_hierarchy(g, budget)
                cache["_search"] = search
                cache[name] = search.status
            else:
                cache[name] = PREDICATES[name](g)
            trace.append((name, cache[name]))
        return cache[name]

    def hit(status: str, rule: str, witness=None, notes=()) -> Verdict:
        return Verdict(status, rule, trace, CITATIONS[rule], witness, list(notes))

    types = ask("spherical_type")
    d = _single_type(types, "D")
    if d is not None and d >= 6:
        return hit(ESTABLISHED, "R1")
    if d == 4:
        return hit(ESTABLISHED, "R2")
    if d == 5:
        return hit(CONJECTURED, "R3")
    n = ask("vertex_count")
    # m = 2 gives Z^2, which has no R-infinity; dihedral means m >= 3
    if n == 2 and ask("is_free_of_infinity") and ask("is_large"):
        return hit(ESTABLISHED, "R4")
    large = ask("is_large")
    if large and ask("is_hyperbolic_type") and ask("is_free_of_infinity") and n >= 3:
        return hit(ESTABLISHED, "R5")
    # a single vertex is vacuously XXXL and twistless, but A = Z has no R-infinity
    if n >= 2 and ask("is_xxxl") and ask("is_twistless"):
        return hit(ESTABLISHED, "R6")
    notes = []
    if n >= 2 and large and ask("is_hyperbolic_type"):
        if ask("is_connected"):
            status = ask("twistless_hierarchy")
            if status == "found":
                tree = cache["_search"].tree
                if validate_hierarchy(g, tree):
                    raise AssertionError("hierarchy witness failed validation")
                return hit(ESTABLISHED, "R7", witness=tree)
            if status == "exhausted":
                notes.append(f"hierarchy search exhausted its budget of {budget} subgraphs")
        else:
            notes.append("hierarchy rule requires a connected presentation graph")
    a = _single_type(types, "A")
    b = _single_type(types, "B")
    i2 = types[0] if types and len(types) == 1 and types[0].startswith("I2") else None
    if (a is not None and a >= 2) or b is not None or (i2 is not None and int(i2[3:-1]) >= 5):
        return hit(ESTABLISHED, "R8")
    return Verdict(UNKNOWN, "", trace, "", None, notes)


def budget_exhausted(v: Verdict) -> bool:
    return ("twistless_hierarchy", "exhausted") in v.hypothesis_trace


def recheck_trace(g: LabeledGraph, v: Verdict, budget: Optional[int] = None) -> list[str]:
    """Re-evaluate each traced predicate; returns mismatches."""
    budget = default_budget() if budget is None else budget
    bad = []
    for name, value in v.hypothesis_trace:
        if name == "twistless_hierarchy":
            fresh = _hierarchy_status(g, budget)
        else:
            fresh = PREDICATES[name](g)
        if fresh != value:
            bad.append(f"{name}: recorded {value!r}, recomputed {fresh!r}")
    return bad
