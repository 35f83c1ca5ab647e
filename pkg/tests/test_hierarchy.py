import itertools

import pytest
from hypothesis import given, settings

from artin_rinf import corpus as C
from artin_rinf.classify import is_connected, is_twistless
from artin_rinf.graph import INF, induced_subgraph
from artin_rinf.hierarchy import (
    Decomposition, HierarchyTree, admissible_decompositions, find_twistless_hierarchy, validate_hierarchy,
)
from test_graph import graphs


def _leaf_sets(tree):
    return sorted(frozenset(x.graph) for x in tree.leaves())


def test_octahedron_splits_into_two_stars():
    g = C.octahedron(4)
    res = find_twistless_hierarchy(g)
    assert res.status == "found"
    assert validate_hierarchy(g, res.tree) == []
    ring = {"w1", "w2", "w3", "w4"}
    assert _leaf_sets(res.tree) == sorted([frozenset(ring | {"v1"}), frozenset(ring | {"v2"})])
    assert set(res.tree.decomposition.intersection) == ring


def test_five_cycle_has_none():
    res = find_twistless_hierarchy(C.cycle(5, 4))
    assert res.status == "none" and not res.exhausted


@pytest.mark.parametrize("g", [C.complete(4, 4), C.complete(3, 3), C.wheel(5)], ids=str)
def test_twistless_star_is_a_leaf(g):
    res = find_twistless_hierarchy(g)
    assert res.status == "found" and res.tree.leaf and res.tree.depth() == 0


def test_budget_exhaustion():
    res = find_twistless_hierarchy(C.octahedron(4), budget=1)
    assert res.status == "exhausted" and res.tree is None
    with pytest.raises(ValueError):
        find_twistless_hierarchy(C.octahedron(4), budget=0)


def test_validate_catches_bad_witnesses():
    g = C.cycle(5, 4)
    assert validate_hierarchy(g, HierarchyTree(g.vertices))
    half = ("v1", "v2", "v3")
    bogus = HierarchyTree(g.vertices, Decomposition(half, ("v3", "v4", "v5", "v1"), ("v1", "v3"), True),
                          (HierarchyTree(half), HierarchyTree(("v3", "v4", "v5", "v1"))))
    assert validate_hierarchy(g, bogus)


def test_connected_parts_flag():
    g = C.cycle(6, 4)
    loose = admissible_decompositions(g)
    tight = admissible_decompositions(g, connected_parts=True)
    assert len(tight) < len(loose)
    for d in tight:
        for part in (d.part1, d.part2):
            assert is_connected(induced_subgraph(g, part))


def _brute_decompositions(g):
    adj = {frozenset((u, v)) for u, v in itertools.combinations(g.vertices, 2) if g.label(u, v) is not INF}
    out = set()
    for sides in itertools.product((0, 1, 2), repeat=g.n):
        only1 = {v for v, s in zip(g.vertices, sides) if s == 0}
        only2 = {v for v, s in zip(g.vertices, sides) if s == 1}
        both = {v for v, s in zip(g.vertices, sides) if s == 2}
        if not only1 or not only2:
            continue
        if any(frozenset((a, b)) in adj for a in only1 for b in only2):
            continue
        out.add(frozenset((frozenset(only1 | both), frozenset(only2 | both))))
    return out


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6))
def test_decompositions_match_brute_force(g):
    found = admissible_decompositions(g)
    keys = [frozenset((frozenset(d.part1), frozenset(d.part2))) for d in found]
    assert len(keys) == len(set(keys))
    assert set(keys) == _brute_decompositions(g)
    for d in found:
        assert set(d.part1) | set(d.part2) == set(g.vertices)
        assert set(d.intersection) == set(d.part1) & set(d.part2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_twistless_iff_all_decompositions_twistless(g):
    decs = admissible_decompositions(g)
    assert is_twistless(g) == all(d.twistless for d in decs)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_found_witnesses_validate(g):
    res = find_twistless_hierarchy(g)
    if res.tree is not None:
        assert validate_hierarchy(g, res.tree) == []
        assert set().union(*(set(x.graph) for x in res.tree.leaves())) == set(g.vertices)
