"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import random
import time

import pytest

from artin_rinf import corpus as C
from artin_rinf.classify import classify, gram_positive_definite, spherical_type
from artin_rinf.coxeter import (
    enumerate_group, induced_automorphism, inner_automorphism, reidemeister_number, reidemeister_via_coset,
)
from artin_rinf.deligne import ELEMENT, build_link_ball, girth_report
from artin_rinf.garside import (
    NormalForm, abelianized_sum, apply_graph_automorphism, apply_inversion, conjugate, delta_word_Dn, garside,
    zeta,
)
from artin_rinf.graph import GraphError, graph_automorphisms, parse_graph
from artin_rinf.hierarchy import find_twistless_hierarchy, validate_hierarchy
from artin_rinf.toddcoxeter import coset_order
from artin_rinf.verdict import CONJECTURED, ESTABLISHED, UNKNOWN, recheck_trace, verdict
from artin_rinf.words import word
from fuzz import fuzz_cases
from golden import GOLDEN, corpus_files


@pytest.fixture
def report(capsys):
    def _report(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return _report


def _random_words(G, rng, count, max_len=12):
    return [G.random_word(rng.randint(0, max_len), rng) for _ in range(count)]


def test_01_dn_identity_suite(report):
    start = time.perf_counter()
    failures = []
    for n in (4, 5, 6):
        G = garside(C.type_d(n))
        D = delta_word_Dn(n)
        gens = [f"t{i}" for i in range(1, n + 1)]
        if n % 2 == 0:
            for s in gens:
                if not G.equal(D + word(s), word(s) + D):
                    failures.append(f"n={n}: Delta {s} != {s} Delta")
        else:
            swap = {f"t{n - 1}": f"t{n}", f"t{n}": f"t{n - 1}"}
            for s in gens:
                if not G.equal(conjugate(D, word(s)), word(swap.get(s, s))):
                    failures.append(f"n={n}: Delta {s} Delta^-1 != {swap.get(s, s)}")
                if not G.equal(D + D + word(s), word(s) + D + D):
                    failures.append(f"n={n}: Delta^2 does not commute with {s}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    report(1, ok, f"Delta conjugation identities for n=4,5,6 ({elapsed:.2f}s) {failures}")


def test_02_delta_formula(report):
    bad = []
    for n in (4, 5, 6):
        d = delta_word_Dn(n)
        if len(d) != n * (n - 1) or garside(C.type_d(n)).normal_form(d) != NormalForm(1, ()):
            bad.append(n)
    report(2, not bad, f"delta_word_Dn normalizes to (1, []) with length n(n-1); failing n: {bad}")


def test_03_automorphism_relations(report):
    rng = random.Random(3)
    bad = []
    for n in (4, 5, 6):
        g = C.type_d(n)
        G = garside(g)
        z = zeta(n)
        D = delta_word_Dn(n)
        for w in _random_words(G, rng, 100):
            zw = apply_graph_automorphism(g, z, w)
            if apply_graph_automorphism(g, z, zw) != w or apply_inversion(apply_inversion(w)) != w:
                bad.append((n, "order"))
            if apply_graph_automorphism(g, z, apply_inversion(w)) != apply_inversion(zw):
                bad.append((n, "commute"))
            if n == 5 and not G.equal(zw, conjugate(D, w)):
                bad.append((n, "zeta = conj(Delta)"))
    report(3, not bad, f"zeta^2 = chi^2 = id, zeta chi = chi zeta, zeta = conj by Delta (n=5); failures: {bad[:5]}")


def test_04_chi_not_inner(report):
    rng = random.Random(4)
    G = garside(C.type_d(5))
    ok = True
    for w in _random_words(G, rng, 200):
        x = G.random_word(rng.randint(0, 8), rng)
        ok &= abelianized_sum(apply_inversion(w)) == -abelianized_sum(w)
        ok &= abelianized_sum(conjugate(x, w)) == abelianized_sum(w)
    ok &= abelianized_sum(apply_inversion(word("t1"))) != abelianized_sum(word("t1"))
    report(4, ok, "xi(chi(w)) = -xi(w) and xi is conjugation invariant on 200 samples")


def test_05_reidemeister_two_ways(report):
    start = time.perf_counter()
    rng = random.Random(5)
    graphs = {"A2": C.type_a(2), "A3": C.type_a(3), "I2(4)": C.dihedral(4), "I2(5)": C.dihedral(5),
              "I2(7)": C.dihedral(7), "D4": C.type_d(4)}
    bad = []
    checked = 0
    for name, g in graphs.items():
        t = enumerate_group(g)
        for sigma in graph_automorphisms(g):
            phi = induced_automorphism(t, sigma)
            r = reidemeister_number(t, phi)
            if r != reidemeister_via_coset(t, phi):
                bad.append((name, str(sigma), "coset"))
            for _ in range(20):
                if reidemeister_number(t, inner_automorphism(t, rng.randrange(t.size)).compose(phi)) != r:
                    bad.append((name, str(sigma), "inner"))
            checked += 1
    elapsed = time.perf_counter() - start
    report(5, not bad and elapsed < 120,
           f"{checked} automorphisms, union-find = coset count, inner invariance ({elapsed:.2f}s) {bad[:5]}")


def test_06_group_orders(report):
    from math import factorial

    cases = [(f"A{n}", C.type_a(n), factorial(n + 1)) for n in range(1, 6)]
    cases += [(f"B{n}", C.type_b(n), 2 ** n * factorial(n)) for n in range(2, 5)]
    cases += [(f"D{n}", C.type_d(n), 2 ** (n - 1) * factorial(n)) for n in (4, 5)]
    cases += [("H3", C.type_h(3), 120), ("F4", C.type_f4(), 1152)]
    cases += [(f"I2({m})", C.dihedral(m), 2 * m) for m in range(2, 13)]
    bad = [(name, enumerate_group(g).size, coset_order(g), want) for name, g, want in cases
           if not enumerate_group(g).size == coset_order(g) == want]
    report(6, not bad, f"{len(cases)} group orders match the formulas and coset enumeration; mismatches: {bad}")


def test_07_systole(report):
    start = time.perf_counter()
    results = {}
    ok = True
    for m in (3, 4, 5, 6):
        ball = build_link_ball(m, 2)
        rep = girth_report(ball)
        cyc = rep.witness
        tags = [ball.vertices[v].tag == ELEMENT for v in cyc]
        alternating = all(a != b for a, b in zip(tags, tags[1:] + tags[:1]))
        results[m] = rep.bound
        ok &= rep.bound == 4 * m and rep.exact and alternating
    elapsed = time.perf_counter() - start
    report(7, ok and elapsed < 60, f"cap-2 link girth {results} (expected 4m, exact) ({elapsed:.2f}s)")


def test_08_classification_corpus(report):
    files = corpus_files()
    wrong, gram = [], []
    for p in files:
        g = parse_graph(p.read_text())
        if classify(g).to_json() != GOLDEN[p.stem]:
            wrong.append(p.stem)
        if (spherical_type(g) is not None) != gram_positive_definite(g, 1e-9):
            gram.append(p.stem)
    required = {"d4", "d5", "d6", "d7", "d8", "tri333", "tri334", "octahedron4", "pentagon6", "pentagon4",
                "k4_3", "k4_4", "path3", "path4_6"}
    ok = len(files) >= 25 and not wrong and not gram and required <= {p.stem for p in files}
    report(8, ok, f"{len(files)} golden graphs; field mismatches {wrong}; Gram disagreements {gram}")


def test_09_hierarchy(report):
    octa = C.octahedron(4)
    res = find_twistless_hierarchy(octa)
    ring = {"w1", "w2", "w3", "w4"}
    leaves = sorted(frozenset(x.graph) for x in res.tree.leaves()) if res.tree else []
    ok = res.status == "found" and validate_hierarchy(octa, res.tree) == []
    ok &= leaves == sorted([frozenset(ring | {"v1"}), frozenset(ring | {"v2"})])
    five = find_twistless_hierarchy(C.cycle(5, 4))
    ok &= five.status == "none"
    k4 = find_twistless_hierarchy(C.complete(4, 4))
    ok &= k4.status == "found" and k4.tree.leaf
    report(9, ok, f"octahedron -> stars of v1, v2; 5-cycle -> {five.status}; K4 leaf -> {k4.tree is not None and k4.tree.leaf}")


def test_10_verdict_table(report):
    table = [(C.type_d(6), ESTABLISHED, "R1"), (C.type_d(5), CONJECTURED, "R3"),
             (C.triangle(3, 3, 4), ESTABLISHED, "R5"), (C.cycle(5, 6), ESTABLISHED, "R6"),
             (C.octahedron(4), ESTABLISHED, "R7"), (C.triangle(3, 3, 3), UNKNOWN, "")]
    got = []
    ok = True
    for g, status, rule in table:
        v = verdict(g)
        got.append(v.rule_id or v.status)
        ok &= (v.status, v.rule_id) == (status, rule) and bool(v.hypothesis_trace) and recheck_trace(g, v) == []
    report(10, ok, f"D6, D5, (3,3,4), pentagon-6, octahedron-4, (3,3,3) -> {got}")


def test_11_parser(report):
    round_trip = all(parse_graph(p.read_text()).to_dsl() == p.read_text() for p in corpus_files())
    crashes = []
    count = 0
    for text in fuzz_cases():
        count += 1
        try:
            parse_graph(text)
        except GraphError:
            pass
        except Exception as exc:  # anything else is a crash
            crashes.append(repr(exc))
    report(11, round_trip and not crashes and count == 10_000,
           f"corpus round-trip {round_trip}; {count} fuzz cases, {len(crashes)} unstructured errors")
