import random

import pytest
from hypothesis import given, settings, strategies as st

from artin_rinf import corpus as C
from artin_rinf.coxeter import NotSphericalError
from artin_rinf.garside import (
    NormalForm, abelianized_sum, apply_automorphism, apply_inversion, check_dn_identities, conjugate,
    delta_word_Dn, equal, equal_mod_center, garside, normal_form, zeta,
)
from artin_rinf.words import Word, WordError, alternating, inverse, parse_word, power, word


# -- independent oracle for dihedral Artin groups -------------------------------
#
# With z central, A(I2(m)) is an amalgam whose elements are z^k times an
# alternating product of syllables, which is a unique normal form:
#   m odd:  <x> *_{x^2 = y^m} <y>,   x = Delta, y = ab
#   m = 4:  <a> x <z>  *_{z = x^2} <x>,   x = ab


def _letters(m, w):
    if m % 2:
        h = (m - 1) // 2
        b = (("x", 1),) + (("y", -1),) * h
        a = (("y", 1),) + inverse(b)
        images = {"a": a, "b": b}
        mods = {"x": 2, "y": m}
    else:
        assert m == 4
        images = {"a": (("a", 1),), "b": (("a", -1), ("x", 1))}
        mods = {"a": None, "x": 2}
    out = []
    for n, e in w:
        out.extend(images[n] if e == 1 else inverse(images[n]))
    return out, mods


def amalgam_form(m, w):
    letters, mods = _letters(m, w)
    z = 0
    stack: list[list] = []  # [name, exponent]
    for n, e in letters:
        if stack and stack[-1][0] == n:
            stack[-1][1] += e
        else:
            stack.append([n, e])
        while stack:
            name, k = stack[-1]
            mod = mods[name]
            if mod is not None:
                z += k // mod
                k %= mod
                stack[-1][1] = k
            if k:
                break
            stack.pop()
            if len(stack) >= 2 and stack[-1][0] == stack[-2][0]:
                stack[-2][1] += stack.pop()[1]
    return z, tuple(map(tuple, stack))


def _rand_word(rng, gens, length):
    return tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_oracle_agrees_on_random_pairs(m):
    G = garside(C.dihedral(m))
    rng = random.Random(m)
    pool = [_rand_word(rng, "ab", rng.randint(0, 8)) for _ in range(150)]
    pool += [alternating("a", "b", m), alternating("b", "a", m), word("a", "b"), word("b", "a")]
    forms = [G.normal_form(w) for w in pool]
    oracle = [amalgam_form(m, w) for w in pool]
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            assert (forms[i] == forms[j]) == (oracle[i] == oracle[j])


@pytest.mark.parametrize("m", [3, 4, 5])
def test_oracle_sees_relation(m):
    assert amalgam_form(m, alternating("a", "b", m)) == amalgam_form(m, alternating("b", "a", m))
    assert amalgam_form(m, word("a", "b")) != amalgam_form(m, word("b", "a"))


def test_examples():
    g = C.dihedral(3)
    assert normal_form(g, parse_word("a b a")) == NormalForm(1, ())
    assert normal_form(g, parse_word("a a^-1")) == NormalForm(0, ())
    assert normal_form(g, ()) == NormalForm(0, ())
    assert equal(g, parse_word("a b a"), parse_word("b a b"))
    assert not equal(g, parse_word("a b"), parse_word("b a"))
    assert normal_form(C.type_d(5), delta_word_Dn(5)) == NormalForm(1, ())


def test_delta_word_d4():
    assert delta_word_Dn(4) == parse_word("t1 t2 t3 t4 t2 t1 t2 t3 t4 t2 t3 t4")
    with pytest.raises(ValueError):
        delta_word_Dn(3)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_delta_word(n):
    d = delta_word_Dn(n)
    assert len(d) == n * (n - 1) == abelianized_sum(d)
    assert normal_form(C.type_d(n), d) == NormalForm(1, ())


def test_non_spherical_rejected():
    with pytest.raises(NotSphericalError):
        garside(C.triangle(3, 3, 3))


def test_word_cap_and_unknown_letters():
    G = garside(C.dihedral(3))
    with pytest.raises(WordError):
        G.normal_form(word("a") * 10001)
    with pytest.raises(WordError):
        G.normal_form(word("c"))


@pytest.mark.parametrize("g", [C.type_a(3), C.type_b(3), C.type_d(4), C.dihedral(6)], ids=str)
def test_normal_form_properties(g):
    G = garside(g)
    rng = random.Random(11)
    for _ in range(60):
        w = G.random_word(rng.randint(0, 14), rng)
        nf = G.normal_form(w)
        assert G.is_left_weighted(nf)
        assert all(x not in (0, G.w0) for x in nf.factors)
        assert G.normal_form(G.to_word(nf)) == nf
        assert G.normal_form(w + inverse(w)) == NormalForm(0, ())
        assert G.normal_form(inverse(w)) == G.inverse_nf(nf)
        v = G.random_word(rng.randint(0, 6), rng)
        assert G.normal_form(w + v) == G.multiply_word(nf, v)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from((1, -1))), max_size=10))
def test_delta_squared_central_in_dihedral(w):
    g = C.dihedral(5)
    w = tuple(w)
    d2 = power(alternating("a", "b", 5), 2)
    assert equal(g, d2 + w, w + d2)


def test_apply_automorphism_examples():
    g = C.type_d(5)
    assert apply_automorphism(g, "inversion", parse_word("t1 t2")) == parse_word("t1^-1 t2^-1")
    assert apply_automorphism(g, "graph", parse_word("t4 t5"), zeta(5)) == parse_word("t5 t4")
    with pytest.raises(Exception):
        apply_automorphism(g, "graph", parse_word("t1"), {"t1": "t4", "t4": "t1"})


def test_center_examples():
    assert equal_mod_center(C.type_d(6), delta_word_Dn(6), ())
    assert not equal_mod_center(C.type_d(5), delta_word_Dn(5), ())
    assert equal_mod_center(C.type_d(5), delta_word_Dn(5) * 2, ())
    w = parse_word("t1 t3^-1 t2")
    assert equal_mod_center(C.type_d(5), w, w)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["t1", "t2", "t3", "t4", "t5"]), st.sampled_from((1, -1))), max_size=15),
       st.lists(st.tuples(st.sampled_from(["t1", "t2", "t3", "t4", "t5"]), st.sampled_from((1, -1))), max_size=6))
def test_abelianization(w, x):
    w, x = tuple(w), tuple(x)
    assert abelianized_sum(apply_inversion(w)) == -abelianized_sum(w)
    assert abelianized_sum(conjugate(x, w)) == abelianized_sum(w)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_dn_identity_suite(n):
    results = check_dn_identities(n, samples=30, seed=n)
    assert results and all(ok for _, ok in results), [d for d, ok in results if not ok]
