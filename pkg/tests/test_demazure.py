"""Monoid relations and the four-case involution step."""

import random

import pytest

from weylorbit import (
    build_named,
    demazure_mul,
    from_word,
    identity,
    involution_reachability,
    involution_step,
    is_involution,
    multiply,
    simple_reflection,
    w0,
    weyl_group_order,
)

from conftest import brute_involutions, enumerate_group


def test_idempotent_generators(b3):
    for i in range(1, 4):
        s = simple_reflection(b3, i)
        assert demazure_mul(s, s) == s


def test_defining_relations(a2):
    s1, s2 = simple_reflection(a2, 1), simple_reflection(a2, 2)
    assert demazure_mul(s1, s2) == from_word(a2, [1, 2])
    for w in enumerate_group(a2):
        for s in (s1, s2):
            prod = demazure_mul(s, w)
            sw = multiply(s, w)
            assert prod == (sw if sw.length > w.length else w)


def test_identity_is_neutral(b3):
    e = identity(b3)
    for w in enumerate_group(b3):
        assert demazure_mul(e, w) == w
        assert demazure_mul(w, e) == w


def test_longest_element_absorbs(b3):
    top = w0(b3)
    rng = random.Random(11)
    for _ in range(50):
        word = [rng.randint(1, 3) for _ in range(rng.randint(0, 12))]
        w = from_word(b3, word)
        assert demazure_mul(top, w) == top
        assert demazure_mul(w, top) == top


def test_associativity_random_triples(b3):
    rng = random.Random(5)
    elements = sorted(enumerate_group(b3), key=lambda w: (w.length, w.rows))
    for _ in range(300):
        x, y, z = (elements[rng.randrange(len(elements))] for _ in range(3))
        assert demazure_mul(demazure_mul(x, y), z) == demazure_mul(x, demazure_mul(y, z))


def test_result_never_shorter(b3):
    rng = random.Random(3)
    elements = sorted(enumerate_group(b3), key=lambda w: (w.length, w.rows))
    for _ in range(200):
        x, y = (elements[rng.randrange(len(elements))] for _ in range(2))
        assert demazure_mul(x, y).length >= max(x.length, y.length)


def test_step_requires_involution(a2):
    with pytest.raises(ValueError):
        involution_step(from_word(a2, [1, 2]), 1)


def test_step_examples(a2):
    e = identity(a2)
    out = involution_step(e, 1)
    assert out.case_id == 2
    assert out.candidates == frozenset({simple_reflection(a2, 1), e})

    out = involution_step(simple_reflection(a2, 1), 2)
    assert out.case_id == 1
    assert out.candidates == frozenset({from_word(a2, [2, 1, 2])})

    out = involution_step(w0(a2), 1)
    assert out.case_id == 4
    assert out.candidates == frozenset({w0(a2)})


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_step_cases_exhaustive(name):
    rs = build_named(name)
    for w in sorted(brute_involutions(rs), key=lambda x: (x.length, x.rows)):
        for i in range(1, rs.rank + 1):
            out = involution_step(w, i)
            assert out.case_id in (1, 2, 3, 4)
            assert out.candidates
            for cand in out.candidates:
                assert is_involution(cand)
            s = simple_reflection(rs, i)
            sw = multiply(s, w)
            sws = multiply(sw, s)
            if out.case_id == 1:
                assert sws.length == w.length + 2
                assert out.candidates == {sws}
            elif out.case_id == 2:
                assert sw.length == w.length + 1 and sws.length == w.length
                assert sw == multiply(w, s)
                assert out.candidates == {sw, w}
                assert all(c.length >= w.length for c in out.candidates)
            elif out.case_id == 3:
                assert sw.length == w.length - 1 and sws.length == w.length
                assert sw == multiply(w, s)
                assert out.candidates == {w, multiply(w, s)}
            else:
                assert sws.length == w.length - 2
                assert out.candidates == {w}


def test_reachability_small():
    a1 = build_named("A1")
    reach = involution_reachability(a1)
    assert reach == {identity(a1), simple_reflection(a1, 1)}

    a2 = build_named("A2")
    reach2 = involution_reachability(a2)
    assert reach2 <= brute_involutions(a2)
    assert len(brute_involutions(a2)) == 4


def test_reachability_subset_of_involutions(a3, b3):
    for rs in (a3, b3):
        reach = involution_reachability(rs)
        assert reach <= brute_involutions(rs)


def test_reachability_guard():
    with pytest.raises(ValueError, match="guarded"):
        involution_reachability(build_named("A5"))


def test_weyl_group_order():
    from weylorbit.rootsys import RootSystemType

    assert weyl_group_order(RootSystemType("A", 3)) == 24
    assert weyl_group_order(RootSystemType("B", 3)) == 48
    assert weyl_group_order(RootSystemType("D", 4)) == 192
    assert weyl_group_order(RootSystemType("G", 2)) == 12
    assert weyl_group_order(RootSystemType("E", 8)) == 696729600
    for name in ("A2", "B2", "B3", "G2", "A3"):
        rs = build_named(name)
        assert len(enumerate_group(rs)) == weyl_group_order(rs.rstype)
