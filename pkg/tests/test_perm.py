"""Permutation arithmetic: spec'd cases plus algebraic properties."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quandlekit.perm import (
    Permutation,
    compose,
    compose_many,
    conjugate,
    identity,
    inverse,
    parse_cycles,
)

import oracles


def P(text, n):
    return parse_cycles(text, n)


def test_compose_is_left_to_right():
    # apply (1,2,3) first, then (1,2): 1->2->1, 2->3->3, 3->1->2
    assert compose(P("(1,2,3)", 3), P("(1,2)", 3)) == P("(2,3)", 3)


def test_compose_identity_and_inverse():
    p = P("(1,4)(2,3,5)", 5)
    assert compose(identity(5), p) == p
    assert compose(p, identity(5)) == p
    assert compose(p, inverse(p)) == identity(5)


def test_inverse_cases():
    assert inverse(P("(1,2,3)", 3)) == P("(1,3,2)", 3)
    assert inverse(identity(4)) == identity(4)
    assert inverse(P("(1,2)(3,4)", 4)) == P("(1,2)(3,4)", 4)


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        compose(P("(1,2)", 2), P("(1,2)", 3))


def test_bad_images_rejected():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError):
        Permutation([0, 1, 2])


def test_cycle_string_round_trip():
    for text, n in [("(1,2,3)(4,5)", 6), ("()", 4), ("(2,6)(3,5)", 7)]:
        p = P(text, n)
        assert parse_cycles(p.cycle_string(), n) == p


def test_parse_accepts_spaces_after_commas():
    assert P("(1, 2, 3)(4, 5)", 5) == P("(1,2,3)(4,5)", 5)


def test_parse_rejects_junk():
    for bad in ["(1,2", "1,2,3", "(1,2)x", "(1,1)", "(0,1)", "(1,9)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


def test_cycle_type_and_order():
    p = P("(1,2,3)(4,5)", 7)
    assert p.cycle_type() == (1, 1, 2, 3)
    assert p.order() == 6
    assert identity(3).order() == 1


def test_conjugate_relabels():
    p = P("(1,2,3)", 5)
    b = P("(1,4)", 5)
    c = conjugate(p, b)
    for x in range(1, 6):
        assert c(b(x)) == b(p(x))
    assert c == P("(4,2,3)", 5)


@st.composite
def perm_arrays(draw, n):
    seq = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(np.array(seq, dtype=np.int32))


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    perm_arrays(n), perm_arrays(n), perm_arrays(n))))
def test_associativity_and_inverse_law(triple):
    p, q, r = triple
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)).is_identity()
    # agreement with the tuple oracle
    assert tuple(compose(p, q).images) == oracles.mul(tuple(p.images), tuple(q.images))


def test_compose_many_matches_pairwise():
    a, b, c = P("(1,2)", 4), P("(2,3)", 4), P("(3,4)", 4)
    assert compose_many(a, b, c) == compose(compose(a, b), c)
