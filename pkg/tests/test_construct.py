"""Envelope constructions: round trips, conjugation/coset/affine models."""

import numpy as np
import pytest

from quandlekit.construct import (
    Envelope,
    FolderNotEnvelope,
    affine_quandle,
    conj_quandle,
    coset_quandle,
    envelope_of,
    is_irreducible,
    quandle_from_envelope,
    transport,
    _folder_quandle,
)
from quandlekit.errors import ValidationFailure
from quandlekit.group import make_group
from quandlekit.perm import parse_cycles
from quandlekit.quandle import (
    are_isomorphic,
    dihedral_quandle,
    from_table,
    inner_group,
    is_faithful,
    is_simple,
    right_translation,
    trivial_quandle,
)

WORKED_ROWS = [(1, 4, 2, 3), (3, 2, 4, 1), (4, 1, 3, 2), (2, 3, 1, 4)]


def P(text, n):
    return parse_cycles(text, n)


@pytest.fixture(scope="module")
def worked():
    return from_table(4, WORKED_ROWS)


@pytest.fixture(scope="module")
def s5():
    return make_group([P("(1,2)", 5), P("(1,2,3,4,5)", 5)])


@pytest.fixture(scope="module")
def a5():
    return make_group([P("(1,2,3)", 5), P("(1,2,3,4,5)", 5)])


def test_envelope_validation(worked):
    inn = inner_group(worked)
    env = Envelope(inn, 1, right_translation(worked, 1))
    assert env.is_envelope
    with pytest.raises(ValidationFailure):
        Envelope(inn, 1, P("(1,4,3)", 4))  # moves the base point
    with pytest.raises(ValidationFailure):
        Envelope(make_group([P("(1,2)", 4)]), 1, P("()", 4))  # intransitive


def test_envelope_of_requires_connected():
    with pytest.raises(ValidationFailure):
        envelope_of(trivial_quandle(3), 1)


def test_worked_example_round_trip_exact(worked):
    # envelope at base point 1 carries the column (2,3,4); rebuilding from it
    # returns the very same table
    env = envelope_of(worked, 1)
    assert env.translation == P("(2,3,4)", 4)
    assert env.group.order == 12
    assert quandle_from_envelope(env) == worked
    for e in (2, 3, 4):
        assert quandle_from_envelope(envelope_of(worked, e)) == worked


def test_envelope_round_trip_group_and_translation(worked):
    env = envelope_of(worked, 1)
    q = quandle_from_envelope(env)
    env2 = envelope_of(q, 1)
    assert env2.group.equals_group(env.group)
    assert env2.translation == env.translation


def test_transversal_choice_is_irrelevant(worked):
    env = envelope_of(worked, 1)
    assert _folder_quandle(env, reverse_gens=False) == _folder_quandle(env, reverse_gens=True)


def test_folder_that_is_not_envelope_rejected():
    # dihedral group of order 8 on the square: the reflection (2,4) is central
    # in the point stabilizer but its class generates only the Klein subgroup
    d8 = make_group([P("(1,2,3,4)", 4), P("(2,4)", 4)])
    folder = Envelope(d8, 1, P("(2,4)", 4))
    assert not folder.is_envelope
    with pytest.raises(FolderNotEnvelope):
        quandle_from_envelope(folder)
    with pytest.raises(FolderNotEnvelope):
        coset_quandle(folder)


def test_singleton_envelope():
    g = make_group([P("()", 1)])
    env = Envelope(g, 1, P("()", 1))
    assert quandle_from_envelope(env).order == 1


def test_conj_quandle_s5_transpositions(s5):
    q, labels = conj_quandle(s5, P("(1,2)", 5))
    assert q.order == 10
    assert len(labels) == 10
    assert is_simple(q) and is_faithful(q)
    assert inner_group(q).order == 120
    from quandlekit.quandle import displacement_group, is_primitive_quandle

    assert displacement_group(q).order == 60
    assert is_primitive_quandle(q)


def test_conj_quandle_identity_class(s5):
    q, labels = conj_quandle(s5, P("()", 5))
    assert q.order == 1 and len(labels) == 1


def test_conj_quandle_a5_five_cycles(a5):
    q, _ = conj_quandle(a5, P("(1,2,3,4,5)", 5))
    assert q.order == 12
    assert is_simple(q)
    assert inner_group(q).order == 60
    from quandlekit.quandle import is_primitive_quandle, is_quasiprimitive_quandle

    assert not is_primitive_quandle(q)
    assert is_quasiprimitive_quandle(q)


def test_conj_quandle_two_five_cycle_classes_isomorphic(a5):
    q1, _ = conj_quandle(a5, P("(1,2,3,4,5)", 5))
    q2, _ = conj_quandle(a5, P("(1,3,5,2,4)", 5))  # square: the other class
    assert are_isomorphic(q1, q2) is not None


def test_coset_quandle_matches_envelope_quandle(worked, s5):
    env = envelope_of(worked, 1)
    assert are_isomorphic(coset_quandle(env), worked) is not None


def test_triple_isomorphism_on_pairs_action(s5):
    from itertools import combinations
    from quandlekit.perm import Permutation

    pair_list = sorted(combinations(range(1, 6), 2))
    index = {p: i + 1 for i, p in enumerate(pair_list)}
    gens = []
    for g in s5.generators:
        images = np.empty(10, dtype=np.int32)
        for i, (a, b) in enumerate(pair_list):
            images[i] = index[tuple(sorted((g(a), g(b))))]
        gens.append(Permutation(images))
    pairs = make_group(gens)
    stab = pairs.stabilizer(1)
    rho = [z for z in stab.center().elements() if not z.is_identity()][0]
    env = Envelope(pairs, 1, rho)
    assert env.is_envelope
    q_env = quandle_from_envelope(env)
    q_coset = coset_quandle(env)
    q_conj, _ = conj_quandle(pairs, rho)
    assert are_isomorphic(q_env, q_coset) is not None
    assert are_isomorphic(q_env, q_conj) is not None
    # and this order-10 quandle is the transposition conjugation quandle
    q_conj5, _ = conj_quandle(s5, P("(1,2)", 5))
    assert are_isomorphic(q_env, q_conj5) is not None


def test_transport_cases(worked):
    env = envelope_of(worked, 1)
    same = transport(env, P("()", 4))
    assert same.group.equals_group(env.group) and same.translation == env.translation
    moved = transport(env, P("(3,4)", 4))
    assert are_isomorphic(quandle_from_envelope(moved), worked) is not None
    with pytest.raises(ValidationFailure):
        transport(env, P("(1,2)", 4))  # moves the base point


def test_affine_quandle_dihedral3():
    q = affine_quandle(3, 1, [[2]])
    assert are_isomorphic(q, dihedral_quandle(3)) is not None


def test_affine_quandle_matches_worked_example(worked):
    q = affine_quandle(2, 2, [[0, 1], [1, 1]])
    assert are_isomorphic(q, worked) is not None


def test_affine_quandle_rejections():
    with pytest.raises(ValidationFailure):
        affine_quandle(2, 2, [[1, 0], [0, 1]])  # identity fixes everything
    with pytest.raises(ValidationFailure):
        affine_quandle(2, 2, [[1, 1], [1, 1]])  # singular
    with pytest.raises(ValidationFailure):
        affine_quandle(4, 1, [[3]])  # 4 is not prime


def test_is_irreducible_cases():
    assert is_irreducible(2, 2, [[0, 1], [1, 1]])
    assert not is_irreducible(2, 2, [[1, 1], [0, 1]])  # fixes span{(1,0)}
    assert is_irreducible(3, 1, [[2]])
    assert is_irreducible(5, 1, [[3]])


def test_affine_simple_iff_irreducible_small():
    # over all invertible fixed-point-free psi with p^k <= 32
    import itertools

    cases = [(2, 2), (3, 2), (2, 3), (5, 1), (7, 1), (2, 4), (3, 3), (2, 5)]
    checked = 0
    for p, k in cases:
        size = p ** (k * k)
        if size > 3**4:
            # sample the companion-type matrices only for the big spaces
            mats = []
            for coeffs in itertools.product(range(p), repeat=k):
                m = [[0] * k for _ in range(k)]
                for i in range(1, k):
                    m[i][i - 1] = 1
                for i in range(k):
                    m[i][k - 1] = (-coeffs[i]) % p
                mats.append(m)
        else:
            mats = [
                [list(row) for row in np.array(flat).reshape(k, k)]
                for flat in itertools.product(range(p), repeat=k * k)
            ]
        for m in mats:
            try:
                q = affine_quandle(p, k, m)
            except ValidationFailure:
                continue
            assert is_simple(q) == is_irreducible(p, k, m)
            checked += 1
    assert checked > 20
