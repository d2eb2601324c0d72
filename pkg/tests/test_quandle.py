"""Quandle core: validation, translation groups, congruences, isomorphism."""

import numpy as np
import pytest

from quandlekit.errors import ValidationFailure
from quandlekit.perm import parse_cycles
from quandlekit.quandle import (
    Congruence,
    Quandle,
    apply_relabeling,
    are_isomorphic,
    congruence_closure,
    dihedral_quandle,
    displacement_group,
    from_table,
    inner_group,
    invariant_fingerprint,
    is_connected,
    is_faithful,
    is_latin,
    is_primitive_quandle,
    is_quasiprimitive_quandle,
    is_simple,
    right_translation,
    trivial_quandle,
)

import oracles

WORKED_ROWS = [(1, 4, 2, 3), (3, 2, 4, 1), (4, 1, 3, 2), (2, 3, 1, 4)]


@pytest.fixture(scope="module")
def worked():
    return from_table(4, WORKED_ROWS)


def test_from_table_accepts_worked_example(worked):
    assert worked.order == 4
    assert oracles.quandle_axioms_ok([list(r) for r in WORKED_ROWS])


def test_from_table_idempotence_witness():
    rows = [list(r) for r in WORKED_ROWS]
    rows[1][1] = 1
    with pytest.raises(ValidationFailure, match="idempotence fails at x = 2"):
        from_table(4, rows)


def test_from_table_column_witness():
    rows = [[1, 2], [1, 2]]  # idempotent but column 1 repeats the value 1
    with pytest.raises(ValidationFailure, match="column 1"):
        from_table(2, rows)


def test_from_table_distributivity_witness():
    # columns (2,3), (1,3), id: idempotent, bijective columns, but
    # R_{2▷1} = id differs from R_1 R_2 R_1⁻¹ = (1,2)
    rows = [[1, 3, 1], [3, 2, 2], [2, 1, 3]]
    with pytest.raises(ValidationFailure, match="self-distributivity"):
        from_table(3, rows)


def test_dihedral_table_is_valid():
    q = dihedral_quandle(3)
    assert oracles.quandle_axioms_ok(q.table.tolist())


def test_right_translation_cases(worked):
    assert right_translation(worked, 1) == parse_cycles("(2,3,4)", 4)
    assert right_translation(trivial_quandle(3), 2).is_identity()
    r = right_translation(dihedral_quandle(3), 2)
    assert r.order() == 2 and r(2) == 2


def test_inner_group_worked_example(worked):
    inn = inner_group(worked)
    assert inn.order == 12
    listed = [parse_cycles(s, 4) for s in ["(2,3,4)", "(1,4,3)", "(1,2,4)", "(1,3,2)"]]
    assert all(inn.contains(g) for g in listed)
    from quandlekit.group import make_group

    assert make_group(listed).equals_group(inn)


def test_inner_group_trivial():
    assert inner_group(trivial_quandle(3)).order == 1


def test_displacement_group_worked_example(worked):
    dis = displacement_group(worked)
    assert dis.order == 4
    expected = {(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)}
    assert {tuple(p.images) for p in dis.elements()} == expected


def test_connected_faithful_latin(worked):
    assert is_connected(worked) and is_faithful(worked) and is_latin(worked)
    t3 = trivial_quandle(3)
    assert not is_connected(t3) and not is_faithful(t3)
    assert not is_latin(trivial_quandle(2))
    assert not is_connected(dihedral_quandle(4))
    assert is_latin(dihedral_quandle(3))


def test_congruence_closure_dihedral4():
    # the finest congruence merging 1 and 3 keeps 2 and 4 separate: the
    # quotient folds the even class onto one point (oracle-checked below)
    q = dihedral_quandle(4)
    c = congruence_closure(q, [(1, 3)])
    assert c.classes() == [(1, 3), (2,), (4,)]
    rel = oracles.minimal_congruence_with(q.table.tolist(), 1, 3)
    assert rel == oracles.relation_of(c.classes(), 4)
    # merging an odd-even pair collapses everything
    assert congruence_closure(q, [(1, 2)]).is_full()


def test_congruence_closure_trivial_quandle():
    c = congruence_closure(trivial_quandle(5), [(2, 4)])
    assert c.classes() == [(1,), (2, 4), (3,), (5,)]


def test_congruence_closure_dihedral3_full():
    assert congruence_closure(dihedral_quandle(3), [(1, 2)]).is_full()


def test_congruence_minimality_exhaustive_small():
    quandles = [dihedral_quandle(3), dihedral_quandle(4), trivial_quandle(4),
                from_table(4, WORKED_ROWS), dihedral_quandle(6)]
    for q in quandles:
        table = q.table.tolist()
        for a, b in oracles.pairs_of(q.order):
            got = congruence_closure(q, [(a, b)])
            assert oracles.congruence_compatible(got.classes(), table)
            want = oracles.minimal_congruence_with(table, a, b)
            assert oracles.relation_of(got.classes(), q.order) == want


def test_is_simple_cases(worked):
    assert is_simple(worked)
    assert not is_simple(dihedral_quandle(4))
    assert is_simple(dihedral_quandle(3))
    assert not is_simple(trivial_quandle(3))
    assert is_simple(trivial_quandle(2))  # literal congruence definition
    assert not is_simple(trivial_quandle(1))


def test_quandle_primitivity(worked):
    assert is_primitive_quandle(worked)
    assert not is_primitive_quandle(dihedral_quandle(4))


def test_quandle_quasiprimitivity(worked):
    assert is_quasiprimitive_quandle(worked)
    assert not is_quasiprimitive_quandle(trivial_quandle(3))


def test_inn_dis_quotient_cyclic(worked):
    for q in (worked, dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(6)):
        assert inner_group(q).quotient_is_cyclic(displacement_group(q))


def test_connected_implies_displacement_transitive(worked):
    for q in (worked, dihedral_quandle(3), dihedral_quandle(5)):
        if is_connected(q):
            assert displacement_group(q).is_transitive()


def test_are_isomorphic_self_and_relabeling(worked):
    assert are_isomorphic(worked, worked) == [1, 2, 3, 4]
    relabeled = apply_relabeling(worked, [3, 1, 4, 2])
    images = are_isomorphic(worked, relabeled)
    assert images is not None
    check = apply_relabeling(worked, images)
    assert check == relabeled


def test_are_isomorphic_rejects(worked):
    assert are_isomorphic(worked, dihedral_quandle(4)) is None
    assert are_isomorphic(worked, trivial_quandle(4)) is None
    assert are_isomorphic(dihedral_quandle(3), trivial_quandle(3)) is None


def test_isomorphism_corollary_invariants(worked):
    relabeled = apply_relabeling(worked, [2, 3, 4, 1])
    f = are_isomorphic(worked, relabeled)
    assert f is not None
    assert invariant_fingerprint(worked) == invariant_fingerprint(relabeled)


def test_congruence_from_parent_roundtrip():
    c = Congruence.from_parent(np.array([0, 0, 2, 2, 4], dtype=np.int32))
    assert c.classes() == [(1, 2), (3, 4), (5,)]
    assert not c.is_full() and not c.is_discrete()
