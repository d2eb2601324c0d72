"""Acceptance suite: the headline results, each with its wall-clock budget.

Each criterion prints one ACCEPTANCE line.  Later criteria re-check every
quandle the earlier ones constructed (the invariant battery), so the module
keeps a registry of everything built while the suite runs.
"""

import time

import pytest

from quandlekit.catalog import bundled_text, parse_quandle_file
from quandlekit.construct import (
    Envelope,
    conj_quandle,
    coset_quandle,
    envelope_of,
    quandle_from_envelope,
)
from quandlekit.enumerate import (
    central_class_generators,
    classify_affine,
    enumerate_degree,
    inner_conditions_report,
    merge_results,
)
from quandlekit.group import make_group
from quandlekit.perm import parse_cycles
from quandlekit.quandle import (
    Quandle,
    are_isomorphic,
    displacement_group,
    from_table,
    inner_group,
    is_connected,
    is_faithful,
    is_simple,
)

REGISTRY = {}  # table bytes -> (tag, Quandle)
RESULTS = {}  # cross-test cache: enumeration results, oracle outputs

PRIMITIVE_DEGREES = (10, 12, 15, 21, 28, 36, 40, 45)
QP_DEGREES = (12, 15, 20, 21, 24, 28, 30)
ELEMENT_BOUND = 10**6


def register(tag, q):
    REGISTRY.setdefault(q._bytes, (tag, q))


def P(text, n):
    return parse_cycles(text, n)


def report(num, elapsed, detail=""):
    print(f"ACCEPTANCE {num} PASS ({elapsed:.2f}s) {detail}")


def test_criterion_01_worked_example():
    t0 = time.time()
    q = parse_quandle_file(bundled_text("example4.qnd"))
    inn = inner_group(q)
    assert inn.order == 12
    listed = make_group([P(s, 4) for s in ("(2,3,4)", "(1,4,3)", "(1,2,4)", "(1,3,2)")])
    assert inn.equals_group(listed) and listed.is_subgroup_of(inn)
    dis = displacement_group(q)
    got = {tuple(p.images) for p in dis.elements()}
    assert got == {(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)}
    assert inn.is_primitive()
    assert is_simple(q)
    assert dis.minimal_block_system(1, 3).classes == ((1, 3), (2, 4))
    elapsed = time.time() - t0
    register("worked-example", q)
    assert elapsed < 1.0
    report(1, elapsed, "worked 4x4 example exact")


def test_criterion_02_conj_s5():
    t0 = time.time()
    s5 = make_group([P("(1,2)", 5), P("(1,2,3,4,5)", 5)])
    q, labels = conj_quandle(s5, P("(1,2)", 5))
    assert q.order == 10 and len(labels) == 10
    inn = inner_group(q)
    assert inn.order == 120
    assert displacement_group(q).order == 60
    assert is_simple(q)
    assert inn.is_primitive()
    affine, _ = classify_affine(q, True)
    assert not affine
    elapsed = time.time() - t0
    register("conj-s5-transpositions", q)
    assert elapsed < 1.0
    report(2, elapsed, "Conj(S5,(1,2)): order 10, Inn 120, Dis 60")


def test_criterion_03_primitive_counts(prim_catalog):
    expected = {10: 1, 12: 0, 15: 1, 21: 1, 28: 2, 36: 3, 40: 1, 45: 2}
    t0 = time.time()
    got = {}
    for degree in PRIMITIVE_DEGREES:
        res = enumerate_degree(degree, prim_catalog, "primitive", bound=ELEMENT_BOUND)
        RESULTS[("primitive", degree)] = res
        got[degree] = res.count(non_affine_only=True)
        for e in res.entries:
            register(f"prim-{degree}", e.quandle)
    elapsed = time.time() - t0
    assert got == expected
    # the one degree-40 contributor admits two seeds that fuse to one quandle
    assert RESULTS[("primitive", 40)].per_group["PSp4_3-d40"] == {"xi": 2, "filtered": 1}
    assert elapsed < 120.0
    report(3, elapsed, f"non-affine primitive counts {got}")


def test_criterion_04_quasiprimitive_counts(prim_catalog, qp_catalog):
    expected = {12: 1, 15: 2, 20: 2, 21: 2, 24: 1, 28: 2, 30: 1}
    t0 = time.time()
    got = {}
    for degree in QP_DEGREES:
        res_p = RESULTS.get(("primitive", degree))
        if res_p is None:
            res_p = enumerate_degree(degree, prim_catalog, "primitive", bound=ELEMENT_BOUND)
            RESULTS[("primitive", degree)] = res_p
        res_q = enumerate_degree(degree, qp_catalog, "quasiprimitive", bound=ELEMENT_BOUND)
        RESULTS[("quasiprimitive", degree)] = res_q
        merged = merge_results([res_p, res_q])
        got[degree] = sum(1 for e in merged if e.flags["simple"])
        for e in merged:
            register(f"merged-{degree}", e.quandle)
    elapsed = time.time() - t0
    assert got == expected
    assert elapsed < 180.0
    report(4, elapsed, f"merged simple counts {got}")


def test_criterion_05_t21_spot_check(prim_catalog):
    t0 = time.time()
    rec = next(r for r in prim_catalog if r.label == "PSU3_3-d63")
    xi = central_class_generators(rec.build_group(), bound=ELEMENT_BOUND)
    assert len(xi) == 3
    res = enumerate_degree(63, [rec], "primitive", bound=ELEMENT_BOUND)
    assert res.raw_total == 3 and res.filtered_total == 2
    for e in res.entries:
        register("psu33-63", e.quandle)
    elapsed = time.time() - t0
    assert elapsed < 300.0
    report(5, elapsed, "PSU(3,3) on 63 points: 3 seeds, 2 classes")


def test_criterion_08_oracle_counts():
    # runs before criteria 6/7 so its outputs join the registry early; the
    # numbering follows the suite definition, not execution order
    from quandlekit.oracle import enumerate_quandles
    from quandlekit.construct import affine_quandle

    t0 = time.time()
    counts = {}
    simple = {}
    for n in range(1, 6):
        qs = enumerate_quandles(n)
        counts[n] = len(qs)
        simple[n] = [q for q in qs if is_simple(q)]
        for q in qs:
            register(f"oracle-{n}", q)
    assert [counts[n] for n in range(1, 6)] == [1, 1, 3, 7, 22]
    assert [len(simple[n]) for n in (3, 4, 5)] == [1, 1, 3]
    # each simple quandle of prime-power order matches its affine model
    assert are_isomorphic(simple[3][0], affine_quandle(3, 1, [[2]])) is not None
    assert are_isomorphic(simple[4][0], affine_quandle(2, 2, [[0, 1], [1, 1]])) is not None
    fives = {c: affine_quandle(5, 1, [[c]]) for c in (2, 3, 4)}
    for q in simple[5]:
        assert any(are_isomorphic(q, aff) is not None for aff in fives.values())
    elapsed = time.time() - t0
    assert elapsed < 300.0
    report(8, elapsed, "oracle counts 1,1,3,7,22; simple 1,1,3")


def _admitted_envelopes(prim_catalog, qp_catalog):
    """(record, rho) pairs for every bundled group of degree <= 30 that the
    enumeration pipeline admits (naturals pruned, non-cyclic pruned)."""
    from quandlekit.enumerate import _natural_sym_alt

    out = []
    for rec in prim_catalog + qp_catalog:
        if rec.degree > 30:
            continue
        group = rec.build_group()
        if _natural_sym_alt(group):
            continue
        derived = group.derived_subgroup()
        if not group.quotient_is_cyclic(derived):
            continue
        for rho in central_class_generators(group, 1, ELEMENT_BOUND):
            out.append((rec, Envelope(group, 1, rho)))
    return out


def test_criterion_06_round_trips(prim_catalog, qp_catalog):
    t0 = time.time()
    # A: rebuild every connected suite quandle of order <= 12 from any base
    small_connected = [
        (tag, q) for tag, q in REGISTRY.values() if q.order <= 12 and is_connected(q)
    ]
    assert small_connected, "registry should already hold small quandles"
    checked_a = 0
    for tag, q in small_connected:
        for e in range(1, q.order + 1):
            assert quandle_from_envelope(envelope_of(q, e)) == q, (tag, e)
            checked_a += 1
    # B: envelope -> quandle -> envelope is the identity on catalog seeds
    envelopes = _admitted_envelopes(prim_catalog, qp_catalog)
    assert envelopes
    for rec, env in envelopes:
        q = quandle_from_envelope(env)
        register(f"env-{rec.label}", q)
        back = envelope_of(q, env.base_point)
        assert back.group.equals_group(env.group), rec.label
        assert back.translation == env.translation, rec.label
    elapsed = time.time() - t0
    assert elapsed < 120.0
    report(6, elapsed, f"round trips: {checked_a} rebuilds, {len(envelopes)} envelopes")


def test_criterion_07_triple_isomorphism(prim_catalog, qp_catalog):
    t0 = time.time()
    envelopes = _admitted_envelopes(prim_catalog, qp_catalog)
    faithful_count = 0
    for rec, env in envelopes:
        q_env = quandle_from_envelope(env)
        q_coset = coset_quandle(env)
        assert are_isomorphic(q_env, q_coset) is not None, rec.label
        cls = env.group.conjugacy_class(env.translation)
        if len(cls) == env.group.degree:  # faithful case: conjugation model applies
            q_conj, _ = conj_quandle(env.group, env.translation)
            assert are_isomorphic(q_env, q_conj) is not None, rec.label
            faithful_count += 1
    elapsed = time.time() - t0
    assert elapsed < 120.0
    report(7, elapsed, f"{len(envelopes)} coset models, {faithful_count} conjugation models")


def test_criterion_09_invariant_battery():
    t0 = time.time()
    assert len(REGISTRY) > 60
    skipped_minimal = []
    for tag, q in REGISTRY.values():
        # axioms re-validate
        requandled = from_table(q.order, q.table)
        assert requandled == q
        inn = inner_group(q)
        dis = displacement_group(q)
        assert inn.quotient_is_cyclic(dis), tag
        if is_connected(q):
            assert dis.is_transitive(), tag
        simple = is_simple(q)
        if q.order > 1 and inn.is_primitive():
            assert simple, tag
        if simple and q.order > 2:
            assert is_connected(q), tag
            assert is_faithful(q), tag
            assert inn.is_primitive() or inn.is_quasiprimitive(ELEMENT_BOUND), tag
            rep = inner_conditions_report(inn, ELEMENT_BOUND)
            assert rep.center_trivial, tag
            assert rep.abelianization_cyclic, tag
            assert rep.derived_nontrivial, tag
            if rep.derived_minimal_normal is None:
                skipped_minimal.append((tag, inn.order))
            else:
                assert rep.derived_minimal_normal, tag
    elapsed = time.time() - t0
    detail = f"{len(REGISTRY)} quandles"
    if skipped_minimal:
        detail += (
            f"; minimal-normal check skipped beyond the element bound for "
            f"{sorted(set(skipped_minimal))}"
        )
    report(9, elapsed, detail)


def test_criterion_10_out_of_scope_is_documented(prim_catalog, qp_catalog):
    # the full sweep to order 4096 is explicitly not reproduced at desk scale:
    # the bundled catalogs stop far below, and nothing in the suite claims the
    # 240/802 totals
    assert max(r.degree for r in prim_catalog) == 63
    assert max(r.degree for r in qp_catalog) == 30
    report(10, 0.0, "full-order sweep excluded by design; desk catalogs only")
