"""Permutation group operations against independent brute-force oracles."""

import pytest

from quandlekit.errors import ResourceBoundExceeded
from quandlekit.group import PermGroup, make_group
from quandlekit.perm import identity, inverse, compose, parse_cycles

import oracles


def P(text, n):
    return parse_cycles(text, n)


def G(*texts, n):
    return make_group([P(t, n) for t in texts])


S5 = G("(1,2)", "(1,2,3,4,5)", n=5)
A5 = G("(1,2,3)", "(1,2,3,4,5)", n=5)
A4C = G("(2,3,4)", "(1,4,3)", "(1,2,4)", "(1,3,2)", n=4)
V4 = G("(1,2)(3,4)", "(1,3)(2,4)", n=4)
C3 = G("(1,2,3)", n=3)


def tuples_of(group):
    return [tuple(g.images) for g in group.generators]


def test_make_group_orders_match_enumeration():
    # derived from exhaustive closure of the generators
    assert S5.order == oracles.brute_order(tuples_of(S5)) == 120
    assert A4C.order == oracles.brute_order(tuples_of(A4C)) == 12
    assert G("()", n=4).order == 1


def test_make_group_rejects_bad_input():
    with pytest.raises(ValueError):
        make_group([])
    with pytest.raises(ValueError):
        make_group([P("(1,2)", 2), P("(1,2)", 3)])


def test_contains():
    assert S5.contains(P("(1,3)(2,4)", 5))
    assert S5.contains(identity(5))
    assert not G("(1,2,3)", n=3).contains(P("(1,2)", 3))
    with pytest.raises(ValueError):
        S5.contains(P("(1,2)", 4))


def test_orbit_cases():
    assert V4.orbit(1) == [1, 2, 3, 4]
    assert G("()", n=3).orbit(1) == [1]
    assert G("(1,2)", n=3).orbit(3) == [3]
    with pytest.raises(ValueError):
        V4.orbit(9)


def test_stabilizer_cases():
    assert S5.stabilizer(1).order == 24
    assert G("()", n=3).stabilizer(2).order == 1
    # S5 on the 10 unordered pairs: stabilizer of a pair has order 120/10
    pairs = _s5_on_pairs()
    assert pairs.stabilizer(1).order == 12


def _s5_on_pairs():
    from itertools import combinations
    import numpy as np
    from quandlekit.perm import Permutation

    pair_list = sorted(combinations(range(1, 6), 2))
    index = {p: i + 1 for i, p in enumerate(pair_list)}
    gens = []
    for g in S5.generators:
        images = np.empty(10, dtype=np.int32)
        for i, (a, b) in enumerate(pair_list):
            images[i] = index[tuple(sorted((g(a), g(b))))]
        gens.append(Permutation(images))
    return make_group(gens)


def test_orbit_stabilizer_everywhere():
    for grp in (S5, A4C, V4, _s5_on_pairs()):
        for x in range(1, grp.degree + 1):
            assert grp.order == len(grp.orbit(x)) * grp.stabilizer(x).order


def test_derived_subgroup_cases():
    der = S5.derived_subgroup()
    assert der.order == 60
    assert {tuple(p.images) for p in der.elements()} == oracles.brute_derived(tuples_of(S5))
    assert C3.derived_subgroup().order == 1
    a4_two_gen = G("(2,3,4)", "(1,4,3)", n=4)
    v4 = a4_two_gen.derived_subgroup()
    assert v4.order == 4
    assert {tuple(p.images) for p in v4.elements()} == oracles.brute_derived(
        tuples_of(a4_two_gen)
    )


def test_derived_subgroup_is_normal_and_holds_commutators():
    der = S5.derived_subgroup()
    for d in der.generators:
        for g in S5.generators:
            assert der.contains(compose(compose(inverse(g), d), g))
    for a in S5.generators:
        for b in S5.generators:
            comm = compose(compose(compose(inverse(a), inverse(b)), a), b)
            assert der.contains(comm)


def test_normal_closure_cases():
    assert S5.normal_closure([P("(1,2)", 5)]).order == 120
    assert S5.normal_closure([identity(5)]).order == 1
    assert A4C.normal_closure([P("(1,2)(3,4)", 4)]).order == 4
    with pytest.raises(ValueError):
        A4C.normal_closure([P("(1,2)", 4)])


def test_center_cases():
    assert S5.center().order == 1
    assert C3.center().order == 3
    # center of the pair stabilizer in S5-on-pairs: generated by the image of
    # the transposition swapping the pair
    pairs = _s5_on_pairs()
    stab = pairs.stabilizer(1)
    z = stab.center()
    assert z.order == 2
    swap = [g for g in pairs.generators][0]  # image of (1,2), fixes pair {1,2}
    assert z.contains(swap)


def test_center_enumeration_bound():
    with pytest.raises(ResourceBoundExceeded):
        # intransitive group big enough to trip a tiny bound
        G("(1,2,3)", "(4,5)", n=5).center(bound=2)


def test_conjugacy_class_cases():
    assert len(S5.conjugacy_class(P("(1,2)", 5))) == 10
    assert S5.conjugacy_class(identity(5)) == [identity(5)]
    assert len(A5.conjugacy_class(P("(1,2,3,4,5)", 5))) == 12
    with pytest.raises(ValueError):
        A5.conjugacy_class(P("(1,2)", 5))


def test_conjugacy_class_reps_partition_the_group():
    reps = S5.conjugacy_class_reps()
    sizes = [len(S5.conjugacy_class(r)) for r in reps]
    assert sum(sizes) == 120
    assert len(reps) == 7  # classes of S5


def test_transitivity():
    assert V4.is_transitive()
    assert not G("(1,2)", n=3).is_transitive()
    assert G("()", n=1).is_transitive()


def test_minimal_block_system_paper_case():
    system = V4.minimal_block_system(1, 3)
    assert system.classes == ((1, 3), (2, 4))
    with pytest.raises(ValueError):
        V4.minimal_block_system(2, 2)


def test_primitivity_matches_brute_force():
    cases = [S5, V4, A4C, G("(1,2,3,4)", n=4), G("(1,2,3)", "(1,2)", n=3),
             G("(1,2)(3,4)", "(1,3)(2,4)", "(5,6)", n=6)]
    for grp in cases:
        assert grp.is_primitive() == oracles.brute_primitive(
            tuples_of(grp), grp.degree
        )


def test_primitive_on_cosets_example():
    # A5 on the cosets of a cyclic subgroup of order 5 (degree 12) has blocks
    C5 = G("(1,2,3,4,5)", n=5)
    img, faithful, _ = A5.coset_action(C5)
    assert img.degree == 12 and img.order == 60 and faithful
    assert not img.is_primitive()
    assert img.is_quasiprimitive()


def test_quasiprimitivity_cases():
    assert not V4.is_quasiprimitive()
    assert _s5_on_pairs().is_quasiprimitive()  # primitive implies quasiprimitive
    assert G("()", n=1).is_quasiprimitive()


def test_coset_action_cases():
    img, faithful, _ = S5.coset_action(S5)
    assert img.degree == 1 and faithful is False  # order drops to 1
    stab = S5.stabilizer(1)
    img, faithful, _ = S5.coset_action(stab)
    assert img.degree == 5 and img.order == 120 and faithful
    # relabeled natural action: orbits of point stabilizers match up
    assert img.is_transitive() and img.stabilizer(1).order == 24
    with pytest.raises(ValueError):
        S5.coset_action(G("(1,2)", n=4))


def test_coset_action_isomorphic_to_natural_for_corefree_stabilizer():
    # the induced action on cosets of Stab(1) is the natural one up to
    # relabeling: check orbit structure of two-point stabilizers
    img, _, reps = S5.coset_action(S5.stabilizer(1))
    lengths = sorted(len(img.stabilizer(1).orbit(x)) for x in range(1, 6))
    nat_lengths = sorted(len(S5.stabilizer(1).orbit(x)) for x in range(1, 6))
    assert lengths == nat_lengths == [1, 4, 4, 4, 4]


def test_quotient_is_cyclic_cases():
    assert S5.quotient_is_cyclic(A5)
    trivial = G("()", n=4)
    assert not V4.quotient_is_cyclic(trivial)
    a4_two_gen = G("(2,3,4)", "(1,4,3)", n=4)
    assert a4_two_gen.quotient_is_cyclic(a4_two_gen.derived_subgroup())
    with pytest.raises(ValueError):
        S5.quotient_is_cyclic(G("(1,2)", n=5))  # not normal


def test_order_brute_force_invariant_small_groups():
    for grp in (S5, A5, A4C, V4, C3, _s5_on_pairs()):
        if grp.order <= 5000:
            assert grp.order == oracles.brute_order(tuples_of(grp))


def test_elements_matrix_bound():
    with pytest.raises(ResourceBoundExceeded):
        S5.elements_matrix(bound=100)
