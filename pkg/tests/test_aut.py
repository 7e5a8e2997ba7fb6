import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_automorphisms, brute_orbit_classes, brute_orbits, small_semigroups
from semicat.aut import (AutGroup, automorphism_group, automorphism_group_order,
                         characteristic_closure_report, characteristic_ideal_tower,
                         characteristic_ideals, class_orbit_count, compose, counting_lemma_holds,
                         invert, is_characteristic, is_prc_system,
                         natural_class_of, orbit_count, orbit_partition, pattern_classes,
                         point_orbits, pointwise_stabilizer, random_partition,
                         setwise_stabilizer, tau)
from semicat.catalog import semigroups
from semicat.constructions import (brandt, chain_semilattice, cyclic_group, example_c,
                                   null_semigroup)
from semicat.core import idempotents, ideal_generated
from semicat.errors import SearchBudgetExceeded, TupleSpaceTooLarge
from semicat.green import green_relations
from semicat.partition import Partition, bell
from semicat.search import are_isomorphic, find_isomorphism, is_isomorphism

SMALL = semigroups(7)


@pytest.mark.parametrize("name,S", SMALL)
def test_automorphism_group_matches_brute_force(name, S):
    assert sorted(automorphism_group(S).elements) == brute_automorphisms(S)


@settings(max_examples=60, deadline=None)
@given(small_semigroups(max_order=7))
def test_automorphism_group_random(S):
    G = automorphism_group(S)
    assert sorted(G.elements) == brute_automorphisms(S)
    assert G.is_group()
    assert automorphism_group_order(S) == G.order
    assert point_orbits(S).n_blocks == brute_orbits(S.order, 1, G.elements)


def test_named_groups():
    assert automorphism_group(null_semigroup(2)).elements == [(0, 1, 2), (0, 2, 1)]
    assert automorphism_group(chain_semilattice(3)).order == 1
    assert automorphism_group(brandt(cyclic_group(2), 2)).order == 4


def test_group_closure_and_inverses():
    G = automorphism_group(null_semigroup(3))
    elems = set(G.elements)
    assert G.identity in elems
    assert all(compose(p, q) in elems and invert(p) in elems for p in elems for q in elems)


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(null_semigroup(6), node_limit=5)


def test_order_without_enumeration():
    assert automorphism_group_order(null_semigroup(8)) == factorial(8)
    assert tau(null_semigroup(8)) == 2


def test_isomorphism_search():
    S = brandt(cyclic_group(2), 1)
    T = S.restrict(S.elements)
    phi = find_isomorphism(S, T)
    assert phi is not None and is_isomorphism(S, T, phi)
    assert not are_isomorphic(cyclic_group(4), brandt(cyclic_group(2), 1))


def test_orbit_examples():
    assert orbit_count(null_semigroup(2), 2).orbit_count == 5
    S = chain_semilattice(3)
    assert orbit_count(S, 1, AutGroup(3, [(0, 1, 2)], "trivial")).orbit_count == 3
    B = brandt(cyclic_group(2), 2)
    # the raw group also moves (1,1,2) to (1,g,2)
    assert orbit_count(B, 1).orbit_count == 4


@settings(max_examples=40, deadline=None)
@given(small_semigroups(max_order=6), st.integers(1, 3))
def test_orbit_count_matches_brute_force(S, n):
    G = automorphism_group(S)
    rep = orbit_count(S, n, G)
    assert rep.orbit_count == brute_orbits(S.order, n, G.elements)
    assert rep.representatives == sorted(rep.representatives)
    images = [{tuple(p[x] for x in r) for p in G.elements} for r in rep.representatives]
    assert all(min(img) == r for img, r in zip(images, rep.representatives))
    assert all(a.isdisjoint(b) for i, a in enumerate(images) for b in images[i + 1:])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generator_strategy_agrees(n):
    for S in (null_semigroup(4), brandt(cyclic_group(2), 2), example_c(3)):
        a = orbit_count(S, n, strategy="group")
        b = orbit_count(S, n, strategy="generators")
        assert a.orbit_count == b.orbit_count and a.representatives == b.representatives


def test_tuple_space_bound():
    with pytest.raises(TupleSpaceTooLarge):
        orbit_count(null_semigroup(3), 6, max_tuples=100)


def test_stabilizers():
    S = null_semigroup(2)
    G = automorphism_group(S)
    assert pointwise_stabilizer(G, ()).order == 2
    assert pointwise_stabilizer(G, (1,)).order == 1
    assert setwise_stabilizer(G, [{1, 2}]).order == 2
    assert setwise_stabilizer(G, [{1}]).order == 1


@pytest.mark.parametrize("name,S", SMALL)
def test_stabilizer_orbits_refine(name, S):
    G = automorphism_group(S)
    H = pointwise_stabilizer(G, (S.elements[-1],))
    assert H.is_group()
    for n in (1, 2):
        full = orbit_partition(S, n, G)
        sub = orbit_partition(S, n, H)
        assert orbit_count(S, n, H).orbit_count >= orbit_count(S, n, G).orbit_count
        assert Partition(sub.values()).refines(Partition(full.values()))


@pytest.mark.parametrize("name,S", SMALL)
def test_excluded_subset_restriction(name, S):
    G = automorphism_group(S)
    excluded = {x for x in S.elements if x in point_orbits(S).class_of(0)}
    domain = [x for x in S.elements if x not in excluded]
    if not domain:
        return
    full = orbit_partition(S, 2, G)
    part = orbit_partition(S, 2, G, domain)
    assert all(part[t] == full[t] for t in part)
    assert orbit_count(S, 2, G, domain=domain).orbit_count == len(brute_orbit_classes(
        S.order, 2, G.elements, domain))


def test_class_orbit_counts():
    B = brandt(cyclic_group(2), 2)
    g = green_relations(B)
    # {0}, the diagonal H-classes, the off-diagonal H-classes
    assert class_orbit_count(B, g.H, 1) == 3
    assert class_orbit_count(B, Partition.universal(B.order), 2) == 1
    for n in (1, 2):
        assert class_orbit_count(B, Partition.identity(B.order), n) == orbit_count(B, n).orbit_count


def test_patterns():
    assert pattern_classes(3) == 5 and pattern_classes(1) == 1
    assert natural_class_of(("x", "y", "x")) == "010"


@pytest.mark.parametrize("name,S", SMALL)
def test_characteristic_subsets(name, S):
    assert is_characteristic(S, idempotents(S))
    t, orbits = characteristic_closure_report(S)
    assert t == len(orbits) == tau(S)
    for I in characteristic_ideals(S):
        assert is_characteristic(S, I)
        assert ideal_generated(S, I) == I


def test_characteristic_counts_null():
    S = null_semigroup(2)
    assert not is_characteristic(S, {1})
    t, orbits = characteristic_closure_report(S)
    assert 2 ** t == 4


@pytest.mark.parametrize("name,S", SMALL)
def test_prc_systems(name, S):
    g = green_relations(S)
    assert is_prc_system(S, [(g.principal_ideal(a), (a,)) for a in S.elements])
    assert is_prc_system(S, [(g.H.class_of(a), (a,)) for a in S.elements])


def test_prc_single_pairs():
    S = null_semigroup(2)
    # the swap moves the pivot b, so a lone pair pivoted at b constrains nothing
    assert is_prc_system(S, [({1}, (2,))])
    # the swap fixes the pivot 0 but moves {a}
    assert not is_prc_system(S, [({1}, (0,))])
    assert is_prc_system(S, [({1}, (1,)), ({2}, (2,))])


def test_towers():
    assert characteristic_ideal_tower(null_semigroup(2)) == [frozenset({0, 1, 2}), frozenset({0})]
    assert characteristic_ideal_tower(cyclic_group(3)) == [frozenset({0, 1, 2})]
    C = example_c(3)
    assert characteristic_ideal_tower(C) == [frozenset(C.elements), frozenset({0, 1}), frozenset({0})]


def test_counting_lemma_random():
    rng = random.Random(7)
    for _ in range(300):
        size = rng.randint(1, 20)
        gammas = [random_partition(rng, size) for _ in range(rng.randint(1, 4))]
        sigma = random_partition(rng, size)
        assert counting_lemma_holds(gammas, sigma)


def test_brandt_orbit_bound():
    G = cyclic_group(2)
    aut_g = automorphism_group(G)
    for m in (1, 2):
        B = brandt(G, m)
        for n in (1, 2):
            nonzero = [x for x in B.elements if x != 0]
            count = orbit_count(B, n, domain=nonzero).orbit_count
            assert count <= bell(2 * n) * orbit_count(G, n, aut_g).orbit_count


def test_setwise_contains_pointwise():
    S = null_semigroup(3)
    G = automorphism_group(S)
    A = [{1, 2}, {3}]
    assert set(pointwise_stabilizer(G, (1, 2, 3)).elements) <= set(setwise_stabilizer(G, A).elements)
