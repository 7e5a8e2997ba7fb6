from itertools import permutations
from math import factorial

import pytest

from oracles import brute_automorphisms
from semicat.aut import automorphism_group
from semicat.constructions import (boolean_zs, brandt, brandt_automorphism, brandt_coordinates,
                                   brandt_element, chain_of_semigroups, chain_semilattice,
                                   cyclic_group, direct_product, direct_sum_of_monoids, example_c,
                                   factor_brandt_automorphism, full_transformation_monoid,
                                   klein_four, left_zero_band, null_semigroup, right_zero_band,
                                   symmetric_group, trivial_semigroup, zero_direct_union)
from semicat.core import (adjoin_zero, idempotents, is_group, is_inverse, is_semilattice,
                          nil_degree, nilpotency_degree, validate)
from semicat.decomp import is_primitive
from semicat.errors import NoZero, NotAGroup, NotAMonoid, TrivialSummand
from semicat.green import green_relations
from semicat.search import are_isomorphic


@pytest.mark.parametrize("S", [trivial_semigroup(), cyclic_group(4), klein_four(),
                               symmetric_group(3), full_transformation_monoid(2),
                               chain_semilattice(3), null_semigroup(3), left_zero_band(3),
                               right_zero_band(2), brandt(cyclic_group(2), 2), boolean_zs(3),
                               example_c(3)])
def test_builders_validate(S):
    assert validate(S.table) == S


def test_groups():
    assert all(is_group(G) for G in (cyclic_group(5), klein_four(), symmetric_group(3)))
    assert not symmetric_group(3).is_commutative()
    assert full_transformation_monoid(2).order == 4


def test_small_families():
    assert null_semigroup(2).order == 3
    L = left_zero_band(2)
    g = green_relations(L)
    # xy = x, so aS^1 = {a} while S^1 a = S
    assert idempotents(L) == {0, 1} and g.R.is_identity() and g.L.is_universal()
    assert all(L.table[a][b] == a for a in L.elements for b in L.elements)
    N1 = null_semigroup(1)
    assert N1.table != chain_semilattice(2).table and not is_semilattice(N1)


def test_chains():
    two = chain_of_semigroups([trivial_semigroup(), trivial_semigroup()])
    assert is_semilattice(two) and are_isomorphic(two, chain_semilattice(2))
    C = chain_of_semigroups([cyclic_group(2), cyclic_group(3)])
    assert C.order == 5 and len(brute_automorphisms(C)) == 2
    assert chain_of_semigroups([cyclic_group(3)]) == cyclic_group(3)


def test_brandt_shape():
    G = cyclic_group(2)
    B = brandt(G, 2)
    assert B.order == 9 and len(idempotents(B)) == 3 and is_inverse(B) and is_primitive(B)
    assert are_isomorphic(brandt(trivial_semigroup(), 1), chain_semilattice(2))
    for x in B.elements[1:]:
        assert brandt_element(G, 2, *brandt_coordinates(G, 2, x)) == x
    with pytest.raises(NotAGroup):
        brandt(chain_semilattice(2), 1)


def test_brandt_swap_automorphism():
    G = cyclic_group(2)
    phi = brandt_automorphism(G, 2, (0, 1), (1, 0))
    auts = automorphism_group(brandt(G, 2)).elements
    assert phi in auts and phi != tuple(range(9))


def test_brandt_raw_count_includes_twists():
    # |Aut| = |G|^(m-1) |Aut G| m!, of which only |Aut G| m! have the untwisted form
    for G, m in ((cyclic_group(2), 2), (cyclic_group(3), 2), (cyclic_group(2), 3)):
        auts = automorphism_group(brandt(G, m)).elements
        aut_g = len(brute_automorphisms(G))
        assert len(auts) == G.order ** (m - 1) * aut_g * factorial(m)
        plain = [p for p in auts if factor_brandt_automorphism(G, m, p)]
        assert len(plain) == aut_g * factorial(m)
        assert all(factor_brandt_automorphism(G, m, p, twisted=True) for p in auts)


def test_brandt_m1_matches_aut_g():
    for G in (cyclic_group(3), klein_four(), symmetric_group(3)):
        auts = automorphism_group(brandt(G, 1)).elements
        assert len(auts) == len(brute_automorphisms(G))
        assert all(factor_brandt_automorphism(G, 1, p) for p in auts)


def test_products():
    assert are_isomorphic(direct_product([cyclic_group(2), cyclic_group(2)]), klein_four())
    S = null_semigroup(2)
    assert are_isomorphic(direct_product([S, trivial_semigroup()]), S)
    P = direct_product([left_zero_band(2), chain_semilattice(2)])
    assert P.order == 4 and validate(P.table) == P
    with pytest.raises(NotAMonoid):
        direct_sum_of_monoids([null_semigroup(1)])
    assert direct_sum_of_monoids([cyclic_group(2)] * 2).order == 4


def test_zero_direct_union():
    assert are_isomorphic(zero_direct_union([null_semigroup(1)] * 2), null_semigroup(2))
    U = zero_direct_union([brandt(cyclic_group(2), 1)] * 2)
    assert U.order == 5 and is_inverse(U) and is_primitive(U)
    B = brandt(cyclic_group(2), 1)
    assert are_isomorphic(zero_direct_union([B]), B)
    with pytest.raises(NoZero):
        zero_direct_union([cyclic_group(2)])
    with pytest.raises(TrivialSummand):
        zero_direct_union([trivial_semigroup()])


def test_nil_constructions():
    Z = boolean_zs(2)
    assert Z.order == 3 and nil_degree(Z) == 2 and Z.is_commutative()
    top = Z.order - 1
    assert Z.zero == top and Z.table[0][1] == top and all(Z.table[x][x] == top for x in Z.elements)
    C = example_c(3)
    assert nilpotency_degree(C) == 3 and nil_degree(C) == 2 and C.is_commutative()


def test_symmetric_group_order():
    assert symmetric_group(3).order == 6 and len(list(permutations(range(3)))) == 6
    assert not is_group(adjoin_zero(cyclic_group(2)))
