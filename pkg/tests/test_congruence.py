import pytest
from hypothesis import given, settings, strategies as st

from oracles import is_congruence_pairs, partition_pairs, small_semigroups
from semicat.aut import automorphism_group
from semicat.catalog import semigroup, semigroups
from semicat.congruence import (as_congruence, congruence_generated_by, enumerate_congruences,
                                is_congruence, is_preserved_by, largest_congruence_within,
                                least_group_congruence, max_idempotent_separating, quotient,
                                rees_congruence, rees_quotient)
from semicat.constructions import brandt, chain_semilattice, cyclic_group, example_c, null_semigroup
from semicat.core import adjoin_identity, is_group
from semicat.errors import NotACongruence, NotAnIdeal, NotInverse
from semicat.green import green_relations
from semicat.partition import Partition
from semicat.search import are_isomorphic


def test_generated_examples():
    S = null_semigroup(2)
    assert congruence_generated_by(S, []).is_identity()
    assert congruence_generated_by(S, [(1, 2)]).classes() == [[0], [1, 2]]
    Z4 = cyclic_group(4)
    assert congruence_generated_by(Z4, [(2, 0)]).n_blocks == 2


@settings(max_examples=60, deadline=None)
@given(small_semigroups(max_order=8), st.data())
def test_generated_is_least(S, data):
    pairs = data.draw(st.lists(st.tuples(st.integers(0, S.order - 1), st.integers(0, S.order - 1)),
                               max_size=3))
    rho = congruence_generated_by(S, pairs)
    assert is_congruence_pairs(S, partition_pairs(rho))
    assert all(rho.related(a, b) for a, b in pairs)
    if S.order <= 6:
        for c in enumerate_congruences(S):
            if all(c.related(a, b) for a, b in pairs):
                assert rho.refines(c)


def test_flat_examples():
    B = brandt(cyclic_group(2), 2)
    H = green_relations(B).H
    assert largest_congruence_within(B, H) == H
    assert largest_congruence_within(B, Partition.universal(9)).is_universal()
    assert largest_congruence_within(B, Partition.identity(9)).is_identity()


@settings(max_examples=60, deadline=None)
@given(small_semigroups(max_order=6), st.data())
def test_flat_is_greatest(S, data):
    tau = Partition(data.draw(st.lists(st.integers(0, 2), min_size=S.order, max_size=S.order)))
    flat = largest_congruence_within(S, tau)
    assert flat.refines(tau) and is_congruence(S, flat)
    for c in enumerate_congruences(S):
        if c.refines(tau):
            assert c.refines(flat)


def test_sigma_examples():
    assert least_group_congruence(cyclic_group(3)).is_identity()
    assert least_group_congruence(chain_semilattice(3)).is_universal()
    S = adjoin_identity(cyclic_group(2))
    sigma = least_group_congruence(S)
    # the identity of Z2 and the adjoined identity collapse
    assert sigma.classes() == [[0, 2], [1]]
    assert is_group(quotient(S, sigma))


def test_sigma_requires_inverse():
    with pytest.raises(NotInverse):
        least_group_congruence(example_c(3))
    with pytest.raises(NotInverse):
        max_idempotent_separating(example_c(3))


def test_mu_examples():
    assert max_idempotent_separating(chain_semilattice(3)).is_identity()
    B = brandt(cyclic_group(2), 2)
    mu = max_idempotent_separating(B)
    assert mu == green_relations(B).H and mu.n_blocks == 5
    assert max_idempotent_separating(cyclic_group(4)).is_universal()


@pytest.mark.parametrize("name,S", semigroups(10))
def test_mu_is_h_flat_when_inverse(name, S):
    try:
        mu = max_idempotent_separating(S)
    except NotInverse:
        return
    assert mu.refines(green_relations(S).H)
    assert mu == largest_congruence_within(S, green_relations(S).H)


def test_quotients():
    B = brandt(cyclic_group(2), 2)
    assert quotient(B, Partition.identity(9)) == B
    assert are_isomorphic(rees_quotient(B, [0]), B)
    C = example_c(3)
    Q = rees_quotient(C, [0, 1])
    assert are_isomorphic(Q, null_semigroup(3))


def test_errors():
    S = null_semigroup(2)
    with pytest.raises(NotAnIdeal):
        rees_congruence(S, [1])
    G = cyclic_group(3)
    with pytest.raises(NotACongruence) as exc:
        as_congruence(G, Partition([0, 0, 1]))
    assert exc.value.witness is not None


def test_blocks_move_under_swap():
    tau = Partition([0, 1, 1])  # {0}, {a, b}
    assert is_preserved_by(tau, (0, 2, 1))
    assert not is_preserved_by(Partition([0, 0, 1]), (0, 2, 1))


@pytest.mark.parametrize("name,S", semigroups(10))
def test_green_h_preserved(name, S):
    H = green_relations(S).H
    assert all(is_preserved_by(H, p) for p in automorphism_group(S).elements)


def test_enumeration_limit():
    with pytest.raises(ValueError):
        list(enumerate_congruences(semigroup("B(Z2,2)")))
