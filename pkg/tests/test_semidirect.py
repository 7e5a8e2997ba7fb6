import pytest

from semicat.aut import is_automorphism
from semicat.catalog import semidirect_data
from semicat.constructions import chain_semilattice, cyclic_group, direct_product, null_semigroup
from semicat.errors import NotAnAction
from semicat.partition import Partition
from semicat.search import are_isomorphic
from semicat.semidirect import (SemidirectData, check_converse, check_lifting, converse_applies,
                                example_left_zero, kappa_partition, kappa_preserving, lift,
                                semidirect_product, trivial_action)

DATA = semidirect_data()


def test_trivial_action_is_direct_product():
    S, T = chain_semilattice(2), cyclic_group(2)
    d = trivial_action(S, T)
    M = semidirect_product(d)
    assert M.order == 4 and are_isomorphic(M, direct_product([S, T]))
    assert kappa_partition(d).is_universal()


def test_left_zero_example_kappa():
    d, L = example_left_zero(2, 2)
    rest = [x for x in d.T.elements if x not in L]
    assert kappa_partition(d) == Partition.from_classes([L, rest], d.T.order)


@pytest.mark.parametrize("name,d", DATA)
def test_kappa_preserving_lifts(name, d):
    M = semidirect_product(d)
    assert check_lifting(d, M) == []
    for th in kappa_preserving(d).elements:
        assert is_automorphism(M, lift(d, th))


@pytest.mark.parametrize("name,d", DATA)
def test_product_is_associative(name, d):
    M = semidirect_product(d)
    t = M.table
    assert all(t[t[a][b]][c] == t[a][t[b][c]] for a in M.elements for b in M.elements
               for c in M.elements)


@pytest.mark.parametrize("name,d", [(n, d) for n, d in DATA if converse_applies(d)])
def test_converse_shadow(name, d):
    if semidirect_product(d).order > 20:
        pytest.skip("too large for full automorphism search")
    assert check_converse(d) == []


def test_converse_preconditions():
    d = trivial_action(null_semigroup(2), chain_semilattice(2))
    assert not converse_applies(d)
    with pytest.raises(ValueError):
        check_converse(d)


@pytest.mark.parametrize("action,witness", [
    ([[1, 1], [1, 1]], "identity"),
    ([[0, 1], [0, 2]], "closure"),
])
def test_invalid_actions(action, witness):
    with pytest.raises(NotAnAction) as exc:
        SemidirectData.make(chain_semilattice(2), cyclic_group(2), action)
    assert exc.value.witness[0] == witness


def test_endomorphism_failure():
    # an idempotent map on the 3-chain that is not monotone
    S = chain_semilattice(3)
    with pytest.raises(NotAnAction) as exc:
        SemidirectData.make(S, null_semigroup(1), [[2, 1, 2], [2, 1, 2]])
    assert exc.value.witness[0] == "endomorphism"


def test_coordinates():
    d = trivial_action(chain_semilattice(2), cyclic_group(3))
    assert all(d.element(*d.coordinates(x)) == x for x in range(6))
