import pytest

from semicat.catalog import triple, triples
from semicat.congruence import max_idempotent_separating
from semicat.constructions import cyclic_group, trivial_semigroup
from semicat.core import adjoin_identity, idempotents, is_e_unitary, is_inverse
from semicat.errors import InvalidTriple
from semicat.green import green_relations
from semicat.mcalister import (FinitePoset, McAlisterTriple, augmented_act_automorphisms,
                               factor_p_automorphism, green_prediction, mu_prediction,
                               order_automorphisms, p_automorphism_check, p_automorphisms,
                               p_elements, p_semigroup, triple_apparatus)
from semicat.aut import automorphism_group
from semicat.partition import Partition
from semicat.search import are_isomorphic

TRIPLES = triples()


def test_poset_validation():
    with pytest.raises(ValueError):
        FinitePoset(((True, True), (True, True)))
    X = FinitePoset.from_covers(3, [(0, 1), (1, 2)])
    assert X.leq[0][2] and X.meet(1, 2) == 1
    assert FinitePoset.antichain(2).meet(0, 1) is None


def test_trivial_group_gives_semilattice():
    t = triple("trivial-chain2")
    P = p_semigroup(t)
    assert P.order == 2 and all(P.table[a][b] == min(a, b) for a in P.elements for b in P.elements)


def test_z2_swap_triple():
    t = triple("z2-swap")
    P = p_semigroup(t)
    assert P.order == 3
    assert are_isomorphic(P, adjoin_identity(cyclic_group(2)))
    E = {p_elements(t)[e] for e in idempotents(P)}
    assert E == {(1, 0), (0, 0)}


def test_z2_swap_apparatus():
    t = triple("z2-swap")
    app = triple_apparatus(t)
    B, A = 0, 1
    assert app.T[A] == (0,) and app.T[B] == (0, 1)
    # only U = B lies below B and both elements fix it
    assert app.sim[B] == [[0, 1]]
    assert app.nu.is_identity()


def test_trivial_action_apparatus():
    t = triple("z2-trivial-chain2")
    app = triple_apparatus(t)
    assert app.nu.is_universal()
    assert all(TA == (0, 1) for TA in app.T.values())


@pytest.mark.parametrize("name,t", TRIPLES)
def test_structure(name, t):
    P = p_semigroup(t)
    assert P.order <= 16
    assert is_inverse(P) and is_e_unitary(P)
    E = {p_elements(t)[e] for e in idempotents(P)}
    assert E == {(A, t.G.identity) for A in t.Y}
    g = green_relations(P)
    R, L = green_prediction(t)
    assert g.R == R and g.L == L


@pytest.mark.parametrize("name,t", TRIPLES)
def test_mu_blocks(name, t):
    assert max_idempotent_separating(p_semigroup(t)) == mu_prediction(t)


@pytest.mark.parametrize("name,t", TRIPLES)
def test_automorphisms_factor(name, t):
    P = p_semigroup(t)
    assert p_automorphism_check(t, P) == []
    built = {phi for _, _, phi in p_automorphisms(t)}
    assert built == set(automorphism_group(P).elements)
    for psi, theta, phi in p_automorphisms(t):
        assert factor_p_automorphism(t, phi) == (psi, theta)


def test_augmented_automorphisms():
    assert augmented_act_automorphisms(triple("trivial-chain2")) == [(0, 1)]
    assert augmented_act_automorphisms(triple("z2-swap")) == [(0, 1, 2)]
    assert order_automorphisms(FinitePoset.antichain(2)) == [(0, 1), (1, 0)]


def test_antichain_is_not_a_triple():
    G = trivial_semigroup()
    with pytest.raises(InvalidTriple) as exc:
        McAlisterTriple.make(G, FinitePoset.antichain(2), {0, 1}, [[0, 1]])
    assert exc.value.witness[0] == "semilattice"


@pytest.mark.parametrize("Y,action,axiom", [
    ({1}, [[0, 1], [0, 1]], "order_ideal"),
    ({0}, [[0, 1], [0, 1]], "GY=X"),
    ({0, 1}, [[0, 1], [1, 0]], "order"),
])
def test_invalid_triples(Y, action, axiom):
    with pytest.raises(InvalidTriple) as exc:
        McAlisterTriple.make(cyclic_group(2), FinitePoset.chain(2), Y, action)
    assert exc.value.witness[0] == axiom


def test_g_y_must_meet_y():
    # 0 < a, 0' < a'; g swaps the two chains and Y is one of them
    X = FinitePoset.from_covers(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidTriple) as exc:
        McAlisterTriple.make(cyclic_group(2), X, {0, 1}, [[0, 1, 2, 3], [2, 3, 0, 1]])
    assert exc.value.witness[0] == "gY∩Y"


def test_mu_prediction_is_a_partition_of_p():
    for _, t in TRIPLES:
        assert mu_prediction(t).size == len(p_elements(t))
        assert mu_prediction(t).refines(Partition([A for A, _ in p_elements(t)]))
