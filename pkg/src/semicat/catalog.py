"""Built-in instances used by the verification suites, the CLI and the tests."""

from __future__ import annotations

from itertools import permutations
from typing import Callable

from .constructions import (brandt, chain_of_semigroups, chain_semilattice, cyclic_group,
                            direct_product, example_c, boolean_zs, full_transformation_monoid,
                            klein_four, left_zero_band, null_semigroup, right_zero_band,
                            symmetric_group, trivial_semigroup, zero_direct_union)
from .core import FiniteSemigroup, adjoin_identity, adjoin_zero
from .mcalister import FinitePoset, McAlisterTriple, p_semigroup
from .semidirect import SemidirectData, example_left_zero, trivial_action

SEMIGROUPS: dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": trivial_semigroup,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "K4": klein_four,
    "S3": lambda: symmetric_group(3),
    "N1": lambda: null_semigroup(1),
    "N2": lambda: null_semigroup(2),
    "N3": lambda: null_semigroup(3),
    "N4": lambda: null_semigroup(4),
    "L2": lambda: left_zero_band(2),
    "R2": lambda: right_zero_band(2),
    "L2^0": lambda: adjoin_zero(left_zero_band(2)),
    "chain2": lambda: chain_semilattice(2),
    "chain3": lambda: chain_semilattice(3),
    "chain4": lambda: chain_semilattice(4),
    "N2^1": lambda: adjoin_identity(null_semigroup(2)),
    "Z2^0": lambda: adjoin_zero(cyclic_group(2)),
    "Z3^0": lambda: adjoin_zero(cyclic_group(3)),
    "Z2^1": lambda: adjoin_identity(cyclic_group(2)),
    "chain(Z2,Z3)": lambda: chain_of_semigroups([cyclic_group(2), cyclic_group(3)]),
    "L2xchain2": lambda: direct_product([left_zero_band(2), chain_semilattice(2)]),
    "T2": lambda: full_transformation_monoid(2),
    "B(1,1)": lambda: brandt(trivial_semigroup(), 1),
    "B(1,2)": lambda: brandt(trivial_semigroup(), 2),
    "B(Z2,1)": lambda: brandt(cyclic_group(2), 1),
    "B(Z2,2)": lambda: brandt(cyclic_group(2), 2),
    "B(Z3,1)": lambda: brandt(cyclic_group(3), 1),
    "B(Z2,1)+B(Z2,1)": lambda: zero_direct_union([brandt(cyclic_group(2), 1)] * 2),
    "B(Z2,1)+B(Z3,1)": lambda: zero_direct_union([brandt(cyclic_group(2), 1),
                                                 brandt(cyclic_group(3), 1)]),
    "B(1,2)+N1": lambda: zero_direct_union([brandt(trivial_semigroup(), 2), null_semigroup(1)]),
    "N1+chain2": lambda: zero_direct_union([null_semigroup(1), chain_semilattice(2)]),
    "C2": lambda: example_c(2),
    "C3": lambda: example_c(3),
    "zs2": lambda: boolean_zs(2),
    "zs3": lambda: boolean_zs(3),
}


def semigroup(name: str) -> FiniteSemigroup:
    try:
        return SEMIGROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown built-in semigroup {name!r}") from None


def semigroups(max_order: int | None = None) -> list[tuple[str, FiniteSemigroup]]:
    out = [(name, build()) for name, build in SEMIGROUPS.items()]
    return [(n, S) for n, S in out if max_order is None or S.order <= max_order]


def _perm_action(G: FiniteSemigroup, images: dict[int, tuple[int, ...]], n: int) -> list[list[int]]:
    """Action table from the images of a generating set, closed under products."""
    act = {G.identity: tuple(range(n))}
    act.update(images)
    changed = True
    while changed:
        changed = False
        for g, p in list(act.items()):
            for h, q in list(act.items()):
                gh = G.table[g][h]
                r = tuple(p[q[x]] for x in range(n))
                if gh not in act:
                    act[gh] = r
                    changed = True
                elif act[gh] != r:
                    raise ValueError("images do not define an action")
    return [list(act[g]) for g in G.elements]


def _triples() -> dict[str, Callable[[], McAlisterTriple]]:
    def trivial_chain():
        G = trivial_semigroup()
        return McAlisterTriple.make(G, FinitePoset.chain(2), {0, 1}, [[0, 1]], "trivial-chain2")

    def z2_swap():
        # B < A, B < A'; g swaps A and A'
        G = cyclic_group(2)
        X = FinitePoset.from_covers(3, [(0, 1), (0, 2)], ["B", "A", "A'"])
        return McAlisterTriple.make(G, X, {0, 1}, [[0, 1, 2], [0, 2, 1]], "z2-swap")

    def z2_trivial_chain():
        G = cyclic_group(2)
        return McAlisterTriple.make(G, FinitePoset.chain(2), {0, 1}, [[0, 1], [0, 1]],
                                    "z2-trivial-chain2")

    def z2_semilattice():
        G = cyclic_group(2)
        X = FinitePoset.from_covers(3, [(0, 1), (0, 2)], ["0", "a", "b"])
        return McAlisterTriple.make(G, X, {0, 1, 2}, [[0, 1, 2], [0, 2, 1]], "z2-semilattice")

    def z3_rotate():
        G = cyclic_group(3)
        X = FinitePoset.from_covers(4, [(0, 1), (0, 2), (0, 3)], ["0", "a1", "a2", "a3"])
        return McAlisterTriple.make(G, X, {0, 1}, _perm_action(G, {1: (0, 2, 3, 1)}, 4), "z3-rotate")

    def s3_permute():
        G = symmetric_group(3)
        X = FinitePoset.from_covers(4, [(0, 1), (0, 2), (0, 3)], ["0", "a1", "a2", "a3"])
        # the table multiplies p first, then q, so p acts through its inverse
        perms = sorted(permutations(range(3)))
        action = [[0] + [1 + p.index(x) for x in range(3)] for p in perms]
        return McAlisterTriple.make(G, X, {0, 1}, action, "s3-permute")

    def z4_kernel():
        G = cyclic_group(4)
        X = FinitePoset.from_covers(3, [(0, 1), (0, 2)], ["0", "a", "b"])
        return McAlisterTriple.make(G, X, {0, 1}, _perm_action(G, {1: (0, 2, 1)}, 3), "z4-kernel")

    def k4_partial():
        G = klein_four()
        X = FinitePoset.from_covers(3, [(0, 1), (0, 2)], ["0", "p", "q"])
        return McAlisterTriple.make(G, X, {0, 1},
                                    _perm_action(G, {1: (0, 2, 1), 2: (0, 1, 2)}, 3), "k4-partial")

    def z2_deep():
        # 0 < 1 < 2 and 1 < 2'; g swaps 2 and 2'
        G = cyclic_group(2)
        X = FinitePoset.from_covers(4, [(0, 1), (1, 2), (1, 3)], ["0", "1", "2", "2'"])
        return McAlisterTriple.make(G, X, {0, 1, 2}, [[0, 1, 2, 3], [0, 1, 3, 2]], "z2-deep")

    return {
        "trivial-chain2": trivial_chain,
        "z2-swap": z2_swap,
        "z2-trivial-chain2": z2_trivial_chain,
        "z2-semilattice": z2_semilattice,
        "z3-rotate": z3_rotate,
        "s3-permute": s3_permute,
        "z4-kernel": z4_kernel,
        "k4-partial": k4_partial,
        "z2-deep": z2_deep,
    }


TRIPLES = _triples()


def triples() -> list[tuple[str, McAlisterTriple]]:
    return [(name, build()) for name, build in TRIPLES.items()]


def triple(name: str) -> McAlisterTriple:
    try:
        return TRIPLES[name]()
    except KeyError:
        raise KeyError(f"unknown built-in triple {name!r}") from None


def _constant_top_action() -> SemidirectData:
    # chain2 = {0 < 1} acting on chain2 with identity 1: the bottom sends everything to the top
    S = chain_semilattice(2)
    T = chain_semilattice(2)
    return SemidirectData.make(S, T, [[1, 1], [0, 1]])


def _swap_action(S: FiniteSemigroup, swap: tuple[int, ...]) -> SemidirectData:
    T = cyclic_group(2)
    return SemidirectData.make(S, T, [list(S.elements), list(swap)])


SEMIDIRECT: dict[str, Callable[[], SemidirectData]] = {
    "trivial-Z2-on-chain2": lambda: trivial_action(chain_semilattice(2), cyclic_group(2)),
    "trivial-chain2-on-N2": lambda: trivial_action(null_semigroup(2), chain_semilattice(2)),
    "trivial-Z3-on-L2": lambda: trivial_action(left_zero_band(2), cyclic_group(3)),
    "swap-Z2-on-V": lambda: _swap_action(
        FiniteSemigroup([[0, 0, 0], [0, 1, 0], [0, 0, 2]]), (0, 2, 1)),
    "swap-Z2-on-N2": lambda: _swap_action(null_semigroup(2), (0, 2, 1)),
    "constant-top": _constant_top_action,
    "left-zero-L2": lambda: example_left_zero(2, 2)[0],
    "left-zero-L2-N1": lambda: example_left_zero(2, 1)[0],
}


def semidirect_data() -> list[tuple[str, SemidirectData]]:
    return [(name, build()) for name, build in SEMIDIRECT.items()]


def p_semigroups() -> list[tuple[str, FiniteSemigroup]]:
    return [(f"P[{name}]", p_semigroup(t)) for name, t in triples()]
