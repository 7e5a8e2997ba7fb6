"""Semidirect products S ⋊ T and the kappa relation on the acting semigroup."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .aut import AutGroup, automorphism_group, is_automorphism
from .constructions import left_zero_band, null_semigroup, zero_direct_union
from .core import FiniteSemigroup, adjoin_zero, is_semilattice
from .errors import NotAnAction
from .partition import Partition


@dataclass(frozen=True)
class SemidirectData:
    """T acting on the left of S by endomorphisms: ``action[t][s]`` is t·s."""

    S: FiniteSemigroup
    T: FiniteSemigroup
    action: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, S, T, action) -> "SemidirectData":
        d = cls(S, T, tuple(tuple(row) for row in action))
        d.validate()
        return d

    def act(self, t: int, s: int) -> int:
        return self.action[t][s]

    def validate(self) -> None:
        S, T, a = self.S, self.T, self.action
        if len(a) != T.order or any(len(r) != S.order for r in a):
            raise NotAnAction("action table must be |T| x |S|")
        for t in T.elements:
            for s in S.elements:
                if not 0 <= a[t][s] < S.order:
                    raise NotAnAction("action leaves S", witness=("closure", t, s))
        for t, u, s in product(T.elements, T.elements, S.elements):
            if a[T.table[t][u]][s] != a[t][a[u][s]]:
                raise NotAnAction("(tt')·s != t·(t'·s)", witness=("compatibility", t, u, s))
        for t, s, r in product(T.elements, S.elements, S.elements):
            if a[t][S.table[s][r]] != S.table[a[t][s]][a[t][r]]:
                raise NotAnAction("t·(ss') != (t·s)(t·s')", witness=("endomorphism", t, s, r))
        if T.identity is not None:
            for s in S.elements:
                if a[T.identity][s] != s:
                    raise NotAnAction("identity of T does not act trivially",
                                      witness=("identity", T.identity, s))

    def acts_monoidally(self) -> bool:
        one = self.S.identity
        return one is not None and all(self.action[t][one] == one for t in self.T.elements)

    def element(self, s: int, t: int) -> int:
        return s * self.T.order + t

    def coordinates(self, x: int) -> tuple[int, int]:
        return divmod(x, self.T.order)


def semidirect_product(d: SemidirectData) -> FiniteSemigroup:
    """(s, t)(s', t') = (s (t·s'), tt'), elements ordered by (s, t)."""
    S, T = d.S, d.T
    pairs = list(product(S.elements, T.elements))
    table = [[d.element(S.table[s][d.action[t][s2]], T.table[t][t2]) for s2, t2 in pairs]
             for s, t in pairs]
    names = [f"({S.name(s)},{T.name(t)})" for s, t in pairs]
    return FiniteSemigroup(table, names)


def kappa_partition(d: SemidirectData) -> Partition:
    """t kappa t' iff s(t·s') = s(t'·s') for all s, s'."""
    S = d.S
    sigs = []
    for t in d.T.elements:
        sigs.append(tuple(S.table[s][d.action[t][s2]] for s in S.elements for s2 in S.elements))
    return Partition(sigs)


def kappa_preserving(d: SemidirectData, group: Optional[AutGroup] = None) -> AutGroup:
    """Automorphisms of T fixing every kappa-class setwise."""
    group = group or automorphism_group(d.T)
    kappa = kappa_partition(d)
    return group.filter(lambda th: all(kappa.related(t, th[t]) for t in d.T.elements),
                        "kappa-preserving")


def lift(d: SemidirectData, theta: Sequence[int]) -> tuple[int, ...]:
    """(s, t) -> (s, t theta)."""
    return tuple(d.element(s, theta[t]) for s in d.S.elements for t in d.T.elements)


def check_lifting(d: SemidirectData, M: Optional[FiniteSemigroup] = None) -> list[tuple[int, ...]]:
    """Kappa-preserving automorphisms of T whose lift is *not* an automorphism."""
    M = M or semidirect_product(d)
    return [th for th in kappa_preserving(d).elements if not is_automorphism(M, lift(d, th))]


def converse_applies(d: SemidirectData) -> bool:
    if d.T.identity is None:
        return False
    S = d.S
    trivial_units = S.identity is not None and all(
        not (S.table[a][b] == S.identity == S.table[b][a]) or a == S.identity
        for a in S.elements for b in S.elements)
    return (trivial_units and d.acts_monoidally()) or is_semilattice(S)


def check_converse(d: SemidirectData, group: Optional[AutGroup] = None) -> list[tuple[int, ...]]:
    """Automorphisms of S ⋊ T fixing every (s, 1) that do not induce a kappa-preserving theta.

    theta is read off from the designated element s (the identity of S, or
    the least element of a semilattice S) via (s, t) -> (s', t theta).
    """
    if not converse_applies(d):
        raise ValueError("the converse needs S a monoid with trivial units acted on monoidally, "
                         "or S a semilattice")
    M = semidirect_product(d)
    group = group or automorphism_group(M)
    one = d.T.identity
    S = d.S
    if S.identity is not None and not is_semilattice(S):
        base = S.identity
    else:
        base = next(x for x in S.elements if all(S.table[x][y] == x for y in S.elements))
    fixed = [d.element(s, one) for s in S.elements]
    kappa = kappa_partition(d)
    bad = []
    for phi in group.elements:
        if any(phi[x] != x for x in fixed):
            continue
        theta = tuple(d.coordinates(phi[d.element(base, t)])[1] for t in d.T.elements)
        ok = (is_automorphism(d.T, theta)
              and all(kappa.related(t, theta[t]) for t in d.T.elements)
              and all(d.coordinates(phi[d.element(base, t)])[0] == base for t in d.T.elements))
        if not ok:
            bad.append(phi)
    return bad


def trivial_action(S: FiniteSemigroup, T: FiniteSemigroup) -> SemidirectData:
    return SemidirectData.make(S, T, [list(S.elements) for _ in T.elements])


def example_left_zero(m: int = 2, null_size: int = 2) -> tuple[SemidirectData, list[int]]:
    """L^0 ⋊ S' with S' = N^0 ⊔⁰ L^0 acting on L^0 by left multiplication.

    Returns the data and the indices of L inside S'.
    """
    N = null_semigroup(null_size)
    L0 = adjoin_zero(left_zero_band(m))
    Sp = zero_direct_union([N, L0])
    # L0 = x1..xm then zero; inside S' the L-part follows the null part
    embed = {m: 0}
    for i in range(m):
        embed[i] = 1 + null_size + i
    back = {v: k for k, v in embed.items()}
    action = [[back[Sp.table[t][embed[s]]] for s in L0.elements] for t in Sp.elements]
    L = [embed[i] for i in range(m)]
    return SemidirectData.make(L0, Sp, action), L
