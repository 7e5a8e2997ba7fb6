"""0-consistent ideals, 0-direct decompositions, primitivity, and summand-wise automorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import FiniteSemigroup, idempotents, is_regular
from .errors import NoZero, NotRegular, SummandNotCompletely0Simple
from .green import green_relations
from .partition import enumerate_partitions

ENUMERATION_LIMIT = 9


def _zero(S: FiniteSemigroup) -> int:
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    return S.zero


@dataclass(frozen=True)
class ZeroDecomposition:
    zero: int
    summands: tuple[frozenset, ...]

    def to_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.summands]

    def index_of(self, x: int) -> int:
        return next(i for i, s in enumerate(self.summands) if x in s)


def is_zero_consistent(S: FiniteSemigroup, T: Iterable[int]) -> bool:
    """xy in T minus {0} implies x, y in T."""
    z = _zero(S)
    T = set(T)
    t = S.table
    for x in S.elements:
        row = t[x]
        for y in S.elements:
            p = row[y]
            if p != z and p in T and (x not in T or y not in T):
                return False
    return True


def least_zero_consistent_ideal(S: FiniteSemigroup, x: int) -> frozenset:
    """Smallest 0-consistent ideal containing x (and 0)."""
    z = _zero(S)
    t = S.table
    T = {z, x}
    changed = True
    while changed:
        changed = False
        for a in list(T):
            for s in S.elements:
                for p in (t[a][s], t[s][a]):
                    if p not in T:
                        T.add(p)
                        changed = True
        for u in S.elements:
            for v in S.elements:
                p = t[u][v]
                if p != z and p in T and (u not in T or v not in T):
                    T.update((u, v))
                    changed = True
    return frozenset(T)


def _is_decomposition(S: FiniteSemigroup, summands: Sequence[frozenset]) -> bool:
    z = S.zero
    t = S.table
    if set().union(*summands) != set(S.elements):
        return False
    for i, A in enumerate(summands):
        if A == {z}:
            return False
        for B in summands[i + 1:]:
            if A & B != {z}:
                return False
            if any(t[a][b] != z or t[b][a] != z for a in A for b in B):
                return False
    return True


def greatest_zero_direct_decomposition(S: FiniteSemigroup) -> ZeroDecomposition:
    """Summands are the least 0-consistent ideals of the non-zero elements, ordered by least element."""
    z = _zero(S)
    if S.order == 1:
        raise ValueError("the semigroup {0} has no 0-direct decomposition")
    found: dict[int, frozenset] = {}
    for x in S.elements:
        if x == z or x in found:
            continue
        T = least_zero_consistent_ideal(S, x)
        for y in T:
            if y != z:
                if y in found and found[y] != T:
                    raise AssertionError("overlapping 0-consistent closures differ")
                found[y] = T
    summands = sorted(set(found.values()), key=lambda s: min(s - {z}))
    if not _is_decomposition(S, summands):
        raise AssertionError("closures do not form a 0-direct decomposition")
    for A in summands:
        if not is_zero_directly_indecomposable(S.restrict(A)):
            raise AssertionError("a summand of the greatest decomposition is decomposable")
    return ZeroDecomposition(z, tuple(summands))


def is_zero_directly_indecomposable(S: FiniteSemigroup) -> bool:
    """True iff the only 0-consistent ideals are {0} and S."""
    z = _zero(S)
    return all(least_zero_consistent_ideal(S, x) == set(S.elements) for x in S.elements if x != z)


def zero_direct_decompositions(S: FiniteSemigroup, max_order: int = ENUMERATION_LIMIT) -> list[tuple[frozenset, ...]]:
    """Every 0-direct decomposition, by brute force over partitions of S minus {0}."""
    z = _zero(S)
    if S.order > max_order:
        raise ValueError(f"decomposition enumeration is limited to order {max_order}")
    nonzero = [x for x in S.elements if x != z]
    out = []
    for p in enumerate_partitions(len(nonzero)):
        summands = tuple(frozenset([z, *(nonzero[i] for i in cls)]) for cls in p.classes())
        if _is_decomposition(S, summands) and all(_closed(S, A) for A in summands):
            out.append(summands)
    return out


def _closed(S: FiniteSemigroup, A: frozenset) -> bool:
    return all(S.table[a][b] in A for a in A for b in A)


def is_primitive(S: FiniteSemigroup) -> bool:
    """Every non-zero idempotent is minimal among the non-zero idempotents."""
    z = _zero(S)
    t = S.table
    E = [e for e in sorted(idempotents(S)) if e != z]
    return not any(e != f and t[e][f] == e and t[f][e] == e for e in E for f in E)


def is_completely_0_simple(S: FiniteSemigroup) -> bool:
    """Finite case: S has a zero, S^2 != 0 and the non-zero elements form one J-class."""
    z = S.zero
    if z is None or S.order < 2:
        return False
    J = green_relations(S).J
    nonzero = [x for x in S.elements if x != z]
    if any(not J.related(nonzero[0], x) for x in nonzero):
        return False
    return any(S.table[a][b] != z for a in nonzero for b in nonzero)


def primitive_regular_decomposition(S: FiniteSemigroup) -> list[FiniteSemigroup]:
    """Greatest decomposition of a regular S with zero, each summand checked completely 0-simple."""
    _zero(S)
    if not is_regular(S):
        raise NotRegular("semigroup is not regular")
    d = greatest_zero_direct_decomposition(S)
    out = []
    for i, A in enumerate(d.summands):
        T = S.restrict(A)
        if not is_completely_0_simple(T):
            raise SummandNotCompletely0Simple(f"summand {i} is not completely 0-simple",
                                              witness=sorted(A))
        out.append(T)
    return out


def decompose_automorphism(S: FiniteSemigroup, phi: Sequence[int],
                           d: ZeroDecomposition | None = None) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """(pi, components): S_i phi = S_{i pi}; component i lists x phi for x in sorted(S_i)."""
    d = d or greatest_zero_direct_decomposition(S)
    pi = []
    comps = []
    for A in d.summands:
        image = frozenset(phi[x] for x in A)
        j = next((j for j, B in enumerate(d.summands) if B == image), None)
        if j is None:
            raise AssertionError("automorphism does not permute the summands")
        pi.append(j)
        comps.append(tuple(phi[x] for x in sorted(A)))
    rebuilt = list(range(S.order))
    for A, c in zip(d.summands, comps):
        for x, y in zip(sorted(A), c):
            rebuilt[x] = y
    if tuple(rebuilt) != tuple(phi):
        raise AssertionError("union of the components does not reproduce the automorphism")
    return tuple(pi), comps
