"""Congruences, the named congruences sigma, mu, rho-sharp, rho-flat, and quotients."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .aut import AutGroup, automorphism_group
from .core import FiniteSemigroup, idempotents, is_group, is_ideal, is_inverse
from .errors import NotACongruence, NotAnIdeal, NotInverse
from .green import green_relations
from .partition import Partition, UnionFind, enumerate_partitions

ENUMERATION_LIMIT = 6


class Congruence(Partition):
    """A partition known to be compatible with multiplication."""

    __slots__ = ()


def congruence_witness(S: FiniteSemigroup, p: Partition) -> Optional[tuple[int, int, int]]:
    """A triple (a, b, c) with a ~ b but ca or ac unrelated to cb or bc, else None."""
    t = S.table
    blocks = p.blocks
    for cls in p.classes():
        a = cls[0]
        for b in cls[1:]:
            for c in S.elements:
                if blocks[t[c][a]] != blocks[t[c][b]] or blocks[t[a][c]] != blocks[t[b][c]]:
                    return a, b, c
    return None


def is_congruence(S: FiniteSemigroup, p: Partition) -> bool:
    return congruence_witness(S, p) is None


def as_congruence(S: FiniteSemigroup, p: Partition) -> Congruence:
    w = congruence_witness(S, p)
    if w is not None:
        raise NotACongruence(f"{p!r} is not a congruence: translation by {w[2]} separates "
                             f"{w[0]} and {w[1]}", witness=w)
    return Congruence(p.blocks)


def congruence_generated_by(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs`` (union-find plus a translation worklist)."""
    t = S.table
    uf = UnionFind(S.order)
    queue = deque(pairs)
    while queue:
        a, b = queue.popleft()
        if uf.union(a, b):
            for c in S.elements:
                queue.append((t[c][a], t[c][b]))
                queue.append((t[a][c], t[b][c]))
    return Congruence(uf.find(x) for x in S.elements)


def largest_congruence_within(S: FiniteSemigroup, tau: Partition) -> Congruence:
    """rho-flat: a ~ b iff u a v tau u b v for all u, v in S^1."""
    t = S.table
    blocks = tau.blocks
    # None stands for the adjoined identity of S^1
    sides = [None, *S.elements]
    sigs = []
    for a in S.elements:
        sig = []
        for u in sides:
            ua = a if u is None else t[u][a]
            row = t[ua]
            sig.append(blocks[ua])
            sig.extend(blocks[row[v]] for v in S.elements)
        sigs.append(tuple(sig))
    rho = Congruence(sigs)
    if not rho.refines(tau) or not is_congruence(S, rho):
        raise AssertionError("rho-flat construction failed its own checks")
    return rho


def least_group_congruence(S: FiniteSemigroup) -> Congruence:
    """sigma on an inverse semigroup: a ~ b iff ea = eb for some idempotent e."""
    if not is_inverse(S):
        raise NotInverse("sigma is defined here for inverse semigroups only")
    t = S.table
    E = sorted(idempotents(S))
    pairs = [(a, b) for a in S.elements for b in S.elements if b > a
             and any(t[e][a] == t[e][b] for e in E)]
    sigma = Congruence(Partition.from_pairs(pairs, S.order).blocks)
    related = set(pairs)
    for a, b in sigma.pairs():
        if a < b and (a, b) not in related:
            raise AssertionError("sigma relation is not transitive")
    if not is_congruence(S, sigma) or not is_group(quotient(S, sigma)):
        raise AssertionError("S/sigma is not a group")
    return sigma


def max_idempotent_separating(S: FiniteSemigroup) -> Congruence:
    """mu = H-flat on an inverse semigroup."""
    if not is_inverse(S):
        raise NotInverse("mu is defined here for inverse semigroups only")
    mu = largest_congruence_within(S, green_relations(S).H)
    E = idempotents(S)
    for cls in mu.classes():
        if sum(1 for x in cls if x in E) > 1:
            raise AssertionError("mu identifies two idempotents")
    return mu


def quotient(S: FiniteSemigroup, rho: Partition) -> FiniteSemigroup:
    """S/rho with element i the i-th block of ``rho``."""
    as_congruence(S, rho)
    reps = [cls[0] for cls in rho.classes()]
    t = S.table
    table = [[rho.blocks[t[a][b]] for b in reps] for a in reps]
    names = None
    if S.names is not None:
        names = ["{" + ",".join(S.name(x) for x in cls) + "}" if len(cls) > 1 else S.name(cls[0])
                 for cls in rho.classes()]
    return FiniteSemigroup(table, names)


def rees_congruence(S: FiniteSemigroup, ideal: Iterable[int]) -> Congruence:
    I = sorted(set(ideal))
    if not is_ideal(S, I):
        t = S.table
        Iset = set(I)
        w = next(((a, s) for a in I for s in S.elements
                  if t[a][s] not in Iset or t[s][a] not in Iset), None)
        raise NotAnIdeal(f"{I} is not an ideal", witness=w)
    return Congruence(Partition.from_classes([I], S.order).blocks)


def rees_quotient(S: FiniteSemigroup, ideal: Iterable[int]) -> FiniteSemigroup:
    return quotient(S, rees_congruence(S, ideal))


def transport(tau: Partition, phi: Sequence[int]) -> Partition:
    labels = [0] * tau.size
    for a, b in enumerate(tau.blocks):
        labels[phi[a]] = b
    return Partition(labels)


def is_preserved_by(tau: Partition, phi: Sequence[int]) -> bool:
    """a tau b iff a phi tau b phi."""
    return transport(tau, phi) == tau


def preserving_subgroup(S: FiniteSemigroup, tau: Partition, group: Optional[AutGroup] = None) -> AutGroup:
    group = group or automorphism_group(S)
    return group.filter(lambda p: is_preserved_by(tau, p), "tau-preserving")


def enumerate_congruences(S: FiniteSemigroup, max_order: int = ENUMERATION_LIMIT) -> Iterator[Congruence]:
    """Every congruence of S, by filtering all partitions (small S only)."""
    if S.order > max_order:
        raise ValueError(f"congruence enumeration is limited to order {max_order}")
    for p in enumerate_partitions(S.order):
        if is_congruence(S, p):
            yield Congruence(p.blocks)
