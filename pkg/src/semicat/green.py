"""Green's relations, egg-box diagrams, maximal subgroups and principal factors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .core import FiniteSemigroup, idempotents, regular_elements
from .errors import NotRegular
from .partition import Partition

COMPLETELY_SIMPLE = "completely_simple"
COMPLETELY_0_SIMPLE = "completely_0_simple"
NULL = "null"


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def ideal_masks(S: FiniteSemigroup) -> tuple[list[int], list[int], list[int]]:
    """Bitmasks of aS^1, S^1a and S^1aS^1 for every a."""
    t = S.table
    k = S.order
    right = []
    left = []
    for a in range(k):
        r = 1 << a
        l = 1 << a
        for s in range(k):
            r |= 1 << t[a][s]
            l |= 1 << t[s][a]
        right.append(r)
        left.append(l)
    two = []
    for a in range(k):
        m = 0
        for x in _bits(left[a]):
            m |= right[x]
        two.append(m)
    return right, left, two


@dataclass(frozen=True)
class JClassInfo:
    members: tuple[int, ...]
    has_idempotent: bool
    is_kernel: bool


@dataclass(frozen=True)
class GreenStructure:
    R: Partition
    L: Partition
    H: Partition
    D: Partition
    J: Partition
    j_classes: tuple[JClassInfo, ...]
    principal: tuple[int, ...]

    def principal_ideal(self, a: int) -> frozenset:
        return frozenset(_bits(self.principal[a]))


@lru_cache(maxsize=256)
def green_relations(S: FiniteSemigroup) -> GreenStructure:
    right, left, two = ideal_masks(S)
    R = Partition(right)
    L = Partition(left)
    J = Partition(two)
    H = R.meet(L)
    D = R.join(L)
    if D != J:
        raise AssertionError("D != J on a finite semigroup")
    E = idempotents(S)
    classes = J.classes()
    # the kernel is the J-class whose principal ideal is contained in all others
    kernel_mask = None
    for cls in classes:
        m = two[cls[0]]
        if all(m & two[c[0]] == m for c in classes):
            kernel_mask = m
    info = tuple(
        JClassInfo(tuple(cls), any(x in E for x in cls), two[cls[0]] == kernel_mask)
        for cls in classes)
    return GreenStructure(R, L, H, D, J, info, tuple(two))


def principal_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    """J(a) = S^1 a S^1."""
    return green_relations(S).principal_ideal(a)


def egg_box(S: FiniteSemigroup, g: GreenStructure | None = None) -> list[dict]:
    """One entry per D-class: R-class rows by L-class columns of H-classes."""
    g = g or green_relations(S)
    E = idempotents(S)
    out = []
    for info, dcls in zip(g.j_classes, g.D.classes()):
        rows = sorted({g.R.blocks[x] for x in dcls})
        cols = sorted({g.L.blocks[x] for x in dcls})
        cells = []
        for r in rows:
            row = []
            for c in cols:
                h = [x for x in dcls if g.R.blocks[x] == r and g.L.blocks[x] == c]
                row.append({"elements": h, "idempotent": any(x in E for x in h)})
            cells.append(row)
        out.append({
            "elements": list(dcls),
            "regular": info.has_idempotent,
            "kernel": info.is_kernel,
            "cells": cells,
        })
    return out


def maximal_subgroups(S: FiniteSemigroup) -> list[tuple[int, FiniteSemigroup]]:
    H = green_relations(S).H
    return [(e, S.restrict(H.class_of(e))) for e in sorted(idempotents(S))]


class PrincipalFactor(NamedTuple):
    semigroup: FiniteSemigroup
    classification: str
    j_class: tuple[int, ...]
    kernel: bool


def principal_factor(S: FiniteSemigroup, a: int, g: GreenStructure | None = None) -> PrincipalFactor:
    """J(a)/I(a), or the kernel itself when I(a) is empty.

    Elements of J_a keep their relative order; the fresh zero of a Rees
    quotient is placed last.
    """
    g = g or green_relations(S)
    Ja = g.J.class_of(a)
    Jideal = g.principal_ideal(a)
    t = S.table
    if len(Jideal) == len(Ja):
        return PrincipalFactor(S.restrict(Ja), COMPLETELY_SIMPLE, tuple(Ja), True)
    pos = {x: i for i, x in enumerate(Ja)}
    z = len(Ja)
    table = [[pos.get(t[x][y], z) for y in Ja] + [z] for x in Ja]
    table.append([z] * (z + 1))
    names = [S.name(x) for x in Ja] + ["0"] if S.names is not None else None
    F = FiniteSemigroup(table, names)
    Jset = set(Ja)
    meets = any(t[x][y] in Jset for x in Ja for y in Ja)
    kind = COMPLETELY_0_SIMPLE if meets else NULL
    return PrincipalFactor(F, kind, tuple(Ja), False)


def principal_factors(S: FiniteSemigroup) -> list[PrincipalFactor]:
    """One factor per J-class, in J-class order."""
    g = green_relations(S)
    return [principal_factor(S, info.members[0], g) for info in g.j_classes]


def idempotent_frame(S: FiniteSemigroup, a: int) -> tuple[int, int]:
    """Smallest idempotents e, f with e R a L f."""
    if a not in regular_elements(S):
        raise NotRegular(f"element {a} is not regular", witness=a)
    g = green_relations(S)
    E = sorted(idempotents(S))
    e = next(x for x in E if g.R.related(x, a))
    f = next(x for x in E if g.L.related(x, a))
    return e, f
