"""Automorphism groups, stabilisers and exact orbit counting on tuples.

Permutations are tuples ``p`` with ``p[x]`` the image of ``x``; composition
``compose(p, q)`` applies ``p`` first.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import FiniteSemigroup, ideal_generated
from .errors import TupleSpaceTooLarge
from .partition import Partition, UnionFind, bell, equality_pattern
from .search import DEFAULT_NODE_LIMIT, IsomorphismSearch

logger = logging.getLogger(__name__)

MAX_TUPLES = 10_000_000
GROUP_ENUMERATION_LIMIT = 10_000
_CHUNK = 1 << 20


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(q[x] for x in p)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_automorphism(S: FiniteSemigroup, p: Sequence[int]) -> bool:
    t = S.table
    return (sorted(p) == list(S.elements)
            and all(p[t[a][b]] == t[p[a]][p[b]] for a in S.elements for b in S.elements))


def closure(gens: Iterable[Sequence[int]], degree: int) -> list[tuple[int, ...]]:
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return sorted(seen)


class AutGroup:
    """An explicit list of permutations of ``range(degree)`` forming a group."""

    def __init__(self, degree: int, elements: Iterable[Sequence[int]], description: str = "full"):
        self.degree = degree
        self.elements = sorted({tuple(p) for p in elements})
        self.description = description
        self._set = set(self.elements)
        self._gens: Optional[list[tuple[int, ...]]] = None

    @property
    def identity(self) -> tuple[int, ...]:
        return tuple(range(self.degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._set

    def generators(self) -> list[tuple[int, ...]]:
        """A small generating set, chosen greedily."""
        if self._gens is None:
            gens: list[tuple[int, ...]] = []
            span = {self.identity}
            for p in self.elements:
                if p not in span:
                    gens.append(p)
                    span = set(closure(gens, self.degree))
                    if len(span) == len(self.elements):
                        break
            self._gens = gens
        return self._gens

    def is_group(self) -> bool:
        if self.identity not in self._set:
            return False
        if self.order == 1:
            return True
        gens = self.generators()
        if len(closure(gens, self.degree)) != self.order:
            return False
        # X closed under right multiplication by generators of <X> is closed
        return all(compose(p, g) in self._set for p in self.elements for g in gens)

    def filter(self, keep, description: str) -> "AutGroup":
        sub = AutGroup(self.degree, (p for p in self.elements if keep(p)), description)
        if not sub.is_group():
            raise AssertionError("filtered subset is not a subgroup")
        return sub

    def __repr__(self) -> str:
        return f"AutGroup(order={self.order}, {self.description})"


def automorphism_group(S: FiniteSemigroup, node_limit: Optional[int] = DEFAULT_NODE_LIMIT) -> AutGroup:
    """Every automorphism of S, by pruned backtracking."""
    auts = list(IsomorphismSearch(S, S, node_limit).run())
    G = AutGroup(S.order, auts)
    if not G.is_group() or not all(is_automorphism(S, p) for p in G.elements[:1000]):
        raise AssertionError("automorphism search returned a non-group")
    return G


def extends_to_automorphism(S: FiniteSemigroup, pairs: Sequence[tuple[int, int]],
                            search: Optional[IsomorphismSearch] = None) -> Optional[tuple[int, ...]]:
    search = search or IsomorphismSearch(S, S)
    return next(search.run(pairs), None)


def point_orbits(S: FiniteSemigroup, fixed: Sequence[int] = ()) -> Partition:
    """Orbits of Aut(S; fixed) on S, without enumerating the group."""
    search = IsomorphismSearch(S, S)
    prefix = [(x, x) for x in fixed]
    uf = UnionFind(S.order)
    for a in S.elements:
        for b in S.elements:
            if b <= a or uf.find(a) == uf.find(b) or search.cS[a] != search.cS[b]:
                continue
            phi = next(search.run(prefix + [(a, b)]), None)
            if phi is not None:
                for x in S.elements:
                    uf.union(x, phi[x])
    return Partition(uf.find(x) for x in S.elements)


def automorphism_group_order(S: FiniteSemigroup) -> int:
    """|Aut(S)| via orbit sizes along a pointwise stabiliser chain."""
    search = IsomorphismSearch(S, S)
    fixed: list[int] = []
    order = 1
    for a in S.elements:
        prefix = [(x, x) for x in fixed]
        orbit = 1
        for b in S.elements:
            if b != a and search.cS[a] == search.cS[b]:
                if next(search.run(prefix + [(a, b)]), None) is not None:
                    orbit += 1
        order *= orbit
        fixed.append(a)
    return order


def tau(S: FiniteSemigroup) -> int:
    """Number of orbits of Aut(S) on S."""
    return point_orbits(S).n_blocks


def pointwise_stabilizer(G: AutGroup, xs: Sequence[int]) -> AutGroup:
    xs = tuple(xs)
    if not xs:
        return G
    return G.filter(lambda p: all(p[x] == x for x in xs), f"pointwise stabilizer of {list(xs)}")


def setwise_stabilizer(G: AutGroup, subsets: Sequence[Iterable[int]]) -> AutGroup:
    sets = [frozenset(A) for A in subsets]
    return G.filter(lambda p: all(frozenset(p[x] for x in A) == A for A in sets),
                    f"setwise stabilizer of {[sorted(A) for A in sets]}")


@dataclass
class OrbitReport:
    n: int
    group: str
    group_order: int
    orbit_count: int
    representatives: list[tuple[int, ...]] = field(repr=False)
    strategy: str = "group"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "group": self.group,
            "group_order": self.group_order,
            "orbit_count": self.orbit_count,
            "strategy": self.strategy,
            "representatives": [list(r) for r in self.representatives],
        }


def _digits(start: int, stop: int, base: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((n, stop - start), dtype=np.int64)
    for p in range(n - 1, -1, -1):
        out[p] = idx % base
        idx //= base
    return out


def _encode(values: np.ndarray, base: int) -> np.ndarray:
    acc = np.zeros(values.shape[1], dtype=np.int64)
    for row in values:
        acc = acc * base + row
    return acc


def tuple_labels(k: int, n: int, perms: Sequence[Sequence[int]], domain: Optional[Sequence[int]] = None,
                 max_tuples: int = MAX_TUPLES, strategy: str = "auto") -> tuple[np.ndarray, str]:
    """Orbit labels for n-tuples over ``domain`` (default: all of range(k)).

    The label of a tuple is the base-k code of the least tuple of ``range(k)^n``
    in its orbit, so tuples share a label exactly when they are in one orbit.
    With ``strategy="group"`` ``perms`` must be a whole group; with
    ``"generators"`` it may be any generating set.  Perms may map some points
    to -1, meaning the image is not in the space (used for class actions).
    """
    dom = np.arange(k, dtype=np.int64) if domain is None else np.asarray(sorted(domain), dtype=np.int64)
    d = len(dom)
    size = d ** n
    if size > max_tuples:
        raise TupleSpaceTooLarge(f"{d}^{n} = {size} tuples exceeds the bound {max_tuples}",
                                 witness=size)
    if strategy == "auto":
        strategy = "group" if len(perms) <= GROUP_ENUMERATION_LIMIT else "generators"
    arrs = [np.asarray(p, dtype=np.int64) for p in perms]
    sentinel = np.iinfo(np.int64).max

    def image_codes(vals: np.ndarray, p: np.ndarray) -> np.ndarray:
        img = p[vals]
        code = _encode(img, k)
        if (img < 0).any():
            code[(img < 0).any(axis=0)] = sentinel
        return code

    if strategy == "group":
        labels = np.empty(size, dtype=np.int64)
        for start in range(0, size, _CHUNK):
            stop = min(size, start + _CHUNK)
            vals = dom[_digits(start, stop, d, n)]
            best = _encode(vals, k)
            for p in arrs:
                np.minimum(best, image_codes(vals, p), out=best)
            labels[start:stop] = best
        return labels, strategy

    # generators: propagate minimum labels along generator edges to a fixpoint
    if domain is not None:
        raise ValueError("the generators strategy works on the full tuple space only")
    vals = _digits(0, size, k, n)
    labels = _encode(vals, k)
    edges = []
    for p in arrs:
        edges.append(image_codes(vals, p))
        edges.append(image_codes(vals, np.asarray(invert(p), dtype=np.int64)))
    idx = np.arange(size, dtype=np.int64)
    while True:
        before = labels.copy()
        for tgt in edges:
            np.minimum.at(labels, idx, labels[tgt])
            np.minimum.at(labels, tgt, labels[idx])
        if np.array_equal(before, labels):
            return labels, strategy


def orbit_count(S: FiniteSemigroup, n: int, group: Optional[AutGroup] = None,
                domain: Optional[Sequence[int]] = None, max_tuples: int = MAX_TUPLES,
                strategy: str = "auto") -> OrbitReport:
    """Exact orbits of ``group`` (default Aut(S)) on S^n, acting coordinatewise.

    With ``domain`` the count is of orbits meeting ``domain^n`` (the relation
    restricted to those tuples); representatives are the least tuple of
    ``domain^n`` in each class.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if group is None:
        group = automorphism_group(S)
    k = S.order
    if strategy == "auto":
        strategy = "group" if group.order <= GROUP_ENUMERATION_LIMIT or domain is not None else "generators"
    perms = group.elements if strategy == "group" else (group.generators() or [group.identity])
    labels, used = tuple_labels(k, n, perms, domain, max_tuples, strategy)
    dom = list(range(k)) if domain is None else sorted(domain)
    _, first = np.unique(labels, return_index=True)
    first.sort()
    d = len(dom)
    reps = []
    for i in first:
        i = int(i)
        digits = []
        for _ in range(n):
            digits.append(dom[i % d])
            i //= d
        reps.append(tuple(reversed(digits)))
    return OrbitReport(n, group.description, group.order, len(reps), reps, used)


def orbit_partition(S: FiniteSemigroup, n: int, group: Optional[AutGroup] = None,
                    domain: Optional[Sequence[int]] = None) -> dict[tuple[int, ...], int]:
    """Map each tuple to its orbit label (for comparisons in tests and checks)."""
    group = group or automorphism_group(S)
    labels, _ = tuple_labels(S.order, n, group.elements, domain)
    dom = list(range(S.order)) if domain is None else sorted(domain)
    d = len(dom)
    out = {}
    for i, lab in enumerate(labels.tolist()):
        digits = []
        j = i
        for _ in range(n):
            digits.append(dom[j % d])
            j //= d
        out[tuple(reversed(digits))] = lab
    return out


def class_orbit_count(S: FiniteSemigroup, tau_: Partition, n: int, group: Optional[AutGroup] = None,
                      max_tuples: int = MAX_TUPLES) -> int:
    """Orbits of Aut(S) on n-tuples of tau-classes (the relation #)."""
    group = group or automorphism_group(S)
    classes = [frozenset(c) for c in tau_.classes()]
    index = {c: i for i, c in enumerate(classes)}
    perms = []
    for p in group.elements:
        perms.append([index.get(frozenset(p[x] for x in c), -1) for c in classes])
    labels, _ = tuple_labels(len(classes), n, perms, max_tuples=max_tuples, strategy="group")
    return len(np.unique(labels))


def pattern_classes(n: int) -> int:
    """Number of equality patterns of an n-tuple: the Bell number B_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return bell(n)


def natural_class_of(entries: Sequence) -> str:
    return "".join(str(c) if c < 10 else f"[{c}]" for c in equality_pattern(entries))


def is_characteristic(S: FiniteSemigroup, A: Iterable[int], orbits: Optional[Partition] = None) -> bool:
    orbits = orbits or point_orbits(S)
    A = set(A)
    return all(set(orbits.class_of(a)) <= A for a in A)


def characteristic_closure_report(S: FiniteSemigroup) -> tuple[int, list[list[int]]]:
    orbits = point_orbits(S)
    return orbits.n_blocks, orbits.classes()


def is_prc_system(S: FiniteSemigroup, system: Sequence[tuple[Iterable[int], Sequence[int]]],
                  group: Optional[AutGroup] = None) -> bool:
    """Whether pivot matches force subset matches, for every automorphism.

    Uses the one-sided test A_i phi ⊆ A_j, which is equivalent because the
    inverse automorphism sends pivot j back to pivot i.
    """
    group = group or automorphism_group(S)
    items = [(frozenset(A), tuple(X)) for A, X in system]
    lengths = {len(X) for _, X in items}
    if len(lengths) > 1:
        raise ValueError("all pivots must have the same length")
    by_pivot: dict[tuple[int, ...], list[frozenset]] = {}
    for A, X in items:
        by_pivot.setdefault(X, []).append(A)
    for p in group.elements:
        for A, X in items:
            targets = by_pivot.get(tuple(p[x] for x in X))
            if targets is None:
                continue
            image = {p[a] for a in A}
            if not all(image <= B for B in targets):
                return False
    return True


def characteristic_ideals(S: FiniteSemigroup, orbits: Optional[Partition] = None) -> list[frozenset]:
    """All non-empty characteristic ideals: unions of the ideals generated by orbits."""
    orbits = orbits or point_orbits(S)
    basic = sorted({ideal_generated(S, O) for O in orbits.classes()}, key=lambda s: (len(s), sorted(s)))
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        new = []
        for U in frontier:
            for B in basic:
                V = U | B
                if V not in found:
                    found.add(V)
                    new.append(V)
        frontier = new
    found.discard(frozenset())
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def characteristic_ideal_tower(S: FiniteSemigroup) -> list[frozenset]:
    """S = S_0 ⊃ S_1 ⊃ ... with each S_{i+1} a maximal proper characteristic ideal of S_i.

    Ties between maximal ideals go to the lexicographically least sorted
    element list.  Each Rees quotient S_i/S_{i+1} is checked to be
    characteristically 0-simple.
    """
    from .congruence import rees_quotient

    tower = [frozenset(S.elements)]
    current = list(S.elements)
    while True:
        sub = S.restrict(current)
        proper = [I for I in characteristic_ideals(sub) if len(I) < sub.order]
        if not proper:
            return tower
        maximal = [I for I in proper if not any(I < J for J in proper)]
        best = min(maximal, key=lambda I: sorted(I))
        Q = rees_quotient(sub, best)
        qz = Q.zero
        q_ideals = [I for I in characteristic_ideals(Q) if I != {qz} and len(I) < Q.order]
        if q_ideals:
            raise AssertionError("Rees quotient in the tower is not characteristically 0-simple")
        current = [current[i] for i in sorted(best)]
        tower.append(frozenset(current))


def random_partition(rng: random.Random, size: int, max_blocks: Optional[int] = None) -> Partition:
    m = rng.randint(1, max_blocks or size)
    return Partition(rng.randrange(m) for _ in range(size))


def counting_lemma_holds(gammas: Sequence[Partition], sigma: Partition) -> bool:
    """|X/sigma| <= prod |X/gamma_i| whenever the meet of the gammas lies in sigma."""
    meet = gammas[0]
    for g in gammas[1:]:
        meet = meet.meet(g)
    if not meet.refines(sigma):
        return True
    bound = 1
    for g in gammas:
        bound *= g.n_blocks
    return sigma.n_blocks <= bound
