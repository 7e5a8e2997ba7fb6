"""Finite semigroups given by Cayley tables, and their elementary structure."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import NoZero, NotAssociative, NotClosed, NotInverse, SemigroupError


class FiniteSemigroup:
    """A finite semigroup on ``range(order)``.

    ``table[i][j]`` is the index of the product of element ``i`` and element
    ``j``.  Closure and associativity are checked once, here; everything
    else in the package trusts an existing instance.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                 zero: Optional[int] = None, identity: Optional[int] = None):
        k = len(table)
        if k == 0:
            raise SemigroupError("a semigroup needs at least one element")
        rows = []
        for i, row in enumerate(table):
            if len(row) != k:
                raise SemigroupError(f"row {i} has length {len(row)}, expected {k}")
            for j, x in enumerate(row):
                if isinstance(x, bool) or int(x) != x or not 0 <= x < k:
                    raise NotClosed(f"table[{i}][{j}] = {x!r} is not an element index",
                                    witness=(i, j, x))
            rows.append(tuple(int(x) for x in row))
        self.table = tuple(rows)
        t = self.table
        for i in range(k):
            ti = t[i]
            for j in range(k):
                tij = t[ti[j]]
                tj = t[j]
                for l in range(k):
                    if tij[l] != ti[tj[l]]:
                        raise NotAssociative(
                            f"({i}*{j})*{l} != {i}*({j}*{l})", witness=(i, j, l))
        if names is not None:
            if len(names) != k:
                raise SemigroupError("names must have one entry per element")
            names = tuple(str(n) for n in names)
        self.names = names
        found_zero = _find_zero(t)
        found_one = _find_identity(t)
        if zero is not None and zero != found_zero:
            raise SemigroupError(f"element {zero} is not a zero", witness=zero)
        if identity is not None and identity != found_one:
            raise SemigroupError(f"element {identity} is not an identity", witness=identity)
        self.zero = found_zero
        self.identity = found_one

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, word: Iterable[int]) -> int:
        it = iter(word)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def power(self, a: int, n: int) -> int:
        if n < 1:
            raise ValueError("powers start at 1")
        acc = a
        for _ in range(n - 1):
            acc = self.table[acc][a]
        return acc

    def name(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in self.elements for j in range(i))

    def restrict(self, subset: Iterable[int]) -> "FiniteSemigroup":
        """The subsemigroup on ``subset``, reindexed in increasing order."""
        keep = sorted(set(subset))
        pos = {x: i for i, x in enumerate(keep)}
        try:
            table = [[pos[self.table[a][b]] for b in keep] for a in keep]
        except KeyError as exc:
            raise NotClosed(f"subset is not closed under multiplication: {exc.args[0]}",
                            witness=exc.args[0]) from None
        names = [self.name(a) for a in keep] if self.names is not None else None
        return FiniteSemigroup(table, names)

    def to_dict(self) -> dict:
        d: dict = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.names is not None:
            d["names"] = list(self.names)
        if self.zero is not None:
            d["zero"] = self.zero
        if self.identity is not None:
            d["identity"] = self.identity
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteSemigroup":
        table = d["table"]
        if "order" in d and d["order"] != len(table):
            raise SemigroupError(f"order {d['order']} does not match table size {len(table)}")
        return cls(table, d.get("names"), d.get("zero"), d.get("identity"))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"

    @cached_property
    def _idempotents(self) -> frozenset:
        return frozenset(a for a in self.elements if self.table[a][a] == a)


def _find_zero(t) -> Optional[int]:
    k = len(t)
    for z in range(k):
        if all(t[z][i] == z and t[i][z] == z for i in range(k)):
            return z
    return None


def _find_identity(t) -> Optional[int]:
    k = len(t)
    for e in range(k):
        if all(t[e][i] == i and t[i][e] == i for i in range(k)):
            return e
    return None


def validate(table: Sequence[Sequence[int]], names=None) -> FiniteSemigroup:
    return FiniteSemigroup(table, names)


def _adjoin(S: FiniteSemigroup, kind: str) -> FiniteSemigroup:
    k = S.order
    table = [list(row) + [k if kind == "zero" else i] for i, row in enumerate(S.table)]
    table.append([k] * (k + 1) if kind == "zero" else list(range(k + 1)))
    names = None
    if S.names is not None:
        names = list(S.names) + ["0" if kind == "zero" else "1"]
    return FiniteSemigroup(table, names)


def adjoin_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^0: a fresh zero appended as the last element, even if S has one."""
    return _adjoin(S, "zero")


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a fresh identity appended as the last element, even if S has one."""
    return _adjoin(S, "identity")


def idempotents(S: FiniteSemigroup) -> frozenset:
    return S._idempotents


def regular_elements(S: FiniteSemigroup) -> frozenset:
    t = S.table
    return frozenset(a for a in S.elements
                     if any(t[t[a][x]][a] == a for x in S.elements))


def inverses(S: FiniteSemigroup, a: int) -> list[int]:
    """All x with axa = a and xax = x."""
    t = S.table
    return [x for x in S.elements if t[t[a][x]][a] == a and t[t[x][a]][x] == x]


def is_regular(S: FiniteSemigroup) -> bool:
    return len(regular_elements(S)) == S.order


def is_inverse(S: FiniteSemigroup) -> bool:
    if not is_regular(S):
        return False
    t = S.table
    es = sorted(idempotents(S))
    return all(t[e][f] == t[f][e] for e in es for f in es)


def is_group(S: FiniteSemigroup) -> bool:
    e = S.identity
    if e is None:
        return False
    return all(e in S.table[a] for a in S.elements)


def is_band(S: FiniteSemigroup) -> bool:
    return len(idempotents(S)) == S.order


def is_semilattice(S: FiniteSemigroup) -> bool:
    return is_band(S) and S.is_commutative()


def is_e_unitary(S: FiniteSemigroup) -> bool:
    """For inverse S: e and es idempotent force s idempotent."""
    if not is_inverse(S):
        raise NotInverse("E-unitary check needs an inverse semigroup")
    E = idempotents(S)
    t = S.table
    for e in E:
        for s in S.elements:
            if t[e][s] in E and s not in E:
                return False
    return True


def group_inverse(S: FiniteSemigroup, a: int) -> int:
    e = S.identity
    for b in S.elements:
        if S.table[a][b] == e:
            return b
    raise SemigroupError(f"element {a} has no inverse", witness=a)


def index_period(S: FiniteSemigroup, a: int) -> tuple[int, int]:
    """Least (m, r) with a^(m+r) = a^m."""
    seen = {}
    x, n = a, 1
    while x not in seen:
        seen[x] = n
        x = S.table[x][a]
        n += 1
    m = seen[x]
    return m, n - m


def power_ideal(S: FiniteSemigroup, m: int) -> frozenset:
    """S^m, the set of all m-fold products."""
    if m < 1:
        raise ValueError("m must be positive")
    cur = set(S.elements)
    t = S.table
    for _ in range(m - 1):
        cur = {t[x][y] for x in cur for y in S.elements}
    return frozenset(cur)


def power_chain(S: FiniteSemigroup) -> list[frozenset]:
    """S = S^1 ⊇ S^2 ⊇ ... up to and including the first repeat."""
    t = S.table
    chain = [frozenset(S.elements)]
    while True:
        nxt = frozenset(t[x][y] for x in chain[-1] for y in S.elements)
        chain.append(nxt)
        if nxt == chain[-2]:
            return chain


def stabilization_index(S: FiniteSemigroup) -> int:
    return len(power_chain(S)) - 1


def _require_zero(S: FiniteSemigroup) -> int:
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    return S.zero


def nil_degree(S: FiniteSemigroup) -> Optional[int]:
    """Least n with a^n = 0 for every a, or None if S is not nil."""
    z = _require_zero(S)
    degree = 1
    for a in S.elements:
        m, r = index_period(S, a)
        if r != 1 or S.power(a, m) != z:
            return None
        degree = max(degree, m)
    return degree


def nilpotency_degree(S: FiniteSemigroup) -> Optional[int]:
    """Least n with S^n = {0}, or None if S is not nilpotent."""
    z = _require_zero(S)
    chain = power_chain(S)
    for n, P in enumerate(chain, start=1):
        if P == {z}:
            return n
    return None


def multiplication_subsemigroup(S: FiniteSemigroup, gens: Iterable[int]) -> frozenset:
    """The subsemigroup generated by ``gens``."""
    t = S.table
    gens = list(set(gens))
    out = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                for y in (t[x][g], t[g][x]):
                    if y not in out:
                        out.add(y)
                        new.append(y)
        frontier = new
    return frozenset(out)


def is_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    I = set(subset)
    t = S.table
    return bool(I) and all(t[a][s] in I and t[s][a] in I for a in I for s in S.elements)


def ideal_generated(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset:
    """S^1 A S^1."""
    t = S.table
    A = set(subset)
    left = A | {t[s][a] for s in S.elements for a in A}
    return frozenset(left | {t[x][s] for x in left for s in S.elements})
