"""Equivalence relations on ``range(k)`` and set-partition combinatorics."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True


def _canonical(labels: Sequence) -> tuple[int, ...]:
    # relabel to a restricted growth string: ids in order of first appearance
    seen: dict = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


class Partition:
    """An equivalence relation on ``{0, ..., k-1}`` stored as block ids.

    Block ids are dense and canonical (restricted growth string), so two
    partitions are equal exactly when their ``blocks`` tuples are equal.
    """

    __slots__ = ("blocks",)

    def __init__(self, labels: Iterable):
        self.blocks = _canonical(list(labels))

    @classmethod
    def identity(cls, k: int) -> "Partition":
        return cls(range(k))

    @classmethod
    def universal(cls, k: int) -> "Partition":
        return cls([0] * k)

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], k: int) -> "Partition":
        labels = [-1] * k
        for b, cls_ in enumerate(classes):
            for x in cls_:
                if labels[x] != -1:
                    raise ValueError(f"element {x} lies in two classes")
                labels[x] = b
        # unlisted elements become singletons
        extra = k
        for x in range(k):
            if labels[x] == -1:
                labels[x] = extra
                extra += 1
        return cls(labels)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], k: int) -> "Partition":
        uf = UnionFind(k)
        for a, b in pairs:
            uf.union(a, b)
        return cls(uf.find(x) for x in range(k))

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def n_blocks(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_blocks)]
        for x, b in enumerate(self.blocks):
            out[b].append(x)
        return out

    def class_of(self, x: int) -> list[int]:
        b = self.blocks[x]
        return [y for y, c in enumerate(self.blocks) if c == b]

    def related(self, a: int, b: int) -> bool:
        return self.blocks[a] == self.blocks[b]

    def pairs(self) -> Iterator[tuple[int, int]]:
        for cls_ in self.classes():
            for a in cls_:
                for b in cls_:
                    yield a, b

    def meet(self, other: "Partition") -> "Partition":
        return Partition(zip(self.blocks, other.blocks))

    def join(self, other: "Partition") -> "Partition":
        uf = UnionFind(self.size)
        for p in (self, other):
            for cls_ in p.classes():
                for x in cls_[1:]:
                    uf.union(cls_[0], x)
        return Partition(uf.find(x) for x in range(self.size))

    def refines(self, other: "Partition") -> bool:
        """True when ``self`` is contained in ``other`` as a relation."""
        image: dict[int, int] = {}
        for a, b in zip(self.blocks, other.blocks):
            if image.setdefault(a, b) != b:
                return False
        return True

    def is_identity(self) -> bool:
        return self.n_blocks == self.size

    def is_universal(self) -> bool:
        return self.n_blocks <= 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.classes()})"

    def to_list(self) -> list[int]:
        return list(self.blocks)


def restricted_growth_strings(n: int, max_blocks: int | None = None) -> Iterator[tuple[int, ...]]:
    """All set partitions of an ``n``-set as restricted growth strings."""
    if n == 0:
        yield ()
        return
    limit = n if max_blocks is None else max_blocks
    word = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(word)
            return
        for v in range(min(top + 2, limit)):
            word[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def enumerate_partitions(k: int) -> Iterator[Partition]:
    for rgs in restricted_growth_strings(k):
        yield Partition(rgs)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """n-th Bell number via the Bell triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def equality_pattern(entries: Sequence) -> tuple[int, ...]:
    """Restricted growth encoding of which entries of a tuple coincide."""
    return _canonical(entries)
