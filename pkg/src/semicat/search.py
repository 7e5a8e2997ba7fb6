"""Backtracking search for isomorphisms between finite semigroups.

Candidates are pruned by an isomorphism-invariant colouring of the elements
(idempotency, index/period, Green class sizes, ...) which is then refined by
the colours of row and column entries.  Images are only chosen for a
generating set; every other element is forced by closing the partial map
under multiplication.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .core import FiniteSemigroup, index_period, multiplication_subsemigroup, regular_elements
from .errors import SearchBudgetExceeded
from .green import green_relations

DEFAULT_NODE_LIMIT = 2_000_000


def base_invariants(S: FiniteSemigroup) -> list[tuple]:
    t = S.table
    g = green_relations(S)
    R, L, H, J = (p.blocks for p in (g.R, g.L, g.H, g.J))
    sizes = {}
    for name, blocks in (("R", R), ("L", L), ("H", H), ("J", J)):
        count: dict[int, int] = {}
        for b in blocks:
            count[b] = count.get(b, 0) + 1
        sizes[name] = [count[b] for b in blocks]
    reg = regular_elements(S)
    roots = [0] * S.order
    for x in S.elements:
        roots[t[x][x]] += 1
    out = []
    for a in S.elements:
        m, r = index_period(S, a)
        out.append((
            t[a][a] == a, m, r, a in reg,
            sizes["R"][a], sizes["L"][a], sizes["H"][a], sizes["J"][a],
            len(set(t[a])), len({t[x][a] for x in S.elements}),
            sum(1 for x in S.elements if t[a][x] == a),
            sum(1 for x in S.elements if t[x][a] == a),
            roots[a], a == S.zero, a == S.identity,
        ))
    return out


def _relabel(sigs_per: list[list]) -> list[list[int]]:
    keys = sorted({s for sigs in sigs_per for s in sigs})
    ids = {s: i for i, s in enumerate(keys)}
    return [[ids[s] for s in sigs] for sigs in sigs_per]


def refined_colours(semigroups: Sequence[FiniteSemigroup]) -> list[list[int]]:
    """Jointly refined colours, comparable across all given semigroups."""
    colours = _relabel([base_invariants(S) for S in semigroups])
    n_before = -1
    while True:
        n_now = len({c for cs in colours for c in cs})
        if n_now == n_before:
            return colours
        n_before = n_now
        sigs_per = []
        for S, col in zip(semigroups, colours):
            t = S.table
            sigs = []
            for a in S.elements:
                row = sorted((col[y], col[t[a][y]], col[t[y][a]]) for y in S.elements)
                sigs.append((col[a], tuple(row)))
            sigs_per.append(sigs)
        colours = _relabel(sigs_per)


def _generating_set(S: FiniteSemigroup, colours: list[int]) -> list[int]:
    size = {}
    for c in colours:
        size[c] = size.get(c, 0) + 1
    order = sorted(S.elements, key=lambda x: (size[colours[x]], colours[x], x))
    gens: list[int] = []
    covered: frozenset = frozenset()
    for x in order:
        if x not in covered:
            gens.append(x)
            covered = multiplication_subsemigroup(S, gens)
            if len(covered) == S.order:
                break
    # drop generators made redundant by later ones
    for x in list(gens):
        rest = [y for y in gens if y != x]
        if rest and len(multiplication_subsemigroup(S, rest)) == S.order:
            gens = rest
    return gens


class IsomorphismSearch:
    def __init__(self, S: FiniteSemigroup, T: FiniteSemigroup,
                 node_limit: Optional[int] = DEFAULT_NODE_LIMIT):
        self.S, self.T = S, T
        self.node_limit = node_limit
        self.nodes = 0
        if S.order != T.order:
            self.feasible = False
            return
        if S is T:
            cS = refined_colours([S])[0]
            cT = cS
        else:
            cS, cT = refined_colours([S, T])
        self.cS, self.cT = cS, cT
        self.feasible = sorted(cS) == sorted(cT)
        if not self.feasible:
            return
        self.cand: dict[int, list[int]] = {}
        for y in T.elements:
            self.cand.setdefault(cT[y], []).append(y)
        self.gens = _generating_set(S, cS)

    def _tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchBudgetExceeded(f"isomorphism search exceeded {self.node_limit} nodes",
                                       witness=self.nodes)

    def run(self, prefix: Sequence[tuple[int, int]] = ()) -> Iterator[tuple[int, ...]]:
        """Yield every isomorphism S -> T extending the pairs in ``prefix``."""
        if not self.feasible:
            return
        k = self.S.order
        tS, tT = self.S.table, self.T.table
        cS, cT = self.cS, self.cT
        fwd = [-1] * k
        bwd = [-1] * k
        assigned: list[int] = []

        def put(x: int, y: int) -> bool:
            if fwd[x] != -1:
                return fwd[x] == y
            if bwd[y] != -1 or cS[x] != cT[y]:
                return False
            fwd[x] = y
            bwd[y] = x
            assigned.append(x)
            return True

        def close(i: int) -> bool:
            while i < len(assigned):
                x = assigned[i]
                fx = fwd[x]
                rx, rfx = tS[x], tT[fx]
                for j in range(i + 1):
                    y = assigned[j]
                    fy = fwd[y]
                    if not put(rx[y], rfx[fy]) or not put(tS[y][x], tT[fy][fx]):
                        return False
                i += 1
            return True

        def undo(n: int):
            while len(assigned) > n:
                x = assigned.pop()
                bwd[fwd[x]] = -1
                fwd[x] = -1

        for x, y in prefix:
            if not put(x, y):
                return
        if not close(0):
            return

        gens = self.gens

        def dfs(gi: int) -> Iterator[tuple[int, ...]]:
            while gi < len(gens) and fwd[gens[gi]] != -1:
                gi += 1
            if gi == len(gens):
                yield tuple(fwd)
                return
            x = gens[gi]
            for y in self.cand[cS[x]]:
                if bwd[y] != -1:
                    continue
                self._tick()
                mark = len(assigned)
                if put(x, y) and close(mark):
                    yield from dfs(gi + 1)
                undo(mark)

        yield from dfs(0)


def isomorphisms(S: FiniteSemigroup, T: FiniteSemigroup,
                 node_limit: Optional[int] = DEFAULT_NODE_LIMIT) -> Iterator[tuple[int, ...]]:
    return IsomorphismSearch(S, T, node_limit).run()


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup,
                     node_limit: Optional[int] = DEFAULT_NODE_LIMIT) -> Optional[tuple[int, ...]]:
    return next(isomorphisms(S, T, node_limit), None)


def are_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return find_isomorphism(S, T) is not None


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi: Sequence[int]) -> bool:
    if S.order != T.order or sorted(phi) != list(range(T.order)):
        return False
    tS, tT = S.table, T.table
    return all(phi[tS[a][b]] == tT[phi[a]][phi[b]] for a in S.elements for b in S.elements)
