"""Standard finite semigroups and the constructions used throughout the package.

Elements of constructed semigroups are ordered lexicographically by their
construction coordinates; names record those coordinates for display.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Optional, Sequence

from .core import FiniteSemigroup, is_group
from .errors import NoZero, NotAGroup, NotAMonoid, TrivialSummand


def _from_op(elements: Sequence, op, names=None) -> FiniteSemigroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(x, y)] for y in elements] for x in elements]
    return FiniteSemigroup(table, names)


def trivial_semigroup() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], ["e"])


def cyclic_group(n: int) -> FiniteSemigroup:
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)],
                           [f"g{i}" if i else "1" for i in range(n)])


def klein_four() -> FiniteSemigroup:
    return FiniteSemigroup([[i ^ j for j in range(4)] for i in range(4)], ["1", "a", "b", "ab"])


def symmetric_group(n: int) -> FiniteSemigroup:
    perms = sorted(permutations(range(n)))
    # p*q applies p first, then q
    return _from_op(perms, lambda p, q: tuple(q[x] for x in p),
                    ["".join(map(str, p)) for p in perms])


def full_transformation_monoid(n: int) -> FiniteSemigroup:
    maps = sorted(product(range(n), repeat=n))
    return _from_op(maps, lambda f, g: tuple(g[x] for x in f),
                    ["".join(map(str, f)) for f in maps])


def chain_semilattice(m: int) -> FiniteSemigroup:
    """The m-element chain 0 < 1 < ... < m-1 under min."""
    return FiniteSemigroup([[min(i, j) for j in range(m)] for i in range(m)])


def null_semigroup(m: int) -> FiniteSemigroup:
    """N_m^0: zero (index 0) and m elements whose products are all 0."""
    if m < 1:
        raise ValueError("m must be positive")
    return FiniteSemigroup([[0] * (m + 1) for _ in range(m + 1)],
                           ["0"] + [f"a{i}" for i in range(1, m + 1)])


def left_zero_band(m: int) -> FiniteSemigroup:
    if m < 1:
        raise ValueError("m must be positive")
    return FiniteSemigroup([[i] * m for i in range(m)], [f"x{i}" for i in range(1, m + 1)])


def right_zero_band(m: int) -> FiniteSemigroup:
    return FiniteSemigroup([list(range(m)) for _ in range(m)], [f"y{i}" for i in range(1, m + 1)])


def chain_of_semigroups(components: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Disjoint union over a chain, listed bottom first.

    Inside a component products are unchanged; across components the element
    of the lower component is the product (s_i s_j = s_j = s_j s_i for i > j).
    """
    if not components:
        raise ValueError("need at least one component")
    offsets, level = [], []
    n = 0
    for c, S in enumerate(components):
        offsets.append(n)
        level.extend([c] * S.order)
        n += S.order
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            cx, cy = level[x], level[y]
            if cx == cy:
                S, off = components[cx], offsets[cx]
                table[x][y] = off + S.table[x - off][y - off]
            else:
                table[x][y] = x if cx < cy else y
    names = [f"{S.name(i)}@{c}" for c, S in enumerate(components) for i in S.elements]
    return FiniteSemigroup(table, names)


def _require_group(G: FiniteSemigroup) -> int:
    if not is_group(G):
        raise NotAGroup("expected a group")
    return G.identity


def brandt(G: FiniteSemigroup, m: int) -> FiniteSemigroup:
    """B^0[G; m]: zero at index 0, then (i, g, j) in lexicographic order."""
    _require_group(G)
    if m < 1:
        raise ValueError("m must be positive")
    k = G.order
    n = 1 + m * m * k

    def idx(i, g, j):
        return 1 + (i * k + g) * m + j

    table = [[0] * n for _ in range(n)]
    for i, g, j in product(range(m), range(k), range(m)):
        for jj, h, l in product(range(m), range(k), range(m)):
            if j == jj:
                table[idx(i, g, j)][idx(jj, h, l)] = idx(i, G.table[g][h], l)
    names = ["0"] + [f"({i + 1},{G.name(g)},{j + 1})"
                     for i, g, j in product(range(m), range(k), range(m))]
    return FiniteSemigroup(table, names)


def brandt_coordinates(G: FiniteSemigroup, m: int, x: int) -> tuple[int, int, int] | None:
    """(i, g, j) for a non-zero element index of brandt(G, m), None for zero."""
    if x == 0:
        return None
    x -= 1
    k = G.order
    j = x % m
    x //= m
    return x // k, x % k, j


def brandt_element(G: FiniteSemigroup, m: int, i: int, g: int, j: int) -> int:
    return 1 + (i * G.order + g) * m + j


def brandt_automorphism(G: FiniteSemigroup, m: int, theta: Sequence[int], pi: Sequence[int],
                        u: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """The map (theta; pi): 0 -> 0, (i, g, j) -> (i pi, g theta, j pi).

    With ``u`` (one group element per index) the twisted map
    (i, g, j) -> (i pi, u_i (g theta) u_j^{-1}, j pi) is returned instead.
    """
    t = G.table
    one = _require_group(G)
    inv = [next(h for h in G.elements if t[g][h] == one) for g in G.elements]
    u = u or [one] * m
    out = [0]
    for i, g, j in product(range(m), range(G.order), range(m)):
        h = t[t[u[i]][theta[g]]][inv[u[j]]]
        out.append(brandt_element(G, m, pi[i], h, pi[j]))
    result = tuple(out)
    if not _preserves(brandt(G, m), result):
        raise AssertionError("Brandt map is not an automorphism")
    return result


def _preserves(S: FiniteSemigroup, p: Sequence[int]) -> bool:
    t = S.table
    return all(p[t[a][b]] == t[p[a]][p[b]] for a in S.elements for b in S.elements)


def factor_brandt_automorphism(G: FiniteSemigroup, m: int, phi: Sequence[int], twisted: bool = False):
    """Write phi as (theta; pi), or as (theta; pi; u) with u_0 = 1 when ``twisted``.

    Returns the tuple of components, or None if phi is not of that form.
    """
    t = G.table
    one = _require_group(G)
    inv = [next(h for h in G.elements if t[g][h] == one) for g in G.elements]
    pi = []
    for i in range(m):
        c = brandt_coordinates(G, m, phi[brandt_element(G, m, i, one, i)])
        if c is None or c[0] != c[2]:
            return None
        pi.append(c[0])
    if sorted(pi) != list(range(m)):
        return None
    u = [one] * m
    if twisted:
        for i in range(m):
            c = brandt_coordinates(G, m, phi[brandt_element(G, m, 0, one, i)])
            if c is None:
                return None
            u[i] = inv[c[1]]
    theta = []
    for g in G.elements:
        c = brandt_coordinates(G, m, phi[brandt_element(G, m, 0, g, 0)])
        if c is None:
            return None
        theta.append(c[1])
    if not _preserves(G, theta) or sorted(theta) != list(G.elements):
        return None
    try:
        rebuilt = brandt_automorphism(G, m, theta, pi, u)
    except AssertionError:
        return None
    if rebuilt != tuple(phi):
        return None
    return (tuple(theta), tuple(pi), tuple(u)) if twisted else (tuple(theta), tuple(pi))


def direct_product(factors: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    if not factors:
        raise ValueError("need at least one factor")
    coords = list(product(*(S.elements for S in factors)))
    names = ["(" + ",".join(S.name(c) for S, c in zip(factors, xs)) + ")" for xs in coords]
    return _from_op(coords, lambda x, y: tuple(S.table[a][b] for S, a, b in zip(factors, x, y)),
                    names)


def direct_sum_of_monoids(factors: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Over a finite index set the direct sum of monoids is the direct product."""
    for i, M in enumerate(factors):
        if M.identity is None:
            raise NotAMonoid(f"factor {i} has no identity", witness=i)
    return direct_product(factors)


def zero_direct_union(factors: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Amalgamate the zeros (shared zero at index 0); cross products are 0."""
    if not factors:
        raise ValueError("need at least one factor")
    for i, S in enumerate(factors):
        if S.zero is None:
            raise NoZero(f"factor {i} has no zero", witness=i)
        if S.order == 1:
            raise TrivialSummand(f"factor {i} is {{0}}", witness=i)
    pos = []
    names = ["0"]
    n = 1
    for c, S in enumerate(factors):
        m = {S.zero: 0}
        for x in S.elements:
            if x != S.zero:
                m[x] = n
                names.append(f"{S.name(x)}@{c}")
                n += 1
        pos.append(m)
    table = [[0] * n for _ in range(n)]
    for S, m in zip(factors, pos):
        for x in S.elements:
            for y in S.elements:
                table[m[x]][m[y]] = m[S.table[x][y]]
    return FiniteSemigroup(table, names)


def boolean_zs(m: int) -> FiniteSemigroup:
    """Non-empty subsets of an m-set, A + B = A | B if disjoint, else the full set.

    Element i is the subset with bitmask i + 1; the zero is the full set.
    """
    if m < 1:
        raise ValueError("m must be positive")
    top = (1 << m) - 1
    masks = list(range(1, top + 1))
    names = ["{" + ",".join(str(b + 1) for b in range(m) if x >> b & 1) + "}" for x in masks]
    return _from_op(masks, lambda a, b: a | b if a & b == 0 else top, names)


def example_c(m: int) -> FiniteSemigroup:
    """A ∪ {0, u} with |A| = m and the only non-zero products ab = u for a != b in A.

    Indices: 0 is the zero, 1 is u, 2.. are the elements of A.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    n = m + 2
    table = [[0] * n for _ in range(n)]
    for a in range(2, n):
        for b in range(2, n):
            if a != b:
                table[a][b] = 1
    return FiniteSemigroup(table, ["0", "u"] + [f"a{i}" for i in range(1, m + 1)])
