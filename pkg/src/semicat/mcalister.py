"""McAlister triples, P-semigroups and the (psi; theta) description of their automorphisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Optional, Sequence

from .aut import automorphism_group
from .core import FiniteSemigroup, idempotents, is_e_unitary, is_group, is_inverse
from .errors import InvalidTriple
from .partition import Partition


@dataclass(frozen=True)
class FinitePoset:
    """``leq[a][b]`` is True iff a <= b."""

    leq: tuple[tuple[bool, ...], ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        n = len(self.leq)
        for a in range(n):
            if not self.leq[a][a]:
                raise ValueError(f"order is not reflexive at {a}")
            for b in range(n):
                if a != b and self.leq[a][b] and self.leq[b][a]:
                    raise ValueError(f"order is not antisymmetric at ({a}, {b})")
                for c in range(n):
                    if self.leq[a][b] and self.leq[b][c] and not self.leq[a][c]:
                        raise ValueError(f"order is not transitive at ({a}, {b}, {c})")

    @classmethod
    def from_covers(cls, size: int, pairs: Iterable[tuple[int, int]], names=None) -> "FinitePoset":
        """Reflexive-transitive closure of the pairs (a, b) meaning a <= b."""
        leq = [[a == b for b in range(size)] for a in range(size)]
        for a, b in pairs:
            leq[a][b] = True
        for k in range(size):
            for a in range(size):
                if leq[a][k]:
                    for b in range(size):
                        if leq[k][b]:
                            leq[a][b] = True
        return cls(tuple(map(tuple, leq)), tuple(names) if names else None)

    @classmethod
    def chain(cls, size: int) -> "FinitePoset":
        return cls(tuple(tuple(a <= b for b in range(size)) for a in range(size)))

    @classmethod
    def antichain(cls, size: int) -> "FinitePoset":
        return cls.from_covers(size, [])

    @property
    def size(self) -> int:
        return len(self.leq)

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def meet(self, a: int, b: int, within: Optional[Iterable[int]] = None) -> Optional[int]:
        """Greatest lower bound of a and b inside ``within`` (default: all), or None."""
        pool = range(self.size) if within is None else within
        lower = [c for c in pool if self.leq[c][a] and self.leq[c][b]]
        for c in lower:
            if all(self.leq[d][c] for d in lower):
                return c
        return None

    def is_order_automorphism(self, psi: Sequence[int]) -> bool:
        n = self.size
        if sorted(psi) != list(range(n)):
            return False
        return all(self.leq[a][b] == self.leq[psi[a]][psi[b]] for a in range(n) for b in range(n))


@dataclass(frozen=True)
class McAlisterTriple:
    """A group G acting on a poset X by order automorphisms, with Y ⊆ X.

    ``action[g][x]`` is gx.  Construct through :meth:`make` to validate.
    """

    G: FiniteSemigroup
    X: FinitePoset
    Y: frozenset
    action: tuple[tuple[int, ...], ...]
    label: str = ""
    _inv: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @classmethod
    def make(cls, G, X, Y, action, label: str = "") -> "McAlisterTriple":
        if not is_group(G):
            raise InvalidTriple("G is not a group", witness=("group",))
        inv = tuple(next(h for h in G.elements if G.table[g][h] == G.identity) for g in G.elements)
        t = cls(G, X, frozenset(Y), tuple(tuple(r) for r in action), label, inv)
        t.validate()
        return t

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]

    def inverse(self, g: int) -> int:
        return self._inv[g]

    def act_inverse(self, g: int, x: int) -> int:
        """g^{-1} x."""
        return self.action[self._inv[g]][x]

    def meet(self, a: int, b: int) -> Optional[int]:
        return self.X.meet(a, b)

    def validate(self) -> None:
        G, X, Y, a = self.G, self.X, self.Y, self.action
        n = X.size
        if len(a) != G.order or any(len(r) != n for r in a):
            raise InvalidTriple("action table must be |G| x |X|", witness=("shape",))
        for g in G.elements:
            if sorted(a[g]) != list(range(n)):
                raise InvalidTriple(f"element {g} does not act bijectively", witness=("bijective", g))
            for x, y in product(range(n), repeat=2):
                if X.leq[x][y] != X.leq[a[g][x]][a[g][y]]:
                    raise InvalidTriple("action is not by order automorphisms",
                                        witness=("order", g, x, y))
        for x in range(n):
            if a[G.identity][x] != x:
                raise InvalidTriple("identity does not act trivially", witness=("identity", x))
        for g, h, x in product(G.elements, G.elements, range(n)):
            if a[G.table[g][h]][x] != a[g][a[h][x]]:
                raise InvalidTriple("(gh)x != g(hx)", witness=("compatibility", g, h, x))
        if not Y or not Y <= set(range(n)):
            raise InvalidTriple("Y must be a non-empty subset of X", witness=("Y",))
        for y in Y:
            for x in range(n):
                if X.leq[x][y] and x not in Y:
                    raise InvalidTriple("Y is not an order ideal", witness=("order_ideal", x, y))
        for y, z in product(sorted(Y), repeat=2):
            if X.meet(y, z, Y) is None:
                raise InvalidTriple("Y is not a meet semilattice", witness=("semilattice", y, z))
        covered = {a[g][y] for g in G.elements for y in Y}
        if len(covered) != n:
            raise InvalidTriple("GY != X", witness=("GY=X", min(set(range(n)) - covered)))
        for g in G.elements:
            if not any(a[g][y] in Y for y in Y):
                raise InvalidTriple("gY does not meet Y", witness=("gY∩Y", g))


def p_elements(t: McAlisterTriple) -> list[tuple[int, int]]:
    """Pairs (A, g) in Y x G with g^{-1}A in Y, in lexicographic order."""
    return [(A, g) for A in sorted(t.Y) for g in t.G.elements if t.act_inverse(g, A) in t.Y]


def p_semigroup(t: McAlisterTriple) -> FiniteSemigroup:
    """(A, g)(B, h) = (A ∧ gB, gh) on the listed pairs."""
    P = p_elements(t)
    index = {p: i for i, p in enumerate(P)}
    G = t.G
    table = []
    for A, g in P:
        row = []
        for B, h in P:
            m = t.meet(A, t.act(g, B))
            gh = G.table[g][h]
            if m is None or (m, gh) not in index:
                raise InvalidTriple("P is not closed under the product",
                                    witness=("closure", (A, g), (B, h)))
            row.append(index[(m, gh)])
        table.append(row)
    names = [f"({t.X.name(A)},{G.name(g)})" for A, g in P]
    S = FiniteSemigroup(table, names)
    if not is_inverse(S) or not is_e_unitary(S):
        raise AssertionError("P-semigroup is not E-unitary inverse")
    E = {P[e] for e in idempotents(S)}
    if E != {(A, G.identity) for A in t.Y}:
        raise AssertionError("E(P) != Y x {1}")
    return S


@dataclass(frozen=True)
class TripleApparatus:
    T: dict            # A -> sorted tuple of g with g^{-1}A in Y
    sim: dict          # A -> list of classes of ~_A on T_A
    calA: tuple        # distinct subsets of G making up the union of the T_A / ~_A
    nu: Partition      # on G


def triple_apparatus(t: McAlisterTriple) -> TripleApparatus:
    G, X, Y = t.G, t.X, t.Y
    T = {A: tuple(g for g in G.elements if t.act_inverse(g, A) in Y) for A in sorted(Y)}
    if set().union(*map(set, T.values())) != set(G.elements):
        raise AssertionError("G is not the union of the T_A")
    sim = {}
    for A, TA in T.items():
        below = [U for U in range(X.size) if X.leq[U][A]]
        sig = {}
        for g in TA:
            sig.setdefault(tuple(t.act_inverse(g, U) for U in below), []).append(g)
        sim[A] = sorted(sig.values())
    calA = tuple(sorted({frozenset(c) for cls in sim.values() for c in cls},
                        key=lambda s: sorted(s)))
    nu = Partition([t.action[g] for g in G.elements])
    for A, classes in sim.items():
        where = {g: i for i, c in enumerate(classes) for g in c}
        for g, h in nu.pairs():
            if (g in where) != (h in where) or (g in where and where[g] != where[h]):
                raise AssertionError("nu does not refine ~_A")
    return TripleApparatus(T, sim, calA, nu)


def mu_prediction(t: McAlisterTriple) -> Partition:
    """Blocks {(A,g),(B,h)} with A = B and g ~_A h, over p_elements order."""
    app = triple_apparatus(t)
    labels = []
    for A, g in p_elements(t):
        c = next(i for i, cls in enumerate(app.sim[A]) if g in cls)
        labels.append((A, c))
    return Partition(labels)


def green_prediction(t: McAlisterTriple) -> tuple[Partition, Partition]:
    """R by first coordinate, L by g^{-1}A."""
    P = p_elements(t)
    return Partition([A for A, _ in P]), Partition([t.act_inverse(g, A) for A, g in P])


def order_automorphisms(X: FinitePoset) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(X.size)) if X.is_order_automorphism(p)]


def augmented_act_automorphisms(t: McAlisterTriple) -> list[tuple[int, ...]]:
    """Order automorphisms psi of X with Y psi = Y and (gA)psi = g(A psi)."""
    out = []
    for psi in order_automorphisms(t.X):
        if {psi[y] for y in t.Y} != t.Y:
            continue
        if all(psi[t.act(g, A)] == t.act(g, psi[A]) for g in t.G.elements for A in range(t.X.size)):
            out.append(psi)
    return out


def p_automorphism(t: McAlisterTriple, psi: Sequence[int], theta: Sequence[int]) -> Optional[tuple[int, ...]]:
    """The map (A, g) -> (A psi, g theta) if (psi; theta) satisfies the hypotheses, else None."""
    G = t.G
    if not t.X.is_order_automorphism(psi) or {psi[y] for y in t.Y} != t.Y:
        return None
    if not all(psi[t.act(g, A)] == t.act(theta[g], psi[A])
               for g in G.elements for A in range(t.X.size)):
        return None
    P = p_elements(t)
    index = {p: i for i, p in enumerate(P)}
    return tuple(index[(psi[A], theta[g])] for A, g in P)


def p_automorphisms(t: McAlisterTriple) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Every (psi, theta, phi) with phi = (psi; theta) an automorphism of P."""
    out = []
    for theta in automorphism_group(t.G).elements:
        for psi in order_automorphisms(t.X):
            phi = p_automorphism(t, psi, theta)
            if phi is not None:
                out.append((psi, theta, phi))
    return out


def factor_p_automorphism(t: McAlisterTriple, phi: Sequence[int]) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Recover (psi, theta) from an automorphism of P, or None if it is not of that form."""
    G, X, Y = t.G, t.X, t.Y
    P = p_elements(t)
    theta: dict[int, int] = {}
    psiY: dict[int, int] = {}
    for i, (A, g) in enumerate(P):
        B, h = P[phi[i]]
        if theta.setdefault(g, h) != h:
            return None
        if g == G.identity:
            psiY[A] = B
    if len(theta) != G.order:
        return None
    psi: dict[int, int] = {}
    for g in G.elements:
        for A in Y:
            x, img = t.act(g, A), t.act(theta[g], psiY[A])
            if psi.setdefault(x, img) != img:
                return None
    if len(psi) != X.size:
        return None
    psi_t = tuple(psi[x] for x in range(X.size))
    theta_t = tuple(theta[g] for g in G.elements)
    if p_automorphism(t, psi_t, theta_t) != tuple(phi):
        return None
    return psi_t, theta_t


def p_automorphism_check(t: McAlisterTriple, S: Optional[FiniteSemigroup] = None) -> list[tuple[int, ...]]:
    """Raw automorphisms of P that do not factor as (psi; theta)."""
    S = S or p_semigroup(t)
    return [phi for phi in automorphism_group(S).elements if factor_p_automorphism(t, phi) is None]

