"""Theorem-check batteries over the built-in instances."""

from __future__ import annotations

import random
from math import factorial
from typing import Callable

from . import catalog
from .aut import automorphism_group, counting_lemma_holds, random_partition
from .congruence import (congruence_generated_by, enumerate_congruences, is_preserved_by,
                         largest_congruence_within, least_group_congruence,
                         max_idempotent_separating)
from .constructions import (brandt, cyclic_group, factor_brandt_automorphism, klein_four,
                            symmetric_group, zero_direct_union)
from .core import is_inverse
from .decomp import (decompose_automorphism, greatest_zero_direct_decomposition,
                     is_zero_directly_indecomposable, zero_direct_decompositions)
from .mcalister import green_prediction, mu_prediction, p_automorphism_check, p_semigroup
from .green import green_relations
from .partition import Partition
from .search import are_isomorphic
from .semidirect import (check_converse, check_lifting, converse_applies, example_left_zero,
                         kappa_partition, semidirect_product, trivial_action)

DEFAULT_SEED = 20240601

BRANDT_GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "K4": klein_four,
    "S3": lambda: symmetric_group(3),
}


class Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: list[dict] = []

    def check(self, name: str, ok: bool, detail=None) -> None:
        entry = {"name": name, "passed": bool(ok)}
        if detail is not None:
            entry["detail"] = detail
        self.checks.append(entry)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "failures": sum(not c["passed"] for c in self.checks), "checks": self.checks}


def brandt_grid():
    for gname, build in BRANDT_GROUPS.items():
        G = build()
        for m in (1, 2, 3):
            if m * m * G.order <= 55:
                yield gname, G, m


def suite_brandt_aut(seed: int) -> Report:
    r = Report("brandt-aut")
    for gname, G, m in brandt_grid():
        auts = automorphism_group(brandt(G, m)).elements
        aut_g = len(automorphism_group(G))
        plain = sum(factor_brandt_automorphism(G, m, p) is not None for p in auts)
        twisted = sum(factor_brandt_automorphism(G, m, p, twisted=True) is not None for p in auts)
        expected = aut_g * factorial(m)
        r.check(f"|Aut B0[{gname};{m}]| = |Aut G| m!", len(auts) == expected,
                {"raw": len(auts), "expected": expected})
        r.check(f"B0[{gname};{m}] automorphisms of the form (theta; pi)", plain == len(auts),
                {"factoring": plain, "raw": len(auts)})
        r.check(f"B0[{gname};{m}] automorphisms of the twisted form", twisted == len(auts),
                {"factoring": twisted, "raw": len(auts)})
    return r


def suite_p_semigroup(seed: int) -> Report:
    r = Report("p-semigroup")
    for name, t in catalog.triples():
        P = p_semigroup(t)
        g = green_relations(P)
        R, L = green_prediction(t)
        r.check(f"{name}: E(P) = Y x {{1}} and E-unitary inverse", True, {"order": P.order})
        r.check(f"{name}: mu blocks", max_idempotent_separating(P) == mu_prediction(t))
        r.check(f"{name}: R and L", g.R == R and g.L == L)
        bad = p_automorphism_check(t, P)
        r.check(f"{name}: automorphisms of the form (psi; theta)", not bad,
                {"unfactored": [list(p) for p in bad]} if bad else None)
    return r


def zero_instances(max_order: int = 8):
    for name, S in catalog.semigroups(max_order):
        if S.zero is not None and S.order > 1:
            yield name, S


def suite_zero_direct(seed: int) -> Report:
    r = Report("zero-direct")
    for name, S in zero_instances():
        d = greatest_zero_direct_decomposition(S)
        others = zero_direct_decompositions(S)
        finest = all(all(any(A <= B for B in other) for A in d.summands) for other in others)
        r.check(f"{name}: greatest decomposition refines all", finest and d.summands in
                [tuple(sorted(o, key=lambda s: min(s - {S.zero}))) for o in others])
        r.check(f"{name}: summands indecomposable",
                all(is_zero_directly_indecomposable(S.restrict(A)) for A in d.summands))
        ok = True
        for phi in automorphism_group(S).elements:
            try:
                decompose_automorphism(S, phi, d)
            except AssertionError:
                ok = False
        r.check(f"{name}: automorphisms decompose summand-wise", ok)
        rebuilt = zero_direct_union([S.restrict(A) for A in d.summands])
        r.check(f"{name}: round trip", are_isomorphic(rebuilt, S))
    return r


def suite_semidirect(seed: int) -> Report:
    r = Report("semidirect")
    for name, d in catalog.semidirect_data():
        M = semidirect_product(d)
        if M.order > 20:
            continue
        bad = check_lifting(d, M)
        r.check(f"{name}: kappa-preserving automorphisms lift", not bad)
        if converse_applies(d):
            r.check(f"{name}: converse shadow", not check_converse(d))
    d = trivial_action(catalog.semigroup("chain2"), cyclic_group(2))
    r.check("trivial action: kappa universal", kappa_partition(d).is_universal())
    d, L = example_left_zero(2, 2)
    rest = [x for x in d.T.elements if x not in L]
    r.check("left multiplication example: kappa blocks {L, S' minus L}",
            kappa_partition(d) == Partition.from_classes([L, rest], d.T.order))
    return r


def suite_congruences(seed: int) -> Report:
    rng = random.Random(seed)
    r = Report("congruences")
    for name, S in catalog.semigroups(5):
        congs = list(enumerate_congruences(S))
        for _ in range(3):
            pairs = [(rng.randrange(S.order), rng.randrange(S.order)) for _ in range(rng.randint(0, 2))]
            gen = congruence_generated_by(S, pairs)
            meet = Partition.universal(S.order)
            for c in congs:
                if all(c.related(a, b) for a, b in pairs):
                    meet = meet.meet(c)
            r.check(f"{name}: generated congruence of {pairs}", gen == meet)
            tau = random_partition(rng, S.order)
            flat = largest_congruence_within(S, tau)
            r.check(f"{name}: largest congruence within {list(tau.blocks)}",
                    all(c.refines(flat) for c in congs if c.refines(tau)))
        if is_inverse(S):
            G = automorphism_group(S)
            sigma, mu = least_group_congruence(S), max_idempotent_separating(S)
            r.check(f"{name}: sigma and mu preserved by Aut",
                    all(is_preserved_by(sigma, p) and is_preserved_by(mu, p) for p in G.elements))
    return r


def suite_counting(seed: int, instances: int = 1000) -> Report:
    rng = random.Random(seed)
    r = Report("counting")
    violations = []
    applicable = 0
    for i in range(instances):
        size = rng.randint(1, 20)
        gammas = [random_partition(rng, size) for _ in range(rng.randint(1, 4))]
        meet = gammas[0]
        for g in gammas[1:]:
            meet = meet.meet(g)
        # coarsen the meet at random so the hypothesis holds
        labels = list(meet.blocks)
        merge = {b: rng.randrange(max(1, meet.n_blocks)) for b in set(labels)}
        sigma = Partition(merge[b] for b in labels)
        applicable += meet.refines(sigma)
        if not counting_lemma_holds(gammas, sigma):
            violations.append(i)
    r.check("counting bound on random partitions", not violations,
            {"instances": instances, "applicable": applicable, "violations": violations[:10]})
    return r


SUITES: dict[str, Callable[[int], Report]] = {
    "brandt-aut": suite_brandt_aut,
    "p-semigroup": suite_p_semigroup,
    "zero-direct": suite_zero_direct,
    "semidirect": suite_semidirect,
    "congruences": suite_congruences,
    "counting": suite_counting,
}


def verify_suite(name: str, seed: int = DEFAULT_SEED) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](seed).to_dict()
