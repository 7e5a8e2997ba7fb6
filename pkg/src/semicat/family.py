"""Growth of orbit statistics across parameterised families.

Every report is evidence about finite truncations only; it never asserts
anything about an infinite limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .aut import automorphism_group_order, orbit_count, tau
from .catalog import semigroup
from .constructions import boolean_zs, brandt, chain_semilattice, direct_product, example_c, null_semigroup
from .core import FiniteSemigroup

NOTE = "finite-truncation evidence only; not a categoricity verdict"
BOUNDED = "bounded over range"
INCREASING = "strictly increasing over range"
UNCLEAR = "no monotone pattern over range"

FAMILIES: dict[str, Callable[[int, str], FiniteSemigroup]] = {
    "chain_semilattice": lambda m, base: chain_semilattice(m),
    "null": lambda m, base: null_semigroup(m),
    "brandt": lambda m, base: brandt(semigroup(base or "Z2"), m),
    "direct_power": lambda m, base: direct_product([semigroup(base or "chain2")] * m),
    "example_c": lambda m, base: example_c(m),
    "boolean_zs": lambda m, base: boolean_zs(m),
}

STATISTICS = ("tau", "orbit_count", "aut_order")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: tuple[int, ...]
    statistic: str = "tau"
    n: int = 1
    base: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}")
        if not self.parameters or any(p < 1 for p in self.parameters):
            raise ValueError("parameter range must be finite and positive")
        if self.n < 1:
            raise ValueError("n must be positive")


def member(spec: FamilySpec, m: int) -> FiniteSemigroup:
    return FAMILIES[spec.family](m, spec.base)


def statistic(spec: FamilySpec, S: FiniteSemigroup) -> int:
    if spec.statistic == "tau":
        return tau(S)
    if spec.statistic == "aut_order":
        return automorphism_group_order(S)
    return orbit_count(S, spec.n).orbit_count


def trend(values: Sequence[int]) -> str:
    if len(values) > 1 and all(b > a for a, b in zip(values, values[1:])):
        return INCREASING
    if len(values) == 1 or values[-1] == values[-2] and max(values) == values[-1]:
        return BOUNDED
    return UNCLEAR


def run_family(spec: FamilySpec) -> dict:
    rows = []
    for m in spec.parameters:
        S = member(spec, m)
        rows.append({"parameter": m, "order": S.order, "value": statistic(spec, S)})
    label = spec.statistic if spec.statistic != "orbit_count" else f"orbit_count(n={spec.n})"
    return {
        "family": spec.family,
        "base": spec.base,
        "statistic": label,
        "rows": rows,
        "trend": trend([r["value"] for r in rows]),
        "note": NOTE,
    }


def render_table(report: dict) -> str:
    lines = [f"{report['family']}  {report['statistic']}  ({report['note']})",
             f"{'m':>4} {'|S|':>6} {'value':>8}"]
    for r in report["rows"]:
        lines.append(f"{r['parameter']:>4} {r['order']:>6} {r['value']:>8}")
    lines.append(f"trend: {report['trend']}")
    return "\n".join(lines) + "\n"
