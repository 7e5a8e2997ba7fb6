"""The ``semicat`` command line.

Exit codes: 0 ok, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .aut import (automorphism_group, automorphism_group_order, characteristic_ideal_tower,
                  class_orbit_count, orbit_count, pointwise_stabilizer, setwise_stabilizer,
                  tau)
from .congruence import (congruence_generated_by, largest_congruence_within,
                         least_group_congruence, max_idempotent_separating, quotient,
                         rees_congruence)
from .core import (FiniteSemigroup, idempotents, index_period, is_band, is_e_unitary, is_group,
                   is_inverse, is_regular, is_semilattice, nil_degree, nilpotency_degree,
                   regular_elements, stabilization_index)
from .decomp import greatest_zero_direct_decomposition, is_primitive, is_zero_directly_indecomposable
from .errors import SemigroupError
from .family import FAMILIES, STATISTICS, FamilySpec, render_table, run_family
from .green import egg_box, green_relations, principal_factors
from .io import RecipeError, build, dumps, load_partition, load_semigroup, read_json, save_semigroup
from .verify import DEFAULT_SEED, SUITES, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _range(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(_ints(text))


def _check_points(S: FiniteSemigroup, xs: Sequence[int]) -> None:
    bad = [x for x in xs if not 0 <= x < S.order]
    if bad:
        raise InputError(f"element indices out of range: {bad}")


def cmd_construct(args) -> tuple[dict, int]:
    if args.recipe:
        S = build(read_json(args.recipe))
    else:
        S = load_semigroup(f"builtin:{args.builtin}")
    if args.out:
        save_semigroup(S, args.out)
    return S.to_dict(), EXIT_OK


def cmd_analyze(args) -> tuple[dict, int]:
    S = load_semigroup(args.semigroup)
    inverse = is_inverse(S)
    out = {
        "order": S.order,
        "zero": S.zero,
        "identity": S.identity,
        "commutative": S.is_commutative(),
        "idempotents": sorted(idempotents(S)),
        "regular_elements": sorted(regular_elements(S)),
        "regular": is_regular(S),
        "inverse": inverse,
        "group": is_group(S),
        "band": is_band(S),
        "semilattice": is_semilattice(S),
        "e_unitary": is_e_unitary(S) if inverse else None,
        "index_period": [list(index_period(S, a)) for a in S.elements],
        "stabilization_index": stabilization_index(S),
        "tau": tau(S),
        "aut_order": automorphism_group_order(S),
        "tower": [sorted(T) for T in characteristic_ideal_tower(S)],
        "principal_factors": [
            {"j_class": list(f.j_class), "classification": f.classification, "order": f.semigroup.order}
            for f in principal_factors(S)],
    }
    if S.zero is not None:
        out["nil_degree"] = nil_degree(S)
        out["nilpotency_degree"] = nilpotency_degree(S)
    if args.green:
        g = green_relations(S)
        out["green"] = {
            "R": list(g.R.blocks), "L": list(g.L.blocks), "H": list(g.H.blocks),
            "D": list(g.D.blocks), "J": list(g.J.blocks),
            "egg_box": egg_box(S, g),
        }
    return out, EXIT_OK


def cmd_aut(args) -> tuple[dict, int]:
    S = load_semigroup(args.semigroup)
    G = automorphism_group(S, node_limit=args.node_limit)
    out = {"order": G.order, "generators": [list(p) for p in G.generators()]}
    if args.all:
        out["elements"] = [list(p) for p in G.elements]
    return out, EXIT_OK


def cmd_orbits(args) -> tuple[dict, int]:
    S = load_semigroup(args.semigroup)
    G = automorphism_group(S)
    if args.fix:
        xs = _ints(args.fix)
        _check_points(S, xs)
        G = pointwise_stabilizer(G, xs)
    if args.setwise:
        sets = read_json(args.setwise)
        for A in sets:
            _check_points(S, A)
        G = setwise_stabilizer(G, sets)
    if args.classes:
        tau_ = load_partition(args.classes, S.order)
        return {"n": args.n, "group": G.description, "group_order": G.order,
                "class_orbit_count": class_orbit_count(S, tau_, args.n, G)}, EXIT_OK
    domain = None
    if args.domain:
        domain = _ints(args.domain)
        _check_points(S, domain)
    rep = orbit_count(S, args.n, G, domain=domain, max_tuples=args.max_tuples)
    return rep.to_dict(), EXIT_OK


def _congruence_out(S: FiniteSemigroup, name: str, rho) -> dict:
    Q = quotient(S, rho)
    return {"congruence": name, "blocks": list(rho.blocks), "classes": rho.classes(),
            "quotient": Q.to_dict()}


def cmd_congruence(args) -> tuple[dict, int]:
    S = load_semigroup(args.semigroup)
    if args.sigma:
        return _congruence_out(S, "sigma", least_group_congruence(S)), EXIT_OK
    if args.mu:
        return _congruence_out(S, "mu", max_idempotent_separating(S)), EXIT_OK
    if args.generated:
        pairs = [tuple(p) for p in read_json(args.generated)]
        if any(len(p) != 2 for p in pairs):
            raise InputError("pairs must be a list of [a, b]")
        _check_points(S, [x for p in pairs for x in p])
        return _congruence_out(S, "generated", congruence_generated_by(S, pairs)), EXIT_OK
    if args.rees:
        ideal = read_json(args.rees)
        _check_points(S, ideal)
        return _congruence_out(S, "rees", rees_congruence(S, ideal)), EXIT_OK
    if args.flat:
        return _congruence_out(S, "flat", largest_congruence_within(
            S, load_partition(args.flat, S.order))), EXIT_OK
    raise InputError("choose one of --sigma, --mu, --generated, --rees, --flat")


def cmd_decompose(args) -> tuple[dict, int]:
    S = load_semigroup(args.semigroup)
    d = greatest_zero_direct_decomposition(S)
    return {
        "summands": d.to_lists(),
        "indecomposable": [is_zero_directly_indecomposable(S.restrict(A)) for A in d.summands],
        "primitive": is_primitive(S),
    }, EXIT_OK


def cmd_family(args) -> tuple[object, int]:
    spec = FamilySpec(args.family, _range(args.range), args.statistic, args.n, args.base)
    report = run_family(spec)
    if args.format == "table":
        return render_table(report), EXIT_OK
    return report, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    report = verify_suite(args.suite, args.seed)
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semicat", description="Finite semigroup structure and orbit analysis.")
    sub = p.add_subparsers(dest="command", required=True)
    src_help = "semigroup JSON file, recipe file, or builtin:NAME"

    c = sub.add_parser("construct", help="build a semigroup from a recipe")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--recipe")
    g.add_argument("--builtin")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="structural report")
    a.add_argument("semigroup", help=src_help)
    a.add_argument("--green", action="store_true", help="include Green's relations and egg-box")
    a.set_defaults(func=cmd_analyze)

    o = sub.add_parser("orbits", help="orbit count on n-tuples")
    o.add_argument("semigroup", help=src_help)
    o.add_argument("-n", type=int, required=True)
    o.add_argument("--fix", help="comma-separated elements fixed pointwise")
    o.add_argument("--setwise", help="JSON list of subsets fixed setwise")
    o.add_argument("--classes", help="JSON partition; count orbits on tuples of classes")
    o.add_argument("--domain", help="comma-separated subset; count orbits meeting domain^n")
    o.add_argument("--max-tuples", type=int, default=10_000_000)
    o.set_defaults(func=cmd_orbits)

    u = sub.add_parser("aut", help="automorphism group")
    u.add_argument("semigroup", help=src_help)
    u.add_argument("--all", action="store_true", help="list every automorphism")
    u.add_argument("--node-limit", type=int, default=2_000_000)
    u.set_defaults(func=cmd_aut)

    k = sub.add_parser("congruence", help="named and generated congruences")
    k.add_argument("semigroup", help=src_help)
    kg = k.add_mutually_exclusive_group(required=True)
    kg.add_argument("--sigma", action="store_true")
    kg.add_argument("--mu", action="store_true")
    kg.add_argument("--generated", metavar="PAIRS_JSON")
    kg.add_argument("--rees", metavar="IDEAL_JSON")
    kg.add_argument("--flat", metavar="PARTITION_JSON")
    k.set_defaults(func=cmd_congruence)

    d = sub.add_parser("decompose", help="greatest 0-direct decomposition")
    d.add_argument("semigroup", help=src_help)
    d.set_defaults(func=cmd_decompose)

    f = sub.add_parser("family", help="statistic growth across a family")
    f.add_argument("family", choices=sorted(FAMILIES))
    f.add_argument("--range", default="1..6", help="e.g. 1..8 or 1,2,4")
    f.add_argument("--statistic", choices=STATISTICS, default="tau")
    f.add_argument("-n", type=int, default=1, help="tuple length for orbit_count")
    f.add_argument("--base", help="built-in group or semigroup for brandt / direct_power")
    f.add_argument("--format", choices=("json", "table"), default="json")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="run a theorem-check battery")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except (InputError, RecipeError, SemigroupError, KeyError, ValueError, TypeError, OSError,
            json.JSONDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"semicat: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out if isinstance(out, str) else dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
