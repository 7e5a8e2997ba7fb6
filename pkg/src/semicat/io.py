"""JSON input and output: semigroup files, partitions and construction recipes."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from . import catalog
from .constructions import (boolean_zs, brandt, chain_of_semigroups, chain_semilattice,
                            cyclic_group, direct_product, example_c, klein_four, left_zero_band,
                            null_semigroup, right_zero_band, symmetric_group, trivial_semigroup,
                            zero_direct_union)
from .core import FiniteSemigroup, adjoin_identity, adjoin_zero
from .mcalister import FinitePoset, McAlisterTriple, p_semigroup
from .partition import Partition
from .semidirect import SemidirectData, semidirect_product

Recipe = Union[str, dict]


class RecipeError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def read_json(path: Union[str, Path]) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_semigroup(source: str) -> FiniteSemigroup:
    """A JSON semigroup file, a recipe file, or ``builtin:NAME``."""
    if source.startswith("builtin:"):
        return catalog.semigroup(source[len("builtin:"):])
    data = read_json(source)
    return build(data)


def save_semigroup(S: FiniteSemigroup, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(S.to_dict()), encoding="utf-8")


def load_partition(path: Union[str, Path], size: int) -> Partition:
    """Either a block-id array or a list of classes (unlisted points are singletons)."""
    data = read_json(path)
    if isinstance(data, dict):
        data = data.get("blocks", data.get("classes"))
    if not isinstance(data, list):
        raise RecipeError("partition must be a list")
    if data and all(isinstance(x, int) for x in data):
        if len(data) != size:
            raise RecipeError(f"block array has length {len(data)}, expected {size}")
        return Partition(data)
    return Partition.from_classes(data, size)


def _int(args: dict, key: str, default=None) -> int:
    v = args.get(key, default)
    if not isinstance(v, int) or isinstance(v, bool):
        raise RecipeError(f"argument {key!r} must be an integer")
    return v


def _list(args: dict, key: str) -> list:
    v = args.get(key)
    if not isinstance(v, list) or not v:
        raise RecipeError(f"argument {key!r} must be a non-empty list")
    return v


def build_triple(args: dict) -> McAlisterTriple:
    if "builtin" in args:
        return catalog.triple(args["builtin"])
    G = build(args["group"])
    size = _int(args, "size")
    X = FinitePoset.from_covers(size, [tuple(p) for p in args.get("order", [])], args.get("names"))
    return McAlisterTriple.make(G, X, args["Y"], args["action"])


def build_semidirect(args: dict) -> SemidirectData:
    if "builtin" in args:
        name = args["builtin"]
        if name not in catalog.SEMIDIRECT:
            raise RecipeError(f"unknown built-in semidirect data {name!r}")
        return catalog.SEMIDIRECT[name]()
    return SemidirectData.make(build(args["S"]), build(args["T"]), args["action"])


def build(recipe: Recipe) -> FiniteSemigroup:
    """Evaluate a recipe; nested recipes are allowed wherever a semigroup is expected."""
    if isinstance(recipe, str):
        return catalog.semigroup(recipe)
    if not isinstance(recipe, dict):
        raise RecipeError("a recipe is a built-in name or an object")
    if "table" in recipe:
        return FiniteSemigroup.from_dict(recipe)
    kind = recipe.get("construct")
    args = recipe.get("args", {})
    if kind == "builtin":
        return catalog.semigroup(args["name"])
    if kind == "null":
        return null_semigroup(_int(args, "m"))
    if kind == "left_zero":
        return left_zero_band(_int(args, "m"))
    if kind == "right_zero":
        return right_zero_band(_int(args, "m"))
    if kind == "chain":
        if "components" in args:
            return chain_of_semigroups([build(r) for r in _list(args, "components")])
        return chain_semilattice(_int(args, "m"))
    if kind == "cyclic":
        return cyclic_group(_int(args, "n"))
    if kind == "symmetric":
        return symmetric_group(_int(args, "n"))
    if kind == "klein_four":
        return klein_four()
    if kind == "trivial":
        return trivial_semigroup()
    if kind == "brandt":
        return brandt(build(args.get("group", "trivial")), _int(args, "m"))
    if kind == "product":
        return direct_product([build(r) for r in _list(args, "factors")])
    if kind == "zero_union":
        return zero_direct_union([build(r) for r in _list(args, "factors")])
    if kind == "adjoin_zero":
        return adjoin_zero(build(args["of"]))
    if kind == "adjoin_identity":
        return adjoin_identity(build(args["of"]))
    if kind == "semidirect":
        return semidirect_product(build_semidirect(args))
    if kind == "boolean_zs":
        return boolean_zs(_int(args, "m"))
    if kind == "example_c":
        return example_c(_int(args, "m"))
    if kind == "p_semigroup":
        return p_semigroup(build_triple(args))
    raise RecipeError(f"unknown construction {kind!r}")
