"""Evaluation-set builders, one module per construction family."""

from __future__ import annotations

from nmds_selfdual._codes import DEFAULT_SEARCH_BUDGET, EvalSet
from nmds_selfdual._exceptions import InvalidParams
from nmds_selfdual._field import DEFAULT_TABLE_THRESHOLD, GaloisField
from nmds_selfdual.constructions._base import EvalSetBuilder
from nmds_selfdual.constructions._cosets import CosetsBuilder, build_cosets
from nmds_selfdual.constructions._cyclic import CyclicBuilder, build_cyclic
from nmds_selfdual.constructions._mixed_cosets import MixedCosetsBuilder, build_mixed_cosets
from nmds_selfdual.constructions._scan import REFERENCE_COUNTS, scan_lengths
from nmds_selfdual.constructions._subspace import SubspaceBuilder, build_subspace_cosets
from nmds_selfdual.constructions._trace import TraceBuilder, build_trace_fibers
from nmds_selfdual.types._documents import Recipe

_REQUIRED: dict[str, tuple[str, ...]] = {
    "cyclic": ("q", "n"),
    "cosets": ("r", "e", "f", "t"),
    "mixed-cosets": ("r", "s", "t"),
    "subspace": ("q", "r", "ell", "t"),
    "trace": ("p", "m", "t", "s"),
}


def _param(recipe: Recipe, name: str) -> int:
    try:
        return recipe.params[name]
    except KeyError:
        raise InvalidParams(f"{recipe.family} recipe needs --{name}") from None


def validate_recipe(recipe: Recipe) -> None:
    """Check a recipe's parameters without building any field.

    Raises:
        InvalidParams: If a parameter is missing or out of range.
    """
    for name in _REQUIRED[recipe.family]:
        _param(recipe, name)
    params = recipe.params
    if recipe.family == "cyclic":
        CyclicBuilder.validate(params["q"], params["n"])
    elif recipe.family == "cosets":
        CosetsBuilder.validate(params["r"] ** 2, params["e"], params["f"], params["t"], recipe.indices)
    elif recipe.family == "mixed-cosets":
        MixedCosetsBuilder.validate(params["r"], params["s"], params["t"])
    elif recipe.family == "subspace":
        SubspaceBuilder.validate(params["q"], params["r"], params["ell"], params["t"])
    else:
        TraceBuilder.validate(params["p"], params["m"], params["t"], params["s"])
    if recipe.indices is not None and recipe.family != "cosets":
        raise InvalidParams("coset indices only apply to the cosets family")


def field_order(recipe: Recipe) -> int:
    """The field order a recipe lives over."""
    if recipe.family in ("cyclic", "subspace"):
        return _param(recipe, "q")
    if recipe.family == "trace":
        return (_param(recipe, "p") ** _param(recipe, "m")) ** 2
    return _param(recipe, "r") ** 2


def field_for_recipe(recipe: Recipe, *, table_threshold: int = DEFAULT_TABLE_THRESHOLD) -> GaloisField:
    """Build the field for a recipe, honouring its modulus override."""
    return GaloisField.from_order(field_order(recipe), recipe.modulus, table_threshold=table_threshold)


def build_from_recipe(
    field: GaloisField, recipe: Recipe, *, search_budget: int = DEFAULT_SEARCH_BUDGET
) -> EvalSet:
    """Run the builder a recipe names.

    The returned set carries a recipe with the builder's normalised
    parameters plus the caller's modulus override.
    """
    validate_recipe(recipe)
    if field.q != field_order(recipe):
        raise InvalidParams(f"{recipe.family} recipe lives over F_{field_order(recipe)}, not F_{field.q}")
    params = recipe.params
    if recipe.family == "cyclic":
        eval_set = build_cyclic(field, params["n"])
    elif recipe.family == "cosets":
        eval_set = build_cosets(field, params["e"], params["f"], params["t"], recipe.indices)
    elif recipe.family == "mixed-cosets":
        eval_set = build_mixed_cosets(field, params["s"], params["t"])
    elif recipe.family == "subspace":
        eval_set = SubspaceBuilder(field, search_budget=search_budget).build(params["r"], params["ell"], params["t"])
    else:
        eval_set = build_trace_fibers(field, params["t"], params["s"])
    if recipe.modulus is not None and eval_set.recipe is not None:
        stamped = eval_set.recipe.model_copy(update={"modulus": recipe.modulus})
        return eval_set.model_copy(update={"recipe": stamped})._bind(field)
    return eval_set


__all__ = [
    "REFERENCE_COUNTS",
    "CosetsBuilder",
    "CyclicBuilder",
    "EvalSetBuilder",
    "MixedCosetsBuilder",
    "SubspaceBuilder",
    "TraceBuilder",
    "build_cosets",
    "build_cyclic",
    "build_from_recipe",
    "build_mixed_cosets",
    "build_subspace_cosets",
    "build_trace_fibers",
    "field_for_recipe",
    "field_order",
    "scan_lengths",
    "validate_recipe",
]
