"""Exact homology of Koszul, de Rham, jet and Spencer complexes of weighted cones."""

import json
from os import PathLike
from typing import Any, Union

from ._core import (
    BudgetExceeded,
    InputError,
    InvariantViolation,
    Scene,
    affine_space,
    commands,
    load_scene,
    parse_scene,
    run_json,
)

__all__ = [
    "BudgetExceeded", "InputError", "InvariantViolation", "Scene",
    "affine_space", "commands", "load_scene", "parse_scene", "run", "run_json",
    "derham", "koszul", "milnor", "complete",
]

SceneLike = Union[Scene, str, PathLike]


def _scene(s: SceneLike) -> Scene:
    return s if isinstance(s, Scene) else load_scene(s)


def run(command: str, scene: SceneLike, **options: Any) -> dict:
    """Same result as the CLI's JSON output, as a dict."""
    return json.loads(run_json(command, _scene(scene), **options))


def derham(scene: SceneLike, degree_bound: int = 8) -> dict:
    return run("derham", scene, degree_bound=degree_bound)["tables"]


def koszul(scene: SceneLike, elements=None, degree_bound: int = 8) -> dict:
    opts = {"degree_bound": degree_bound}
    if elements:
        opts["elements"] = list(elements)
    return run("koszul", scene, **opts)["tables"]


def milnor(scene: SceneLike) -> dict:
    return run("milnor", scene)


def complete(scene: SceneLike, degree_bound: int = 8, along: str = "self", r_max: int = 0) -> dict:
    return run("complete", scene, degree_bound=degree_bound, along=along, r_max=r_max)
