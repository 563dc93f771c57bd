import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import spencerlab

ROOT = pathlib.Path(os.environ.get("SPENCERLAB_ROOT", pathlib.Path(__file__).resolve().parents[2]))
SCENES = ROOT / "scenes"
SCHEMA = json.loads((ROOT / "schema" / "output.schema.json").read_text())
CLI = os.environ.get("SPENCERLAB_CLI")


def test_scene_loading():
    cusp = spencerlab.load_scene(SCENES / "cusp.scene")
    assert cusp.name == "cusp"
    assert cusp.variables == ["x", "y"]
    assert cusp.weights == [2, 3]
    assert cusp.ideal == ["x^3 - y^2"]
    again = spencerlab.parse_scene(cusp.format())
    assert again.ideal == cusp.ideal


def test_milnor_example():
    out = spencerlab.milnor(SCENES / "cusp.scene")
    assert (out["mu"], out["tau"], out["basis"]) == (2, 2, ["1", "x"])


def test_homology_tables():
    assert spencerlab.derham(SCENES / "a2.scene") == {"0": {"0": 1}}
    assert spencerlab.derham(SCENES / "cusp.scene", degree_bound=10) == {"0": {"0": 1}}
    assert spencerlab.koszul(SCENES / "a2.scene", ["x", "x"])["1"] == {"1": 1, "2": 1, "3": 1, "4": 1,
                                                                        "5": 1, "6": 1, "7": 1, "8": 1}
    out = spencerlab.run("filtered-spencer", spencerlab.affine_space(2), p=3)
    assert out["tables"] == {} and out["resolution"]


def test_completion_and_certificate():
    out = spencerlab.complete(SCENES / "cusp.scene", degree_bound=10)
    assert out["tables"] == {"0": {"0": 1}}
    assert out["limits"]["all_stabilized"]
    cert = spencerlab.run("euler-certify", SCENES / "e6.scene", degree_bound=12, complex="jet", r=1)
    assert cert["certificate"]["valid"] and cert["cartan"]["holds"]


def test_errors():
    with pytest.raises(spencerlab.InputError):
        spencerlab.milnor(SCENES / "a2.scene")
    with pytest.raises(ValueError):
        spencerlab.parse_scene("[ring]\nvariables = x, y\n[ideal]\nx + y^2\n")
    with pytest.raises(spencerlab.InputError):
        spencerlab.run("derham", SCENES / "a1.scene", bogus=1)


@pytest.mark.parametrize("command,extra", [
    ("derham", {}), ("jet", {"r": 1}), ("koszul", {}), ("filtered-spencer", {"p": 2}),
    ("kashiwara", {"p": 2}), ("euler-certify", {}), ("smooth", {}), ("spencer-h0", {}),
    ("complete", {"r_max": 3}), ("derived-complete", {"r_max": 3}),
])
def test_outputs_validate_against_schema(command, extra):
    for scene in ("cusp", "origin_a1", "a2"):
        out = spencerlab.run(command, SCENES / f"{scene}.scene", degree_bound=5, **extra)
        jsonschema.validate(out, SCHEMA)


@pytest.mark.skipif(not CLI, reason="CLI path not provided")
def test_cli_matches_module_and_is_deterministic():
    args = [CLI, "independence", str(SCENES / "cusp.scene"), "--extended-scene", str(SCENES / "cusp3.scene"),
            "--degree-bound", "6"]
    first = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    assert first == second
    out = json.loads(first)
    jsonschema.validate(out, SCHEMA)
    assert out["equal"]
    module = spencerlab.run("independence", SCENES / "cusp.scene", degree_bound=6,
                            extended_scene=str(SCENES / "cusp3.scene"))
    assert json.dumps(module, indent=2) == first.rstrip("\n")


@pytest.mark.skipif(not CLI, reason="CLI path not provided")
def test_cli_exit_codes():
    bad = subprocess.run([CLI, "milnor", str(SCENES / "a2.scene")], capture_output=True, text=True)
    assert bad.returncode == 1 and "hypersurface" in bad.stderr
    env = dict(os.environ, SPENCERLAB_BUDGET="1")
    budget = subprocess.run([CLI, "smooth", str(SCENES / "quadric_cone.scene")], capture_output=True, env=env)
    assert budget.returncode == 2
