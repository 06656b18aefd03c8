import json
import math
import subprocess
import sys

import jsonschema
import numpy as np
import pytest

from sun_euler.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main, render, run
from sun_euler.schemas import SCHEMAS


def ok(argv):
    res = run(argv)
    assert res.ok, res.payload
    assert res.exit_code == EXIT_OK
    assert res.elapsed_ms >= 0
    return res.payload


def validate(name, payload):
    if name in ("generators", "sample"):
        for rec in payload:
            jsonschema.validate(rec, SCHEMAS[name])
    else:
        jsonschema.validate(payload, SCHEMAS[name])


def test_schemas_are_valid():
    for schema in SCHEMAS.values():
        jsonschema.Draft202012Validator.check_schema(schema)


def test_volume_marinov():
    p = ok(["volume", "--n", "3", "--method", "marinov"])
    validate("volume", p)
    assert p["value"] == pytest.approx(math.sqrt(3) * math.pi**5, rel=1e-12)
    assert p["method"] == "marinov" and p["stderr"] == 0.0


def test_volume_quadrature_and_mc():
    validate("volume", ok(["volume", "--n", "4", "--method", "quadrature"]))
    p = ok(["volume", "--n", "2", "--method", "mc", "--samples", "20000", "--seed", "3", "--workers", "2"])
    validate("volume", p)
    assert p["samples"] == 20000 and p["seed"] == 3 and p["stderr"] > 0


def test_unitary_identity():
    p = ok(["unitary", "--n", "2", "--alpha", "0,0,0"])
    validate("unitary", p)
    assert p["matrix"]["re"] == [[1.0, 0.0], [0.0, 1.0]]
    assert p["matrix"]["im"] == [[0.0, 0.0], [0.0, 0.0]]


def test_unitary_negative_angles():
    p = ok(["unitary", "--n", "2", "--alpha=-0.5,0.2,0.1"])
    m = np.array(p["matrix"]["re"]) + 1j * np.array(p["matrix"]["im"])
    assert abs(np.linalg.det(m) - 1) < 1e-12


def test_sequence():
    p = ok(["sequence", "--n", "3"])
    validate("sequence", p)
    assert [(r["generator"], r["param"]) for r in p] == [(3, 1), (2, 2), (3, 3), (5, 4), (3, 5), (2, 6), (3, 7), (8, 8)]
    assert p[-1]["kind"] == "cartan" and p[1]["kind"] == "plane"


def test_generators():
    p = ok(["generators", "--n", "3"])
    validate("generators", p)
    assert len(p) == 8 and p[4]["im"][0][2] == -1.0


def test_kernel_value_and_oracle():
    p = ok(["kernel", "--n", "2", "--alpha", f"0,{math.pi / 4},0"])
    validate("kernel", p)
    assert p == pytest.approx(1.0)
    rep = ok(["kernel", "--n", "3", "--check-oracle", "--points", "5", "--seed", "2"])
    validate("kernel_check", rep)
    assert rep["max_relative_deviation"] < 1e-8


def test_ranges():
    p = ok(["ranges", "--n", "2", "--mode", "covering"])
    validate("ranges", p)
    assert [r["hi"] for r in p] == pytest.approx([math.pi, math.pi / 2, 2 * math.pi])
    validate("ranges", ok(["ranges", "--n", "5", "--mode", "quotient"]))


def test_rho():
    p = ok(["rho", "--n", "3", "--theta", "1.0,1.2", "--alpha", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8"])
    validate("rho", p)
    assert sum(p["eigenvalues"]) == pytest.approx(1.0)
    assert [c["generator"] for c in p["coefficients"]] == [3, 8]


@pytest.mark.parametrize("what", ["unitary", "rho"])
def test_sample(what):
    p = ok(["sample", "--n", "3", "--count", "4", "--seed", "5", "--what", what])
    validate("sample", p)
    assert len(p) == 4 and all(r["what"] == what for r in p)


def test_verify():
    p = ok(["verify", "--suite", "paper"])
    validate("verify", p)
    assert p["ok"]
    statuses = {r["name"]: r["status"] for r in p["results"]}
    assert statuses["volume_su8"] == "erratum"
    assert statuses["rho_coefficients_su9"] == "erratum"
    assert "fail" not in statuses.values()


def test_verify_failure_exit_code(monkeypatch):
    from sun_euler import fixtures

    monkeypatch.setitem(fixtures.PRINTED_VOLUMES, 3, 1.0)
    res = run(["verify"])
    assert res.ok and not res.payload["ok"]
    assert res.exit_code == EXIT_FAILURE


@pytest.mark.parametrize(
    "argv,code",
    [
        (["frobnicate"], "usage"),
        (["volume", "--n", "3", "--bogus"], "usage"),
        ([], "usage"),
        (["volume", "--n", "3", "--method", "simpson"], "usage"),
        (["unitary", "--n", "2", "--alpha", "a,b"], "usage"),
        (["kernel", "--n", "3"], "usage"),
        (["volume", "--n", "3", "--method", "mc", "--samples", "10"], "usage"),
        (["sample", "--n", "3", "--count", "0"], "usage"),
        (["volume", "--n", "1"], "invalid_argument"),
        (["unitary", "--n", "3", "--alpha", "0,0"], "invalid_argument"),
        (["rho", "--n", "2", "--theta", "0.1", "--alpha", "0,0,0"], "invalid_argument"),
    ],
)
def test_usage_errors(argv, code):
    res = run(argv)
    assert not res.ok
    assert res.exit_code == EXIT_USAGE
    jsonschema.validate(res.payload, SCHEMAS["error"])
    assert res.payload["code"] == code and res.payload["message"]


def test_main_prints_json_lines(capsys):
    assert main(["sample", "--n", "2", "--count", "3", "--seed", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3 and all(json.loads(x)["n"] == 2 for x in lines)
    assert main(["nope"]) == EXIT_USAGE
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["status"] == "error"


def test_render_single_document():
    res = run(["sequence", "--n", "2"])
    assert json.loads(render(res)) == res.payload


def _console(args, env_level=None):
    env = None
    if env_level is not None:
        import os

        env = dict(os.environ, SUN_EULER_LOG=env_level)
    return subprocess.run([sys.executable, "-m", "sun_euler.cli", *args], capture_output=True, env=env, check=False)


@pytest.mark.parametrize(
    "args",
    [
        ["sample", "--n", "3", "--count", "5", "--seed", "42"],
        ["sample", "--n", "2", "--count", "3", "--seed", "7", "--what", "rho"],
        ["volume", "--n", "3", "--method", "mc", "--samples", "20000", "--seed", "9", "--workers", "3"],
        ["kernel", "--n", "3", "--check-oracle", "--points", "3", "--seed", "4"],
    ],
)
def test_seeded_output_byte_identical(args):
    first, second = _console(args), _console(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout and first.stdout


def test_log_level_env():
    proc = _console(["sequence", "--n", "2"], env_level="DEBUG")
    assert proc.returncode == 0 and b"sequence finished" in proc.stderr
    assert _console(["sequence", "--n", "2"], env_level="LOUD").returncode == 0


def test_exit_codes_from_process():
    assert _console(["frobnicate"]).returncode == 2
    assert _console(["verify", "--suite", "paper"]).returncode == 0
