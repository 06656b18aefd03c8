"""``sun-euler`` command line: every operation as JSON on stdout.

Exit codes: 0 ok, 1 verification or consistency failure, 2 usage error.
Errors are reported on stderr as {"status": "error", "code", "message"}.
Set SUN_EULER_LOG (e.g. DEBUG) to change the log level.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import fixtures
from .density_matrix import DensitySpec, cartan_indices, density, rho_coefficients, rho_diagonal
from .errors import ConsistencyError
from .euler_param import factor_sequence, unitary
from .group_volume import MARINOV, MIN_MC_SAMPLES, QUADRATURE, volume
from .haar_measure import check_oracle, kernel
from .haar_sampler import UNIFORM, HaarSampler, SamplerConfig
from .lie_algebra import make_generators
from .param_ranges import COVERING, QUOTIENT, ranges

log = logging.getLogger("sun_euler")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Commands whose payload is a list printed as JSON lines.
LINE_COMMANDS = ("generators", "sample")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandResult:
    status: str
    payload: Any
    elapsed_ms: float = 0.0
    command: str | None = None
    exit_code: int = EXIT_OK
    error: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _matrix(m: np.ndarray) -> dict:
    return {"re": np.real(m).tolist(), "im": np.imag(m).tolist()}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sun-euler", description="Euler angle parametrization of SU(N).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--n", type=int, required=name != "verify")
        return s

    cmd("generators", "generalized Gell-Mann matrices, one JSON line each")
    cmd("sequence", "ordered factor table")
    s = cmd("unitary", "U(alpha)")
    s.add_argument("--alpha", type=_floats, required=True)
    s = cmd("kernel", "Haar kernel at alpha, or the determinant oracle check")
    s.add_argument("--alpha", type=_floats)
    s.add_argument("--check-oracle", action="store_true")
    s.add_argument("--points", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s = cmd("volume", "group volume")
    s.add_argument("--method", choices=[MARINOV, QUADRATURE, "mc"], default=MARINOV)
    s.add_argument("--samples", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s = cmd("ranges", "parameter ranges")
    s.add_argument("--mode", choices=[QUOTIENT, COVERING], default=QUOTIENT)
    s = cmd("rho", "density matrix U rho_d U^dagger")
    s.add_argument("--theta", type=_floats, required=True)
    s.add_argument("--alpha", type=_floats, required=True)
    s = cmd("sample", "Haar-random unitaries or density matrices, one JSON line each")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--what", choices=["unitary", "rho"], default="unitary")
    s.add_argument("--mode", choices=[QUOTIENT, COVERING], default=COVERING)
    s = cmd("verify", "replay the published reference fixtures")
    s.add_argument("--suite", choices=["paper"], default="paper")
    return p


def _generators(a):
    gs = make_generators(a.n)
    return [{"n": a.n, "index": i, **_matrix(g)} for i, g in enumerate(gs, start=1)]


def _sequence(a):
    return [{"generator": f.generator_index, "param": f.param_index, "kind": f.kind} for f in factor_sequence(a.n)]


def _unitary(a):
    return {"n": a.n, "matrix": _matrix(unitary(a.n, a.alpha))}


def _kernel(a):
    if a.check_oracle:
        if a.points < 1:
            raise UsageError("--points must be positive")
        return check_oracle(a.n, a.points, a.seed)
    if a.alpha is None:
        raise UsageError("kernel needs --alpha or --check-oracle")
    return kernel(a.n, a.alpha)


def _volume(a):
    if a.method == "mc" and a.samples < MIN_MC_SAMPLES:
        raise UsageError(f"--samples must be at least {MIN_MC_SAMPLES}")
    res = volume(a.n, a.method, samples=a.samples, seed=a.seed, workers=a.workers)
    return res.to_dict()


def _ranges(a):
    return ranges(a.n, a.mode).as_records()


def _rho(a):
    spec = DensitySpec(n=a.n, theta=np.asarray(a.theta), alpha=np.asarray(a.alpha))
    rho = density(spec)
    coeffs = rho_coefficients(a.n, spec.theta)
    return {
        "n": a.n,
        "matrix": _matrix(rho),
        "eigenvalues": rho_diagonal(a.n, spec.theta).eigenvalues.tolist(),
        "coefficients": [{"generator": g, "value": float(v)} for g, v in zip(cartan_indices(a.n), coeffs)],
    }


def _sample(a):
    if a.count < 1:
        raise UsageError("--count must be positive")
    s = HaarSampler(SamplerConfig(n=a.n, seed=a.seed, mode=a.mode))
    mats = s.unitaries(a.count) if a.what == "unitary" else s.densities(a.count, UNIFORM)
    return [{"n": a.n, "index": i, "what": a.what, **_matrix(m)} for i, m in enumerate(mats)]


def _verify(a):
    results = fixtures.run_reference_suite()
    counts: dict[str, int] = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    return {
        "suite": a.suite,
        "ok": counts.get(fixtures.FAIL, 0) == 0,
        "counts": counts,
        "results": [r.to_dict() for r in results],
    }


HANDLERS = {
    "generators": _generators,
    "sequence": _sequence,
    "unitary": _unitary,
    "kernel": _kernel,
    "volume": _volume,
    "ranges": _ranges,
    "rho": _rho,
    "sample": _sample,
    "verify": _verify,
}


def _error(code: str, message: str, exit_code: int, started: float, command=None) -> CommandResult:
    err = {"status": "error", "code": code, "message": message}
    return CommandResult("error", err, (time.perf_counter() - started) * 1e3, command, exit_code, err)


def run(argv: list[str] | None = None) -> CommandResult:
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE, started)
    try:
        payload = HANDLERS[args.command](args)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE, started, args.command)
    except ConsistencyError as exc:
        return _error("consistency", str(exc), EXIT_FAILURE, started, args.command)
    except ValueError as exc:
        # InvalidDimensionError and DomainError are ValueErrors: bad input values.
        return _error("invalid_argument", str(exc), EXIT_USAGE, started, args.command)
    elapsed = (time.perf_counter() - started) * 1e3
    log.debug("%s finished in %.1f ms", args.command, elapsed)
    code = EXIT_OK
    if args.command == "verify" and not payload["ok"]:
        code = EXIT_FAILURE
    return CommandResult("ok", payload, elapsed, args.command, code)


def render(result: CommandResult) -> str:
    if result.command in LINE_COMMANDS and result.ok:
        return "\n".join(json.dumps(rec) for rec in result.payload)
    return json.dumps(result.payload)


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("SUN_EULER_LOG", "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        level = "WARNING"
    logging.basicConfig(level=level, stream=sys.stderr)
    result = run(argv)
    if result.ok:
        print(render(result))
    else:
        print(render(result), file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
