"""Integration ranges for the Euler angles.

Quotient ranges parametrize SU(N)/Z_N: lambda_3 angles run over [0, pi],
plane angles over [0, pi/2] and the Cartan angle of lambda_{a^2-1} over
[0, pi*sqrt(2/(a(a-1)))].

Covering ranges enlarge a subset of these by an integer factor: inside each
block of A(k, j(m)) factors the first lambda_3 angle is kept and every later
one is doubled, and the Cartan angle of level a is multiplied by a.  The
product of the factors is 2^((N-1)(N-2)/2) * N!, the center/subgroup
multiplicity that relates the two volumes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .euler_param import CARTAN, LAMBDA3, PLANE, factor_sequence
from .lie_algebra import _check_n

QUOTIENT = "quotient"
COVERING = "covering"


def cartan_range(a: int) -> float:
    """Upper quotient bound pi*sqrt(2/(a(a-1))) for the Cartan angle of lambda_{a^2-1}."""
    return np.pi * np.sqrt(2.0 / (a * (a - 1)))


@dataclass(frozen=True)
class RangeSet:
    """Per-parameter bounds; ``bounds[l - 1]`` is (lo, hi) for alpha_l."""

    n: int
    mode: str
    bounds: np.ndarray

    @property
    def lo(self) -> np.ndarray:
        return self.bounds[:, 0]

    @property
    def hi(self) -> np.ndarray:
        return self.bounds[:, 1]

    def widths(self) -> np.ndarray:
        return self.bounds[:, 1] - self.bounds[:, 0]

    def box_volume(self) -> float:
        return float(np.prod(self.widths()))

    def contains(self, alpha) -> bool:
        a = np.asarray(alpha, dtype=float)
        return bool(np.all((a >= self.lo) & (a <= self.hi)))

    def as_records(self) -> list[dict]:
        return [{"param": l + 1, "lo": float(lo), "hi": float(hi)} for l, (lo, hi) in enumerate(self.bounds)]


def quotient_ranges(n: int) -> RangeSet:
    _check_n(n)
    seq = factor_sequence(n)
    bounds = np.zeros((len(seq), 2))
    for f in seq:
        if f.kind == PLANE:
            hi = np.pi / 2
        elif f.kind == LAMBDA3:
            hi = np.pi
        else:
            hi = cartan_range(f.level)
        bounds[f.param_index - 1, 1] = hi
    return RangeSet(n=n, mode=QUOTIENT, bounds=bounds)


def covering_multipliers(n: int) -> list[int]:
    """Integer factor by which each quotient bound is stretched for the covering."""
    _check_n(n)
    seq = factor_sequence(n)
    mult = [1] * len(seq)
    seen_blocks = set()
    for f in seq:
        if f.kind == LAMBDA3:
            if f.block in seen_blocks:
                mult[f.param_index - 1] = 2
            seen_blocks.add(f.block)
        elif f.kind == CARTAN:
            mult[f.param_index - 1] = f.level
    return mult


def covering_ranges(n: int) -> RangeSet:
    q = quotient_ranges(n)
    bounds = q.bounds.copy()
    bounds[:, 1] *= np.asarray(covering_multipliers(n), dtype=float)
    return RangeSet(n=n, mode=COVERING, bounds=bounds)


def ranges(n: int, mode: str) -> RangeSet:
    if mode == QUOTIENT:
        return quotient_ranges(n)
    if mode == COVERING:
        return covering_ranges(n)
    raise ValueError(f"unknown range mode {mode!r}; expected 'quotient' or 'covering'")
