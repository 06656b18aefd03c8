"""Haar-random SU(N) elements and density matrices from the Euler coordinates.

The Haar density is a product of one-variable factors, so each Euler angle
can be drawn independently.  Flat (lambda_3 and Cartan) angles are uniform on
their range; each plane angle is drawn by inverting the CDF of its kernel
factor:

    k = 2:        sin(2a)              ->  a = arcsin(sqrt(u))
    2 < k < m:    cos(a)^(2k-3) sin(a) ->  a = arccos((1-u)^(1/(2k-2)))
    k = m > 2:    cos(a) sin(a)^(2m-3) ->  a = arcsin(u^(1/(2m-2)))

Densities built with ``theta_mode="uniform"`` draw theta uniformly over its
ordered box.  That is a convenience distribution, not the Haar-induced or
Hilbert-Schmidt measure on density matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density_matrix import rho_diagonal, theta_ranges
from .euler_param import unitary_batch
from .haar_measure import kernel_terms
from .lie_algebra import _check_n, n_params
from .param_ranges import COVERING, QUOTIENT, ranges

ENDPOINTS = "endpoints"
UNIFORM = "uniform"


def plane_inverse_cdf(k: int, m: int, u):
    """Angle in [0, pi/2] whose kernel-factor CDF equals u."""
    u = np.asarray(u, dtype=float)
    if k == 2:
        return np.arcsin(np.sqrt(u))
    if k < m:
        return np.arccos((1.0 - u) ** (1.0 / (2 * k - 2)))
    return np.arcsin(u ** (1.0 / (2 * m - 2)))


def plane_cdf(k: int, m: int, a):
    """Closed-form CDF of the normalized kernel factor on [0, pi/2]."""
    a = np.asarray(a, dtype=float)
    if k == 2:
        return np.sin(a) ** 2
    if k < m:
        return 1.0 - np.cos(a) ** (2 * k - 2)
    return np.sin(a) ** (2 * m - 2)


@dataclass(frozen=True)
class SamplerConfig:
    """Sampler settings; ``mode`` picks the range set for the flat angles.

    Only the covering box reproduces Haar statistics for every N.  The
    quotient box carries the right volume for SU(N)/Z_N, but for N >= 4
    samples drawn over it are not Haar distributed: the law of |Tr U| is off
    at N = 4 and the second moments E|U_ij|^2 are off at N = 5.
    """

    n: int
    seed: int = 0
    mode: str = COVERING

    def __post_init__(self):
        _check_n(self.n)
        if self.mode not in (QUOTIENT, COVERING):
            raise ValueError(f"unknown range mode {self.mode!r}")


class HaarSampler:
    """Independent sampler state seeded from a SamplerConfig (Philox stream)."""

    def __init__(self, cfg: SamplerConfig):
        self.cfg = cfg
        self.n = cfg.n
        self.rng = np.random.Generator(np.random.Philox(cfg.seed))
        rs = ranges(cfg.n, cfg.mode)
        self._lo = rs.lo
        self._width = rs.widths()
        self._planes = {t.param_index: (t.k, t.m) for t in kernel_terms(cfg.n)}

    def angles(self, count: int | None = None) -> np.ndarray:
        size = 1 if count is None else count
        u = self.rng.random((size, n_params(self.n)))
        out = self._lo + self._width * u
        for l, (k, m) in self._planes.items():
            out[:, l - 1] = plane_inverse_cdf(k, m, u[:, l - 1])
        return out[0] if count is None else out

    def unitaries(self, count: int) -> np.ndarray:
        return unitary_batch(self.n, self.angles(count))

    def unitary(self) -> np.ndarray:
        return self.unitaries(1)[0]

    def thetas(self, count: int, theta_mode: str = UNIFORM) -> np.ndarray:
        lo, hi = theta_ranges(self.n).T
        if theta_mode == ENDPOINTS:
            return np.broadcast_to(lo, (count, self.n - 1)).copy()
        if theta_mode == UNIFORM:
            return lo + (hi - lo) * self.rng.random((count, self.n - 1))
        raise ValueError(f"unknown theta mode {theta_mode!r}")

    def densities(self, count: int, theta_mode: str = UNIFORM) -> np.ndarray:
        thetas = self.thetas(count, theta_mode)
        us = self.unitaries(count)
        lam = np.array([rho_diagonal(self.n, t).eigenvalues for t in thetas])
        return (us * lam[:, None, :]) @ us.conj().transpose(0, 2, 1)

    def density(self, theta_mode: str = UNIFORM) -> np.ndarray:
        return self.densities(1, theta_mode)[0]


def sample_angles(cfg: SamplerConfig, count: int | None = None) -> np.ndarray:
    return HaarSampler(cfg).angles(count)


def sample_unitary(cfg: SamplerConfig, count: int | None = None) -> np.ndarray:
    s = HaarSampler(cfg)
    return s.unitary() if count is None else s.unitaries(count)


def sample_density(cfg: SamplerConfig, theta_mode: str = UNIFORM, count: int | None = None) -> np.ndarray:
    s = HaarSampler(cfg)
    return s.density(theta_mode) if count is None else s.densities(count, theta_mode)
