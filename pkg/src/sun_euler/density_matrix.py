"""N x N density matrices rho = U rho_d U^dagger.

rho_d is diagonal with eigenvalues given by hyperspherical angles
theta_1..theta_{N-1}:

    Lambda_1 = prod_j sin^2(theta_j)
    Lambda_i = cos^2(theta_{i-1}) prod_{j >= i} sin^2(theta_j),  1 < i < N
    Lambda_N = cos^2(theta_{N-1})

Restricting theta_j to [arccos(1/sqrt(j+1)), pi/2] fixes an eigenvalue
ordering; the lower endpoints give the maximally mixed state.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, DomainError
from .euler_param import ParamVector, as_alpha, unitary
from .lie_algebra import _check_n, diagonal_entries, diagonal_index

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
RANGE_SLACK = 1e-12


def theta_ranges(n: int) -> np.ndarray:
    """(lo, hi) = (arccos(1/sqrt(j+1)), pi/2) for j = 1..N-1."""
    _check_n(n)
    j = np.arange(1, n)
    return np.column_stack([np.arccos(1.0 / np.sqrt(j + 1.0)), np.full(n - 1, np.pi / 2)])


def cartan_indices(n: int) -> list[int]:
    """Generator indices 3, 8, ..., N^2-1 of the diagonal generators."""
    return [diagonal_index(a) for a in range(2, n + 1)]


def _as_theta(n: int, theta) -> np.ndarray:
    t = np.asarray(theta, dtype=float)
    if t.shape != (n - 1,):
        raise ValueError(f"an {n}x{n} density matrix needs {n - 1} theta angles, got shape {t.shape}")
    return t


def check_theta(n: int, theta, restricted: bool = True) -> np.ndarray:
    t = _as_theta(n, theta)
    if restricted:
        lo, hi = theta_ranges(n).T
    else:
        lo, hi = np.zeros(n - 1), np.full(n - 1, np.pi / 2)
    bad = np.nonzero((t < lo - RANGE_SLACK) | (t > hi + RANGE_SLACK))[0]
    if bad.size:
        j = int(bad[0])
        raise DomainError(f"theta_{j + 1}={t[j]!r} outside [{lo[j]!r}, {hi[j]!r}]")
    return t


@dataclass(frozen=True)
class DiagonalDensity:
    n: int
    eigenvalues: np.ndarray

    def matrix(self) -> np.ndarray:
        return np.diag(self.eigenvalues).astype(complex)


@dataclass(frozen=True)
class DensitySpec:
    """Angles defining rho; theta is checked against the ordered ranges unless ``restricted`` is False."""

    n: int
    theta: np.ndarray
    alpha: np.ndarray
    restricted: bool = field(default=True)

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "theta", check_theta(self.n, self.theta, self.restricted))
        a = self.alpha.alpha if isinstance(self.alpha, ParamVector) else self.alpha
        object.__setattr__(self, "alpha", as_alpha(self.n, a))


def rho_diagonal(n: int, theta) -> DiagonalDensity:
    _check_n(n)
    t = check_theta(n, theta, restricted=False)
    s2 = np.sin(t) ** 2
    c2 = np.cos(t) ** 2
    lam = np.empty(n)
    # tail[i] = prod_{j >= i} sin^2(theta_j), zero-based over theta
    tail = np.append(np.cumprod(s2[::-1])[::-1], 1.0)
    lam[0] = tail[0]
    for i in range(2, n + 1):
        lam[i - 1] = c2[i - 2] * tail[i - 1]
    return DiagonalDensity(n=n, eigenvalues=lam)


def rho_coefficients(n: int, theta) -> np.ndarray:
    """f_a = Tr[rho_d lambda_{a^2-1}] / 2 for a = 2..N (order of ``cartan_indices``)."""
    lam = rho_diagonal(n, theta).eigenvalues
    return np.array([0.5 * lam @ diagonal_entries(a, n) for a in range(2, n + 1)])


def reconstruct_diagonal(n: int, coefficients) -> np.ndarray:
    """I/N + sum_a f_a lambda_{a^2-1}."""
    out = np.full(n, 1.0 / n)
    for a, f in zip(range(2, n + 1), coefficients):
        out = out + f * diagonal_entries(a, n)
    return np.diag(out).astype(complex)


def density(spec: DensitySpec) -> np.ndarray:
    n = spec.n
    u = unitary(n, spec.alpha)
    rho_d = rho_diagonal(n, spec.theta).matrix()
    rho = u @ rho_d @ u.conj().T
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ConsistencyError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > TRACE_TOL:
        raise ConsistencyError(f"density matrix trace {np.trace(rho)!r} differs from 1")
    if np.linalg.eigvalsh(rho).min() < -PSD_TOL:
        raise ConsistencyError("density matrix has a negative eigenvalue")
    return rho
