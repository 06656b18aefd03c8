"""Ordered Euler factor sequence for SU(N) and evaluation of U(alpha).

U(alpha) is the product, for m = N down to 2 and k = 2..m, of
``exp(i l_3 a) exp(i l_{(k-1)^2+1} b)`` pairs, followed by the Cartan tail
``exp(i l_3 .) exp(i l_8 .) ... exp(i l_{N^2-1} .)``.  Parameters are stored
in a flat array where ``alpha[l - 1]`` is alpha_l.

Every factor is the exponential of a single generator times an angle, and each
has a closed form: a phase diagonal for lambda_3 and the Cartan generators, a
real rotation in the (1, k) plane for lambda_{(k-1)^2+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidDimensionError
from .lie_algebra import _check_n, diagonal_entries, diagonal_index, n_params, plane_generator_index

LAMBDA3 = "lambda3"
PLANE = "plane"
CARTAN = "cartan"


@dataclass(frozen=True)
class EulerFactor:
    """One exponential exp(i * lambda_generator_index * alpha_param_index).

    ``level`` is k for plane factors and a for Cartan factors (lambda_{a^2-1});
    it is 2 for lambda3 factors.  ``block`` is the m of the A(k, j(m)) block a
    non-Cartan factor belongs to, ``None`` in the Cartan tail.
    """

    generator_index: int
    param_index: int
    kind: str
    level: int
    block: int | None = None


@dataclass(frozen=True)
class FactorSequence:
    n: int
    factors: tuple

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def pairs(self) -> list[tuple[int, int]]:
        """(generator index, parameter index) for every factor, in order."""
        return [(f.generator_index, f.param_index) for f in self.factors]

    def of_kind(self, kind: str) -> list[EulerFactor]:
        return [f for f in self.factors if f.kind == kind]


@dataclass(frozen=True)
class ParamVector:
    """Euler angles alpha_1..alpha_{N^2-1}; ``p[l]`` is alpha_l (1-based)."""

    n: int
    alpha: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=float)
        if a.shape != (n_params(self.n),):
            raise ValueError(f"SU({self.n}) needs {n_params(self.n)} parameters, got shape {a.shape}")
        object.__setattr__(self, "alpha", a)

    def __getitem__(self, index: int) -> float:
        if not 1 <= index <= len(self.alpha):
            raise IndexError(f"parameter index {index} outside 1..{len(self.alpha)}")
        return float(self.alpha[index - 1])


def as_alpha(n: int, alpha) -> np.ndarray:
    """Normalize a ParamVector or array-like to a float array of length N^2-1."""
    if isinstance(alpha, ParamVector):
        if alpha.n != n:
            raise ValueError(f"parameter vector is for SU({alpha.n}), not SU({n})")
        return alpha.alpha
    a = np.asarray(alpha, dtype=float)
    if a.shape != (n_params(n),):
        raise ValueError(f"SU({n}) needs {n_params(n)} parameters, got shape {a.shape}")
    return a


def j_offset(m: int, n: int) -> int:
    """Parameter offset of block m: 0 for m = n, else sum_{l=0}^{n-m-1} 2(m+l)."""
    if not 2 <= m <= n:
        raise ValueError(f"block index m={m} must satisfy 2 <= m <= n={n}")
    return sum(2 * (m + l) for l in range(n - m))


@lru_cache(maxsize=None)
def _sequence(n: int) -> tuple:
    factors = []
    for m in range(n, 1, -1):
        j = j_offset(m, n)
        for k in range(2, m + 1):
            factors.append(EulerFactor(3, 2 * k - 3 + j, LAMBDA3, 2, m))
            factors.append(EulerFactor(plane_generator_index(k), 2 * (k - 1) + j, PLANE, k, m))
    for a in range(2, n + 1):
        factors.append(EulerFactor(diagonal_index(a), n * n - n + a - 1, CARTAN, a))
    return tuple(factors)


def factor_sequence(n: int) -> FactorSequence:
    _check_n(n)
    return FactorSequence(n=int(n), factors=_sequence(int(n)))


def _phases(f: EulerFactor, n: int) -> np.ndarray:
    if f.kind == LAMBDA3:
        return diagonal_entries(2, n)
    return diagonal_entries(f.level, n)


def factor_exponential(f: EulerFactor, angle: float, n: int) -> np.ndarray:
    """Closed form of exp(i * lambda * angle) for one Euler factor."""
    if f.kind == PLANE:
        k = f.level
        if not 2 <= k <= n:
            raise InvalidDimensionError(f"plane factor level {k} does not fit SU({n})")
        out = np.eye(n, dtype=complex)
        c, s = np.cos(angle), np.sin(angle)
        out[0, 0] = out[k - 1, k - 1] = c
        out[0, k - 1] = s
        out[k - 1, 0] = -s
        return out
    return np.diag(np.exp(1j * angle * _phases(f, n)))


def unitary(n: int, alpha) -> np.ndarray:
    """U(alpha) as the left-to-right product of the factor exponentials."""
    a = as_alpha(n, alpha)
    u = np.eye(n, dtype=complex)
    for f in factor_sequence(n):
        u = u @ factor_exponential(f, a[f.param_index - 1], n)
    return u


def unitary_transpose(n: int, alpha) -> np.ndarray:
    """u = U^T from the reversed product with the plane generators negated.

    Transposition leaves the diagonal generators alone and flips the sign of
    the antisymmetric ones, so no explicit transpose is taken here.
    """
    a = as_alpha(n, alpha)
    u = np.eye(n, dtype=complex)
    for f in reversed(factor_sequence(n).factors):
        sign = -1.0 if f.kind == PLANE else 1.0
        u = u @ factor_exponential(f, sign * a[f.param_index - 1], n)
    return u


def unitary_dagger(n: int, alpha) -> np.ndarray:
    """U^dagger as the reversed product of the factors at negated angles."""
    a = as_alpha(n, alpha)
    u = np.eye(n, dtype=complex)
    for f in reversed(factor_sequence(n).factors):
        u = u @ factor_exponential(f, -a[f.param_index - 1], n)
    return u


def unitary_batch(n: int, alphas) -> np.ndarray:
    """U(alpha) for a (B, N^2-1) array of parameter vectors.

    Right-multiplying by a factor only touches columns (a phase per column, or
    a rotation of columns 1 and k), so the product is built by column updates.
    """
    a = np.asarray(alphas, dtype=float)
    if a.ndim != 2 or a.shape[1] != n_params(n):
        raise ValueError(f"expected shape (B, {n_params(n)}), got {a.shape}")
    out = np.broadcast_to(np.eye(n, dtype=complex), (a.shape[0], n, n)).copy()
    for f in factor_sequence(n):
        theta = a[:, f.param_index - 1]
        if f.kind == PLANE:
            k = f.level - 1
            c = np.cos(theta)[:, None]
            s = np.sin(theta)[:, None]
            first = out[:, :, 0].copy()
            out[:, :, 0] = first * c - out[:, :, k] * s
            out[:, :, k] = first * s + out[:, :, k] * c
        else:
            d = _phases(f, n)
            active = np.nonzero(d)[0]
            out[:, :, active] *= np.exp(1j * theta[:, None] * d[active])[:, None, :]
    return out
