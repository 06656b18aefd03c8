"""Haar measure of SU(N) in Euler coordinates.

Two independent routes are provided:

* ``kernel`` evaluates the closed product form, one trigonometric factor per
  plane rotation, and
* ``kernel_oracle`` builds the matrix of left-invariant one-form coefficients
  c_lj from u = U^T and takes |det c|.

The oracle computes each dU/d(alpha_l) U^-1 by conjugating the factor's
generator with the product of the factors that precede it, which is exact; no
series expansion or finite differencing is involved.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .euler_param import PLANE, as_alpha, factor_exponential, factor_sequence, j_offset
from .lie_algebra import _check_n, make_generators, n_params

SIN2 = "sin2"
COS_POWER = "cos_power"
SIN_POWER = "sin_power"

INTERIOR_MARGIN = 0.1
SINGULAR_KERNEL = 1e-12


@dataclass(frozen=True)
class KernelTerm:
    """Trigonometric factor contributed by the plane rotation of block m, level k."""

    k: int
    m: int
    param_index: int
    case: str

    @property
    def exponent(self) -> int:
        if self.case == COS_POWER:
            return 2 * self.k - 3
        if self.case == SIN_POWER:
            return 2 * self.m - 3
        return 1

    def __call__(self, x):
        if self.case == SIN2:
            return np.sin(2 * x)
        if self.case == COS_POWER:
            return np.cos(x) ** self.exponent * np.sin(x)
        return np.cos(x) * np.sin(x) ** self.exponent

    def __str__(self) -> str:
        a = f"a{self.param_index}"
        if self.case == SIN2:
            return f"sin(2*{a})"
        if self.case == COS_POWER:
            return f"cos({a})^{self.exponent}*sin({a})"
        return f"cos({a})*sin({a})^{self.exponent}"


def kernel_terms(n: int) -> list[KernelTerm]:
    _check_n(n)
    terms = []
    for m in range(n, 1, -1):
        j = j_offset(m, n)
        for k in range(2, m + 1):
            if k == 2:
                case = SIN2
            elif k == m:
                case = SIN_POWER
            else:
                case = COS_POWER
            terms.append(KernelTerm(k=k, m=m, param_index=2 * (k - 1) + j, case=case))
    return terms


def kernel(n: int, alpha):
    """Closed-form Haar density K_SU(N) at alpha.

    ``alpha`` may also be a (B, N^2-1) array, in which case an array of B
    kernel values is returned.
    """
    a = np.asarray(alpha.alpha if hasattr(alpha, "alpha") else alpha, dtype=float)
    if a.shape[-1] != n_params(n):
        raise ValueError(f"SU({n}) needs {n_params(n)} parameters, got shape {a.shape}")
    out = np.ones(a.shape[:-1])
    for t in kernel_terms(n):
        out = out * t(a[..., t.param_index - 1])
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class OneFormCoefficients:
    """c[l-1, j-1] = c_lj: row l is the parameter, column j the generator."""

    n: int
    c: np.ndarray

    def det(self) -> float:
        return float(np.linalg.det(self.c))

    def t_block(self) -> np.ndarray:
        """Rows alpha_1..alpha_{2(N-1)}, columns lambda_{(N-1)^2}..lambda_{N^2-2}."""
        n = self.n
        return self.c[: 2 * (n - 1), (n - 1) ** 2 - 1 : n * n - 2]


def one_form_coefficients(n: int, alpha) -> OneFormCoefficients:
    """Expansion coefficients of d(u)/d(alpha_l) u^-1 in the transposed generators.

    u = U^T is the reversed product of transposed factors.  With P_l the
    product of the u-factors to the left of the one carrying alpha_l and
    C_l = i * lambda^T its generator, M_l = P_l C_l P_l^dagger, and
    c_lj = -i/2 Tr[lambda_j^T M_l].
    """
    a = as_alpha(n, alpha)
    gens = make_generators(n).matrices
    d = n_params(n)
    c = np.zeros((d, d))
    prefix = np.eye(n, dtype=complex)
    for f in reversed(factor_sequence(n).factors):
        gen_t = 1j * gens[f.generator_index - 1].T
        m_l = prefix @ gen_t @ prefix.conj().T
        # Tr[A^T B] = sum_ab A_ab B_ab
        c[f.param_index - 1] = (-0.5j * np.einsum("jab,ab->j", gens, m_l)).real
        prefix = prefix @ factor_exponential(f, a[f.param_index - 1], n).T
    return OneFormCoefficients(n=n, c=c)


def kernel_oracle(n: int, alpha) -> float:
    """|det c_lj|; cost grows like N^6, intended for N <= 5."""
    return abs(one_form_coefficients(n, alpha).det())


def t_block_determinant(n: int, alpha) -> float:
    """|Det T| for the 2(N-1) x 2(N-1) block that carries the new parameters."""
    return abs(float(np.linalg.det(one_form_coefficients(n, alpha).t_block())))


def interior_point(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random alpha with every plane angle in [0.1, pi/2 - 0.1]."""
    a = rng.uniform(0.0, np.pi, n_params(n))
    for f in factor_sequence(n).of_kind(PLANE):
        a[f.param_index - 1] = rng.uniform(INTERIOR_MARGIN, np.pi / 2 - INTERIOR_MARGIN)
    return a


def check_oracle(n: int, points: int, seed: int) -> dict:
    """Compare closed form and determinant oracle at random interior points.

    Relative deviation is reported where the kernel exceeds 1e-12; below that
    the absolute deviation is tracked instead.
    """
    rng = np.random.default_rng(seed)
    max_rel = 0.0
    max_abs_singular = 0.0
    for _ in range(points):
        a = interior_point(n, rng)
        k = kernel(n, a)
        o = kernel_oracle(n, a)
        if k < SINGULAR_KERNEL:
            max_abs_singular = max(max_abs_singular, abs(o - k))
        else:
            max_rel = max(max_rel, abs(o - k) / k)
    return {
        "n": n,
        "points": points,
        "seed": seed,
        "max_relative_deviation": max_rel,
        "max_absolute_deviation_singular": max_abs_singular,
    }
