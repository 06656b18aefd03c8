"""Defining-representation basis of su(N), structure constants and the
K/P split used to build the Euler parametrization.

Generator indexing (1-based, matching the alpha subscripts used elsewhere):
for each level m = 2..N the block of 2(m-1)+1 indices starting at (m-1)**2
holds, for i = 1..m-1, the symmetric generator of the (i, m) plane at
(m-1)**2 + 2(i-1) and the antisymmetric one right after it, followed by the
diagonal generator at m**2 - 1.  For N = 3 this is the usual Gell-Mann order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InvalidDimensionError

SPARSE_TOL = 1e-12


def n_params(n: int) -> int:
    return n * n - 1


def symmetric_index(i: int, m: int) -> int:
    """Index of the symmetric generator mixing basis states i < m."""
    return (m - 1) ** 2 + 2 * (i - 1)


def antisymmetric_index(i: int, m: int) -> int:
    """Index of the antisymmetric generator mixing basis states i < m."""
    return (m - 1) ** 2 + 2 * (i - 1) + 1


def diagonal_index(m: int) -> int:
    return m * m - 1


def plane_generator_index(k: int) -> int:
    """Antisymmetric generator of the (1, k) plane, i.e. the sigma_2 analogue."""
    return (k - 1) ** 2 + 1


def _check_n(n: int, minimum: int = 2) -> None:
    if not isinstance(n, (int, np.integer)) or n < minimum:
        raise InvalidDimensionError(f"group dimension must be an integer >= {minimum}, got {n!r}")


def diagonal_entries(m: int, n: int) -> np.ndarray:
    """Real diagonal of the Cartan generator lambda_{m^2-1} in dimension n."""
    d = np.zeros(n)
    d[: m - 1] = 1.0
    d[m - 1] = -(m - 1)
    return np.sqrt(2.0 / (m * m - m)) * d


@dataclass(frozen=True)
class GeneratorSet:
    """The N^2-1 Hermitian traceless generators, normalized to Tr[l_i l_j] = 2 delta_ij.

    ``gs[i]`` returns lambda_i with the 1-based index convention of this module.
    """

    n: int
    matrices: np.ndarray = field(repr=False)

    def __getitem__(self, index: int) -> np.ndarray:
        if not 1 <= index <= len(self.matrices):
            raise IndexError(f"generator index {index} outside 1..{len(self.matrices)}")
        return self.matrices[index - 1]

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def to_json(self, index: int | None = None) -> str:
        """JSON lines ``{"n", "index", "re", "im"}``; one line per generator."""
        indices = range(1, len(self) + 1) if index is None else [index]
        lines = []
        for i in indices:
            g = self[i]
            lines.append(json.dumps({"n": self.n, "index": i, "re": g.real.tolist(), "im": g.imag.tolist()}))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _generator_stack(n: int) -> np.ndarray:
    mats = np.zeros((n_params(n), n, n), dtype=complex)
    for m in range(2, n + 1):
        for i in range(1, m):
            s = mats[symmetric_index(i, m) - 1]
            s[i - 1, m - 1] = s[m - 1, i - 1] = 1.0
            a = mats[antisymmetric_index(i, m) - 1]
            a[i - 1, m - 1] = -1j
            a[m - 1, i - 1] = 1j
        mats[diagonal_index(m) - 1] = np.diag(diagonal_entries(m, n))
    mats.setflags(write=False)
    return mats


def make_generators(n: int) -> GeneratorSet:
    _check_n(n)
    return GeneratorSet(n=int(n), matrices=_generator_stack(int(n)))


@dataclass(frozen=True)
class StructureConstants:
    """Sparse f_ijk (all index orders stored) with 1-based indices."""

    n: int
    f: dict

    def __call__(self, i: int, j: int, k: int) -> float:
        return self.f.get((i, j, k), 0.0)

    def dense(self) -> np.ndarray:
        d = n_params(self.n)
        out = np.zeros((d, d, d))
        for (i, j, k), v in self.f.items():
            out[i - 1, j - 1, k - 1] = v
        return out


def structure_constant_tensor(gs: GeneratorSet) -> np.ndarray:
    """Dense f_ijk = Tr([l_i, l_j] l_k) / 4i, zero-based array."""
    g = gs.matrices
    prod = np.einsum("iab,jbc->ijac", g, g)
    comm = prod - prod.transpose(1, 0, 2, 3)
    return (np.einsum("ijab,kba->ijk", comm, g) / 4j).real


def structure_constants(gs: GeneratorSet) -> StructureConstants:
    dense = structure_constant_tensor(gs)
    nz = np.argwhere(np.abs(dense) > SPARSE_TOL)
    f = {(int(i) + 1, int(j) + 1, int(k) + 1): float(dense[i, j, k]) for i, j, k in nz}
    return StructureConstants(n=gs.n, f=f)


@dataclass(frozen=True)
class CartanSplit:
    k_indices: frozenset
    p_indices: frozenset
    degenerate: bool = False


def cartan_split(n: int) -> CartanSplit:
    """Index sets of L(K) (su(N-1) plus lambda_{N^2-1}) and L(P).

    For n = 2 the general formula duplicates lambda_1 and produces an
    undefined lambda_0; the duplicates are dropped and the result is flagged
    ``degenerate``.
    """
    _check_n(n)
    if n == 2:
        return CartanSplit(k_indices=frozenset({3}), p_indices=frozenset({1, 2}), degenerate=True)
    k = set(range(1, (n - 1) ** 2)) | {n * n - 1}
    p = set(range((n - 1) ** 2, n * n - 1))
    return CartanSplit(k_indices=frozenset(k), p_indices=frozenset(p))
