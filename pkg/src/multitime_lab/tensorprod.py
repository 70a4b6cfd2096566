"""Bipartite tensor-product Hamiltonians, product-ansatz failure and entanglement.

Index convention: amplitude ``i * d_b + j`` belongs to basis state
``|i>_A (x) |j>_B`` (A-major, matching ``numpy.kron``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NotNormalized
from .opalg import as_operator, as_state, matrix_exponential, tensor

ENTROPY_CUTOFF = 1e-15
NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class TensorDecomposition:
    h_a: np.ndarray
    h_b: np.ndarray
    interaction: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "h_a", as_operator(self.h_a))
        object.__setattr__(self, "h_b", as_operator(self.h_b))
        d = self.d_a * self.d_b
        if self.interaction is None:
            object.__setattr__(self, "interaction", np.zeros((d, d), dtype=complex))
        else:
            j = as_operator(self.interaction)
            if j.shape[0] != d:
                raise DimensionMismatch(f"interaction has dim {j.shape[0]}, expected {self.d_a}*{self.d_b} = {d}")
            object.__setattr__(self, "interaction", j)

    @property
    def d_a(self) -> int:
        return self.h_a.shape[0]

    @property
    def d_b(self) -> int:
        return self.h_b.shape[0]


def assemble(dec: TensorDecomposition) -> np.ndarray:
    """``H_A (x) 1 + 1 (x) H_B + interaction``."""
    eye_a = np.eye(dec.d_a, dtype=complex)
    eye_b = np.eye(dec.d_b, dtype=complex)
    return tensor(dec.h_a, eye_b) + tensor(eye_a, dec.h_b) + dec.interaction


@dataclass(frozen=True, eq=False)
class BipartiteState:
    d_a: int
    d_b: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = as_state(self.amplitudes)
        if amps.size != self.d_a * self.d_b:
            raise DimensionMismatch(f"{amps.size} amplitudes for a {self.d_a}x{self.d_b} system")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def product(cls, psi_a, psi_b) -> BipartiteState:
        psi_a, psi_b = as_state(psi_a), as_state(psi_b)
        return cls(psi_a.size, psi_b.size, np.kron(psi_a, psi_b))

    def matrix(self) -> np.ndarray:
        return self.amplitudes.reshape(self.d_a, self.d_b)


def _require_normalized(psi: np.ndarray, name: str) -> None:
    n = np.linalg.norm(psi)
    if abs(n - 1.0) > NORM_TOL:
        raise NotNormalized(f"{name} has norm {n!r}")


def evolve_full(dec: TensorDecomposition, psi_a, psi_b, t: float) -> np.ndarray:
    return matrix_exponential(assemble(dec), -1j * t) @ np.kron(as_state(psi_a), as_state(psi_b))


def product_ansatz_residual(dec: TensorDecomposition, psi_a, psi_b, t: float) -> float:
    """Distance between full evolution and independent per-factor evolution."""
    psi_a, psi_b = as_state(psi_a, dec.d_a), as_state(psi_b, dec.d_b)
    _require_normalized(psi_a, "psi_a")
    _require_normalized(psi_b, "psi_b")
    full = evolve_full(dec, psi_a, psi_b, t)
    factored = np.kron(matrix_exponential(dec.h_a, -1j * t) @ psi_a,
                       matrix_exponential(dec.h_b, -1j * t) @ psi_b)
    return float(np.linalg.norm(full - factored))


def schmidt_spectrum(psi: BipartiteState) -> np.ndarray:
    """Singular values of the ``d_a x d_b`` amplitude matrix, non-increasing."""
    return np.linalg.svd(psi.matrix(), compute_uv=False)


def entanglement_entropy(psi: BipartiteState) -> float:
    """Von Neumann entropy (natural log) of either reduced state."""
    _require_normalized(psi.amplitudes, "state")
    p = schmidt_spectrum(psi) ** 2
    p = p[p >= ENTROPY_CUTOFF]
    return float(max(0.0, -np.sum(p * np.log(p))))


@dataclass(frozen=True)
class SweepPoint:
    t: float
    residual: float
    entropy: float


def interaction_entanglement_sweep(dec: TensorDecomposition, psi_a, psi_b,
                                   t_grid: Sequence[float]) -> list[SweepPoint]:
    out = []
    for t in t_grid:
        t = float(t)
        if not math.isfinite(t):
            raise ValueError(f"non-finite grid time {t!r}")
        residual = product_ansatz_residual(dec, psi_a, psi_b, t)
        evolved = BipartiteState(dec.d_a, dec.d_b, evolve_full(dec, psi_a, psi_b, t))
        out.append(SweepPoint(t, residual, entanglement_entropy(evolved)))
    return out
