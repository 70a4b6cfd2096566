"""Hermiticity diagnostics, complex spectra and norm decay of non-Hermitian evolution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotNormalized
from .opalg import HERMITIAN_TOL, as_operator, as_state, eigendecompose, frobenius, hermiticity_defect, matrix_exponential

COMPLEX_SPECTRUM_TOL = 1e-10


@dataclass(frozen=True)
class SpectralReport:
    hermitian: bool
    hermiticity_defect: float
    eigenvalues: tuple[complex, ...]
    max_imag: float


def spectral_report(h) -> SpectralReport:
    h = as_operator(h)
    defect = hermiticity_defect(h)
    w, _ = eigendecompose(h)
    order = np.lexsort((w.imag, w.real))
    w = w[order]
    return SpectralReport(
        hermitian=defect <= HERMITIAN_TOL,
        hermiticity_defect=defect,
        eigenvalues=tuple(complex(x) for x in w),
        max_imag=float(np.max(np.abs(w.imag))),
    )


@dataclass(frozen=True)
class GateDecision:
    admits_unitary_picture: bool
    complex_spectrum_detected: bool
    report: SpectralReport


def schroedinger_picture_gate(h) -> GateDecision:
    """Decide whether ``h`` supports unitary (Schroedinger-picture) evolution."""
    report = spectral_report(h)
    threshold = COMPLEX_SPECTRUM_TOL * (1.0 + frobenius(as_operator(h)))
    return GateDecision(report.hermitian, report.max_imag > threshold, report)


def norm_decay_curve(h, psi0, t_grid: Sequence[float]) -> list[tuple[float, float]]:
    """``(t, ||exp(-iHt) psi0||^2)`` for each ``t`` in the grid."""
    h = as_operator(h)
    psi0 = as_state(psi0, h.shape[0])
    if abs(np.linalg.norm(psi0) - 1.0) > 1e-10:
        raise NotNormalized(f"initial state has norm {np.linalg.norm(psi0)!r}")
    out = []
    for t in t_grid:
        t = float(t)
        if t < 0:
            raise ValueError(f"grid times must be non-negative, got {t}")
        psi = matrix_exponential(h, -1j * t) @ psi0
        out.append((t, float(np.vdot(psi, psi).real)))
    return out
