"""Direct-sum partitions of a Hamiltonian and the Feshbach effective Hamiltonian.

Block operators (``h_aa`` and friends) are full-dimension matrices supported
on the relevant subspaces. Effective Hamiltonians are returned in the
orthonormal basis ``Projector.basis()`` of subspace A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NotHermitian,
    NotInSubspace,
    ResolventSingular,
    TrivialPartition,
)
from .opalg import Projector, as_operator, as_state, commutator, eigendecompose, frobenius, is_hermitian

A_COMPONENT_TOL = 1e-8
SUBSPACE_TOL = 1e-12
RESOLVENT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PartitionBlocks:
    h: np.ndarray
    p_a: Projector
    p_b: Projector
    h_aa: np.ndarray
    h_ab: np.ndarray
    h_ba: np.ndarray
    h_bb: np.ndarray

    def reassemble(self) -> np.ndarray:
        return self.h_aa + self.h_ab + self.h_ba + self.h_bb


def decompose(h, p_a: Projector) -> PartitionBlocks:
    h = as_operator(h)
    if not is_hermitian(h):
        raise NotHermitian("partitioned Hamiltonian must be Hermitian")
    if p_a.dim != h.shape[0]:
        raise DimensionMismatch(f"projector dim {p_a.dim} != Hamiltonian dim {h.shape[0]}")
    if not 0 < p_a.rank < p_a.dim:
        raise TrivialPartition(f"projector rank {p_a.rank} leaves an empty subspace")
    p_b = p_a.complement()
    pa, pb = p_a.operator, p_b.operator
    return PartitionBlocks(h, p_a, p_b, pa @ h @ pa, pa @ h @ pb, pb @ h @ pa, pb @ h @ pb)


def block_commutator_residual(blocks: PartitionBlocks) -> float:
    """``||[H_AA, H_BB]||_F``; zero up to rounding since ``P_A P_B = 0``."""
    return frobenius(commutator(blocks.h_aa, blocks.h_bb))


def _subspace_blocks(blocks: PartitionBlocks):
    va, vb = blocks.p_a.basis(), blocks.p_b.basis()
    h = blocks.h
    return va, vb, va.conj().T @ h @ va, va.conj().T @ h @ vb, vb.conj().T @ h @ va, vb.conj().T @ h @ vb


def effective_hamiltonian(blocks: PartitionBlocks, energy: complex) -> np.ndarray:
    """``H_AA + H_AB (E - H_BB)^-1 H_BA`` restricted to subspace A.

    Raises ResolventSingular when ``E - H_BB`` on subspace B has smallest
    singular value below ``1e-10 * (1 + |E| + ||H_BB||_F)``.
    """
    energy = complex(energy)
    _, _, haa, hab, hba, hbb = _subspace_blocks(blocks)
    resolvent = energy * np.eye(hbb.shape[0]) - hbb
    smin = np.linalg.svd(resolvent, compute_uv=False)[-1]
    threshold = RESOLVENT_TOL * (1.0 + abs(energy) + frobenius(hbb))
    if smin < threshold:
        raise ResolventSingular(f"E = {energy} is within {smin:.3e} of the H_BB spectrum (threshold {threshold:.3e})")
    return haa + hab @ np.linalg.solve(resolvent, hba)


@dataclass(frozen=True)
class FeshbachCheck:
    energy: float
    residual: float | None
    a_weight: float
    singular: bool = False


def feshbach_eigenconsistency(h, p_a: Projector) -> list[FeshbachCheck]:
    """Check that each eigenpair ``(E, psi)`` of ``h`` solves ``H_eff(E) psi_A = E psi_A``.

    Eigenvectors with ``||P_A psi|| <= 1e-8`` are skipped. Energies where the
    resolvent is singular come back flagged with ``residual=None``.
    """
    blocks = decompose(h, p_a)
    va = p_a.basis()
    energies, vectors = eigendecompose(blocks.h)
    out = []
    for e, psi in zip(energies.real, vectors.T):
        psi_a = va.conj().T @ psi
        weight = float(np.linalg.norm(psi_a))
        if weight <= A_COMPONENT_TOL:
            continue
        try:
            heff = effective_hamiltonian(blocks, e)
        except ResolventSingular:
            out.append(FeshbachCheck(float(e), None, weight, singular=True))
            continue
        residual = float(np.linalg.norm(heff @ psi_a - e * psi_a)) / weight
        out.append(FeshbachCheck(float(e), residual, weight))
    return out


@dataclass(frozen=True)
class SpectrumGap:
    subspace_eigenvalue: float
    nearest_full_eigenvalue: float
    gap: float


def subspace_spectrum_gaps(h, p_a: Projector) -> list[SpectrumGap]:
    """Distance from each eigenvalue of H_AA (on A) to the nearest eigenvalue of ``h``.

    A nonzero gap means evolving with H_AA alone misses the full dynamics.
    """
    blocks = decompose(h, p_a)
    _, _, haa, _, _, _ = _subspace_blocks(blocks)
    sub = np.linalg.eigvalsh(haa)
    full = np.linalg.eigvalsh(blocks.h)
    out = []
    for lam in sub:
        k = int(np.argmin(np.abs(full - lam)))
        out.append(SpectrumGap(float(lam), float(full[k]), float(abs(full[k] - lam))))
    return out


def dirac_frenkel_error(h, p_v: Projector, psi) -> float:
    """``||(1 - P_V) H psi||`` for ``psi`` in the range of ``P_V``."""
    h = as_operator(h)
    psi = as_state(psi, h.shape[0])
    if p_v.dim != h.shape[0]:
        raise DimensionMismatch(f"projector dim {p_v.dim} != Hamiltonian dim {h.shape[0]}")
    q = np.eye(p_v.dim) - p_v.operator
    leak = float(np.linalg.norm(q @ psi))
    if leak > SUBSPACE_TOL:
        raise NotInSubspace(f"state has component {leak:.3e} outside the subspace")
    return float(np.linalg.norm(q @ (h @ psi)))


def subspace_leakage(h, p_v: Projector) -> float:
    """``||(1 - P_V) H P_V||_F``; zero exactly when V is invariant under ``h``."""
    h = as_operator(h)
    q = np.eye(p_v.dim) - p_v.operator
    return frobenius(q @ h @ p_v.operator)
