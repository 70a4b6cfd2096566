"""Dense complex operator algebra.

Operators are plain ``numpy`` arrays of shape ``(dim, dim)`` and dtype
``complex128``; states are 1-d complex arrays. Units have hbar = 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, DimensionOverflow, NumericalFailure, RankDeficient

DEFAULT_MAX_DIM = 4096
HERMITIAN_TOL = 1e-12
RANK_TOL = 1e-10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def max_dim() -> int:
    """Dense dimension cap, overridable through ``MULTITIME_MAX_DIM``."""
    raw = os.environ.get("MULTITIME_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    value = int(raw)
    if value < 1:
        raise ValueError(f"MULTITIME_MAX_DIM must be positive, got {raw!r}")
    return value


def as_operator(a) -> np.ndarray:
    """Coerce ``a`` to a square complex matrix, validating shape and size."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"operator must be a non-empty square matrix, got shape {m.shape}")
    if m.shape[0] > max_dim():
        raise DimensionOverflow(f"dimension {m.shape[0]} exceeds max dimension {max_dim()}")
    if not np.all(np.isfinite(m)):
        raise NumericalFailure("operator has non-finite entries")
    return m


def as_state(v, dim: int | None = None) -> np.ndarray:
    psi = np.asarray(v, dtype=complex)
    if psi.ndim != 1 or psi.size < 1:
        raise DimensionMismatch(f"state must be a non-empty vector, got shape {psi.shape}")
    if dim is not None and psi.size != dim:
        raise DimensionMismatch(f"state has length {psi.size}, expected {dim}")
    return psi


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def hermiticity_defect(h) -> float:
    """``||H - H^dagger||_F / (1 + ||H||_F)``."""
    h = np.asarray(h, dtype=complex)
    return frobenius(h - h.conj().T) / (1.0 + frobenius(h))


def is_hermitian(h, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_defect(h) <= tol


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def commutator(a, b) -> np.ndarray:
    """Return ``ab - ba``."""
    a, b = as_operator(a), as_operator(b)
    _check_same_dim(a, b)
    return a @ b - b @ a


def tensor(a, b) -> np.ndarray:
    """Kronecker product with the first factor as the major index."""
    a, b = as_operator(a), as_operator(b)
    d = a.shape[0] * b.shape[0]
    if d > max_dim():
        raise DimensionOverflow(f"tensor dimension {d} exceeds max dimension {max_dim()}")
    return np.kron(a, b)


def matrix_exponential(h, scale: complex = 1.0) -> np.ndarray:
    """Return ``exp(scale * h)``.

    Hermitian ``h`` goes through its eigendecomposition, which keeps
    ``exp(-1j * t * h)`` unitary to machine precision. Anything else uses
    scaling and squaring with a Pade approximant.
    """
    h = as_operator(h)
    scale = complex(scale)
    if not np.isfinite(scale):
        raise NumericalFailure(f"non-finite scale {scale!r}")
    if scale == 0 or not np.any(h):
        return np.eye(h.shape[0], dtype=complex)
    if is_hermitian(h):
        try:
            w, v = np.linalg.eigh(h)
        except np.linalg.LinAlgError as exc:
            raise NumericalFailure(f"Hermitian eigendecomposition failed: {exc}") from exc
        return (v * np.exp(scale * w)) @ v.conj().T
    out = scipy.linalg.expm(scale * h)
    if not np.all(np.isfinite(out)):
        raise NumericalFailure("matrix exponential overflowed")
    return out


def eigendecompose(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and column eigenvectors of ``h``.

    Hermitian inputs return real eigenvalues in ascending order with
    orthonormal eigenvectors; other inputs return unit-norm eigenvectors.
    Every pair is checked against ``||h v - lambda v|| <= 1e-9 ||h||_F``.
    """
    h = as_operator(h)
    try:
        if is_hermitian(h):
            w, v = np.linalg.eigh(h)
            w = w.astype(complex)
        else:
            w, v = np.linalg.eig(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigendecomposition did not converge: {exc}") from exc
    scale = frobenius(h)
    residuals = np.linalg.norm(h @ v - v * w, axis=0)
    if scale > 0 and np.any(residuals > 1e-9 * scale):
        raise NumericalFailure(
            f"eigenpair residual {residuals.max():.3e} exceeds 1e-9 * ||h||_F = {1e-9 * scale:.3e}"
        )
    return w, v


@dataclass(frozen=True, eq=False)
class Projector:
    """Orthogonal projector together with its rank."""

    operator: np.ndarray
    rank: int

    @property
    def dim(self) -> int:
        return self.operator.shape[0]

    def complement(self) -> "Projector":
        return Projector(np.eye(self.dim, dtype=complex) - self.operator, self.dim - self.rank)

    def basis(self) -> np.ndarray:
        """Orthonormal basis of the range, one column per dimension.

        Columns are the leading left singular vectors, each with its phase
        fixed so that its largest-magnitude entry is real and positive.
        """
        if self.rank == 0:
            return np.zeros((self.dim, 0), dtype=complex)
        u, _, _ = np.linalg.svd(self.operator)
        u = u[:, : self.rank]
        idx = np.argmax(np.abs(u), axis=0)
        pivots = u[idx, np.arange(self.rank)]
        return u * (np.abs(pivots) / pivots)


def as_projector(p, tol: float = 1e-10) -> Projector:
    """Validate an explicit projector matrix (Hermitian, idempotent)."""
    p = as_operator(p)
    norm = frobenius(p)
    if hermiticity_defect(p) > HERMITIAN_TOL:
        raise RankDeficient("projector matrix is not Hermitian")
    if frobenius(p @ p - p) > tol * (1.0 + norm):
        raise RankDeficient("projector matrix is not idempotent")
    tr = np.trace(p).real
    rank = int(round(tr))
    if abs(tr - rank) > tol:
        raise RankDeficient(f"projector trace {tr} is not an integer")
    return Projector(0.5 * (p + p.conj().T), rank)


def projector_from_basis(columns) -> Projector:
    """Orthogonal projector onto the span of ``columns``.

    ``columns`` is a sequence of state vectors (or a ``dim x r`` matrix whose
    columns are the vectors when passed as a 2-d array).
    """
    if isinstance(columns, np.ndarray) and columns.ndim == 2:
        v = columns.astype(complex)
    else:
        cols = [as_state(c) for c in columns]
        if not cols:
            raise RankDeficient("empty basis")
        dims = {c.size for c in cols}
        if len(dims) != 1:
            raise DimensionMismatch(f"basis vectors have differing lengths {sorted(dims)}")
        v = np.column_stack(cols)
    dim, r = v.shape
    if r > dim:
        raise RankDeficient(f"{r} vectors cannot be independent in dimension {dim}")
    s = np.linalg.svd(v, compute_uv=False)
    if s[0] == 0 or s[-1] < RANK_TOL * s[0]:
        raise RankDeficient(f"basis columns are dependent (singular values {s[-1]:.3e} / {s[0]:.3e})")
    q, _ = np.linalg.qr(v)
    p = q @ q.conj().T
    return Projector(0.5 * (p + p.conj().T), r)


def random_hermitian(dim: int, seed: int) -> np.ndarray:
    """Seeded ``(M + M^dagger) / 2`` with standard complex Gaussian ``M``.

    Entries of ``M`` have independent real and imaginary parts of variance
    1/2, so ``E|M_jk|^2 = 1``.
    """
    if dim < 1:
        raise DimensionMismatch(f"dim must be positive, got {dim}")
    if dim > max_dim():
        raise DimensionOverflow(f"dimension {dim} exceeds max dimension {max_dim()}")
    rng = np.random.default_rng(seed)
    m = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    return (m + m.conj().T) / 2


def random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return psi / np.linalg.norm(psi)
