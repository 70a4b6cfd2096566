"""Recompute the pinned oracle constants from scratch."""

import mpmath as mp
import numpy as np
import pytest

from oracles import DIAG_GAP_SX_SZ, ENTROPY_SXSX_PI_4, expm_ref, kron_ref

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def test_diag_gap_constant():
    psi = np.array([1, 0], dtype=complex)
    full = expm_ref(SX + SZ, -1j) @ psi
    stair = expm_ref(SZ, -1j) @ (expm_ref(SX, -1j) @ psi)
    assert np.linalg.norm(full - stair) == pytest.approx(DIAG_GAP_SX_SZ, abs=1e-14)


def test_entropy_constant_matches_closed_form():
    # |00>, |11> block of sz(x)1 + 1(x)sz + sx(x)sx is [[2, 1], [1, -2]]
    p = float(mp.sin(mp.sqrt(5) * mp.pi / 4) ** 2 / 5)
    assert -(p * np.log(p) + (1 - p) * np.log(1 - p)) == pytest.approx(ENTROPY_SXSX_PI_4, abs=1e-14)

    eye = np.eye(2)
    h = kron_ref(SZ, eye) + kron_ref(eye, SZ) + kron_ref(SX, SX)
    psi = expm_ref(h, -1j * np.pi / 4) @ np.array([1, 0, 0, 0], dtype=complex)
    weights = np.linalg.svd(psi.reshape(2, 2), compute_uv=False) ** 2
    assert -np.sum(weights * np.log(weights)) == pytest.approx(ENTROPY_SXSX_PI_4, abs=1e-12)
