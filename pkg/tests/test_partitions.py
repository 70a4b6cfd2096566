import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitime_lab.errors import NotHermitian, NotInSubspace, ResolventSingular, TrivialPartition
from multitime_lab.opalg import SIGMA_X, frobenius, projector_from_basis, random_hermitian
from multitime_lab.partitions import (
    block_commutator_residual,
    decompose,
    dirac_frenkel_error,
    effective_hamiltonian,
    feshbach_eigenconsistency,
    subspace_leakage,
    subspace_spectrum_gaps,
)

E0 = projector_from_basis([[1, 0]])


def two_level(delta, g):
    return np.array([[0, g], [g, delta]], dtype=complex)


def random_projector(dim, rank, seed):
    rng = np.random.default_rng(seed)
    cols = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    return projector_from_basis(cols)


def coordinate_projector(dim, idx):
    return projector_from_basis([np.eye(dim)[i] for i in idx])


# --- decompose ----------------------------------------------------------------


def test_decompose_block_diagonal():
    h = np.zeros((4, 4), dtype=complex)
    h[:2, :2] = random_hermitian(2, 1)
    h[2:, 2:] = random_hermitian(2, 2)
    b = decompose(h, coordinate_projector(4, [0, 1]))
    assert frobenius(b.h_ab) <= 1e-15 and frobenius(b.h_ba) <= 1e-15


def test_decompose_sigma_x():
    b = decompose(SIGMA_X, E0)
    np.testing.assert_allclose(b.h_aa, 0, atol=1e-15)
    np.testing.assert_allclose(b.h_ab, [[0, 1], [0, 0]], atol=1e-15)
    np.testing.assert_allclose(b.h_ba, [[0, 0], [1, 0]], atol=1e-15)


def test_decompose_errors():
    with pytest.raises(NotHermitian):
        decompose(np.diag([1 - 0.5j, 2]), E0)
    with pytest.raises(TrivialPartition):
        decompose(np.eye(2), projector_from_basis(list(np.eye(2))))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32), st.data())
def test_decompose_invariants(d, seed, data):
    r = data.draw(st.integers(1, d - 1))
    h = random_hermitian(d, seed)
    b = decompose(h, random_projector(d, r, seed + 1))
    hn = frobenius(h)
    assert frobenius(b.p_a.operator + b.p_b.operator - np.eye(d)) <= 1e-12
    assert frobenius(b.reassemble() - h) <= 1e-12 * hn
    assert frobenius(b.h_ab.conj().T - b.h_ba) <= 1e-12 * hn


# --- block commutator ---------------------------------------------------------


@pytest.mark.parametrize("d", [4, 8, 16])
def test_block_commutator_vanishes(d):
    for seed in range(100):
        h = random_hermitian(d, 1000 * d + seed)
        p = random_projector(d, max(1, (seed % (d - 1)) + 1), 5000 * d + seed)
        assert block_commutator_residual(decompose(h, p)) <= 1e-12 * frobenius(h) ** 2


def test_block_commutator_trivial_cases():
    h = np.diag([1.0, 2.0, 3.0]).astype(complex)
    assert block_commutator_residual(decompose(h, coordinate_projector(3, [0]))) == 0.0
    assert block_commutator_residual(decompose(np.eye(3), random_projector(3, 2, 0))) <= 1e-15


# --- effective Hamiltonian ----------------------------------------------------


def test_effective_hamiltonian_uncoupled():
    h = np.diag([0.5, -1.0, 2.0]).astype(complex)
    b = decompose(h, coordinate_projector(3, [0]))
    for e in (-3.0, 0.1, 5.0 + 1j):
        np.testing.assert_allclose(effective_hamiltonian(b, e), [[0.5]], atol=1e-15)


@pytest.mark.parametrize("delta,g,e", [(1.0, 2.0, 3.5), (0.0, 1.0, -0.3), (-2.0, 0.5, 1.0 + 0.2j)])
def test_effective_hamiltonian_two_level(delta, g, e):
    heff = effective_hamiltonian(decompose(two_level(delta, g), E0), e)
    assert heff.shape == (1, 1)
    assert heff[0, 0] == pytest.approx(g**2 / (e - delta), rel=1e-14)


def test_effective_hamiltonian_pole():
    with pytest.raises(ResolventSingular):
        effective_hamiltonian(decompose(two_level(1.0, 2.0), E0), 1.0)


# --- Feshbach eigen-consistency -----------------------------------------------


def test_feshbach_sigma_x():
    checks = feshbach_eigenconsistency(two_level(0.0, 1.0), E0)
    assert sorted(c.energy for c in checks) == pytest.approx([-1, 1], abs=1e-14)
    assert all(c.residual <= 1e-12 for c in checks)


def test_feshbach_block_diagonal():
    h = np.zeros((4, 4), dtype=complex)
    h[:2, :2] = random_hermitian(2, 3)
    h[2:, 2:] = random_hermitian(2, 4)
    checks = feshbach_eigenconsistency(h, coordinate_projector(4, [0, 1]))
    assert len(checks) == 2
    assert all(c.residual <= 1e-12 for c in checks)


def test_feshbach_hand_solved_quadratic():
    checks = feshbach_eigenconsistency(two_level(1.0, 2.0), E0)
    energies = sorted(c.energy for c in checks)
    assert energies == pytest.approx([(1 - math.sqrt(17)) / 2, (1 + math.sqrt(17)) / 2], abs=1e-10)
    assert all(c.residual <= 1e-10 for c in checks)
    for c in checks:
        assert c.energy == pytest.approx(4 / (c.energy - 1), abs=1e-10)


def test_feshbach_flags_singular_resolvent():
    # (1, 0, 0) is an eigenvector with E = 1, exactly the H_BB eigenvalue
    h = np.array([[1, 0, 0], [0, 0, 0.5], [0, 0.5, 1]], dtype=complex)
    checks = feshbach_eigenconsistency(h, coordinate_projector(3, [0, 1]))
    flagged = [c for c in checks if c.singular]
    assert len(flagged) == 1 and flagged[0].residual is None
    assert flagged[0].energy == pytest.approx(1.0, abs=1e-14)
    assert all(c.residual <= 1e-12 for c in checks if not c.singular)


@pytest.mark.parametrize("seed", range(50))
def test_feshbach_random_dim6(seed):
    h = random_hermitian(6, 300 + seed)
    checks = feshbach_eigenconsistency(h, random_projector(6, 3, 400 + seed))
    assert len(checks) == 6
    assert all(not c.singular and c.residual <= 1e-8 for c in checks)


def test_subspace_spectrum_negative_control():
    gaps = subspace_spectrum_gaps(np.array([[0, 1], [1, 1]], dtype=complex), E0)
    assert len(gaps) == 1
    assert gaps[0].subspace_eigenvalue == pytest.approx(0.0, abs=1e-15)
    assert gaps[0].nearest_full_eigenvalue == pytest.approx((1 - math.sqrt(5)) / 2, abs=1e-14)
    assert gaps[0].gap > 1e-3


# --- Dirac-Frenkel ------------------------------------------------------------


def test_dirac_frenkel_examples():
    h = random_hermitian(3, 8)
    full = projector_from_basis(list(np.eye(3)))
    assert dirac_frenkel_error(h, full, [0.6, 0.8j, 0]) <= 1e-15
    assert dirac_frenkel_error(SIGMA_X, E0, [1, 0]) == pytest.approx(1.0, abs=1e-15)
    block = np.diag([1.0, 2.0, 3.0]).astype(complex)
    block[0, 1] = block[1, 0] = 0.5
    p = coordinate_projector(3, [0, 1])
    assert dirac_frenkel_error(block, p, [0.6, 0.8, 0]) <= 1e-15


def test_dirac_frenkel_not_in_subspace():
    with pytest.raises(NotInSubspace):
        dirac_frenkel_error(SIGMA_X, E0, [1, 1e-9])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32), st.booleans(), st.data())
def test_dirac_frenkel_invariance_characterization(d, seed, invariant, data):
    r = data.draw(st.integers(1, d - 1))
    p = random_projector(d, r, seed)
    h = random_hermitian(d, seed + 1)
    if invariant:
        q = np.eye(d) - p.operator
        h = p.operator @ h @ p.operator + q @ h @ q
    basis = p.basis()
    rng = np.random.default_rng(seed)
    errors = []
    for _ in range(5):
        c = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        errors.append(dirac_frenkel_error(h, p, basis @ (c / np.linalg.norm(c))))
    leak = subspace_leakage(h, p)
    if invariant:
        assert leak <= 1e-12 and max(errors) <= 1e-12
    else:
        assert leak > 1e-12 and max(errors) > 1e-12
