import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitime_lab.errors import DimensionMismatch, NotNormalized
from multitime_lab.opalg import SIGMA_X, SIGMA_Z, is_hermitian, random_hermitian, random_state
from multitime_lab.tensorprod import (
    BipartiteState,
    TensorDecomposition,
    assemble,
    entanglement_entropy,
    evolve_full,
    interaction_entanglement_sweep,
    product_ansatz_residual,
    schmidt_spectrum,
)
from oracles import ENTROPY_SXSX_PI_4, expm_ref, kron_ref

UP = np.array([1, 0], dtype=complex)
BELL = BipartiteState(2, 2, np.array([1, 0, 0, 1]) / math.sqrt(2))
ISING = TensorDecomposition(SIGMA_Z, SIGMA_Z, kron_ref(SIGMA_X, SIGMA_X))


def test_assemble_examples():
    np.testing.assert_array_equal(assemble(TensorDecomposition(SIGMA_Z, SIGMA_Z)), np.diag([2, 0, 0, -2]))
    j = random_hermitian(6, 3)
    np.testing.assert_array_equal(assemble(TensorDecomposition(np.zeros((2, 2)), np.zeros((3, 3)), j)), j)
    h = assemble(TensorDecomposition(random_hermitian(2, 1), random_hermitian(3, 2), j))
    assert is_hermitian(h)


def test_assemble_matches_reference():
    ha, hb, j = random_hermitian(3, 4), random_hermitian(2, 5), random_hermitian(6, 6)
    ref = kron_ref(ha, np.eye(2)) + kron_ref(np.eye(3), hb) + j
    np.testing.assert_allclose(assemble(TensorDecomposition(ha, hb, j)), ref, atol=1e-15)


def test_interaction_dim_checked():
    with pytest.raises(DimensionMismatch):
        TensorDecomposition(SIGMA_Z, SIGMA_Z, np.eye(3))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**32), st.floats(-20, 20))
def test_zero_interaction_factorizes(da, db, seed, t):
    rng = np.random.default_rng(seed)
    dec = TensorDecomposition(random_hermitian(da, seed), random_hermitian(db, seed + 1))
    assert product_ansatz_residual(dec, random_state(da, rng), random_state(db, rng), t) <= 1e-12


def test_product_residual_zero_time():
    assert product_ansatz_residual(ISING, UP, UP, 0.0) == 0.0


def test_product_residual_first_order_ising():
    t = 1e-3
    assert product_ansatz_residual(ISING, UP, UP, t) / t == pytest.approx(1.0, rel=0.05)


def test_product_residual_requires_normalized():
    with pytest.raises(NotNormalized):
        product_ansatz_residual(ISING, [1, 1], UP, 0.1)


@pytest.mark.parametrize("seed", range(20))
def test_first_order_law_random(seed):
    rng = np.random.default_rng(seed)
    da, db = 2 + seed % 2, 2 + (seed // 2) % 2
    j = random_hermitian(da * db, 700 + seed)
    j /= np.linalg.norm(j)
    dec = TensorDecomposition(random_hermitian(da, 500 + seed), random_hermitian(db, 600 + seed), j)
    pa, pb = random_state(da, rng), random_state(db, rng)
    t = 1e-3
    target = np.linalg.norm(j @ np.kron(pa, pb))
    assert product_ansatz_residual(dec, pa, pb, t) / t == pytest.approx(target, rel=0.05)


def test_schmidt_examples():
    prod = BipartiteState.product(UP, np.array([0.6, 0.8j]))
    np.testing.assert_allclose(schmidt_spectrum(prod), [1, 0], atol=1e-15)
    np.testing.assert_allclose(schmidt_spectrum(BELL), [1 / math.sqrt(2)] * 2, atol=1e-15)
    np.testing.assert_array_equal(schmidt_spectrum(BipartiteState(2, 3, np.zeros(6))), np.zeros(2))


def test_bipartite_index_convention():
    # amplitude i * d_b + j belongs to |i>_A |j>_B
    amps = np.zeros(6, dtype=complex)
    amps[1 * 3 + 2] = 1
    m = BipartiteState(2, 3, amps).matrix()
    assert m[1, 2] == 1 and np.count_nonzero(m) == 1


def test_entropy_examples():
    assert entanglement_entropy(BipartiteState.product(UP, UP)) == 0.0
    assert entanglement_entropy(BELL) == pytest.approx(math.log(2), abs=1e-12)
    for d in (2, 3, 5):
        maxent = BipartiteState(d, d, np.eye(d).reshape(-1) / math.sqrt(d))
        assert entanglement_entropy(maxent) == pytest.approx(math.log(d), abs=1e-12)
    with pytest.raises(NotNormalized):
        entanglement_entropy(BipartiteState(2, 2, np.ones(4)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32))
def test_schmidt_and_entropy_bounds(da, db, seed):
    psi = BipartiteState(da, db, random_state(da * db, np.random.default_rng(seed)))
    s = schmidt_spectrum(psi)
    assert np.all(s >= 0) and np.all(np.diff(s) <= 0)
    assert abs(np.sum(s**2) - 1.0) <= 1e-12
    ent = entanglement_entropy(psi)
    assert 0.0 <= ent <= math.log(min(da, db)) + 1e-12


def test_sweep_zero_interaction():
    dec = TensorDecomposition(random_hermitian(2, 1), random_hermitian(3, 2))
    rng = np.random.default_rng(3)
    pts = interaction_entanglement_sweep(dec, random_state(2, rng), random_state(3, rng), np.linspace(0, 5, 11))
    assert all(p.residual <= 1e-12 and p.entropy <= 1e-10 for p in pts)


def test_sweep_origin():
    (p,) = interaction_entanglement_sweep(ISING, UP, UP, [0.0])
    assert (p.t, p.residual, p.entropy) == (0.0, 0.0, 0.0)


def test_sweep_entropy_pinned():
    (p,) = interaction_entanglement_sweep(ISING, UP, UP, [math.pi / 4])
    assert p.entropy == pytest.approx(ENTROPY_SXSX_PI_4, abs=1e-12)


def test_full_evolution_unitary_and_matches_reference():
    dec = TensorDecomposition(random_hermitian(2, 7), random_hermitian(2, 8), random_hermitian(4, 9))
    for t in (0.3, 4.0, 25.0):
        psi = evolve_full(dec, UP, UP, t)
        assert abs(np.linalg.norm(psi) - 1.0) <= 1e-12
    ref = expm_ref(assemble(dec), -0.3j) @ np.kron(UP, UP)
    np.testing.assert_allclose(evolve_full(dec, UP, UP, 0.3), ref, atol=1e-13)
