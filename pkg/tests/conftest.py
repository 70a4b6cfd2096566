import numpy as np
import pytest

from multitime_lab.opalg import SIGMA_X, SIGMA_Y, SIGMA_Z


@pytest.fixture
def paulis():
    return SIGMA_X, SIGMA_Y, SIGMA_Z


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
