import numpy as np
import pytest

from src.quantum_angle.dynamics import EvolutionContext, HermitianGenerator
from src.quantum_angle.hilbert import normalize
from src.quantum_angle.models import LineGrid


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def two_level_ctx():
    return EvolutionContext(HermitianGenerator.diagonal([1.0, -1.0]), 1.0)


@pytest.fixture
def balanced_state():
    return normalize([1.0, 1.0])


@pytest.fixture
def line_grid():
    return LineGrid(1024, 40.0)
