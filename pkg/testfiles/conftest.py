import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from transform import QuadratureGrid  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def grid():
    """Trapezoid rule wide enough for Gaussian-weighted Hermite integrands"""
    return QuadratureGrid(L=14.0, M=8001)
