import math

import numpy as np
import pytest

from app.schemas.core import BeamSplitter


@pytest.fixture
def balanced() -> BeamSplitter:
    return BeamSplitter.balanced()


@pytest.fixture
def tau_grid() -> list[float]:
    """[0, π/2] 의 101 점 (양 끝 포함)"""
    return [float(tau) for tau in np.linspace(0.0, math.pi / 2.0, 101)]
