import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rsmaxwell import ComplexPlaneSeed, CylindricalSeed, RealPlaneSeed


@pytest.fixture
def rng():
    return np.random.default_rng(20240815)


@pytest.fixture
def z_seed():
    return RealPlaneSeed(1.0, (1.0, 0.0, 0.0, 1.0))


@pytest.fixture
def general_real_seed():
    # unit null 4-vector off every coordinate axis
    return RealPlaneSeed(1.3, (1.0, 0.36, 0.48, 0.8))


@pytest.fixture
def complex_seed():
    return ComplexPlaneSeed(0.9, (1.25, 0.75, 0.5, np.sqrt(1.25**2 - 0.75**2 - 0.5**2)))


@pytest.fixture
def cyl_seed():
    return CylindricalSeed(1.1, 1.3, 0.5, 2)
