import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from silbound import build_matrix

TOY_POINTS = np.array(
    [
        [1.0, 2.0],
        [2.0, 1.0],
        [1.5, 2.5],
        [6.0, 2.0],
        [6.0, 3.0],
    ]
)


@pytest.fixture(scope="session")
def toy_points():
    return TOY_POINTS.copy()


@pytest.fixture(scope="session")
def toy_delta():
    return build_matrix(TOY_POINTS, "euclidean")
