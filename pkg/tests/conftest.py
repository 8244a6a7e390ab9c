import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from akblocks.akalgebra import AKParams, AlgebraAnalysis  # noqa: E402

INSTANCE_A = (7, 2, (0, 1), 2)
INSTANCE_B = (5, 4, (0, 0), 1)


@pytest.fixture(scope="session")
def analysis_a():
    return AlgebraAnalysis(AKParams.make(*INSTANCE_A))


@pytest.fixture(scope="session")
def analysis_b():
    return AlgebraAnalysis(AKParams.make(*INSTANCE_B))


@pytest.fixture(scope="session")
def mirror_a():
    return AlgebraAnalysis(AKParams.make(*INSTANCE_A).mirror())
