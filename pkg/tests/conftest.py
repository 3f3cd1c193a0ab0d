from __future__ import annotations

import pytest

from gkcodes.curve import get_curve
from gkcodes.field import get_field


@pytest.fixture(scope="session")
def gf64():
    return get_field(2, 6)


@pytest.fixture(scope="session")
def gf729():
    return get_field(3, 6)


@pytest.fixture(scope="session")
def curve2():
    return get_curve(2)


@pytest.fixture(scope="session")
def curve3():
    return get_curve(3)
