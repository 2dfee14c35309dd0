import mpmath
import pytest

mpmath.mp.dps = 60


def mp_sign(x) -> int:
    # values here are either exactly zero or far from it at 60 digits
    if abs(x) < mpmath.mpf(10) ** -40:
        return 0
    return 1 if x > 0 else -1


@pytest.fixture
def mpsign():
    return mp_sign
