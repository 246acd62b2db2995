import mpmath
import pytest

from mzvsum import utils
from mzvsum.models import EvalConfig


@pytest.fixture
def expansion_fixtures():
    return utils.read_json_from_assets("fixtures", "expansions.json")


@pytest.fixture
def sequences():
    return utils.read_json_from_assets("fixtures", "sequences.json")


@pytest.fixture
def small_cfg():
    # small enough for property tests, large enough to keep tails below 1e-2
    return EvalConfig(truncation=2_000)


@pytest.fixture(scope="session")
def zeta_ref():
    """
    Returns a function computing the Riemann (or Hurwitz) zeta value with
    mpmath at 30 digits, as a float.
    """

    def _zeta(s: int, a: float = 1.0) -> float:
        with mpmath.workdps(30):
            return float(mpmath.zeta(s, a))

    return _zeta


@pytest.fixture(scope="session")
def pi():
    with mpmath.workdps(30):
        return float(mpmath.pi)
