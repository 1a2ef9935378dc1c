import random

import pytest

from witforge.bounds import parse_bound
from witforge.engine import DtiwiInstance
from witforge.machines import builtin
from witforge.universe import parse_template


@pytest.fixture
def rng():
    return random.Random(20240901)


@pytest.fixture
def parity_instance():
    """Every ternary string is in the universe; membership = some filling of
    at most log2ceil(n) bits has odd parity."""
    return DtiwiInstance(
        name="parity_any",
        universe=parse_template("{01p}*{n}"),
        verifier=builtin("parity"),
        witness=parse_bound("log2ceil(n + 1)"),
        time=parse_bound("2*n + 8"),
    )


@pytest.fixture
def all_zeros_instance():
    return DtiwiInstance(
        name="zeros_any",
        universe=parse_template("{01p}*{n}"),
        verifier=builtin("all_zeros"),
        witness=parse_bound("log2ceil(n + 1)"),
        time=parse_bound("2*n + 8"),
    )
