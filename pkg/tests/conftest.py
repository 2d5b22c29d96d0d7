from fractions import Fraction

import pytest

from stratlab.polygons import make_polygon

BETA_SS = ((1, 1, 5),)
BETA_1 = ((1, 3, 1), (1, 1, 1), (3, 1, 1))
BETA_2 = ((0, 1, 2), (1, 1, 3), (1, 0, 2))
BETA_MAX = ((0, 1, 4), (1, 1, 1), (1, 0, 4))

OMEGA_24 = "(2,6,8,4)(3,7,9,5)"
OMEGA_14 = "(3,6,4)(5,7,8)"
OMEGA_15 = "(2,6,4,3)(5,7,8,9)"


@pytest.fixture(scope="session")
def betas():
    return {name: make_polygon(5, f) for name, f in
            (("beta_ss", BETA_SS), ("beta_1", BETA_1), ("beta_2", BETA_2), ("beta_max", BETA_MAX))}


def frac(s: str) -> Fraction:
    return Fraction(s)
