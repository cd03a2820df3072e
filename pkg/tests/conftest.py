import random

import pytest
import sympy

from qmatrices import QuantumMatrixRing

SYM_Q = sympy.Symbol("q")


def to_sympy(c):
    """A QScalar as a sympy rational function, built from its coefficient lists."""
    num = sum(int(a) * SYM_Q ** k for k, a in enumerate(c.num.coeffs()))
    den = sum(int(a) * SYM_Q ** k for k, a in enumerate(c.den.coeffs()))
    return num / den


@pytest.fixture(scope="session")
def rings():
    return {n: QuantumMatrixRing(n) for n in (1, 2, 3)}


@pytest.fixture
def rng():
    return random.Random(20241015)
