import random
from itertools import combinations

import pytest

from qmatrices import (
    QuantumMatrixRing,
    cocommutativity_witness,
    coproduct,
    counit,
    flip,
    is_cocommutative,
    quantum_det,
    quantum_minor,
    sigma,
    sigma_monomials,
    tensor,
)
from qmatrices.qfield import ONE, QScalar, ZERO
from qmatrices.ring import _acc


def triple_left(a):
    """(Delta (x) id) Delta a as {(m1, m2, m3): c}."""
    out = {}
    for (m1, m2), c in coproduct(a).terms.items():
        for (p, r), cc in coproduct(a.ring.monomial(m1)).terms.items():
            _acc(out, (p, r, m2), c * cc)
    return out


def triple_right(a):
    out = {}
    for (m1, m2), c in coproduct(a).terms.items():
        for (p, r), cc in coproduct(a.ring.monomial(m2)).terms.items():
            _acc(out, (m1, p, r), c * cc)
    return out


def test_coproduct_examples(rings):
    R = rings[2]
    x = R.gen
    assert coproduct(x(1, 1)) == tensor(x(1, 1), x(1, 1)) + tensor(x(1, 2), x(2, 1))
    assert coproduct(R.one()) == tensor(R.one(), R.one())
    det = quantum_det(R)
    assert coproduct(det) == tensor(det, det)


def test_counit_examples(rings):
    assert counit(rings[2].gen(1, 2)) == ZERO
    for n in (1, 2, 3):
        assert counit(quantum_det(rings[n])) == ONE
    assert counit(sigma(rings[3], 1)) == QScalar(3)


def test_cocommutativity_examples(rings):
    R = rings[2]
    assert is_cocommutative(sigma(R, 1))
    assert not is_cocommutative(R.gen(1, 2))
    assert is_cocommutative(R.one())
    pair, lhs, rhs = cocommutativity_witness(R.gen(1, 2))
    assert lhs != rhs
    assert cocommutativity_witness(sigma(R, 2)) is None


def test_off_diagonal_generators_not_cocommutative(rings):
    for n in (2, 3):
        R = rings[n]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    assert not is_cocommutative(R.gen(i, j))


@pytest.mark.parametrize("n,d", [(2, 3), (3, 2)])
def test_sigma_monomials_cocommutative(rings, n, d):
    for m in sigma_monomials(rings[n], d):
        assert is_cocommutative(m)


def test_coproduct_is_an_algebra_map():
    rng = random.Random(11)
    for n in (1, 2, 3):
        R = QuantumMatrixRing(n)
        for _ in range(15):
            a, b = R.random_element(rng, 2), R.random_element(rng, 2)
            assert coproduct(a * b) == coproduct(a) * coproduct(b)


def test_coassociativity():
    rng = random.Random(12)
    for n in (2, 3):
        R = QuantumMatrixRing(n)
        samples = R.gens() + [R.random_element(rng, homogeneous=2) for _ in range(5)]
        for a in samples:
            assert triple_left(a) == triple_right(a)


def test_counit_laws():
    rng = random.Random(13)
    for n in (1, 2, 3):
        R = QuantumMatrixRing(n)
        for _ in range(10):
            a = R.random_element(rng, 3)
            left = R.zero()
            right = R.zero()
            for (m1, m2), c in coproduct(a).terms.items():
                left = left + R.monomial(m2, c * counit(R.monomial(m1)))
                right = right + R.monomial(m1, c * counit(R.monomial(m2)))
            assert left == a == right


def test_flip_is_an_involution(rings):
    t = coproduct(rings[2].gen(1, 2) * rings[2].gen(2, 1))
    assert flip(flip(t)) == t


@pytest.mark.parametrize("t", [1, 2, 3])
def test_minor_coproduct_identity(rings, t):
    R = rings[3]
    subsets = list(combinations((1, 2, 3), t))
    for I in subsets:
        for J in subsets:
            expected = None
            for K in subsets:
                term = tensor(quantum_minor(R, I, K), quantum_minor(R, K, J))
                expected = term if expected is None else expected + term
            assert coproduct(quantum_minor(R, I, J)) == expected
