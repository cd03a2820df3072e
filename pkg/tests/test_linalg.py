import random

import pytest
import sympy

from qmatrices.linalg import connected_blocks, fraction_free_gauss_jordan, nullspace, rank
from qmatrices.qfield import Q, QScalar, ZERO

from conftest import to_sympy


def random_scalar(rng):
    if rng.random() < 0.45:
        return ZERO
    num = sum((Q ** k * rng.randint(-2, 2) for k in range(rng.randint(0, 2))), ZERO) + rng.choice([-1, 1])
    return num / (Q ** rng.randint(0, 1)) if rng.random() < 0.7 else num / (Q + rng.choice([1, 2]))


def random_matrix(rng, rows, cols):
    entries = {}
    for r in range(rows):
        for c in range(cols):
            v = random_scalar(rng)
            if v:
                entries[(r, c)] = v
    # force some rank deficiency now and then
    if rows > 1 and rng.random() < 0.5:
        k = rng.randrange(1, 3)
        for c in range(cols):
            v = entries.get((0, c), ZERO) * k + entries.get((1, c), ZERO)
            if v:
                entries[(rows - 1, c)] = v
            else:
                entries.pop((rows - 1, c), None)
    return entries


def as_sympy(entries, rows, cols):
    M = sympy.zeros(rows, cols)
    for (r, c), v in entries.items():
        M[r, c] = to_sympy(v)
    return M


@pytest.mark.parametrize("seed", range(25))
def test_nullspace_matches_sympy(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 4), rng.randint(1, 5)
    entries = random_matrix(rng, rows, cols)
    M = as_sympy(entries, rows, cols)
    ours = nullspace(entries, rows, cols, threads=1)
    theirs = M.nullspace(simplify=True)
    assert len(ours) == len(theirs)
    # both normalise each vector to 1 in its free column and 0 in the other free columns
    ours_sym = [sympy.Matrix([to_sympy(v.get(c, ZERO)) for c in range(cols)]) for v in ours]
    for u, w in zip(ours_sym, theirs):
        assert (u - w).applyfunc(sympy.simplify) == sympy.zeros(cols, 1)
        assert (M * u).applyfunc(sympy.simplify) == sympy.zeros(rows, 1)


@pytest.mark.parametrize("seed", range(15))
def test_rank_matches_sympy(seed):
    rng = random.Random(100 + seed)
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    entries = random_matrix(rng, rows, cols)
    vectors = [{c: v for (r, c), v in entries.items() if r == row} for row in range(rows)]
    assert rank(vectors) == as_sympy(entries, rows, cols).rank(simplify=True)


def test_nullspace_parallel_matches_serial():
    rng = random.Random(7)
    entries = {}
    # block diagonal: three independent 2x3 blocks
    for b in range(3):
        for r in range(2):
            for c in range(3):
                v = random_scalar(rng) or Q
                entries[(2 * b + r, 3 * b + c)] = v
    serial = nullspace(entries, 6, 9, threads=1)
    parallel = nullspace(entries, 6, 9, threads=3)
    assert serial == parallel and len(serial) == 3


@pytest.mark.parametrize("seed", range(40))
def test_integer_elimination(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 5), rng.randint(1, 6)
    M = [[rng.choice([0, 0, 1, -1, 2, 3, -4]) for _ in range(cols)] for _ in range(rows)]
    S = sympy.Matrix(M)
    pivots, det = fraction_free_gauss_jordan([row[:] for row in M])
    assert len(pivots) == S.rank()
    if rows == cols and len(pivots) == rows:
        assert abs(det) == abs(S.det())


def test_reduced_form_shape():
    M = [[2, 4, 1], [1, 3, 5]]
    pivots, det = fraction_free_gauss_jordan(M)
    assert pivots == [0, 1]
    assert M[0][0] == M[1][1] == det and M[0][1] == 0 and M[1][0] == 0


def test_connected_blocks():
    entries = {(0, 0): Q, (0, 2): Q, (1, 1): Q, (2, 2): Q}
    blocks = connected_blocks(entries, 3, 4)
    assert blocks == [([0, 2], [0, 2]), ([1], [1]), ([], [3])]


def test_polynomial_pivots_stay_polynomial():
    # entries in Z[q] with a pivot that does not divide the others
    entries = {(0, 0): Q + 1, (0, 1): Q ** 2, (1, 0): QScalar(2), (1, 1): Q - 1, (1, 2): QScalar(1)}
    (v,) = nullspace(entries, 2, 3, threads=1)
    for r in range(2):
        total = sum((entries.get((r, c), ZERO) * v.get(c, ZERO) for c in range(3)), ZERO)
        assert not total
    assert v[2] == 1
    # by hand: v1 = (q + 1)/(q^2 + 1), v0 = -q^2/(q^2 + 1)
    assert v[1] == (Q + 1) / (Q ** 2 + 1)
    assert v[0] == -Q ** 2 / (Q ** 2 + 1)
