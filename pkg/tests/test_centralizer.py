from itertools import combinations_with_replacement

import pytest

from qmatrices import (
    QuantumMatrixRing,
    build_slice_matrix,
    count_partitions_max_part,
    filtered_degree,
    gr_ad_sigma1,
    gr_consistency_check,
    kernel_basis,
    sigma,
    verify_centralizer_theorem,
)
from qmatrices.centralizer import GrMonomial
from qmatrices.qfield import Q, ZERO


def brute_partitions(d, n):
    """Count multisets of parts in 1..n summing to d by direct enumeration."""
    count = 0
    for size in range(d + 1):
        for parts in combinations_with_replacement(range(1, n + 1), size):
            count += sum(parts) == d
    return count


# --- partitions ---------------------------------------------------------------

def test_partition_examples():
    assert count_partitions_max_part(4, 2) == 3
    assert count_partitions_max_part(3, 3) == 3
    for n in (1, 2, 5):
        assert count_partitions_max_part(0, n) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_partitions_against_enumeration(n):
    for d in range(11):
        assert count_partitions_max_part(d, n) == brute_partitions(d, n)


def test_partition_argument_errors():
    with pytest.raises(ValueError):
        count_partitions_max_part(-1, 2)
    with pytest.raises(ValueError):
        count_partitions_max_part(3, 0)


# --- graded action --------------------------------------------------------------

def test_gr_examples():
    scalar, image = gr_ad_sigma1(GrMonomial(2, 1, (0, 1, 0, 0)))
    assert scalar == 1 - Q ** -1
    assert image.monomial == (2, 1, 0, 0)
    scalar, _ = gr_ad_sigma1(GrMonomial(2, 0, (0, 0, 0, 1)))
    assert scalar == ZERO
    scalar, _ = gr_ad_sigma1(GrMonomial(2, 0, (0, 1, 1, 0)))
    assert scalar == 1 - Q ** -2


def test_weight_counts_first_row_and_column():
    m = GrMonomial(3, 0, (0, 2, 1, 3, 5, 0, 0, 0, 7))
    assert m.c == 2 + 1 + 3
    with pytest.raises(ValueError):
        GrMonomial(2, 0, (1, 0, 0, 0))


def test_gr_consistency_examples(rings):
    R2, R3 = rings[2], rings[3]
    assert gr_consistency_check(R2, 0, (0, 0, 0, 1))
    assert gr_consistency_check(R2, 1, (0, 1, 0, 0))
    assert gr_consistency_check(R3, 2, (0, 0, 0, 1, 0, 0, 0, 0, 1))
    # the x22 example: the commutator lives entirely in filtration level 0
    x = R2.gen
    comm = sigma(R2, 1) * x(2, 2) - x(2, 2) * sigma(R2, 1)
    assert comm == (Q - Q ** -1) * x(1, 2) * x(2, 1)
    assert filtered_degree(comm) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gr_diagonal_up_to_degree_four(rings, n):
    R = rings[n]
    for total in range(5):
        for m in R.slice_monomials(total):
            assert gr_consistency_check(R, m[0], (0,) + m[1:])


def test_gr_check_detects_a_wrong_scalar(rings, monkeypatch):
    import qmatrices.centralizer as cz
    R = rings[2]
    monkeypatch.setattr(cz, "gr_ad_sigma1", lambda m, q=Q: (1 - q ** -(m.c + 1), GrMonomial(m.n, m.d + 1, m.tail)))
    assert not cz.gr_consistency_check(R, 1, (0, 1, 0, 0))


# --- slice matrices and kernels --------------------------------------------------

def test_slice_matrix_shapes(rings):
    M = build_slice_matrix(rings[2], 0)
    assert M.shape == (4, 1) and not M.entries
    assert build_slice_matrix(rings[3], 2).shape == (165, 45)
    with pytest.raises(ValueError):
        build_slice_matrix(rings[2], -1)


def test_slice_matrix_entries_are_commutator_coefficients(rings, rng):
    R = rings[2]
    M = build_slice_matrix(R, 2)
    s1 = sigma(R, 1)
    for c in rng.sample(range(len(M.cols)), 5):
        h = R.monomial(M.cols[c])
        comm = s1 * h - h * s1
        column = {M.rows[r]: v for (r, cc), v in M.entries.items() if cc == c}
        assert column == comm.terms


def test_kernel_examples(rings):
    (k,) = kernel_basis(build_slice_matrix(rings[2], 0))
    assert k == rings[2].one()
    (k,) = kernel_basis(build_slice_matrix(rings[2], 1))
    assert k == sigma(rings[2], 1)
    (k,) = kernel_basis(build_slice_matrix(rings[3], 1))
    assert k == sigma(rings[3], 1)
    assert len(kernel_basis(build_slice_matrix(rings[2], 2))) == 2
    assert len(kernel_basis(build_slice_matrix(rings[2], 4))) == 3
    assert len(kernel_basis(build_slice_matrix(rings[3], 3))) == 3


def test_kernel_vectors_commute_with_sigma1(rings):
    for n, d in [(2, 3), (3, 2)]:
        R = rings[n]
        s1 = sigma(R, 1)
        for k in kernel_basis(build_slice_matrix(R, d)):
            assert s1 * k == k * s1


@pytest.mark.parametrize("q0", [2, 3])
def test_specialised_kernel_vectors_stay_in_kernel(rings, q0):
    for n, d in [(2, 4), (3, 3)]:
        M = build_slice_matrix(rings[n], d)
        evaluated = M.evaluate(q0)
        for k in kernel_basis(M):
            v = {M.cols.index(m): c.evaluate(q0) for m, c in k.terms.items()}
            image = {}
            for (r, c), a in evaluated.items():
                if c in v:
                    image[r] = image.get(r, 0) + a * v[c]
            assert not any(image.values())


def test_kernel_basis_is_deterministic(rings):
    a = kernel_basis(build_slice_matrix(rings[2], 4))
    b = kernel_basis(build_slice_matrix(QuantumMatrixRing(2), 4))
    assert a == b


# --- the main check ---------------------------------------------------------------

@pytest.mark.parametrize("d", range(9))
def test_centralizer_n2(d):
    report = verify_centralizer_theorem(2, d)
    assert report.passed, report
    assert report.kernel_dim == report.partition_count == report.sigma_rank


@pytest.mark.parametrize("d", range(5))
def test_centralizer_n3(d):
    assert verify_centralizer_theorem(3, d).passed


@pytest.mark.slow
def test_centralizer_n3_degree_five():
    assert verify_centralizer_theorem(3, 5).passed


@pytest.mark.parametrize("d", range(6))
def test_centralizer_n1_is_whole_slice(d):
    report = verify_centralizer_theorem(1, d)
    assert report.passed and report.slice_dim == report.kernel_dim == 1


def test_report_names_first_failing_check():
    # at q = 1 the algebra is commutative, so every slice is its own kernel
    report = verify_centralizer_theorem(2, 2, q=1)
    assert not report.passed
    assert report.failed_check == "kernel_dim"
    assert report.kernel_dim == report.slice_dim == 10
    assert report.to_json()["failed_check"] == "kernel_dim"


def test_report_json():
    data = verify_centralizer_theorem(2, 6).to_json()
    assert data == {"n": 2, "d": 6, "slice_dim": 84, "kernel_dim": 4, "partition_count": 4,
                    "sigma_rank": 4, "sigmas_in_kernel": True, "q": "q", "pass": True}


def test_specialised_run_agrees():
    for d in range(5):
        assert verify_centralizer_theorem(2, d, q=2).passed
    assert verify_centralizer_theorem(3, 3, q=2).passed
