"""The ten acceptance criteria at full desk scale, all at exact equality.

Each test prints one PASS/FAIL line straight to the terminal, so
``pytest tests/test_acceptance.py -v`` shows the table even without ``-s``.
"""

import pytest

from qmatrices import acceptance as acc

NS = (1, 2, 3)


@pytest.fixture(scope="module")
def shared():
    """Criteria 2, 4 and 9 are reused by the specialisation check."""
    return {}


@pytest.fixture
def show(capsys):
    def emit(result):
        with capsys.disabled():
            print("\n" + result.line())
        return result
    return emit


def test_criterion_01_pbw_soundness(show):
    assert show(acc.check_pbw_soundness(NS, triples=1000, max_deg=3, slice_max_deg=4)).passed


def test_criterion_02_det_central_grouplike(show, shared):
    shared[2] = show(acc.check_det_central_grouplike(NS))
    assert shared[2].passed


def test_criterion_03_minor_coproduct(show):
    assert show(acc.check_minor_coproduct(3, (1, 2, 3))).passed


def test_criterion_04_sigmas(show, shared):
    shared[4] = show(acc.check_sigmas(NS))
    assert shared[4].passed


def test_criterion_05_eta(show):
    assert show(acc.check_eta_factorization(NS, samples=200)).passed


def test_criterion_06_det_minus_one(show):
    assert show(acc.check_det_minus_one_inhomogeneous(NS, samples=100)).passed


def test_criterion_07_sl2_oracle(show):
    assert show(acc.check_sl2_oracle(max_exp=3)).passed


def test_criterion_08_gr_diagonal(show):
    assert show(acc.check_gr_diagonal(NS, max_deg=4)).passed


def test_criterion_09_centralizer(show, shared):
    shared[9] = show(acc.check_centralizer({2: 8, 3: 5}, time_limit=600.0))
    assert shared[9].passed
    assert [(r.n, r.d) for r in shared[9].reports] == [(2, d) for d in range(9)] + [(3, d) for d in range(6)]


def test_criterion_10_specialisation(show, shared):
    result = show(acc.check_specialization(NS, {2: 8, 3: 5}, q0=2, generic=shared))
    assert result.passed
    assert all(r.q == "2" for r in result.reports)
