"""
The acceptance checks, one function per criterion.

Every check is exact (no tolerances) and returns a ``CriterionResult``.
``run_suite`` runs all ten for a given set of matrix sizes and degree bounds;
the defaults reproduce the full desk-scale run.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Sequence

from .centralizer import CentralizerReport, gr_consistency_check, verify_centralizer_theorem
from .coalgebra import coproduct, is_cocommutative, tensor
from .minors import quantum_det, quantum_minor, sigma
from .qfield import Q
from .quotients import (
    CommutativePoly,
    delta_map,
    eta,
    phi,
    sl2_engine_commutator,
    sl2_trace_commutator_formula,
)
from .ring import QuantumMatrixRing

__all__ = [
    "CriterionResult",
    "SuiteConfig",
    "check_pbw_soundness",
    "check_det_central_grouplike",
    "check_minor_coproduct",
    "check_sigmas",
    "check_eta_factorization",
    "check_det_minus_one_inhomogeneous",
    "check_sl2_oracle",
    "check_gr_diagonal",
    "check_centralizer",
    "check_specialization",
    "run_suite",
]

FULL_CENTRALIZER_DEGREES = {2: 8, 3: 5}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    reports: List[CentralizerReport] = field(default_factory=list, repr=False)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.1f}s) {self.detail}".rstrip()

    def to_json(self) -> dict:
        out = {"criterion": self.number, "title": self.title, "pass": self.passed,
               "detail": self.detail, "seconds": round(self.seconds, 3)}
        if self.reports:
            out["centralizer"] = [r.to_json() for r in self.reports]
        return out


def _timed(number: int, title: str, body: Callable[[], tuple]) -> CriterionResult:
    start = time.perf_counter()
    passed, detail, *rest = body()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start,
                           rest[0] if rest else [])


def _rings(ns: Sequence[int], q=Q) -> Dict[int, QuantumMatrixRing]:
    return {n: QuantumMatrixRing(n, q) for n in ns}


def check_pbw_soundness(ns=(1, 2, 3), triples: int = 1000, max_deg: int = 3,
                        slice_max_deg: int = 4, seed: int = 1,
                        time_limit: float = 60.0) -> CriterionResult:
    """Associativity on random triples and slice sizes against the binomial count."""
    def body():
        rng = random.Random(seed)
        rings = _rings(ns)
        start = time.perf_counter()
        for t in range(triples):
            ring = rings[ns[t % len(ns)]]
            a, b, c = (ring.random_element(rng, max_deg) for _ in range(3))
            if (a * b) * c != a * (b * c):
                return False, f"associativity fails for n={ring.n}: a={a}, b={b}, c={c}"
        for n, ring in rings.items():
            for d in range(slice_max_deg + 1):
                monos = ring.slice_monomials(d)
                expected = math.comb(d + n * n - 1, n * n - 1)
                if len(monos) != expected or len(set(monos)) != expected:
                    return False, f"slice n={n} d={d} has {len(monos)} monomials, expected {expected}"
        elapsed = time.perf_counter() - start
        if elapsed > time_limit:
            return False, f"took {elapsed:.1f}s, over the {time_limit:.0f}s budget"
        return True, f"{triples} triples, slices d<={slice_max_deg}"
    return _timed(1, "PBW soundness", body)


def check_det_central_grouplike(ns=(1, 2, 3), q=Q) -> CriterionResult:
    def body():
        for n, ring in _rings(ns, q).items():
            det = quantum_det(ring)
            for g in ring.gens():
                if det * g != g * det:
                    return False, f"det does not commute with {g} (n={n})"
            if coproduct(det) != tensor(det, det):
                return False, f"coproduct of det is not det (x) det (n={n})"
        return True, f"n in {list(ns)}"
    return _timed(2, "det central and group-like", body)


def check_minor_coproduct(n: int = 3, sizes=(1, 2, 3)) -> CriterionResult:
    def body():
        ring = QuantumMatrixRing(n)
        count = 0
        for t in sizes:
            if t > n:
                continue
            subsets = list(combinations(range(1, n + 1), t))
            minors = {(rows, cols): quantum_minor(ring, rows, cols)
                      for rows in subsets for cols in subsets}
            for rows in subsets:
                for cols in subsets:
                    expected = None
                    for mid in subsets:
                        term = tensor(minors[(rows, mid)], minors[(mid, cols)])
                        expected = term if expected is None else expected + term
                    if coproduct(minors[(rows, cols)]) != expected:
                        return False, f"fails for I={rows}, J={cols}"
                    count += 1
        return True, f"{count} minors at n={n}"
    return _timed(3, "minor coproduct identity", body)


def check_sigmas(ns=(1, 2, 3), q=Q) -> CriterionResult:
    def body():
        for n, ring in _rings(ns, q).items():
            sigmas = [sigma(ring, i) for i in range(1, n + 1)]
            for i, si in enumerate(sigmas, 1):
                if not is_cocommutative(si):
                    return False, f"sigma({i}) is not cocommutative (n={n})"
                for j, sj in enumerate(sigmas[i:], i + 1):
                    if si * sj != sj * si:
                        return False, f"sigma({i}) and sigma({j}) do not commute (n={n})"
        return True, f"n in {list(ns)}"
    return _timed(4, "sigmas commute and are cocommutative", body)


def check_eta_factorization(ns=(1, 2, 3), samples: int = 200, max_deg: int = 3,
                            seed: int = 5) -> CriterionResult:
    def body():
        for n, ring in _rings(ns).items():
            for i in range(1, n + 1):
                if eta(sigma(ring, i)) != CommutativePoly.elementary(n, i):
                    return False, f"eta(sigma({i})) is not e_{i} (n={n})"
        rng = random.Random(seed)
        rings = _rings([n for n in ns if n >= 2])
        if not rings:
            return True, "no n >= 2 for the factorisation"
        sizes = sorted(rings)
        for s in range(samples):
            ring = rings[sizes[s % len(sizes)]]
            a = ring.random_element(rng, max_deg)
            if eta(a) != delta_map(phi(a)):
                return False, f"eta differs from delta o phi on {a}"
        return True, f"{samples} random elements"
    return _timed(5, "eta on sigmas and eta = delta o phi", body)


def check_det_minus_one_inhomogeneous(ns=(1, 2, 3), samples: int = 100, max_deg: int = 2,
                                      seed: int = 7) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        rings = _rings(ns)
        for s in range(samples):
            ring = rings[ns[s % len(ns)]]
            y = ring.random_element(rng, max_deg, nonzero=True)
            z = y * (quantum_det(ring) - 1)
            if z.is_homogeneous() or len(z.components()) < 2:
                return False, f"y*(det - 1) is homogeneous for y={y}"
        return True, f"{samples} random y"
    return _timed(6, "y*(det - 1) never homogeneous", body)


def _sl2_cases(max_exp: int):
    r = range(max_exp + 1)
    for i in range(1, max_exp + 1):
        for k in r:
            for l in r:
                yield "a-side", dict(i=i, k=k, l=l)
                yield "d-side", dict(j=i, k=k, l=l)
    for k in r:
        for l in r:
            yield "pure", dict(k=k, l=l)


def check_sl2_oracle(max_exp: int = 3) -> CriterionResult:
    def body():
        ring = QuantumMatrixRing(2)
        count = 0
        for shape, exps in _sl2_cases(max_exp):
            if (sl2_trace_commutator_formula(shape, ring=ring, **exps)
                    != sl2_engine_commutator(shape, ring=ring, **exps)):
                return False, f"mismatch for {shape} {exps}"
            count += 1
        return True, f"{count} cases, exponents <= {max_exp}"
    return _timed(7, "SL2 commutator formulas", body)


def check_gr_diagonal(ns=(1, 2, 3), max_deg: int = 4) -> CriterionResult:
    def body():
        count = 0
        for n, ring in _rings(ns).items():
            for total in range(max_deg + 1):
                for m in ring.slice_monomials(total):
                    d, tail = m[0], (0,) + tuple(m[1:])
                    if not gr_consistency_check(ring, d, tail):
                        return False, f"leading term mismatch at n={n}, monomial {m}"
                    count += 1
        return True, f"{count} monomials"
    return _timed(8, "graded action of ad sigma_1 is diagonal", body)


def check_centralizer(degrees: Dict[int, int] = FULL_CENTRALIZER_DEGREES, q=Q,
                      time_limit: float = 600.0, number: int = 9) -> CriterionResult:
    def body():
        reports = []
        start = time.perf_counter()
        for n, top in sorted(degrees.items()):
            ring = QuantumMatrixRing(n, q)
            for d in range(top + 1):
                reports.append(verify_centralizer_theorem(n, d, ring=ring))
        elapsed = time.perf_counter() - start
        bad = [r for r in reports if not r.passed]
        if bad:
            return False, f"first failure: {bad[0]}", reports
        if elapsed > time_limit:
            return False, f"took {elapsed:.1f}s, over the {time_limit:.0f}s budget", reports
        span = ", ".join(f"n={n} d<={top}" for n, top in sorted(degrees.items()))
        return True, f"{len(reports)} slices ({span})", reports
    return _timed(number, "centralizer of sigma_1 is spanned by sigma-monomials", body)


def check_specialization(ns=(1, 2, 3), degrees: Dict[int, int] = FULL_CENTRALIZER_DEGREES,
                         q0: int = 2, generic: Dict[int, CriterionResult] | None = None
                         ) -> CriterionResult:
    """Re-run criteria 2, 4 and 9 in the ring with q = q0 and compare pass/fail."""
    def body():
        base = dict(generic or {})
        if 2 not in base:
            base[2] = check_det_central_grouplike(ns)
        if 4 not in base:
            base[4] = check_sigmas(ns)
        if 9 not in base:
            base[9] = check_centralizer(degrees)
        special = {
            2: check_det_central_grouplike(ns, q=q0),
            4: check_sigmas(ns, q=q0),
            9: check_centralizer(degrees, q=q0),
        }
        differing = [k for k in special if special[k].passed != base[k].passed]
        summary = ", ".join(f"{k}:{'pass' if special[k].passed else 'fail'}" for k in special)
        if differing:
            return False, f"q={q0} outcome differs for criteria {differing} ({summary})"
        return True, f"q={q0}: {summary}", special[9].reports
    return _timed(10, f"specialisation at q={q0}", body)


@dataclass
class SuiteConfig:
    ns: Sequence[int] = (1, 2, 3)
    centralizer_degrees: Dict[int, int] = field(default_factory=lambda: dict(FULL_CENTRALIZER_DEGREES))
    gr_max_deg: int = 4
    minor_n: int = 3
    q0: int = 2

    @classmethod
    def for_size(cls, n: int, max_deg: int) -> "SuiteConfig":
        """The checks restricted to one matrix size, with centralizer slices up to max_deg."""
        if n < 1:
            raise ValueError("n must be at least 1")
        if max_deg < 0:
            raise ValueError("max-deg must be nonnegative")
        return cls(ns=(n,), centralizer_degrees={n: max_deg},
                   gr_max_deg=min(4, max_deg), minor_n=n)


def run_suite(config: SuiteConfig | None = None, report: Callable[[CriterionResult], None] | None = None
              ) -> List[CriterionResult]:
    """Run all criteria in order; ``report`` is called as each one finishes."""
    config = config or SuiteConfig()
    ns = tuple(config.ns)
    steps = [
        lambda: check_pbw_soundness(ns),
        lambda: check_det_central_grouplike(ns),
        lambda: check_minor_coproduct(config.minor_n),
        lambda: check_sigmas(ns),
        lambda: check_eta_factorization(ns),
        lambda: check_det_minus_one_inhomogeneous(ns),
        lambda: check_sl2_oracle(),
        lambda: check_gr_diagonal(ns, config.gr_max_deg),
        lambda: check_centralizer(config.centralizer_degrees),
    ]
    results: List[CriterionResult] = []
    for step in steps:
        results.append(step())
        if report:
            report(results[-1])
    generic = {r.number: r for r in results if r.number in (2, 4, 9)}
    results.append(check_specialization(ns, config.centralizer_degrees, config.q0, generic))
    if report:
        report(results[-1])
    return results
