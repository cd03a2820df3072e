"""
The centralizer of the quantum trace sigma_1 on graded slices.

``ad sigma_1 : h -> [sigma_1, h]`` raises total degree by one, so its kernel
(the centralizer) splits into finite-dimensional slices. On each slice the
kernel is computed exactly over Q(q) and compared with the span of the
monomials in sigma_1..sigma_n of that degree.

The x_11-filtration (``filtered_degree``) and the diagonal leading action
``gr_ad_sigma1`` are provided alongside, with a direct engine cross-check.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .linalg import nullspace, rank
from .minors import sigma, sigma_monomials
from .qfield import Q, QScalar
from .ring import Element, Monomial, QuantumMatrixRing, _acc

__all__ = [
    "GrMonomial",
    "filtered_degree",
    "gr_ad_sigma1",
    "gr_consistency_check",
    "SliceMatrix",
    "build_slice_matrix",
    "kernel_basis",
    "count_partitions_max_part",
    "CentralizerReport",
    "verify_centralizer_theorem",
]


def filtered_degree(a: Element) -> int:
    """Largest exponent of x_11 among the terms (-1 for zero)."""
    return max((m[0] for m in a.terms), default=-1)


@dataclass(frozen=True)
class GrMonomial:
    """x_11^d * tail, where tail avoids x_11."""

    n: int
    d: int
    tail: Monomial

    def __post_init__(self):
        if len(self.tail) != self.n * self.n or self.tail[0]:
            raise ValueError("tail must be an exponent vector without x_11")

    @property
    def c(self) -> int:
        """Total exponent of the first-row and first-column entries in the tail."""
        n = self.n
        return sum(self.tail[1:n]) + sum(self.tail[i * n] for i in range(1, n))

    @property
    def monomial(self) -> Monomial:
        return (self.d,) + self.tail[1:]

    @classmethod
    def from_monomial(cls, n: int, m: Monomial) -> "GrMonomial":
        return cls(n, m[0], (0,) + tuple(m[1:]))


def gr_ad_sigma1(m: GrMonomial, q=Q) -> Tuple[QScalar, GrMonomial]:
    """Leading action of ad sigma_1: x_11^d m -> (1 - q^-c(m)) x_11^(d+1) m."""
    q = QScalar(0) + q
    scalar = 1 - q ** (-m.c)
    return scalar, GrMonomial(m.n, m.d + 1, m.tail)


def gr_consistency_check(ring: QuantumMatrixRing, d: int, tail: Monomial) -> bool:
    """Compare [sigma_1, x_11^d tail] modulo the x_11-filtration level d with gr_ad_sigma1."""
    gm = GrMonomial(ring.n, d, tuple(tail))
    h = ring.monomial(gm.monomial)
    s1 = sigma(ring, 1)
    comm = s1 * h - h * s1
    top = {m: c for m, c in comm.terms.items() if m[0] > d}
    scalar, image = gr_ad_sigma1(gm, ring.q)
    expected = {image.monomial: scalar} if scalar else {}
    return top == expected


@dataclass
class SliceMatrix:
    """Matrix of ad sigma_1 from the degree-d slice to the degree-(d+1) slice.

    ``entries[(r, c)]`` is the coefficient of ``rows[r]`` in
    ``[sigma_1, cols[c]]``; zero entries are not stored.
    """

    ring: QuantumMatrixRing
    d: int
    rows: List[Monomial]
    cols: List[Monomial]
    entries: Dict[Tuple[int, int], QScalar] = field(repr=False)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def apply(self, vec: Dict[int, QScalar]) -> Dict[int, QScalar]:
        out: Dict[int, QScalar] = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                _acc(out, r, v * vec[c])
        return out

    def column_vector(self, a: Element) -> Dict[int, QScalar]:
        """Coordinates of a (homogeneous of degree d) in the column basis."""
        index = {m: k for k, m in enumerate(self.cols)}
        vec = {}
        for m, c in a.terms.items():
            if m not in index:
                raise ValueError(f"{a} is not in the degree-{self.d} slice")
            vec[index[m]] = c
        return vec

    def evaluate(self, q0) -> Dict[Tuple[int, int], Fraction]:
        return {k: v.evaluate(q0) for k, v in self.entries.items()}

    def to_dense(self) -> List[List[QScalar]]:
        zero = QScalar(0)
        dense = [[zero] * len(self.cols) for _ in self.rows]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense


def build_slice_matrix(ring: QuantumMatrixRing, d: int) -> SliceMatrix:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = ring.n
    cols = ring.slice_monomials(d)
    rows = ring.slice_monomials(d + 1)
    row_index = {m: k for k, m in enumerate(rows)}
    diag = [ring.gen_monomial(i, i) for i in range(1, n + 1)]
    entries: Dict[Tuple[int, int], QScalar] = {}
    for c, m in enumerate(cols):
        image: Dict[Monomial, QScalar] = {}
        for g in diag:
            for mm, v in ring._mono_mul(g, m).items():
                _acc(image, mm, v)
            for mm, v in ring._mono_mul(m, g).items():
                _acc(image, mm, -v)
        for mm, v in image.items():
            entries[(row_index[mm], c)] = v
    return SliceMatrix(ring, d, rows, cols, entries)


def kernel_basis(matrix: SliceMatrix, threads: int | None = None) -> List[Element]:
    """Exact basis of the kernel of ad sigma_1 on the slice, in reduced echelon form."""
    nrows, ncols = matrix.shape
    vectors = nullspace(matrix.entries, nrows, ncols, threads=threads)
    ring = matrix.ring
    return [Element(ring, {matrix.cols[c]: v for c, v in vec.items()}, _clean=True)
            for vec in vectors]


def count_partitions_max_part(d: int, n: int) -> int:
    """Number of partitions of d into parts of size at most n."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    ways = [1] + [0] * d
    for part in range(1, n + 1):
        for total in range(part, d + 1):
            ways[total] += ways[total - part]
    return ways[d]


@dataclass
class CentralizerReport:
    n: int
    d: int
    slice_dim: int
    kernel_dim: int
    partition_count: int
    sigma_rank: int
    sigmas_in_kernel: bool
    passed: bool
    failed_check: Optional[str] = None
    q: str = "q"

    def to_json(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        if out["failed_check"] is None:
            del out["failed_check"]
        return out

    def __str__(self):
        status = "PASS" if self.passed else f"FAIL ({self.failed_check})"
        return (f"n={self.n} d={self.d} q={self.q}: slice_dim={self.slice_dim} "
                f"kernel_dim={self.kernel_dim} partitions={self.partition_count} "
                f"sigma_rank={self.sigma_rank} -> {status}")


def verify_centralizer_theorem(n: int, d: int, q=Q, ring: QuantumMatrixRing | None = None,
                               threads: int | None = None) -> CentralizerReport:
    """Check on the degree-d slice that ker(ad sigma_1) is spanned by the sigma-monomials.

    Three checks, reported in order: the kernel dimension equals the number
    of partitions of d into parts <= n; every sigma-monomial is in the
    kernel; the sigma-monomials have full rank (so, with the first two,
    they span the kernel).
    """
    ring = ring if ring is not None else QuantumMatrixRing(n, q)
    matrix = build_slice_matrix(ring, d)
    kernel = kernel_basis(matrix, threads=threads)
    expected = count_partitions_max_part(d, n)
    monos = sigma_monomials(ring, d)
    vectors = [matrix.column_vector(s) for s in monos]
    in_kernel = all(not matrix.apply(v) for v in vectors)
    sigma_rank = rank(vectors)
    kernel_vectors = [matrix.column_vector(k) for k in kernel]
    joint_rank = rank(kernel_vectors + vectors)

    failed = None
    if len(kernel) != expected:
        failed = "kernel_dim"
    elif not in_kernel:
        failed = "sigma_in_kernel"
    elif sigma_rank != len(kernel) or joint_rank != len(kernel):
        failed = "sigma_span"
    return CentralizerReport(
        n=n, d=d, slice_dim=len(matrix.cols), kernel_dim=len(kernel),
        partition_count=expected, sigma_rank=sigma_rank, sigmas_in_kernel=in_kernel,
        passed=failed is None, failed_check=failed, q=str(ring.q),
    )
