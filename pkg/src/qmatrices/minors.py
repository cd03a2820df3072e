"""Quantum minors, the quantum determinant and the trace-like generators sigma_i."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Sequence, Tuple

from .ring import Element, QuantumMatrixRing

__all__ = [
    "Permutation",
    "quantum_minor",
    "quantum_det",
    "sigma",
    "sigma_exponents",
    "sigma_monomials",
]


def _inversions(images: Sequence[int]) -> int:
    return sum(1 for a in range(len(images)) for b in range(a + 1, len(images))
               if images[a] > images[b])


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., t-1} given by its images; ``length`` is the inversion count."""

    images: Tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")
        object.__setattr__(self, "length", _inversions(self.images))

    @classmethod
    def all(cls, t: int) -> List["Permutation"]:
        return [cls(p) for p in permutations(range(t))]


def _index_set(ring: QuantumMatrixRing, idx: Sequence[int], what: str) -> Tuple[int, ...]:
    idx = tuple(int(i) for i in idx)
    if not idx:
        raise ValueError(f"{what} must be nonempty")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} must be strictly increasing, got {idx}")
    if idx[0] < 1 or idx[-1] > ring.n:
        raise IndexError(f"{what} {idx} out of range for n={ring.n}")
    return idx


def quantum_minor(ring: QuantumMatrixRing, rows: Sequence[int], cols: Sequence[int]) -> Element:
    """The quantum minor [I|J] = sum over s of (-q)^len(s) x_{i1,j_s(1)} ... x_{it,j_s(t)}."""
    rows = _index_set(ring, rows, "row set")
    cols = _index_set(ring, cols, "column set")
    if len(rows) != len(cols):
        raise ValueError(f"row and column sets differ in size: {rows} vs {cols}")
    minus_q = -ring.q
    total = ring.zero()
    for s in Permutation.all(len(rows)):
        word = [(rows[a], cols[s.images[a]]) for a in range(len(rows))]
        total = total + ring.normalize_word(word, minus_q ** s.length)
    return total


def quantum_det(ring: QuantumMatrixRing) -> Element:
    full = range(1, ring.n + 1)
    return quantum_minor(ring, full, full)


def sigma(ring: QuantumMatrixRing, i: int) -> Element:
    """Sum of all principal i x i quantum minors."""
    if not 1 <= i <= ring.n:
        raise ValueError(f"sigma index {i} out of range 1..{ring.n}")
    total = ring.zero()
    for idx in combinations(range(1, ring.n + 1), i):
        total = total + quantum_minor(ring, idx, idx)
    return total


@lru_cache(maxsize=None)
def sigma_exponents(n: int, d: int) -> Tuple[Tuple[int, ...], ...]:
    """Exponent vectors (e_1..e_n) with sum i*e_i = d, with e_1 descending first."""
    if d < 0:
        raise ValueError("degree must be nonnegative")

    def rec(i: int, remaining: int):
        if i == 0:
            if remaining == 0:
                yield ()
            return
        for e in range(remaining // i, -1, -1):
            for rest in rec(i - 1, remaining - i * e):
                yield rest + (e,)

    # build from the largest part down so e_1 varies slowest in the final order
    return tuple(sorted(rec(n, d), reverse=True))


def sigma_monomials(ring: QuantumMatrixRing, d: int) -> List[Element]:
    """All products sigma_1^e1 ... sigma_n^en of total degree d."""
    sigmas = [sigma(ring, i) for i in range(1, ring.n + 1)]
    out = []
    for exps in sigma_exponents(ring.n, d):
        prod = ring.one()
        for s, e in zip(sigmas, exps):
            if e:
                prod = prod * s ** e
        out.append(prod)
    return out
