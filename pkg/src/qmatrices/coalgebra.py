"""
Bialgebra structure of O_q(M_n): coproduct, counit and the tensor flip.

Tensor legs are multiplied independently, ``(a (x) b)(c (x) d) = ac (x) bd``.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .qfield import ONE, QScalar
from .ring import Element, Monomial, QuantumMatrixRing, _acc, format_term, monomial_str

__all__ = [
    "TensorElement",
    "coproduct",
    "counit",
    "flip",
    "is_cocommutative",
    "cocommutativity_witness",
    "tensor",
]

Pair = Tuple[Monomial, Monomial]


class TensorElement:
    """A sparse element of A (x) A with both legs in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: QuantumMatrixRing, terms: Dict[Pair, QScalar]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            _acc(terms, k, c)
        return TensorElement(self.ring, terms)

    def __neg__(self):
        return TensorElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        ring = self.ring
        out: Dict[Pair, QScalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                left = ring._mono_mul(a1, a2)
                right = ring._mono_mul(b1, b2)
                c12 = c1 * c2
                for ma, ca in left.items():
                    cc = c12 * ca
                    for mb, cb in right.items():
                        _acc(out, (ma, mb), cc * cb)
        return TensorElement(ring, out)

    def map_legs(self, f, g) -> "TensorElement":
        """Apply linear maps (Element -> Element) to the two legs."""
        out = TensorElement(self.ring, {})
        for (a, b), c in self.terms.items():
            out = out + tensor(f(self.ring.monomial(a)), g(self.ring.monomial(b))).scale(c)
        return out

    def scale(self, c) -> "TensorElement":
        return TensorElement(self.ring, {k: c * v for k, v in self.terms.items()})

    def items(self):
        def key(kv):
            (a, b), _ = kv
            return (-sum(a) - sum(b), tuple(-e for e in a), tuple(-e for e in b))
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        n, name = self.ring.n, self.ring.name
        out = ""
        for (a, b), c in self.items():
            t = format_term(c, f"{monomial_str(a, n, name)} (x) {monomial_str(b, n, name)}")
            if not out:
                out = t
            elif t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out or "0"

    __repr__ = __str__


def tensor(a: Element, b: Element) -> TensorElement:
    """The simple tensor a (x) b."""
    if a.ring != b.ring:
        raise ValueError("tensor legs must live in the same ring")
    out: Dict[Pair, QScalar] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            out[(ma, mb)] = ca * cb
    return TensorElement(a.ring, out)


def _monomial_coproduct(ring: QuantumMatrixRing, m: Monomial) -> Dict[Pair, QScalar]:
    cache = ring._coproduct_cache
    hit = cache.get(m)
    if hit is not None:
        return hit
    unit = ring.unit_monomial()
    terms: Dict[Pair, QScalar] = {(unit, unit): ONE}
    for g, e in enumerate(m):
        for _ in range(e):
            step: Dict[Pair, QScalar] = {}
            i, j = divmod(g, ring.n)
            for (a, b), c in terms.items():
                for k in range(ring.n):
                    left = ring._mono_gen(a, i * ring.n + k)
                    right = ring._mono_gen(b, k * ring.n + j)
                    for ma, ca in left.items():
                        cc = c * ca
                        for mb, cb in right.items():
                            _acc(step, (ma, mb), cc * cb)
            terms = step
    cache[m] = terms
    return terms


def coproduct(a: Element) -> TensorElement:
    """Delta extended multiplicatively from Delta(x_ij) = sum_k x_ik (x) x_kj."""
    out: Dict[Pair, QScalar] = {}
    for m, c in a.terms.items():
        for pair, cc in _monomial_coproduct(a.ring, m).items():
            _acc(out, pair, c * cc)
    return TensorElement(a.ring, out)


def counit(a: Element) -> QScalar:
    """epsilon(x_ij) = delta_ij, extended as an algebra map."""
    n = a.ring.n
    total = QScalar(0)
    for m, c in a.terms.items():
        if all(e == 0 for g, e in enumerate(m) if g // n != g % n):
            total = total + c
    return total


def flip(t: TensorElement) -> TensorElement:
    return TensorElement(t.ring, {(b, a): c for (a, b), c in t.terms.items()})


def cocommutativity_witness(a: Element) -> Optional[Tuple[Pair, QScalar, QScalar]]:
    """First tensor-basis pair where Delta(a) and flip(Delta(a)) differ, or None."""
    delta = coproduct(a)
    flipped = flip(delta)
    zero = QScalar(0)
    for pair, _ in (delta - flipped).items():
        return pair, delta.terms.get(pair, zero), flipped.terms.get(pair, zero)
    return None


def is_cocommutative(a: Element) -> bool:
    delta = coproduct(a)
    return delta == flip(delta)
