"""
Quantum matrices O_q(M_n) in the ordered-monomial (PBW) basis.

A monomial is a tuple of n*n nonnegative exponents in row-major order,
``(k_11, k_12, ..., k_1n, k_21, ..., k_nn)``; it stands for the ordered
product ``x_11^k_11 x_12^k_12 ... x_nn^k_nn``. Elements are sparse maps from
monomials to nonzero :class:`~qmatrices.qfield.QScalar` coefficients.

Multiplication inserts one generator at a time into an ordered monomial,
rewriting each out-of-order pair ``x_kl x_ij`` with ``(i, j) < (k, l)`` by

* ``x_ij x_kl - (q - 1/q) x_il x_kj``   when ``i < k`` and ``j < l``,
* ``q^-1 x_ij x_kl``                   when ``i = k`` or ``j = l``,
* ``x_ij x_kl``                        otherwise.
"""

from __future__ import annotations

import random
from math import comb
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .qfield import ONE, Q, QScalar, as_scalar

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, QScalar]

__all__ = [
    "QuantumMatrixRing",
    "Element",
    "Monomial",
    "commutator",
    "monomial_degree",
    "monomial_str",
    "slice_dimension",
]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def slice_dimension(n: int, d: int) -> int:
    """Number of ordered monomials of total degree d in n*n variables."""
    return comb(d + n * n - 1, n * n - 1)


def monomial_str(m: Monomial, n: int, name: str = "x") -> str:
    factors = []
    for g, e in enumerate(m):
        if e:
            i, j = divmod(g, n)
            f = f"{name}[{i + 1},{j + 1}]"
            factors.append(f if e == 1 else f"{f}^{e}")
    return "*".join(factors) if factors else "1"


def _term_order(m: Monomial):
    # higher degree first, then lexicographically larger exponent vector first
    return (-sum(m), tuple(-e for e in m))


def _compositions(total: int, parts: int) -> Iterator[Monomial]:
    """Exponent vectors of the given total, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class QuantumMatrixRing:
    """The algebra O_q(M_n) over Q(q), with deformation parameter ``q``.

    ``q`` defaults to the indeterminate; passing ``1/q`` gives O_{q^-1}(M_n)
    and passing an integer constant gives the specialised algebra over Q.
    """

    def __init__(self, n: int, q=Q, name: str = "x"):
        if n < 1:
            raise ValueError(f"matrix size must be positive, got {n}")
        self.n = n
        self.q = as_scalar(q)
        self.name = name
        self.ngens = n * n
        self._unit = (0,) * self.ngens
        self._skew = self.q - self.q.inverse()
        self._qinv = self.q.inverse()
        self._gen_cache: Dict[Tuple[Monomial, int], Terms] = {}
        self._mul_cache: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self._coproduct_cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, QuantumMatrixRing) and (self.n, self.q) == (other.n, other.q)

    def __hash__(self):
        return hash((self.n, self.q))

    def __repr__(self):
        return f"QuantumMatrixRing(n={self.n}, q={self.q})"

    def clear_cache(self):
        self._gen_cache.clear()
        self._mul_cache.clear()
        self._coproduct_cache.clear()

    # construction -----------------------------------------------------------

    def gen_index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"generator x[{i},{j}] out of range for n={self.n}")
        return (i - 1) * self.n + (j - 1)

    def gen_pair(self, g: int) -> Tuple[int, int]:
        i, j = divmod(g, self.n)
        return i + 1, j + 1

    def unit_monomial(self) -> Monomial:
        return self._unit

    def gen_monomial(self, i: int, j: int) -> Monomial:
        m = [0] * self.ngens
        m[self.gen_index(i, j)] = 1
        return tuple(m)

    def element(self, terms) -> "Element":
        return Element(self, terms)

    def zero(self) -> "Element":
        return Element(self, {}, _clean=True)

    def one(self) -> "Element":
        return Element(self, {self._unit: ONE}, _clean=True)

    def scalar(self, c) -> "Element":
        return Element(self, {self._unit: as_scalar(c)})

    def gen(self, i: int, j: int) -> "Element":
        return Element(self, {self.gen_monomial(i, j): ONE}, _clean=True)

    def monomial(self, m: Sequence[int], c=ONE) -> "Element":
        m = tuple(m)
        if len(m) != self.ngens or min(m) < 0:
            raise ValueError(f"bad exponent vector {m} for n={self.n}")
        return Element(self, {m: as_scalar(c)})

    def gens(self) -> List["Element"]:
        return [self.gen(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]

    def slice_monomials(self, d: int) -> List[Monomial]:
        """All ordered monomials of total degree d, degree-lex (descending)."""
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return list(_compositions(d, self.ngens))

    def normalize_word(self, word: Iterable[Tuple[int, int]], c=ONE) -> "Element":
        """Rewrite ``c * x_{w1} x_{w2} ...`` into the ordered basis."""
        gens = [self.gen_index(i, j) for i, j in word]
        terms: Terms = {self._unit: as_scalar(c)}
        for g in gens:
            new: Terms = {}
            for m, coef in terms.items():
                for mm, cc in self._mono_gen(m, g).items():
                    _acc(new, mm, coef * cc)
            terms = new
        return Element(self, terms)

    # the rewriting core ------------------------------------------------------

    def _swap(self, h: int, g: int):
        """Express x_h x_g (g < h) as ordered pairs: list of (coef, a, b) with a <= b."""
        i, j = divmod(g, self.n)
        k, l = divmod(h, self.n)
        if i < k and j < l:
            return ((ONE, g, h), (-self._skew, i * self.n + l, k * self.n + j))
        if i == k or j == l:
            return ((self._qinv, g, h),)
        return ((ONE, g, h),)

    def _mono_gen(self, m: Monomial, g: int) -> Terms:
        """Normal form of (ordered monomial m) * x_g."""
        key = (m, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        h = _last_gen(m)
        if h < 0 or h <= g:
            mm = list(m)
            mm[g] += 1
            out = {tuple(mm): ONE}
        else:
            rest = list(m)
            rest[h] -= 1
            rest = tuple(rest)
            out: Terms = {}
            for coef, a, b in self._swap(h, g):
                for ma, ca in self._mono_gen(rest, a).items():
                    cab = coef * ca
                    for mb, cb in self._mono_gen(ma, b).items():
                        _acc(out, mb, cab * cb)
        self._gen_cache[key] = out
        return out

    def _mono_mul(self, m1: Monomial, m2: Monomial) -> Terms:
        """Normal form of the product of two ordered monomials."""
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        g = _first_gen(m2)
        if g < 0:
            out = {m1: ONE}
        elif _last_gen(m1) <= g:
            out = {tuple(a + b for a, b in zip(m1, m2)): ONE}
        else:
            rest = list(m2)
            rest[g] -= 1
            rest = tuple(rest)
            out = {}
            for m, c in self._mono_gen(m1, g).items():
                for mm, cc in self._mono_mul(m, rest).items():
                    _acc(out, mm, c * cc)
        self._mul_cache[key] = out
        return out

    # random elements for property checks ---------------------------------------

    def random_element(self, rng: random.Random, max_deg: int = 2, max_terms: int = 3,
                       homogeneous: int | None = None, nonzero: bool = False) -> "Element":
        """A random element with small integer-times-q-power coefficients."""
        while True:
            terms: Terms = {}
            for _ in range(rng.randint(1, max_terms)):
                d = homogeneous if homogeneous is not None else rng.randint(0, max_deg)
                m = [0] * self.ngens
                for _ in range(d):
                    m[rng.randrange(self.ngens)] += 1
                c = self.q ** rng.randint(-2, 2) * rng.choice([-3, -2, -1, 1, 2, 3])
                _acc(terms, tuple(m), c)
            el = Element(self, terms)
            if el or not nonzero:
                return el


def _acc(terms: Terms, m: Monomial, c: QScalar):
    old = terms.get(m)
    if old is None:
        if c:
            terms[m] = c
    else:
        new = old + c
        if new:
            terms[m] = new
        else:
            del terms[m]


def _last_gen(m: Monomial) -> int:
    for g in range(len(m) - 1, -1, -1):
        if m[g]:
            return g
    return -1


def _first_gen(m: Monomial) -> int:
    for g, e in enumerate(m):
        if e:
            return g
    return -1


class Element:
    """An element of O_q(M_n) in normal form (immutable)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: QuantumMatrixRing, terms, _clean: bool = False):
        self.ring = ring
        if not _clean:
            terms = {tuple(m): as_scalar(c) for m, c in dict(terms).items()}
            terms = {m: c for m, c in terms.items() if c}
        self.terms: Terms = terms
        self._hash = None

    # structure -------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ring.n

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(monomial, coefficient) pairs in canonical order."""
        return sorted(self.terms.items(), key=lambda t: _term_order(t[0]))

    def coefficient(self, m: Monomial) -> QScalar:
        return self.terms.get(tuple(m), QScalar(0))

    def degree(self) -> int:
        """Largest total degree of a nonzero term (-1 for zero)."""
        return max((sum(m) for m in self.terms), default=-1)

    def components(self) -> Dict[int, "Element"]:
        """Homogeneous components keyed by total degree."""
        parts: Dict[int, Terms] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Element(self.ring, parts[d], _clean=True) for d in sorted(parts)}

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def scalar_value(self) -> QScalar:
        """The coefficient of 1, requiring the element to be a scalar."""
        if any(sum(m) for m in self.terms):
            raise ValueError(f"{self} is not a scalar")
        return self.terms.get(self.ring.unit_monomial(), QScalar(0))

    def map_coefficients(self, f) -> "Element":
        return Element(self.ring, {m: f(c) for m, c in self.terms.items()})

    def evaluate(self, q0) -> Dict[Monomial, object]:
        """Coefficients evaluated at a rational q0."""
        return {m: c.evaluate(q0) for m, c in self.terms.items()}

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Element"):
        if self.ring != other.ring:
            raise ValueError(f"mismatched rings: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.ring.scalar(c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc(terms, m, c)
        return Element(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = as_scalar(c)
        if not c:
            return self.ring.zero()
        return Element(self.ring, {m: c * v for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = as_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        ring = self.ring
        out: Terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in ring._mono_mul(m1, m2).items():
                    _acc(out, m, c12 * c)
        return Element(ring, out, _clean=True)

    def __rmul__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in O_q(M_n)")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison and printing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.terms == other.terms
        c = as_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self == self.ring.scalar(c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_terms(self.items(), self.ring.n, self.ring.name)

    def __repr__(self):
        return f"Element(n={self.n}, {self})"

    def to_json(self) -> list:
        return [
            {"coeff": c.to_json(),
             "mono": [[*self.ring.gen_pair(g), e] for g, e in enumerate(m) if e]}
            for m, c in self.items()
        ]


def format_term(c: QScalar, body: str) -> str:
    """Render ``c * body``; ``body`` is a monomial string or '1'.

    A negative leading numerator coefficient is pulled out in front, so
    joined sums read ``a - (q^2 - 1)*b`` rather than ``a + (-q^2 + 1)*b``.
    """
    if int(c.num.leading_coefficient()) < 0:
        return "-" + format_term(-c, body)
    if body == "1":
        s = str(c)
        return f"({s})" if " " in s else s
    if c.is_one():
        return body
    s = str(c)
    if c.is_single_term() or (not c.den.is_one() and " " not in s and "(" not in s):
        return f"{s}*{body}"
    return f"({s})*{body}"


def format_terms(items, n: int, name: str = "x") -> str:
    out = ""
    for m, c in items:
        t = format_term(c, monomial_str(m, n, name))
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out or "0"


def commutator(a: Element, b: Element) -> Element:
    """[a, b] = ab - ba."""
    return a * b - b * a
