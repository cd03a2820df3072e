"""
The coefficient field Q(q) of rational functions in the deformation parameter.

Every value is kept as a reduced fraction ``num/den`` of integer polynomials
with ``gcd(num, den) = 1`` and a positive leading coefficient on ``den``, so
two equal field elements always have identical representations (and hashes).
Polynomial arithmetic is delegated to FLINT's ``fmpz_poly``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from flint import fmpz_poly

__all__ = ["QScalar", "PoleError", "Q", "ONE", "ZERO", "as_scalar"]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


_POLY_ZERO = fmpz_poly([])
_POLY_ONE = fmpz_poly([1])

Scalarish = Union["QScalar", int, Fraction]


def _poly_str(p: fmpz_poly) -> str:
    """Print an integer polynomial in q with terms in decreasing degree."""
    coeffs = [int(c) for c in p.coeffs()]
    if not coeffs:
        return "0"
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if deg == 0:
            body = str(a)
        else:
            var = "q" if deg == 1 else f"q^{deg}"
            body = var if a == 1 else f"{a}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _reverse(p: fmpz_poly, degree: int) -> fmpz_poly:
    """Return ``q^degree * p(1/q)``."""
    coeffs = list(p.coeffs())
    coeffs += [0] * (degree + 1 - len(coeffs))
    return fmpz_poly(coeffs[::-1])


class QScalar:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, _canonical=False):
        if not isinstance(num, fmpz_poly):
            num = _coerce_poly(num)
        if not isinstance(den, fmpz_poly):
            den = _coerce_poly(den)
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator in QScalar")
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def q_power(cls, k: int) -> "QScalar":
        """The Laurent monomial q^k (k may be negative)."""
        mono = fmpz_poly([0] * abs(k) + [1])
        if k >= 0:
            return cls(mono, _POLY_ONE, _canonical=True)
        return cls(_POLY_ONE, mono, _canonical=True)

    @classmethod
    def from_fraction(cls, value) -> "QScalar":
        value = Fraction(value)
        return cls(fmpz_poly([value.numerator]), fmpz_poly([value.denominator]))

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q."""
        d = self.den.coeffs()
        return all(c == 0 for c in d[:-1]) and d[-1] == 1

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QScalar(self.num + other.num, _POLY_ONE, _canonical=True)
        if self.den == other.den:
            return QScalar(self.num + other.num, self.den)
        return QScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QScalar(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QScalar(self.num * other.num, _POLY_ONE, _canonical=True)
        return QScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return QScalar(self.den, self.num)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QScalar(self.num ** k, self.den ** k, _canonical=True)

    # q -> 1/q and specialisation ------------------------------------------

    def invert_q(self) -> "QScalar":
        """Substitute q -> 1/q and re-canonicalise."""
        dn, dd = max(self.num.degree(), 0), self.den.degree()
        num = _reverse(self.num, dn) * fmpz_poly([0] * dd + [1])
        den = _reverse(self.den, dd) * fmpz_poly([0] * dn + [1])
        return QScalar(num, den)

    def evaluate(self, q0) -> Fraction:
        """Exact value at the nonzero rational ``q0``."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ValueError("evaluation at q = 0 is not allowed")
        den = _eval_poly(self.den, q0)
        if den == 0:
            raise PoleError(f"{self} has a pole at q = {q0}")
        return _eval_poly(self.num, q0) / den

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self.num.coeffs()[0]) if not self.num.is_zero() else 0,
                        int(self.den.coeffs()[0]))

    # comparison, hashing, printing ------------------------------------------

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    def __str__(self):
        num = _poly_str(self.num)
        if self.den.is_one():
            return num
        if " " in num:
            num = f"({num})"
        den = _poly_str(self.den)
        if " " in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"QScalar({self})"

    def is_single_term(self) -> bool:
        """True for c*q^k (k >= 0) with a unit denominator; prints without parentheses."""
        return self.den.is_one() and sum(1 for c in self.num.coeffs() if c != 0) == 1

    def to_json(self) -> dict:
        """Coefficient lists in ascending powers of q."""
        return {"num": [int(c) for c in self.num.coeffs()] or [0],
                "den": [int(c) for c in self.den.coeffs()]}

    @classmethod
    def from_json(cls, data: dict) -> "QScalar":
        return cls(fmpz_poly(data["num"]), fmpz_poly(data["den"]))


def _coerce_poly(value) -> fmpz_poly:
    if isinstance(value, int):
        return fmpz_poly([value])
    if isinstance(value, (list, tuple)):
        return fmpz_poly(list(value))
    raise TypeError(f"cannot build a polynomial from {value!r}")


def _canonicalize(num: fmpz_poly, den: fmpz_poly):
    if num.is_zero():
        return _POLY_ZERO, _POLY_ONE
    g = num.gcd(den)
    if not g.is_one():
        num = num // g
        den = den // g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _eval_poly(p: fmpz_poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


def as_scalar(value):
    """Coerce ints and Fractions into QScalar; other types give NotImplemented."""
    if isinstance(value, QScalar):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, int):
        return QScalar(fmpz_poly([value]), _POLY_ONE, _canonical=True)
    if isinstance(value, Fraction):
        return QScalar.from_fraction(value)
    return NotImplemented


Q = QScalar.q_power(1)
ONE = QScalar(1)
ZERO = QScalar(0)
