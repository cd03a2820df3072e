"""
Quotients, localisations and comparison maps around O_q(M_n).

* ``SLElement``  residue classes modulo (det_q - 1); equality is decided by
  :func:`sl_ideal_member`.
* ``GLElement``  fractions ``a * det_q^-k`` (det_q is central).
* ``CommutativePoly`` polynomials over Q(q) in commuting t_1..t_n.
* ``BElement``  the corner quotient: O_q(M_n) with the first row and column
  set to zero except the corner entry, stored as O_q(M_{n-1})[t].

``eta`` keeps only diagonal entries (x_ii -> t_i), ``phi`` maps onto the
corner quotient, ``delta_map`` takes the corner quotient to the commutative
ring (so eta = delta_map o phi), and ``gamma`` reverses indices into the
ring with parameter 1/q.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Optional, Tuple

from .linalg import nullspace
from .minors import quantum_det, sigma
from .qfield import ONE, QScalar, as_scalar
from .ring import Element, Monomial, QuantumMatrixRing, _acc, format_term

__all__ = [
    "CommutativePoly",
    "BElement",
    "SLElement",
    "GLElement",
    "eta",
    "phi",
    "delta_map",
    "gamma",
    "sigma_b",
    "homogenize_mod_n",
    "sl_ideal_member",
    "divide_by_det",
    "sl2_normal_form",
    "sl2_monomial",
    "sl2_trace_commutator_formula",
    "sl2_engine_commutator",
]


# ---------------------------------------------------------------------------
# commuting polynomials in t_1, ..., t_n
# ---------------------------------------------------------------------------

class CommutativePoly:
    """A polynomial in commuting variables t_1..t_n with Q(q) coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Tuple[int, ...], QScalar] | None = None):
        self.n = n
        self.terms = {tuple(m): as_scalar(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def variable(cls, n: int, i: int) -> "CommutativePoly":
        m = [0] * n
        m[i - 1] = 1
        return cls(n, {tuple(m): ONE})

    @classmethod
    def constant(cls, n: int, c) -> "CommutativePoly":
        return cls(n, {(0,) * n: as_scalar(c)})

    @classmethod
    def elementary(cls, n: int, i: int, variables=None) -> "CommutativePoly":
        """e_i in the given 1-based variables (default t_1..t_n)."""
        variables = list(range(1, n + 1)) if variables is None else list(variables)
        terms = {}
        for subset in combinations(variables, i):
            m = [0] * n
            for v in subset:
                m[v - 1] = 1
            terms[tuple(m)] = ONE
        return cls(n, terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc(terms, m, c)
        return CommutativePoly(self.n, terms)

    def __neg__(self):
        return CommutativePoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CommutativePoly):
            c = as_scalar(other)
            return CommutativePoly(self.n, {m: c * v for m, v in self.terms.items()})
        out: Dict[Tuple[int, ...], QScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return CommutativePoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CommutativePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def permute(self, perm) -> "CommutativePoly":
        """Substitute t_i -> t_{perm[i-1]} (perm is a 1-based image list)."""
        out = {}
        for m, c in self.terms.items():
            mm = [0] * self.n
            for i, e in enumerate(m):
                mm[perm[i] - 1] += e
            out[tuple(mm)] = c
        return CommutativePoly(self.n, out)

    def is_symmetric(self, variables=None) -> bool:
        """Invariance under all transpositions of the given 1-based variables."""
        variables = list(range(1, self.n + 1)) if variables is None else list(variables)
        for a, b in zip(variables, variables[1:]):
            perm = list(range(1, self.n + 1))
            perm[a - 1], perm[b - 1] = b, a
            if self.permute(perm) != self:
                return False
        return True

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        rendered = []
        for m, c in items:
            body = "*".join(f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                            for i, e in enumerate(m) if e) or "1"
            rendered.append((body, c))
        out = ""
        for body, c in rendered:
            t = format_term(c, body)
            out = t if not out else (out + " - " + t[1:] if t.startswith("-") else out + " + " + t)
        return out or "0"

    __repr__ = __str__

    def to_json(self) -> list:
        """Terms as {coeff, mono} with mono a list of [variable index, exponent]."""
        items = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        return [{"coeff": c.to_json(), "mono": [[i + 1, e] for i, e in enumerate(m) if e]}
                for m, c in items]


def eta(a: Element) -> CommutativePoly:
    """x_ij -> delta_ij t_i."""
    n = a.ring.n
    out: Dict[Tuple[int, ...], QScalar] = {}
    for m, c in a.terms.items():
        if any(e for g, e in enumerate(m) if g // n != g % n):
            continue
        _acc(out, tuple(m[i * n + i] for i in range(n)), c)
    return CommutativePoly(n, out)


# ---------------------------------------------------------------------------
# the corner quotient, stored as O_q(M_{n-1})[t]
# ---------------------------------------------------------------------------

class BElement:
    """An element sum_k t^k f_k of O_q(M_{n-1})[t]; ``n`` is the size of the source ring."""

    __slots__ = ("n", "inner", "coeffs")

    def __init__(self, inner: QuantumMatrixRing, coeffs: Dict[int, Element]):
        self.inner = inner
        self.n = inner.n + 1
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def t(cls, inner: QuantumMatrixRing) -> "BElement":
        return cls(inner, {1: inner.one()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return BElement(self.inner, out)

    def __neg__(self):
        return BElement(self.inner, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: Dict[int, Element] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                p = v1 * v2
                out[k1 + k2] = out[k1 + k2] + p if k1 + k2 in out else p
        return BElement(self.inner, out)

    def __eq__(self, other):
        if not isinstance(other, BElement):
            return NotImplemented
        return self.inner == other.inner and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            v = str(self.coeffs[k])
            tk = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not tk:
                parts.append(v)
            elif v == "1":
                parts.append(tk)
            else:
                parts.append(f"{tk}*({v})")
        out = ""
        for part in parts:
            if not out:
                out = part
            elif part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out or "0"

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"t_power": k, "coeff": self.coeffs[k].to_json()}
                for k in sorted(self.coeffs, reverse=True)]


def phi(a: Element) -> BElement:
    """Kill x_1j, x_i1 (i, j >= 2), send x_11 -> t and x_ij -> x_{i-1,j-1}."""
    n = a.ring.n
    if n < 2:
        raise ValueError("phi needs n >= 2")
    inner = QuantumMatrixRing(n - 1, a.ring.q, a.ring.name)
    coeffs: Dict[int, Dict[Monomial, QScalar]] = {}
    for m, c in a.terms.items():
        if any(m[j] for j in range(1, n)) or any(m[i * n] for i in range(1, n)):
            continue
        tail = tuple(m[i * n + j] for i in range(1, n) for j in range(1, n))
        _acc(coeffs.setdefault(m[0], {}), tail, c)
    return BElement(inner, {k: Element(inner, v, _clean=True) for k, v in coeffs.items()})


def sigma_b(inner: QuantumMatrixRing, i: int) -> BElement:
    """sigma_i of the inner ring O_q(M_{n-1}), as an element of the corner quotient."""
    return BElement(inner, {0: sigma(inner, i)})


def delta_map(b: BElement) -> CommutativePoly:
    """t -> t_1 and the inner eta onto t_2..t_n."""
    n = b.n
    out: Dict[Tuple[int, ...], QScalar] = {}
    for k, v in b.coeffs.items():
        for m, c in eta(v).terms.items():
            _acc(out, (k,) + m, c)
    return CommutativePoly(n, out)


# ---------------------------------------------------------------------------
# gamma: O_q(M_n) -> O_{q^-1}(M_n)
# ---------------------------------------------------------------------------

def gamma(a: Element) -> Element:
    """x_ij -> x'_{n+1-i, n+1-j} into the ring with parameter 1/q.

    The map is linear over the coefficient field, so coefficients are kept;
    only the commutation relations of the target use the inverted parameter.
    Applying gamma twice returns to the original ring and is the identity.
    """
    src = a.ring
    n = src.n
    target = QuantumMatrixRing(n, src.q.inverse(), src.name)
    out: Dict[Monomial, QScalar] = {}
    for m, c in a.terms.items():
        word = []
        for g, e in enumerate(m):
            i, j = divmod(g, n)
            word.extend([(n - i, n - j)] * e)
        for mm, cc in target.normalize_word(word, c).terms.items():
            _acc(out, mm, cc)
    return Element(target, out, _clean=True)


# ---------------------------------------------------------------------------
# O_q(SL_n): the ideal (det_q - 1)
# ---------------------------------------------------------------------------

def _det_powers(ring: QuantumMatrixRing, upto: int):
    det = quantum_det(ring)
    powers = [ring.one()]
    for _ in range(upto):
        powers.append(powers[-1] * det)
    return powers


def homogenize_mod_n(h: Element, k: int) -> Element:
    """Lift h (all degrees = k mod n) to sum_j h_{jn+k} det_q^(d-j), homogeneous of degree dn+k."""
    n = h.ring.n
    k %= n
    comps = h.components()
    if not comps:
        return h
    for e in comps:
        if e % n != k:
            raise ValueError(f"component of degree {e} is not congruent to {k} mod {n}")
    d = max(comps) // n
    powers = _det_powers(h.ring, d)
    total = h.ring.zero()
    for e, part in comps.items():
        j = e // n
        total = total + part * powers[d - j]
    return total


def residue_classes(x: Element) -> Dict[int, Element]:
    """Split x by total degree mod n."""
    n = x.ring.n
    parts: Dict[int, dict] = {}
    for m, c in x.terms.items():
        parts.setdefault(sum(m) % n, {})[m] = c
    return {r: Element(x.ring, parts[r], _clean=True) for r in sorted(parts)}


def sl_ideal_member(x: Element) -> bool:
    """Whether x lies in the two-sided ideal generated by det_q - 1."""
    for r, part in residue_classes(x).items():
        if homogenize_mod_n(part, r):
            return False
    return True


class SLElement:
    """A residue class in O_q(SL_n) = O_q(M_n)/(det_q - 1)."""

    __slots__ = ("representative",)

    def __init__(self, representative: Element):
        self.representative = representative

    @property
    def n(self):
        return self.representative.ring.n

    @property
    def zn_degree(self) -> Optional[int]:
        res = residue_classes(self.representative)
        if len(res) == 1:
            return next(iter(res))
        return 0 if not res else None

    def __add__(self, other):
        return SLElement(self.representative + _rep(other))

    def __sub__(self, other):
        return SLElement(self.representative - _rep(other))

    def __mul__(self, other):
        return SLElement(self.representative * _rep(other))

    def __eq__(self, other):
        if not isinstance(other, (SLElement, Element)):
            return NotImplemented
        return sl_ideal_member(self.representative - _rep(other))

    def __str__(self):
        return f"[{self.representative}]"

    __repr__ = __str__


def _rep(x):
    return x.representative if isinstance(x, SLElement) else x


# ---------------------------------------------------------------------------
# O_q(GL_n): the localisation at det_q
# ---------------------------------------------------------------------------

def divide_by_det(a: Element) -> Optional[Element]:
    """The b with b * det_q = a, or None when det_q does not divide a."""
    ring = a.ring
    n = ring.n
    det = quantum_det(ring)
    total = ring.zero()
    for e, part in a.components().items():
        if e < n:
            return None
        cols = ring.slice_monomials(e - n)
        rows: Dict[Monomial, int] = {}
        entries: Dict[Tuple[int, int], QScalar] = {}
        for ci, m in enumerate(cols):
            for mm, c in (ring.monomial(m) * det).terms.items():
                entries[(rows.setdefault(mm, len(rows)), ci)] = c
        target = len(cols)
        for mm, c in part.terms.items():
            if mm not in rows:
                return None
            entries[(rows[mm], target)] = -c
        kernel = [v for v in nullspace(entries, len(rows), target + 1, threads=1)
                  if v.get(target)]
        if not kernel:
            return None
        v = kernel[0]
        scale = v[target].inverse()
        total = total + Element(ring, {cols[ci]: c * scale for ci, c in v.items() if ci != target})
    return total


class GLElement:
    """numerator * det_q^(-det_power) in O_q(GL_n); kept unreduced."""

    __slots__ = ("numerator", "det_power")

    def __init__(self, numerator: Element, det_power: int = 0):
        if det_power < 0:
            raise ValueError("det_power must be nonnegative")
        self.numerator = numerator
        self.det_power = det_power

    @classmethod
    def det_inverse(cls, ring: QuantumMatrixRing, k: int = 1) -> "GLElement":
        return cls(ring.one(), k)

    @property
    def ring(self):
        return self.numerator.ring

    def _lift(self, other):
        if isinstance(other, GLElement):
            return other
        if isinstance(other, Element):
            return GLElement(other, 0)
        return GLElement(self.ring.scalar(other), 0)

    def _raise_to(self, k: int) -> Element:
        return self.numerator * quantum_det(self.ring) ** (k - self.det_power)

    def __add__(self, other):
        other = self._lift(other)
        k = max(self.det_power, other.det_power)
        return GLElement(self._raise_to(k) + other._raise_to(k), k)

    __radd__ = __add__

    def __neg__(self):
        return GLElement(-self.numerator, self.det_power)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        return GLElement(self.numerator * other.numerator, self.det_power + other.det_power)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_det_only() ** (-k)
        out = GLElement(self.ring.one(), 0)
        for _ in range(k):
            out = out * self
        return out

    def inverse_det_only(self) -> "GLElement":
        """Inverse of det_q^j * det_q^-k type elements (a power of det_q times a scalar)."""
        det = quantum_det(self.ring)
        num = self.numerator
        j = 0
        while num.degree() > 0:
            num = divide_by_det(num)
            if num is None:
                raise ValueError("only powers of det_q are invertible here")
            j += 1
        c = num.scalar_value()
        return GLElement(det ** self.det_power * c.inverse(), j)

    def __eq__(self, other):
        if not isinstance(other, (GLElement, Element)):
            return NotImplemented
        other = self._lift(other)
        det = quantum_det(self.ring)
        return self.numerator * det ** other.det_power == other.numerator * det ** self.det_power

    def canonical(self) -> "GLElement":
        """Divide out det_q from the numerator as long as the division is exact."""
        num, k = self.numerator, self.det_power
        while k > 0 and num:
            smaller = divide_by_det(num)
            if smaller is None:
                break
            num, k = smaller, k - 1
        if not num:
            k = 0
        return GLElement(num, k)

    def __str__(self):
        if self.det_power == 0:
            return str(self.numerator)
        return f"({self.numerator})*det^-{self.det_power}"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# O_q(SL_2): a = x11, b = x12, c = x21, d = x22 with ad - q bc = 1
# ---------------------------------------------------------------------------

def sl2_monomial(ring: QuantumMatrixRing, i: int = 0, k: int = 0, l: int = 0, j: int = 0) -> Monomial:
    if ring.n != 2:
        raise ValueError("SL_2 tools need n = 2")
    return (i, k, l, j)


def sl2_normal_form(x) -> Element:
    """Rewrite into the basis a^i b^k c^l, b^k c^l d^j, b^k c^l (no monomial has both a and d)."""
    x = _rep(x)
    ring = x.ring
    if ring.n != 2:
        raise ValueError("sl2_normal_form needs n = 2")
    q = ring.q
    work: Dict[Monomial, QScalar] = dict(x.terms)
    done: Dict[Monomial, QScalar] = {}
    while work:
        # highest a-exponent + d-exponent first, so each monomial is expanded once
        m = max(work, key=lambda t: (t[0] + t[3], t))
        c = work.pop(m)
        i, k, l, j = m
        if i == 0 or j == 0:
            _acc(done, m, c)
            continue
        # a^i b^k c^l d^j = q^(k+l) a^(i-1) (ad) b^k c^l d^(j-1), ad = 1 + q bc
        scale = c * q ** (k + l)
        _acc(work, (i - 1, k, l, j - 1), scale)
        _acc(work, (i - 1, k + 1, l + 1, j - 1), scale * q)
    return Element(ring, done, _clean=True)


def sl2_trace_commutator_formula(shape: str, i: int = 0, k: int = 0, l: int = 0, j: int = 0,
                                 ring: QuantumMatrixRing | None = None) -> Element:
    """Closed-form [a + d, basis element] in O_q(SL_2), expanded in the SL_2 basis.

    ``shape`` is ``"a-side"`` for a^i b^k c^l (i >= 1), ``"d-side"`` for
    b^k c^l d^j (j >= 1) and ``"pure"`` for b^k c^l.
    """
    ring = ring if ring is not None else QuantumMatrixRing(2)
    if ring.n != 2:
        raise ValueError("the SL_2 formulas need n = 2")
    if min(i, k, l, j) < 0:
        raise ValueError("exponents must be nonnegative")
    q = ring.q
    m = k + l
    terms: Dict[Monomial, QScalar] = {}
    if shape == "a-side":
        if i < 1 or j:
            raise ValueError("a-side needs i >= 1 and no d exponent")
        _acc(terms, (i + 1, k, l, 0), 1 - q ** (-m))
        _acc(terms, (i - 1, k, l, 0), 1 - q ** m)
        _acc(terms, (i - 1, k + 1, l + 1, 0), q ** (-2 * (i - 1) - 1) - q ** (m + 1))
    elif shape == "d-side":
        if j < 1 or i:
            raise ValueError("d-side needs j >= 1 and no a exponent")
        _acc(terms, (0, k, l, j + 1), q ** (-m) - 1)
        _acc(terms, (0, k, l, j - 1), q ** m - 1)
        _acc(terms, (0, k + 1, l + 1, j - 1), q ** (m + 1) - q ** (-2 * (j - 1) - 1))
    elif shape == "pure":
        if i or j:
            raise ValueError("pure shape takes only k and l")
        _acc(terms, (1, k, l, 0), 1 - q ** (-m))
        _acc(terms, (0, k, l, 1), q ** (-m) - 1)
    else:
        raise ValueError(f"unknown shape {shape!r}; expected a-side, d-side or pure")
    return Element(ring, terms, _clean=True)


def sl2_engine_commutator(shape: str, i: int = 0, k: int = 0, l: int = 0, j: int = 0,
                          ring: QuantumMatrixRing | None = None) -> Element:
    """[sigma_1, lift] computed by the generic engine, then put in SL_2 normal form."""
    ring = ring if ring is not None else QuantumMatrixRing(2)
    lift = ring.monomial((i, k, l, j))
    trace = ring.gen(1, 1) + ring.gen(2, 2)
    return sl2_normal_form(trace * lift - lift * trace)
