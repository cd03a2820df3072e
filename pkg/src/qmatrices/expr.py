"""
A small expression language for elements of O_q(M_n) and its localisation.

Grammar, loosest binding first::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    atom    := INT | 'q' | 'det' | 'x[' i ',' j ']' | 'sigma(' i ')'
             | 'minor({' i,.. '},{' j,.. '})' | 'comm(' sum ',' sum ')'
             | '(' sum ')' | 'a' | 'b' | 'c' | 'd'       (the last four with ring sl2)

Exponents are integer literals, optionally negative and optionally in
parentheses. Negative exponents apply to scalars and, with ring ``gl``, to
powers of det. Division is by scalars only. The canonical printed form of
every element parses back to the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .minors import quantum_det, quantum_minor, sigma
from .qfield import Q, QScalar
from .quotients import GLElement
from .ring import Element, QuantumMatrixRing

__all__ = [
    "ExprError",
    "ParseError",
    "IndexRangeError",
    "EvalError",
    "Expr",
    "Num",
    "QVar",
    "Gen",
    "Det",
    "Sigma",
    "Minor",
    "Comm",
    "Neg",
    "BinOp",
    "Pow",
    "parse",
    "eval_expr",
    "evaluate",
    "RINGS",
]

RINGS = ("m", "gl", "sl2")
SL2_NAMES = {"a": (1, 1), "b": (1, 2), "c": (2, 1), "d": (2, 2)}


class ExprError(Exception):
    """An error tied to a position (1-based line and column) in the source text."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line else ""
        super().__init__(f"{message}{where}")


class ParseError(ExprError):
    pass


class IndexRangeError(ExprError):
    pass


class EvalError(ExprError):
    pass


# --- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class QVar:
    pass


@dataclass(frozen=True)
class Gen:
    i: int
    j: int


@dataclass(frozen=True)
class Det:
    pass


@dataclass(frozen=True)
class Sigma:
    i: int


@dataclass(frozen=True)
class Minor:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]


@dataclass(frozen=True)
class Comm:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, QVar, Gen, Det, Sigma, Minor, Comm, Neg, BinOp, Pow]


# --- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(r"(\n)|([ \t\r]+)|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.)")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> List[_Tok]:
    toks = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(src):
        col = m.start() - line_start + 1
        newline, _, number, name, other = m.groups()
        if newline:
            line, line_start = line + 1, m.end()
        elif number:
            toks.append(_Tok("int", number, line, col))
        elif name:
            toks.append(_Tok("name", name, line, col))
        elif other:
            if other not in "+-*/^()[]{},":
                raise ParseError(f"unexpected character {other!r}", line, col)
            toks.append(_Tok("op", other, line, col))
    toks.append(_Tok("end", "", line, len(src) - line_start + 1))
    return toks


# --- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str, n: int, ring_kind: str):
        self.toks = _tokenize(src)
        self.pos = 0
        self.n = n
        self.ring_kind = ring_kind

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            raise self.error(f"expected {text!r}")
        return self.next()

    def accept(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind != "end" and tok.text == text:
            self.pos += 1
            return True
        return False

    def parse(self) -> Expr:
        e = self.sum()
        if self.peek().kind != "end":
            raise self.error("expected an operator or end of input")
        return e

    def sum(self) -> Expr:
        e = self.product()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.next().text
            e = BinOp(op, e, self.product())
        return e

    def product(self) -> Expr:
        e = self.unary()
        while self.peek().text in ("*", "/") and self.peek().kind == "op":
            op = self.next().text
            e = BinOp(op, e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.accept("^"):
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        paren = self.accept("(")
        sign = -1 if self.accept("-") else 1
        tok = self.peek()
        if tok.kind != "int":
            raise self.error("expected an integer exponent")
        self.next()
        if paren:
            self.expect(")")
        return sign * int(tok.text)

    def index(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise self.error("expected an index")
        self.next()
        value = int(tok.text)
        if not 1 <= value <= self.n:
            raise IndexRangeError(f"index {value} out of range 1..{self.n}", tok.line, tok.col)
        return value

    def index_set(self) -> Tuple[int, ...]:
        start = self.expect("{")
        values = [self.index()]
        while self.accept(","):
            values.append(self.index())
        self.expect("}")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ParseError("index sets must be strictly increasing", start.line, start.col)
        return tuple(values)

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            return Num(int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.next()
            e = self.sum()
            self.expect(")")
            return e
        if tok.kind != "name":
            raise self.error("expected a term")
        self.next()
        name = tok.text
        if name == "q":
            return QVar()
        if name == "det":
            return Det()
        if name == "x":
            self.expect("[")
            i = self.index()
            self.expect(",")
            j = self.index()
            self.expect("]")
            return Gen(i, j)
        if name == "sigma":
            self.expect("(")
            i = self.index()
            self.expect(")")
            return Sigma(i)
        if name == "minor":
            self.expect("(")
            rows = self.index_set()
            self.expect(",")
            cols = self.index_set()
            self.expect(")")
            if len(rows) != len(cols):
                raise ParseError("minor row and column sets differ in size", tok.line, tok.col)
            return Minor(rows, cols)
        if name == "comm":
            self.expect("(")
            left = self.sum()
            self.expect(",")
            right = self.sum()
            self.expect(")")
            return Comm(left, right)
        if name in SL2_NAMES and self.ring_kind == "sl2":
            return Gen(*SL2_NAMES[name])
        raise ParseError(f"unknown name {name!r}", tok.line, tok.col)


def parse(src: str, n: int, ring: str = "m") -> Expr:
    """Parse ``src`` for matrices of size ``n``; ``ring`` is one of m, gl, sl2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if ring not in RINGS:
        raise ValueError(f"ring must be one of {RINGS}")
    if ring == "sl2" and n != 2:
        raise ValueError("ring sl2 needs n = 2")
    return _Parser(src, n, ring).parse()


# --- evaluation ----------------------------------------------------------------

Value = Union[QScalar, Element, GLElement]


def _is_scalar(v) -> bool:
    return isinstance(v, QScalar)


def _as_element(v, ring: QuantumMatrixRing, gl: bool):
    if isinstance(v, QScalar):
        v = ring.scalar(v)
    if gl and isinstance(v, Element):
        v = GLElement(v, 0)
    return v


def eval_expr(e: Expr, ring: QuantumMatrixRing, mode: str = "m") -> Value:
    """Evaluate to a QScalar (scalar-only trees), an Element, or a GLElement with mode gl."""
    gl = mode == "gl"

    def ev(node) -> Value:
        if isinstance(node, Num):
            return QScalar(node.value)
        if isinstance(node, QVar):
            return ring.q if ring.q.is_constant() else Q
        if isinstance(node, Gen):
            return ring.gen(node.i, node.j)
        if isinstance(node, Det):
            return quantum_det(ring)
        if isinstance(node, Sigma):
            return sigma(ring, node.i)
        if isinstance(node, Minor):
            return quantum_minor(ring, node.rows, node.cols)
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, Comm):
            a, b = ev(node.left), ev(node.right)
            if _is_scalar(a) or _is_scalar(b):
                return QScalar(0)
            return a * b - b * a
        if isinstance(node, BinOp):
            a, b = ev(node.left), ev(node.right)
            if node.op == "/":
                if not _is_scalar(b):
                    raise EvalError("division is only by scalars")
                if not b:
                    raise EvalError("division by zero")
                return a / b if _is_scalar(a) else a * b.inverse()
            if _is_scalar(a) and _is_scalar(b):
                return {"+": a + b, "-": a - b, "*": a * b}[node.op]
            if _is_scalar(a) and node.op == "*":
                return b * a if not isinstance(b, Element) else b.scale(a)
            if _is_scalar(b) and node.op == "*":
                return a.scale(b) if isinstance(a, Element) else a * b
            a, b = _as_element(a, ring, gl), _as_element(b, ring, gl)
            if isinstance(a, GLElement) != isinstance(b, GLElement):
                a, b = _as_element(a, ring, True), _as_element(b, ring, True)
            return {"+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b}[node.op]()
        if isinstance(node, Pow):
            base = ev(node.base)
            k = node.exponent
            if _is_scalar(base):
                if not base and k < 0:
                    raise EvalError("zero to a negative power")
                return base ** k
            if k >= 0:
                return base ** k
            if not gl:
                raise EvalError("negative powers of ring elements need ring gl")
            try:
                return _as_element(base, ring, True) ** k
            except ValueError as exc:
                raise EvalError(str(exc)) from None
        raise TypeError(f"not an expression node: {node!r}")

    # the q used for literals must match the ring's parameter
    if ring.q != Q and not ring.q.is_constant():
        raise EvalError("the expression language needs a ring over q or a rational specialisation")
    return ev(e)


def evaluate(src: str, ring: QuantumMatrixRing, mode: str = "m") -> Union[Element, GLElement]:
    """Parse and evaluate, always returning a ring element."""
    value = eval_expr(parse(src, ring.n, mode), ring, mode)
    return _as_element(value, ring, mode == "gl")
