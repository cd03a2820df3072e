import random

import pytest

from qmatrices import QuantumMatrixRing, commutator, quantum_det, quantum_minor
from qmatrices.expr import (
    BinOp,
    EvalError,
    Gen,
    IndexRangeError,
    Neg,
    Num,
    ParseError,
    Pow,
    QVar,
    Sigma,
    eval_expr,
    evaluate,
    parse,
)
from qmatrices.qfield import Q, QScalar
from qmatrices.quotients import GLElement


def test_det_expression(rings):
    assert evaluate("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]", rings[2]) == quantum_det(rings[2])


def test_power_node():
    assert parse("sigma(1)^2", 2) == Pow(Sigma(1), 2)


def test_precedence_and_associativity():
    assert parse("1 - 2 - 3", 2) == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse("1 + 2*q^3", 2) == BinOp("+", Num(1), BinOp("*", Num(2), Pow(QVar(), 3)))
    assert parse("-x[1,1]^2", 2) == Neg(Pow(Gen(1, 1), 2))
    assert parse("q^-2", 2) == parse("q^(-2)", 2) == Pow(QVar(), -2)
    assert parse(" x [ 1 , 2 ]\n* q", 2) == BinOp("*", Gen(1, 2), QVar())


def test_index_errors():
    with pytest.raises(IndexRangeError) as err:
        parse("x[3,1]", 2)
    assert (err.value.line, err.value.col) == (1, 3)
    with pytest.raises(IndexRangeError):
        parse("sigma(4)", 3)
    with pytest.raises(IndexRangeError):
        parse("minor({1,4},{1,2})", 3)


@pytest.mark.parametrize("src,line,col", [
    ("x[1,1] +* 2", 1, 9),
    ("x[1,1]\n  + )", 2, 5),
    ("(x[1,1]", 1, 8),
    ("x[1,1] $", 1, 8),
    ("foo", 1, 1),
    ("minor({2,1},{1,2})", 1, 7),
    ("a*d", 1, 1),
])
def test_syntax_errors_carry_positions(src, line, col):
    with pytest.raises(ParseError) as err:
        parse(src, 2)
    assert (err.value.line, err.value.col) == (line, col)


def test_evaluation_examples(rings):
    for n in (2, 3):
        assert evaluate(f"det - sigma({n})", rings[n]) == 0
    assert evaluate("comm(sigma(1), sigma(2))", rings[3]) == 0
    x = rings[2].gen
    assert evaluate("x[1,2]*x[1,1]", rings[2]) == Q ** -1 * x(1, 1) * x(1, 2)
    assert evaluate("minor({1,3},{2,3})", rings[3]) == quantum_minor(rings[3], (1, 3), (2, 3))
    assert evaluate("comm(x[1,1], x[2,2])", rings[2]) == commutator(x(1, 1), x(2, 2))


def test_scalar_expressions(rings):
    assert eval_expr(parse("(q^2 - 1)/(q - 1)", 2), rings[2]) == Q + 1
    assert evaluate("3/q", rings[2]) == rings[2].scalar(3 * Q ** -1)
    assert evaluate("q", QuantumMatrixRing(2, 2)) == QuantumMatrixRing(2, 2).scalar(2)


def test_sl2_names(rings):
    assert evaluate("a*d - q*b*c", rings[2], "sl2") == quantum_det(rings[2])
    with pytest.raises(ValueError):
        parse("a", 3, "sl2")


def test_gl_expressions(rings):
    R = rings[2]
    value = evaluate("x[1,2]*det^-1", R, "gl")
    assert isinstance(value, GLElement) and value.det_power == 1
    assert evaluate("x[1,2]*det^-1*det", R, "gl") == R.gen(1, 2)


def test_evaluation_errors(rings):
    with pytest.raises(EvalError):
        evaluate("x[1,1]/x[2,2]", rings[2])
    with pytest.raises(EvalError):
        evaluate("x[1,1]/0", rings[2])
    with pytest.raises(EvalError):
        evaluate("det^-1", rings[2])
    with pytest.raises(EvalError):
        evaluate("x[1,1]^-1", rings[2], "gl")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_print_parse_round_trip(n):
    rng = random.Random(n)
    R = QuantumMatrixRing(n)
    for _ in range(150):
        a = R.random_element(rng, 3, 4) * R.random_element(rng, 2, 2)
        a = a + R.scalar(QScalar(rng.randint(-5, 5)) / (Q + rng.randint(1, 3)))
        assert evaluate(str(a), R) == a


def test_gl_round_trip(rings):
    R = rings[2]
    value = evaluate("(x[1,1] + q*x[2,1]^2)*det^-2 - x[1,2]", R, "gl")
    assert evaluate(str(value), R, "gl") == value
