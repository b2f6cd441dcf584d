import pytest
from fractions import Fraction

from kkred.domains import QQ, ConstField
from kkred.errors import ParseError
from kkred.parsing import format_ratfunc, parse_ratfunc


def test_basic_expressions():
    f = parse_ratfunc("x^2 - 1", QQ)
    g = parse_ratfunc("(x-1)*(x+1)", QQ)
    assert f == g


def test_division_and_unary_minus():
    f = parse_ratfunc("-1/x + 1/(x-1)", QQ)
    g = parse_ratfunc("(1 - 2*x + x^2 + x*(x-1)*(-1) + x - x^2 + x)/(x*(x-1)^2)", QQ)
    # just check f against its direct construction
    h = parse_ratfunc("(x - (x-1))/(x*(x-1))", QQ)
    assert parse_ratfunc("-1/x", QQ) + parse_ratfunc("1/(x-1)", QQ) == f
    assert f == h


def test_parameters():
    F = ConstField(("t",))
    f = parse_ratfunc("t*x/(x+t)", F)
    assert f.num.coeffs[1] == F.param("t")


def test_unknown_symbol_position():
    with pytest.raises(ParseError) as ei:
        parse_ratfunc("x + y", QQ)
    assert ei.value.position == 4


def test_bad_char_position():
    with pytest.raises(ParseError) as ei:
        parse_ratfunc("x + $", QQ)
    assert ei.value.position == 4


def test_nonninteger_exponent_rejected():
    with pytest.raises(ParseError):
        parse_ratfunc("x^t", ConstField(("t",)))


def test_roundtrip_print_parse():
    F = ConstField(("a", "b"))
    cases = ["1", "-3/7", "x", "x^3 - 2*x + 1/2", "(x^2+1)/(x*(x-1))",
             "a*x/(b+1)", "(a+b)*x^2 - a/b", "1/(x^2 - 2*x + 1)"]
    for s in cases:
        f = parse_ratfunc(s, F)
        assert parse_ratfunc(format_ratfunc(f), F) == f
