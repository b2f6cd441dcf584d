import random
from fractions import Fraction

import pytest

from kkred.domains import QQ, ConstField
from kkred.errors import AlgebraicExtensionRequired
from kkred.parsing import parse_ratfunc
from kkred.ratfunc import (RatFunc, partial_fractions, rational_antiderivative,
                           rational_pole_support)
from kkred.upoly import UPoly


def R(s, field=QQ):
    return parse_ratfunc(s, field)


def test_normalization_canonical():
    rng = random.Random(5)
    x = RatFunc.x(QQ)
    for _ in range(25):
        a = RatFunc(UPoly(QQ, [Fraction(rng.randint(-4, 4)) for _ in range(3)]),
                    UPoly(QQ, [Fraction(rng.randint(-4, 4)) for _ in range(2)] + [Fraction(1)]))
        b = RatFunc(UPoly(QQ, [Fraction(rng.randint(-4, 4)) for _ in range(3)]),
                    UPoly(QQ, [Fraction(rng.randint(-4, 4)) for _ in range(2)] + [Fraction(1)]))
        assert (a + b) * (a - b) == a * a - b * b
        if not b.is_zero():
            assert (a / b) * b == a


def test_derivative_quotient_rule():
    f = R("1/x")
    assert f.derivative() == R("-1/x^2")
    g = R("(x^2+1)/(x-1)")
    lhs = (f * g).derivative()
    rhs = f.derivative() * g + f * g.derivative()
    assert lhs == rhs


def test_valuations():
    f = R("(x^2)/(x-1)")
    assert f.valuation_at(Fraction(0)) == 2
    assert f.valuation_at(Fraction(1)) == -1
    assert f.degree_at_infinity() == 1


def test_pole_support():
    f = R("1/(x^2-1)")
    assert rational_pole_support([f]) == [Fraction(-1), Fraction(1)]
    with pytest.raises(AlgebraicExtensionRequired):
        rational_pole_support([R("1/(x^2+1)")])


def test_partial_fractions_roundtrip():
    f = R("(3*x^2-2)/(x^2*(x-1))")
    poly, parts = partial_fractions(f)
    back = RatFunc.from_upoly(poly)
    x = RatFunc.x(QQ)
    for alpha, terms in parts.items():
        for j, c in terms.items():
            back = back + RatFunc.const(QQ, c) / (x - alpha) ** j
    assert back == f


def test_antiderivative_simple():
    g, obs = rational_antiderivative(R("1/x^2"))
    assert obs == []
    assert g == R("-1/x")
    assert g.derivative() == R("1/x^2")


def test_antiderivative_obstruction():
    g, obs = rational_antiderivative(R("1/x"))
    assert g is None
    assert obs == [(Fraction(0), Fraction(1))]


def test_antiderivative_parametric_residues():
    # residues vanish iff c31 = 1 and c32 = -1/2
    F = ConstField(("c31", "c32"))
    f = R("(-2*c32-1)/x + (-2*c31+2)/(x-1) + 1/x^2", F)
    g, obs = rational_antiderivative(f)
    assert g is None
    vals = dict(obs)
    c31 = F.param("c31")
    c32 = F.param("c32")
    assert vals[Fraction(0)] == -2 * c32 - 1
    assert vals[Fraction(1)] == -2 * c31 + 2
    # substituting the forced values clears both residues
    f0 = f.substitute_params({"c31": Fraction(1), "c32": Fraction(-1, 2)})
    g0, obs0 = rational_antiderivative(f0)
    assert obs0 == [] and g0.derivative() == f0


def test_antiderivative_polynomial_part():
    f = R("x^2 + 1/x^3")
    g, obs = rational_antiderivative(f)
    assert obs == []
    assert g.derivative() == f
