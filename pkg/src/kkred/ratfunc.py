"""Rational functions in one indeterminate over a ConstField.

Canonical form: numerator and denominator coprime, denominator monic.
The derivation is d/dx; all ConstField elements (parameters included)
have derivative zero.
"""

from fractions import Fraction

from .domains import QQ
from .errors import AlgebraicExtensionRequired, ParameterDependentExponent
from .upoly import UPoly, poly_gcd, rational_roots, squarefree_decomposition


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = UPoly.const(num.field, 1, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UPoly.const(num.field, 1, num.var)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lead = den.leading()
                if lead != den.field.one():
                    den = den.scale(den.field.one() / lead)
                    num = num.scale(num.field.one() / lead)
        self.num = num
        self.den = den

    # --- constructors ---

    @classmethod
    def const(cls, field, c, var="x"):
        return cls(UPoly.const(field, c, var))

    @classmethod
    def from_upoly(cls, p):
        return cls(p, _reduced=True)

    @classmethod
    def x(cls, field, var="x"):
        return cls(UPoly.x(field, var), _reduced=True)

    @property
    def field(self):
        return self.num.field

    @property
    def var(self):
        return self.num.var

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_term()

    def _cv(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UPoly):
            return RatFunc(other, _reduced=True)
        return RatFunc.const(self.field, other, self.var)

    def __add__(self, other):
        o = self._cv(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._cv(other))

    def __rsub__(self, other):
        return self._cv(other) + (-self)

    def __mul__(self, other):
        o = self._cv(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._cv(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._cv(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc.const(self.field, 1, self.var) / self ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = self._cv(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self):
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(n, self.den * self.den)

    def eval(self, value):
        d = self.den.eval(value)
        if self.field.is_zero(d):
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.eval(value) / d

    def valuation_at(self, alpha):
        """Order at x = alpha: negative at poles, None for the zero function."""
        if self.is_zero():
            return None
        return self.num.valuation_at(alpha) - self.den.valuation_at(alpha)

    def degree_at_infinity(self):
        """deg num - deg den; None for zero (valuation at infinity is -this)."""
        if self.is_zero():
            return None
        return self.num.degree - self.den.degree

    def substitute_params(self, mapping):
        f = self.field
        num = UPoly(f, [f.substitute(c, mapping) for c in self.num.coeffs], self.var)
        den = UPoly(f, [f.substitute(c, mapping) for c in self.den.coeffs], self.var)
        return RatFunc(num, den)

    def __repr__(self):
        from .parsing import format_ratfunc
        return f"RatFunc({format_ratfunc(self)})"


def rational_pole_support(fs):
    """All rational poles of a family of RatFuncs.

    Raises AlgebraicExtensionRequired if some denominator has a factor with
    no rational root, ParameterDependentExponent if a denominator involves
    parameters.
    """
    poles = set()
    for f in fs:
        if f.is_zero() or f.den.degree == 0:
            continue
        den = f.den
        fld = den.field
        if fld.params and not all(fld.is_rational(c) for c in den.coeffs):
            raise ParameterDependentExponent(
                "denominator involves parameters; pole locations undetermined")
        dq = UPoly(QQ, [fld.as_fraction(c) for c in den.coeffs], den.var) \
            if fld.params else den
        roots = rational_roots(dq)
        total = sum(m for _, m in roots)
        if total != dq.degree:
            raise AlgebraicExtensionRequired(
                "denominator has non-rational roots")
        poles.update(r for r, _ in roots)
    return sorted(poles)


def partial_fractions(f):
    """Decompose f = poly + sum_{i,j} c_{i,j}/(x-a_i)^j over rational poles.

    Returns (poly: UPoly, parts: dict alpha -> dict j -> coefficient).
    Coefficients live in the coefficient field (may involve parameters);
    pole locations must be plain rationals.
    """
    poly, rem = f.num.divmod(f.den)
    parts = {}
    if rem.is_zero():
        return poly, parts
    poles = rational_pole_support([f])
    fld = f.field
    den = f.den
    for alpha in poles:
        a = fld.coerce(alpha) if fld.params else Fraction(alpha)
        lin = UPoly(fld, [-a, 1], f.var)
        m = den.valuation_at(a)
        cof = den.exact_div(lin ** m)
        # local expansion of rem/cof at alpha up to order m-1
        # c_{m-k} = (d^k/dx^k (rem/cof))|_alpha / k!
        g = RatFunc(rem, cof)
        fact = Fraction(1)
        coeffs = {}
        for k in range(m):
            if k > 0:
                fact *= k
            val = g.eval(a) / fld.from_fraction(fact)
            coeffs[m - k] = val
            g = g.derivative()
        parts[alpha] = {j: c for j, c in coeffs.items() if not fld.is_zero(c)}
    return poly, parts


def rational_antiderivative(f):
    """Antiderivative of a rational function when one exists.

    Returns (g, obstructions): g with g' = f and additive constant 0 when
    every residue vanishes (obstructions empty), otherwise g is None and
    obstructions lists (pole, residue) pairs for the nonzero residues.
    Pole locations must be rational; AlgebraicExtensionRequired otherwise.
    """
    fld = f.field
    poly, parts = partial_fractions(f)
    obstructions = []
    for alpha in sorted(parts):
        res = parts[alpha].get(1)
        if res is not None and not fld.is_zero(res):
            obstructions.append((alpha, res))
    if obstructions:
        return None, obstructions
    # integrate the polynomial part
    ip = UPoly(fld, [fld.zero()] + [c / fld.from_fraction(Fraction(i + 1))
                                    for i, c in enumerate(poly.coeffs)], f.var)
    g = RatFunc.from_upoly(ip)
    for alpha, terms in parts.items():
        a = fld.coerce(alpha) if fld.params else Fraction(alpha)
        lin = RatFunc(UPoly(fld, [-a, 1], f.var), _reduced=True)
        for j, c in terms.items():
            # integral of c (x-a)^-j is c (x-a)^(1-j) / (1-j), j >= 2
            coeff = c * fld.from_fraction(Fraction(1, 1 - j))
            g = g + RatFunc.const(fld, coeff, f.var) / lin ** (j - 1)
    return g, []


def common_denominator(fs):
    """(denominator D, numerators) with fs[i] = numerators[i] / D."""
    if not fs:
        raise ValueError("empty family")
    field, var = fs[0].field, fs[0].var
    den = UPoly.const(field, 1, var)
    for f in fs:
        g = poly_gcd(den, f.den)
        den = den * f.den.exact_div(g)
    nums = [f.num * den.exact_div(f.den) for f in fs]
    return den, nums
