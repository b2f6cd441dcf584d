"""Dense univariate polynomials over a ConstField."""

from fractions import Fraction
from math import gcd as _igcd, isqrt

from .domains import ConstField, QQ
from .errors import ParametricUnsupported


class UPoly:
    """Polynomial in one indeterminate with ConstField coefficients.

    ``coeffs`` ascending, trailing zeros stripped; the zero polynomial has
    an empty list.  Immutable by convention.
    """

    __slots__ = ("field", "var", "coeffs")

    def __init__(self, field, coeffs, var="x"):
        self.field = field
        self.var = var
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, field, c, var="x"):
        return cls(field, [c], var)

    @classmethod
    def x(cls, field, var="x"):
        return cls(field, [0, 1], var)

    @classmethod
    def from_roots(cls, field, roots, var="x"):
        p = cls.const(field, 1, var)
        for r in roots:
            p = p * cls(field, [-Fraction(r) if not field.params else -field.coerce(r), 1], var)
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def _cv(self, other):
        if isinstance(other, UPoly):
            if other.field != self.field or other.var != self.var:
                raise ValueError("mixed polynomial rings")
            return other
        return UPoly.const(self.field, other, self.var)

    def __add__(self, other):
        o = self._cv(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.field.zero()
        cs = [(self.coeffs[i] if i < len(self.coeffs) else z)
              + (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)]
        return UPoly(self.field, cs, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._cv(other))

    def __rsub__(self, other):
        return self._cv(other) + (-self)

    def __mul__(self, other):
        o = self._cv(other)
        if self.is_zero() or o.is_zero():
            return UPoly(self.field, [], self.var)
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.field.is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.field, out, self.var)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.coerce(c)
        return UPoly(self.field, [a * c for a in self.coeffs], self.var)

    def __pow__(self, n):
        r = UPoly.const(self.field, 1, self.var)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UPoly(self.field, [self.field.zero()] * k + list(self.coeffs),
                     self.var)

    def divmod(self, other):
        o = self._cv(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        q = [f.zero()] * max(0, len(rem) - len(o.coeffs) + 1)
        lo = o.leading()
        do = o.degree
        while len(rem) - 1 >= do and rem:
            c = rem[-1] / lo
            d = len(rem) - 1 - do
            q[d] = c
            for j, b in enumerate(o.coeffs):
                rem[d + j] = rem[d + j] - c * b
            while rem and f.is_zero(rem[-1]):
                rem.pop()
        return (UPoly(f, q, self.var), UPoly(f, rem, self.var))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("not divisible")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return UPoly(self.field, [c / lead for c in self.coeffs], self.var)

    def derivative(self):
        f = self.field
        cs = [f.coerce(i) * c for i, c in enumerate(self.coeffs)][1:]
        return UPoly(f, cs, self.var)

    def eval(self, value):
        """Horner evaluation; value coerced into the coefficient field."""
        v = self.field.coerce(value)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose_linear(self, a, b):
        """p(a*x + b) for field constants a, b."""
        f = self.field
        lin = UPoly(f, [b, a], self.var)
        acc = UPoly(f, [], self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly.const(f, c, self.var)
        return acc

    def taylor_coeff_at(self, alpha, order):
        """Coefficient of (x-alpha)^order in the expansion at alpha."""
        p = self
        alpha = self.field.coerce(alpha)
        fact = Fraction(1)
        for k in range(order):
            p = p.derivative()
            fact *= k + 1
        return p.eval(alpha) / self.field.from_fraction(fact)

    def valuation_at(self, alpha):
        """Order of vanishing at alpha (inf for the zero polynomial -> None)."""
        if self.is_zero():
            return None
        alpha = self.field.coerce(alpha)
        p = self
        v = 0
        while self.field.is_zero(p.eval(alpha)):
            lin = UPoly(self.field, [-alpha, 1], self.var)
            p = p.exact_div(lin)
            v += 1
        return v

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly.const(self.field, other, self.var)
        return (isinstance(other, UPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.var, self.coeffs))

    def __repr__(self):
        from .parsing import format_upoly
        return f"UPoly({format_upoly(self)})"


def poly_gcd(a, b):
    """Monic gcd via the Euclidean algorithm (coefficients form a field)."""
    if a.field != b.field or a.var != b.var:
        raise ValueError("mixed polynomial rings")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return UPoly(a.field, [], a.var)
    g = poly_gcd(a, b)
    return (a * b).exact_div(g).monic()


def squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic.

    Works over any characteristic-zero coefficient field.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.monic()
    out = []
    if p.degree == 0:
        return out
    g = poly_gcd(p, p.derivative())
    w = p.exact_div(g)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        f = w.exact_div(y)
        if f.degree > 0:
            out.append((f, i))
        w = y
        g = g.exact_div(y)
        i += 1
    return out


# ---- integer factorization for rational root finding ----

def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    x, c = 2, 1
    while True:
        y, d = x, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _igcd(abs(x - y), n)
        if d != n:
            return d
        c += 1
        x = c + 1


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        v = pow(a, d, n)
        if v in (1, n - 1):
            continue
        for _ in range(s - 1):
            v = v * v % n
            if v == n - 1:
                break
        else:
            return False
    return True


def factorint(n):
    """Prime factorization of a positive integer as a dict."""
    out = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_rho(m)
        stack += [d, m // d]
    return out


def _divisors(n):
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return ds


def rational_roots(p):
    """All rational roots of a UPoly over plain Q, with multiplicities.

    Returns a list of (root: Fraction, multiplicity: int) sorted by root.
    Raises ParametricUnsupported for parametric coefficients.
    """
    if p.field.params:
        if all(p.field.is_rational(c) for c in p.coeffs):
            p = UPoly(QQ, [p.field.as_fraction(c) for c in p.coeffs], p.var)
        else:
            raise ParametricUnsupported("rational roots need Q coefficients")
    if p.is_zero():
        raise ValueError("zero polynomial")
    mults = {}
    for f, m in squarefree_decomposition(p):
        for r in _squarefree_rational_roots(f):
            mults[r] = mults.get(r, 0) + m
    return sorted(mults.items())


def _squarefree_rational_roots(p):
    # strip zero roots
    roots = []
    cs = list(p.coeffs)
    if not cs:
        return roots
    if cs[0] == 0:
        roots.append(Fraction(0))
        while cs and cs[0] == 0:
            cs.pop(0)
    if len(cs) <= 1:
        return roots
    # clear denominators to primitive integer coefficients
    den = 1
    for c in cs:
        den = den * c.denominator // _igcd(den, c.denominator)
    ics = [int(c * den) for c in cs]
    g = 0
    for c in ics:
        g = _igcd(g, c)
    ics = [c // g for c in ics]
    a0, an = abs(ics[0]), abs(ics[-1])
    for pnum in _divisors(a0):
        for pden in _divisors(an):
            if _igcd(pnum, pden) != 1:
                continue
            for cand in (Fraction(pnum, pden), Fraction(-pnum, pden)):
                acc = Fraction(0)
                for c in reversed(ics):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def squarefree_and_rational_roots(p):
    """Squarefree factors with multiplicities plus the set of Q-roots.

    Restricted to plain rational coefficients (ParametricUnsupported
    otherwise).  The product of factors^multiplicity equals p up to the
    leading coefficient.
    """
    if p.field.params and not all(p.field.is_rational(c) for c in p.coeffs):
        raise ParametricUnsupported("squarefree decomposition needs Q coefficients")
    if p.field.params:
        p = UPoly(QQ, [p.field.as_fraction(c) for c in p.coeffs], p.var)
    factors = squarefree_decomposition(p)
    roots = {r for r, _ in rational_roots(p)} if p.degree > 0 else set()
    return factors, roots
