"""Constant-field arithmetic.

The constant field is either plain Q (elements are ``fractions.Fraction``)
or Q(t1,...,tl) for declared parameter names (elements are ``ParamRat``,
reduced fractions of multivariate polynomials over Q with a graded
lexicographic term order).  A ``ConstField`` instance tags which one is in
play and provides coercion; all values are immutable.
"""

from fractions import Fraction
from math import gcd as _igcd

from .errors import ParametricUnsupported

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _fr_gcd(a, b):
    # gcd of two Fractions: gcd of numerators over lcm of denominators
    n = _igcd(a.numerator, b.numerator)
    d = (a.denominator * b.denominator) // _igcd(a.denominator, b.denominator)
    return Fraction(n, d)


class MPoly:
    """Multivariate polynomial over Q, dense-exponent dict representation.

    ``terms`` maps exponent tuples (length = nvars) to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        if terms:
            self.terms = {e: c for e, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @classmethod
    def const(cls, nvars, c):
        c = Fraction(c)
        if c == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): _ONE})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and (0,) * self.nvars in self.terms)

    def const_value(self):
        if not self.terms:
            return _ZERO
        return self.terms[(0,) * self.nvars]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    # graded lex: compare (total degree, exponent tuple)
    def leading_exp(self):
        return max(self.terms, key=lambda e: (sum(e), e))

    def leading_coeff(self):
        return self.terms[self.leading_exp()]

    def __add__(self, other):
        other = self._co(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, _ZERO) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return MPoly(self.nvars, t)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) + (-self)

    def __mul__(self, other):
        other = self._co(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, _ZERO) + c1 * c2
                if s == 0:
                    t.pop(e, None)
                else:
                    t[e] = s
        return MPoly(self.nvars, t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        r = MPoly.const(self.nvars, 1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def _co(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed parameter spaces")
            return other
        return MPoly.const(self.nvars, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def content(self):
        """Positive rational gcd of the coefficients (0 for the zero poly)."""
        g = _ZERO
        for c in self.terms.values():
            g = _fr_gcd(g, abs(c))
        return g

    def map_coeffs(self, f):
        return MPoly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def substitute(self, values):
        """Evaluate at ``values`` (dict var index -> Fraction/MPoly)."""
        out = MPoly.const(self.nvars, 0)
        for e, c in self.terms.items():
            term = MPoly.const(self.nvars, c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                v = values.get(i)
                if v is None:
                    v = MPoly.var(self.nvars, i)
                elif not isinstance(v, MPoly):
                    v = MPoly.const(self.nvars, v)
                term = term * v ** k
            out = out + term
        return out

    # --- univariate view in one variable (for gcd) ---

    def _as_univar(self, k):
        """dict: degree in var k -> MPoly coefficient (var k exponent zeroed)."""
        d = {}
        for e, c in self.terms.items():
            deg = e[k]
            e0 = e[:k] + (0,) + e[k + 1:]
            co = d.setdefault(deg, MPoly(self.nvars))
            d[deg] = co + MPoly(self.nvars, {e0: c})
        return {deg: p for deg, p in d.items() if not p.is_zero()}

    @staticmethod
    def _from_univar(nvars, k, d):
        out = MPoly(nvars)
        xk = MPoly.var(nvars, k)
        for deg, p in d.items():
            out = out + p * xk ** deg
        return out

    def __repr__(self):
        return f"MPoly({self.terms!r})"


def _upoly_mul(a, b, nvars):
    # a, b: lists of MPoly coefficients, ascending.
    if not a or not b:
        return []
    out = [MPoly(nvars) for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    while out and out[-1].is_zero():
        out.pop()
    return out


def _upoly_prem(a, b, nvars):
    """Pseudo-remainder of univariate-over-MPoly lists (ascending)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        # a := lb * a - la * x^(da-db) * b
        a = [lb * c for c in a]
        shift = da - db
        for j, cb in enumerate(b):
            a[shift + j] = a[shift + j] - la * cb
        while a and a[-1].is_zero():
            a.pop()
    return a


def _mp_primitive(coeffs):
    """Divide a univariate-over-MPoly list by the gcd of its coefficients."""
    g = None
    for c in coeffs:
        g = c if g is None else mp_gcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    if g is None or g.is_constant():
        # normalize rational content only
        cont = _ZERO
        for c in coeffs:
            cont = _fr_gcd(cont, c.content())
        if cont in (0, 1):
            return coeffs
        return [c.map_coeffs(lambda q: q / cont) for c in coeffs]
    return [mp_exact_div(c, g) for c in coeffs]


def mp_exact_div(a, b):
    """Exact division of MPolys (raises ValueError if not divisible)."""
    if b.is_zero():
        raise ZeroDivisionError("MPoly division by zero")
    if b.is_constant():
        q = b.const_value()
        return a.map_coeffs(lambda c: c / q)
    n = a.nvars
    rem = MPoly(n, dict(a.terms))
    out = {}
    be = b.leading_exp()
    bc = b.terms[be]
    while not rem.is_zero():
        re = rem.leading_exp()
        qe = tuple(x - y for x, y in zip(re, be))
        if any(q < 0 for q in qe):
            raise ValueError("not divisible")
        qc = rem.terms[re] / bc
        out[qe] = out.get(qe, _ZERO) + qc
        rem = rem - MPoly(n, {qe: qc}) * b
    return MPoly(n, out)


def _int_coeffs(p, k):
    """Primitive integer coefficient list of a poly in the single var k."""
    d = {e[k]: c for e, c in p.terms.items()}
    cs = [d.get(i, _ZERO) for i in range(max(d) + 1)]
    den = 1
    for c in cs:
        den = den * c.denominator // _igcd(den, c.denominator)
    ics = [int(c * den) for c in cs]
    g = 0
    for c in ics:
        g = _igcd(g, c)
    return [c // g for c in ics] if g else ics


def _int_prem(pa, pb):
    """Sloppy integer pseudo-remainder, trailing zeros stripped."""
    r = list(pa)
    db, lb = len(pb) - 1, pb[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        r = [lb * c for c in r]
        off = len(r) - 1 - db
        for j, c in enumerate(pb):
            r[off + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return r


def _vars_used(p):
    out = set()
    for e in p.terms:
        for i, k in enumerate(e):
            if k:
                out.add(i)
    return out


def _to_primitive_int(p):
    """Scale to integer coefficients with content 1 (returns new MPoly)."""
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // _igcd(den, c.denominator)
    g = 0
    for c in p.terms.values():
        g = _igcd(g, int(c * den))
    if g == 0:
        return p
    return MPoly(p.nvars, {e: Fraction(int(c * den) // g)
                           for e, c in p.terms.items()})


def _int_content(p):
    g = 0
    for c in p.terms.values():
        g = _igcd(g, int(c))
    return g


def _eval_var(p, k, xi):
    """Substitute integer xi for variable k (coefficients integral)."""
    out = {}
    pw = {}
    for e, c in p.terms.items():
        d = e[k]
        if d not in pw:
            pw[d] = xi ** d
        e0 = e[:k] + (0,) + e[k + 1:]
        out[e0] = out.get(e0, 0) + int(c) * pw[d]
    return MPoly(p.nvars, {e: Fraction(v) for e, v in out.items() if v})


def _divides(g, p):
    try:
        mp_exact_div(p, g)
        return True
    except ValueError:
        return False


def _heu_gcd(a, b, depth=0):
    """Heuristic gcd of primitive integer MPolys; None when inconclusive."""
    if depth > 8:
        return None
    used = sorted(_vars_used(a) | _vars_used(b))
    n = a.nvars
    if not used:
        ga = _igcd(int(a.const_value()), int(b.const_value()))
        return MPoly.const(n, ga)
    if len(used) == 1:
        k = used[0]
        pa, pb = _int_coeffs(a, k), _int_coeffs(b, k)
        if len(pa) < len(pb):
            pa, pb = pb, pa
        while pb:
            r = _int_prem(pa, pb)
            if r:
                g = 0
                for c in r:
                    g = _igcd(g, c)
                r = [c // g for c in r]
            pa, pb = pb, r
        g = MPoly(n)
        for i, c in enumerate(pa):
            if c:
                e = [0] * n
                e[k] = i
                g = g + MPoly(n, {tuple(e): Fraction(c)})
        return _mp_norm(g)
    k = used[-1]
    ha = max(abs(int(c)) for c in a.terms.values())
    hb = max(abs(int(c)) for c in b.terms.values())
    xi = 2 * min(ha, hb) + 29
    for _ in range(6):
        ae = _eval_var(a, k, xi)
        be = _eval_var(b, k, xi)
        if ae.is_zero() or be.is_zero():
            xi = 2 * xi + 29
            continue
        # the content of the evaluated polys carries gcd factors that are
        # free of the remaining variables; keep it
        cae = _int_content(ae)
        cbe = _int_content(be)
        ge = _heu_gcd(_to_primitive_int(ae), _to_primitive_int(be), depth + 1)
        if ge is None:
            return None
        cg = _igcd(cae, cbe)
        if cg > 1:
            ge = ge.map_coeffs(lambda q: q * cg)
        # xi-adic reconstruction with balanced digits
        g = MPoly(n)
        e = ge
        i = 0
        while not e.is_zero():
            digit = {}
            nxt = {}
            for ex, c in e.terms.items():
                v = int(c)
                r = v % xi
                if r > xi // 2:
                    r -= xi
                if r:
                    digit[ex[:k] + (i,) + ex[k + 1:]] = Fraction(r)
                q = (v - r) // xi
                if q:
                    nxt[ex] = Fraction(q)
            g = g + MPoly(n, digit)
            e = MPoly(n, nxt)
            i += 1
        g = _to_primitive_int(g)
        if not g.is_zero() and _divides(g, a) and _divides(g, b):
            return g
        xi = xi * 3 + 17
    return None


def _gcd_with_monomial(mono_exp, p):
    n = p.nvars
    e = list(mono_exp)
    for pe in p.terms:
        e = [min(a, b) for a, b in zip(e, pe)]
        if not any(e):
            break
    return MPoly(n, {tuple(e): _ONE})


def mp_gcd(a, b):
    """Gcd of multivariate polynomials over Q via primitive PRS.

    Normalized: unit content and positive leading (graded-lex) coefficient.
    """
    n = a.nvars
    if a.is_zero():
        return _mp_norm(b)
    if b.is_zero():
        return _mp_norm(a)
    if a.is_constant() or b.is_constant():
        return MPoly.const(n, 1)
    if a.terms == b.terms:
        return _mp_norm(a)
    if len(a.terms) == 1:
        return _gcd_with_monomial(next(iter(a.terms)), b)
    if len(b.terms) == 1:
        return _gcd_with_monomial(next(iter(b.terms)), a)
    used = _vars_used(a) | _vars_used(b)
    if len(used) == 1:
        # genuinely univariate: integer primitive PRS (controls swell)
        k = used.pop()
        pa = _int_coeffs(a, k)
        pb = _int_coeffs(b, k)
        if len(pa) < len(pb):
            pa, pb = pb, pa
        while pb:
            r = _int_prem(pa, pb)
            if r:
                g = 0
                for c in r:
                    g = _igcd(g, c)
                r = [c // g for c in r]
            pa, pb = pb, r
        g = MPoly(n)
        for i, c in enumerate(pa):
            if c:
                e = [0] * n
                e[k] = i
                g = g + MPoly(n, {tuple(e): Fraction(c)})
        return _mp_norm(g)
    ai = _to_primitive_int(a)
    bi = _to_primitive_int(b)
    g = _heu_gcd(ai, bi)
    if g is not None:
        g = _mp_norm(g)
        if not g.is_constant():
            # the heuristic may under-shoot; pull the rest from the cofactors
            extra = mp_gcd(mp_exact_div(ai, g), mp_exact_div(bi, g))
            if not extra.is_constant():
                g = _mp_norm(g * extra)
        return g
    # main variable: highest index occurring in either
    k = max(used)
    if a.degree_in(k) == 0 or b.degree_in(k) == 0:
        # one of them is free of the main variable: gcd divides contents
        ua = a._as_univar(k)
        ub = b._as_univar(k)
        ca = _list_gcd(list(ua.values()))
        cb = _list_gcd(list(ub.values()))
        return _mp_norm(mp_gcd(ca, cb))
    ua = _dense(a._as_univar(k))
    ub = _dense(b._as_univar(k))
    ca = _list_gcd(ua)
    cb = _list_gcd(ub)
    pa = [mp_exact_div(c, ca) for c in ua]
    pb = [mp_exact_div(c, cb) for c in ub]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _upoly_prem(pa, pb, n)
        pa, pb = pb, _mp_primitive(r) if r else []
    g = MPoly._from_univar(n, k, dict(enumerate(pa)))
    g = _mp_norm(g)
    cont = mp_gcd(ca, cb)
    return _mp_norm(g * cont)


def _dense(ud):
    deg = max(ud)
    return [ud.get(i, MPoly(next(iter(ud.values())).nvars)) for i in range(deg + 1)]


def _list_gcd(ps):
    g = None
    for p in ps:
        g = p if g is None else mp_gcd(g, p)
        if g.is_constant() and not g.is_zero():
            break
    return g if g is not None else ps[0]


def _mp_norm(p):
    """Unit-normalize: content 1, positive leading coefficient."""
    if p.is_zero():
        return p
    c = p.content()
    if p.leading_coeff() < 0:
        c = -c
    if c == 1:
        return p
    return p.map_coeffs(lambda q: q / c)


class ParamRat:
    """Reduced fraction of MPolys over Q.

    Canonical form: gcd(num, den) = 1, den has content 1 and positive
    leading coefficient.  Supports mixed arithmetic with int/Fraction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = MPoly.const(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("ParamRat with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = MPoly.const(num.nvars, 1)
            elif den.is_constant():
                c = den.const_value()
                if c != 1:
                    num = num.map_coeffs(lambda q: q / c)
                    den = MPoly.const(num.nvars, 1)
            else:
                g = mp_gcd(num, den)
                if not (g.is_constant() and g.const_value() == 1):
                    num = mp_exact_div(num, g)
                    den = mp_exact_div(den, g)
                # normalize denominator: content 1, positive lead
                c = den.content()
                if den.leading_coeff() < 0:
                    c = -c
                if c != 1:
                    den = den.map_coeffs(lambda q: q / c)
                    num = num.map_coeffs(lambda q: q / c)
        self.num = num
        self.den = den

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def const(cls, nvars, c):
        return cls(MPoly.const(nvars, c))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def const_value(self):
        if not self.is_constant():
            raise ParametricUnsupported("value depends on parameters")
        if self.num.is_zero():
            return _ZERO
        return self.num.const_value() / self.den.const_value()

    def _co(self, other):
        if isinstance(other, ParamRat):
            return other
        if isinstance(other, MPoly):
            return ParamRat(other)
        return ParamRat.const(self.nvars, other)

    def __add__(self, other):
        o = self._co(other)
        return ParamRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) + (-self)

    def __mul__(self, other):
        o = self._co(other)
        return ParamRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o.num.is_zero():
            raise ZeroDivisionError("ParamRat division by zero")
        return ParamRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._co(other) / self

    def __pow__(self, n):
        if n < 0:
            return ParamRat.const(self.nvars, 1) / self ** (-n)
        return ParamRat(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._co(other)
        if not isinstance(other, ParamRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, values):
        n = self.num.substitute(values)
        d = self.den.substitute(values)
        if d.is_zero():
            raise ZeroDivisionError("substitution hit a pole")
        return ParamRat(n, d)

    def __repr__(self):
        return f"ParamRat({self.num!r}/{self.den!r})"


class ConstField:
    """Q or Q(t1,...,tl); element factory and coercion point."""

    def __init__(self, params=()):
        self.params = tuple(params)
        if len(set(self.params)) != len(self.params):
            raise ValueError("duplicate parameter names")

    @property
    def nparams(self):
        return len(self.params)

    def __eq__(self, other):
        return isinstance(other, ConstField) and self.params == other.params

    def __hash__(self):
        return hash(self.params)

    def __repr__(self):
        return f"ConstField{self.params!r}" if self.params else "ConstField(Q)"

    # --- element constructors ---

    def zero(self):
        return self.from_fraction(_ZERO)

    def one(self):
        return self.from_fraction(_ONE)

    def from_fraction(self, c):
        c = Fraction(c)
        if not self.params:
            return c
        return ParamRat.const(self.nparams, c)

    def param(self, name):
        i = self.params.index(name)
        return ParamRat(MPoly.var(self.nparams, i))

    def coerce(self, x):
        if not self.params:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, ParamRat):
                if x.nvars == 0 or x.is_constant():
                    return x.const_value()
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, ParamRat):
            if x.nvars != self.nparams:
                raise TypeError("parameter space mismatch")
            return x
        if isinstance(x, (int, Fraction)):
            return ParamRat.const(self.nparams, x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    # --- predicates used by generic code ---

    def is_zero(self, x):
        if isinstance(x, ParamRat):
            return x.is_zero()
        return x == 0

    def is_rational(self, x):
        """True when the element carries no actual parameter dependence."""
        if isinstance(x, ParamRat):
            return x.is_constant()
        return True

    def as_fraction(self, x):
        if isinstance(x, ParamRat):
            return x.const_value()
        return Fraction(x)

    def substitute(self, x, mapping):
        """Substitute parameter values; mapping: name -> Fraction/element."""
        if not isinstance(x, ParamRat):
            return x
        values = {}
        for name, v in mapping.items():
            i = self.params.index(name)
            if isinstance(v, ParamRat):
                raise TypeError("substitute expects rational values")
            values[i] = Fraction(v)
        return x.substitute(values)

    def extend(self, new_params):
        """Field with additional parameters appended."""
        return ConstField(self.params + tuple(new_params))

    def inject(self, target, x):
        """Re-express an element of this field inside ``target`` whose
        parameter list extends ours (same order prefix)."""
        if target.params[:self.nparams] != self.params:
            raise ValueError("target field does not extend this one")
        if not isinstance(x, ParamRat):
            return target.from_fraction(Fraction(x))
        pad = target.nparams - self.nparams

        def lift(p):
            return MPoly(target.nparams,
                         {e + (0,) * pad: c for e, c in p.terms.items()})

        return ParamRat(lift(x.num), lift(x.den), _reduced=True)


QQ = ConstField()
