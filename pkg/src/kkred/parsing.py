"""String grammar for rational functions, plus canonical printers.

Grammar: integers, parameter names, the indeterminate, ``+ - * / ^``,
parentheses; ``^`` takes nonnegative integer exponents.  Whitespace is
ignored.  Implicit multiplication is not accepted.
"""

from fractions import Fraction

from .errors import ParseError
from .ratfunc import RatFunc
from .upoly import UPoly


def tokenize(s):
    toks = []
    i, n = 0, len(s)
    while i < n:
        c = s[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            toks.append(("int", int(s[i:j]), i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            toks.append(("name", s[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            toks.append((c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", position=i)
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, toks, field, var):
        self.toks = toks
        self.k = 0
        self.field = field
        self.var = var

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind):
        t = self.take()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {t[1]!r}", position=t[2])
        return t

    def parse_expr(self):
        t = self.peek()
        neg = False
        if t[0] in ("+", "-"):
            self.take()
            neg = t[0] == "-"
        node = self.parse_term()
        if neg:
            node = -node
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.parse_term()
            node = node - rhs if op == "-" else node + rhs
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.parse_factor()
            if op == "/":
                if rhs.is_zero():
                    raise ParseError("division by zero",
                                     position=self.peek()[2])
                node = node / rhs
            else:
                node = node * rhs
        return node

    def parse_factor(self):
        t = self.peek()
        if t[0] == "-":
            self.take()
            return -self.parse_factor()
        node = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError("exponent must be a nonnegative integer",
                                 position=e[2])
            node = node ** e[1]
        return node

    def parse_atom(self):
        t = self.take()
        if t[0] == "int":
            return RatFunc.const(self.field, Fraction(t[1]), self.var)
        if t[0] == "name":
            if t[1] == self.var:
                return RatFunc.x(self.field, self.var)
            if t[1] in self.field.params:
                return RatFunc.const(self.field, self.field.param(t[1]),
                                     self.var)
            raise ParseError(f"unknown symbol {t[1]!r}", position=t[2])
        if t[0] == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {t[1]!r}", position=t[2])


def parse_ratfunc(s, field, var="x"):
    """Parse a rational-function string over the given constant field."""
    p = _Parser(tokenize(s), field, var)
    node = p.parse_expr()
    end = p.take()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", position=end[2])
    return node


# ---- printing ----

def _format_fraction(c):
    return str(c)


def _format_mpoly(p, params):
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]),
                   reverse=True)
    out = []
    for e, c in items:
        factors = []
        if c == -1 and any(e):
            sign = "-"
        elif c == 1 and any(e):
            sign = ""
        else:
            sign = str(c) + ("*" if any(e) else "")
        for name, k in zip(params, e):
            if k == 0:
                continue
            factors.append(name if k == 1 else f"{name}^{k}")
        out.append(sign + "*".join(factors) if factors else str(c))
    s = out[0]
    for t in out[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def format_const(c, params=()):
    """Print a constant-field element."""
    if isinstance(c, Fraction) or isinstance(c, int):
        return _format_fraction(Fraction(c))
    num = _format_mpoly(c.num, params)
    if c.den.is_constant() and c.den.const_value() == 1:
        return num
    den = _format_mpoly(c.den, params)
    num_s = num if ("+" not in num and " - " not in num) else f"({num})"
    den_s = den if ("+" not in den and " - " not in den
                    and "*" not in den) else f"({den})"
    return f"{num_s}/{den_s}"


def format_upoly(p):
    if p.is_zero():
        return "0"
    params = p.field.params
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if p.field.is_zero(c):
            continue
        cs = format_const(c, params)
        if i == 0:
            parts.append(cs)
            continue
        xs = p.var if i == 1 else f"{p.var}^{i}"
        if cs == "1":
            parts.append(xs)
        elif cs == "-1":
            parts.append(f"-{xs}")
        elif any(op in cs for op in ("+", " - ", "/")) or (
                "-" in cs[1:]):
            parts.append(f"({cs})*{xs}")
        else:
            parts.append(f"{cs}*{xs}")
    s = parts[0]
    for t in parts[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def format_ratfunc(f):
    num = format_upoly(f.num)
    if f.den.degree == 0 and f.den.constant_term() == f.field.one():
        return num
    den = format_upoly(f.den)
    num_s = num if not any(op in num for op in ("+", " - ")) else f"({num})"
    den_s = den if not any(op in den for op in ("+", " - ", "*", "/")) \
        else f"({den})"
    return f"{num_s}/{den_s}"
