"""Rational solutions of first-order linear differential systems over C(x),
including the parametrized right-hand-side variant.

Route: cyclic vector to a scalar operator, denominator bounds from integer
roots of indicial polynomials at the rational singularities, degree bound
from the indicial polynomial at infinity, then one exact linear solve for
the ansatz coefficients and the right-hand-side constants together.
"""

import random
from fractions import Fraction

from .domains import QQ
from .errors import CyclicVectorNotFound
from .linalg import Mat
from .ratfunc import RatFunc, common_denominator, rational_pole_support
from .upoly import UPoly, poly_lcm, rational_roots


class Scalarized:
    """Cyclic-vector scalarization of Y' = Lam Y."""

    def __init__(self, Lam, T, Tinv, a):
        self.Lam = Lam
        self.T = T
        self.Tinv = Tinv
        self.a = a  # a_0..a_{m-1}; L = d^m - sum a_i d^i
        self.m = Lam.rows
        field = Lam.zero.field
        var = Lam.zero.var
        # cleared coefficients p_i: p_m = d, p_i = -d a_i
        den = UPoly.const(field, 1, var)
        for ai in a:
            den = poly_lcm(den, ai.den)
        self.clear = den
        self.p = [-(RatFunc.from_upoly(den) * ai).num for ai in a] \
            + [den]

    def transport(self, g):
        """eta with L(z) = eta for z = c.Y, when Y' = Lam Y + g."""
        m = self.m
        h = []
        for j in range(m):
            s = self.Lam.zero
            for k in range(m):
                s = s + self.T.data[j][k] * g[k]
            h.append(s)
        D = [self.Lam.zero] * (m + 1)  # D[j] = D_j, D[1] = 0
        for j in range(1, m):
            D[j + 1] = D[j].derivative() + h[j - 1]
        eta = D[m].derivative() + h[m - 1]
        for i in range(m):
            eta = eta - self.a[i] * D[i + 1]
        return eta

    def recover(self, z, g):
        """Solution Y of Y' = Lam Y + g from scalar z with L(z) = transport(g)."""
        m = self.m
        h = []
        for j in range(m):
            s = self.Lam.zero
            for k in range(m):
                s = s + self.T.data[j][k] * g[k]
            h.append(s)
        D = [self.Lam.zero] * (m + 1)
        for j in range(1, m):
            D[j + 1] = D[j].derivative() + h[j - 1]
        Z = []
        zd = z
        for j in range(1, m + 1):
            Z.append(zd - D[j])
            zd = zd.derivative()
        out = []
        for i in range(m):
            s = self.Lam.zero
            for j in range(m):
                s = s + self.Tinv.data[i][j] * Z[j]
            out.append(s)
        return out


def cyclic_vector(Lam, seed=0):
    """Scalarize via a cyclic vector.

    Returns a Scalarized carrying the operator coefficients (a_0..a_{m-1}
    with monic leading term), the jet transform T and its inverse.
    """
    m = Lam.rows
    field = Lam.zero.field
    var = Lam.zero.var
    zero, one = Lam.zero, Lam.one

    def rows_from(c):
        rows = [c]
        for _ in range(m):
            prev = rows[-1]
            nxt = [prev[j].derivative() for j in range(m)]
            for j in range(m):
                acc = nxt[j]
                for k in range(m):
                    acc = acc + prev[k] * Lam.data[k][j]
                nxt[j] = acc
            rows.append(nxt)
        return rows

    candidates = []
    e1 = [one if j == 0 else zero for j in range(m)]
    candidates.append(e1)
    candidates.append([one for _ in range(m)])
    rng = random.Random(seed)
    xs = RatFunc.x(field, var)
    for _ in range(40):
        cand = []
        for _ in range(m):
            p = zero
            for d in range(m + 1):
                p = p + xs ** d * field.from_fraction(
                    Fraction(rng.randint(-3, 3)))
            cand.append(p)
        candidates.append(cand)

    for c in candidates:
        rows = rows_from(c)
        T = Mat(rows[:m], zero, one)
        if T.rank() != m:
            continue
        Tinv = T.inverse()
        # r_m = a . T
        rhs = [[rows[m][j]] for j in range(m)]
        sols = T.transpose().solve([[rows[m][j] for j in range(m)]])
        a = sols[0]
        if a is None:
            continue
        return Scalarized(Lam, T, Tinv, a)
    raise CyclicVectorNotFound(f"no cyclic vector after {len(candidates)} tries")


def _spec_point(field, polys_in_nu):
    """Parameter specialization keeping every nonzero coefficient nonzero."""
    if not field.params:
        return None
    for base in range(1, 40):
        mapping = {name: Fraction(base + 7 * i)
                   for i, name in enumerate(field.params)}
        ok = True
        for p in polys_in_nu:
            for c in p.coeffs:
                if field.is_zero(c):
                    continue
                if field.is_zero(field.substitute(c, mapping)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return mapping
    return {name: Fraction(1009 + i) for i, name in enumerate(field.params)}


def _integer_roots_superset(ind):
    """All integers n that could be roots of ``ind`` (poly in nu over the
    constant field).  Parameters are specialized first, which can only
    enlarge the set; bounds stay correct."""
    field = ind.field
    if ind.is_zero():
        raise ValueError("zero indicial polynomial")
    if field.params and not all(field.is_rational(c) for c in ind.coeffs):
        mapping = _spec_point(field, [ind])
        ind = UPoly(QQ, [field.as_fraction(field.substitute(c, mapping))
                         for c in ind.coeffs], ind.var)
    elif field.params:
        ind = UPoly(QQ, [field.as_fraction(c) for c in ind.coeffs], ind.var)
    return [int(r) for r, _ in rational_roots(ind) if r.denominator == 1]


def _indicial_at(p_list, alpha):
    """Indicial polynomial (in nu) and shift v at a finite point.

    p_i d^i applied to (x-alpha)^nu contributes at exponent
    nu + val(p_i) - i; the terms attaining the minimal shift v make up the
    indicial polynomial sum lc(p_i) nu(nu-1)...(nu-i+1).
    """
    field = p_list[-1].field
    data = []
    v = None
    for i, p in enumerate(p_list):
        if p.is_zero():
            continue
        val = p.valuation_at(alpha)
        if v is None or val - i < v:
            v = val - i
        data.append((i, val))
    ind = None
    for i, val in data:
        if val - i != v:
            continue
        lc = p_list[i].taylor_coeff_at(alpha, val)
        t = _falling_nu(i, field).scale(lc)
        ind = t if ind is None else ind + t
    return ind, v


def _falling_nu(i, field):
    p = UPoly(field, [1], "nu")
    for k in range(i):
        p = p * UPoly(field, [field.from_fraction(Fraction(-k)),
                              field.one()], "nu")
    return p


def _indicial_at_infinity(p_list):
    field = p_list[-1].field
    w = None
    for i, p in enumerate(p_list):
        if p.is_zero():
            continue
        if w is None or p.degree - i > w:
            w = p.degree - i
    ind = None
    for i, p in enumerate(p_list):
        if p.is_zero() or p.degree - i != w:
            continue
        t = _falling_nu(i, field).scale(p.leading())
        ind = t if ind is None else ind + t
    return ind, w


def _apply_operator(p_list, f):
    """(sum_i p_i d^i) f for a RatFunc f."""
    out = f * 0
    g = f
    for p in p_list:
        if not p.is_zero():
            out = out + RatFunc.from_upoly(p) * g
        g = g.derivative()
    return out


class AnsatzSpace:
    """Denominator and degree bounds for candidate scalar solutions."""

    def __init__(self, den_poly, deg_bound):
        self.den = den_poly          # UPoly denominator D(x)
        self.deg = deg_bound         # max numerator degree (may be -1: empty)

    @property
    def dim(self):
        return max(0, self.deg + 1)


def scalar_bounds(sc, cleared_etas, rhs_cols):
    """AnsatzSpace containing every rational z with L~(z) = sum c_i eta~_i.

    ``cleared_etas``: transported and denominator-cleared right-hand sides.
    Candidate poles come from Lam and the original right-hand columns; the
    scalar transport may introduce apparent singular points but solutions
    cannot have poles there.
    """
    field = sc.clear.field
    var = sc.clear.var
    lam_entries = [sc.Lam.data[i][j] for i in range(sc.m)
                   for j in range(sc.m)]
    rhs_entries = [f for col in rhs_cols for f in col if not f.is_zero()]
    support = rational_pole_support(lam_entries + rhs_entries)
    den = UPoly.const(field, 1, var)
    nonzero_etas = [e for e in cleared_etas if not e.is_zero()]
    for alpha in support:
        ind, v = _indicial_at(sc.p, alpha)
        cands = _integer_roots_superset(ind)
        lows = [r for r in cands if r < 0]
        bound = -min(lows) if lows else 0
        for e in nonzero_etas:
            va = e.valuation_at(alpha)
            if va is not None:
                bound = max(bound, -(va - v))
        if bound > 0:
            a = field.coerce(Fraction(alpha)) if field.params \
                else Fraction(alpha)
            den = den * UPoly(field, [-a, field.one()], var) ** bound
    ind_inf, w = _indicial_at_infinity(sc.p)
    cands = _integer_roots_superset(ind_inf)
    degs = list(cands)
    for e in nonzero_etas:
        degs.append(e.degree_at_infinity() - w)
    if not degs:
        return AnsatzSpace(den, -1)
    return AnsatzSpace(den, max(degs) + den.degree)


def solve_with_rhs(Lam, rhs_cols, seed=0):
    """Basis of {(F, c) : F' = Lam F + sum_i c_i b_i, F rational}.

    ``rhs_cols``: list of t column vectors (lists of RatFunc).  Returns a
    list of (F, c) pairs, echelon-normalized with the c-block leading.
    Every returned pair is plug-back verified.
    """
    m = Lam.rows
    field = Lam.zero.field
    var = Lam.zero.var
    zero_rf, one_rf = Lam.zero, Lam.one
    t = len(rhs_cols)
    sc = cyclic_vector(Lam, seed=seed)
    etas = [sc.transport(g) for g in rhs_cols]
    # L~ = clear * L, so the matching equation is L~(z) = sum c_i clear*eta_i
    cleared_etas = [RatFunc.from_upoly(sc.clear) * e for e in etas]
    space = scalar_bounds(sc, cleared_etas, rhs_cols)
    nb = space.dim
    Drf = RatFunc.from_upoly(space.den)
    basis_imgs = []
    xs = RatFunc.x(field, var)
    for j in range(nb):
        zj = xs ** j / Drf
        basis_imgs.append(_apply_operator(sc.p, zj))
    allf = [f for f in basis_imgs + cleared_etas if not f.is_zero()]
    if not allf:
        den_all = UPoly.const(field, 1, var)
    else:
        den_all, _ = common_denominator(allf)
    dall = RatFunc.from_upoly(den_all)

    def poly_of(f):
        g = f * dall
        assert g.den.degree == 0
        return g.num.scale(field.one() / g.den.constant_term())

    cols = []
    for i in range(t):
        cols.append(poly_of(cleared_etas[i]) if not cleared_etas[i].is_zero()
                    else UPoly(field, [], var))
    for j in range(nb):
        cols.append(poly_of(basis_imgs[j]) if not basis_imgs[j].is_zero()
                    else UPoly(field, [], var))
    maxdeg = max([p.degree for p in cols if not p.is_zero()] + [0])
    rows = []
    for d in range(maxdeg + 1):
        row = []
        for i in range(t):
            c = cols[i].coeffs[d] if d <= cols[i].degree else field.zero()
            row.append(-c)  # equation: sum_j beta_j col_j - sum_i c_i col_i = 0
        for j in range(nb):
            p = cols[t + j]
            row.append(p.coeffs[d] if d <= p.degree else field.zero())
        rows.append(row)
    M = Mat(rows, field.zero(), field.one()) if rows else \
        Mat.zeros(0, t + nb, field.zero(), field.one())
    kern = M.kernel() if rows else \
        [[field.one() if i == k else field.zero() for i in range(t + nb)]
         for k in range(t + nb)]
    out = []
    for v in kern:
        cvec = v[:t]
        beta = v[t:]
        znum = UPoly(field, beta, var)
        z = RatFunc.from_upoly(znum) / Drf
        g = [zero_rf] * m
        for i in range(t):
            coef = RatFunc.const(field, cvec[i], var)
            for r in range(m):
                g[r] = g[r] + coef * rhs_cols[i][r]
        F = sc.recover(z, g)
        # plug-back: F' - Lam F - g = 0 exactly
        for r in range(m):
            lhs = F[r].derivative()
            for k in range(m):
                lhs = lhs - Lam.data[r][k] * F[k]
            lhs = lhs - g[r]
            assert lhs.is_zero(), "plug-back failed"
        if all(c == field.zero() for c in cvec) and all(f.is_zero()
                                                        for f in F):
            continue
        # normalize: leading nonzero c-entry scaled to 1
        lead = next((c for c in cvec if c != field.zero()), None)
        if lead is not None and lead != field.one():
            inv = field.one() / lead
            cvec = [c * inv for c in cvec]
            F = [f * inv for f in F]
        out.append((F, list(cvec)))
    return out


def rational_solutions_homogeneous(Lam, seed=0):
    """Basis of rational solutions of Y' = Lam Y."""
    pairs = solve_with_rhs(Lam, [], seed=seed)
    return [F for F, _ in pairs]


def rational_solutions_parametrized(Lam, rhs_cols, seed=0):
    """Lemma-style solution space of Y' = Lam Y + sum_i s_i b_i."""
    return solve_with_rhs(Lam, rhs_cols, seed=seed)


def feasibility_matrix(Lam, rhs_cols, seed=0):
    """M with: Y' = Lam Y + sum_i c_i b_i has a rational solution iff Mc = 0.

    The ansatz image space is parameter-free (Lam must not involve ledger
    parameters); the right-hand sides may.  Returns (M, solver) where
    ``solver(cvec)`` computes the general rational solution data for a
    feasible direction: (particular F, homogeneous basis Fs).
    """
    m = Lam.rows
    field = Lam.zero.field
    var = Lam.zero.var
    t = len(rhs_cols)
    sc = cyclic_vector(Lam, seed=seed)
    etas = [sc.transport(g) for g in rhs_cols]
    cleared_etas = [RatFunc.from_upoly(sc.clear) * e for e in etas]
    space = scalar_bounds(sc, cleared_etas, rhs_cols)
    nb = space.dim
    Drf = RatFunc.from_upoly(space.den)
    xs = RatFunc.x(field, var)
    basis_imgs = [_apply_operator(sc.p, xs ** j / Drf) for j in range(nb)]
    allf = [f for f in basis_imgs + cleared_etas if not f.is_zero()]
    den_all = common_denominator(allf)[0] if allf \
        else UPoly.const(field, 1, var)
    dall = RatFunc.from_upoly(den_all)

    def poly_of(f):
        if f.is_zero():
            return UPoly(field, [], var)
        g = f * dall
        assert g.den.degree == 0
        return g.num.scale(field.one() / g.den.constant_term())

    bcols = [poly_of(f) for f in basis_imgs]
    ccols = [poly_of(f) for f in cleared_etas]
    maxdeg = max([p.degree for p in bcols + ccols if not p.is_zero()] + [0])
    nrows = maxdeg + 1
    # B block must be parameter-free
    Bq = []
    for d in range(nrows):
        row = []
        for p in bcols:
            c = p.coeffs[d] if d <= p.degree else field.zero()
            assert field.is_rational(c), "ansatz block depends on parameters"
            row.append(field.as_fraction(c))
        Bq.append(row)
    Bmat = Mat(Bq, Fraction(0), Fraction(1)) if nb else \
        Mat.zeros(nrows, 0, Fraction(0), Fraction(1))
    left_null = Bmat.transpose().kernel()  # rows rho with rho.B = 0
    Mrows = []
    for rho in left_null:
        row = []
        for p in ccols:
            acc = field.zero()
            for d in range(nrows):
                c = p.coeffs[d] if d <= p.degree else field.zero()
                acc = acc + c * field.from_fraction(rho[d])
            row.append(acc)
        Mrows.append(row)
    M = Mat(Mrows, field.zero(), field.one()) if Mrows else \
        Mat.zeros(0, t, field.zero(), field.one())
    return M, (sc, space, rhs_cols)
