"""Smallest algebraic Lie algebra containing given constant matrices:
bracket closure, additive Jordan decomposition, and the eigenvalue
relation lattice for the semisimple parts."""

from fractions import Fraction

from .domains import QQ
from .errors import AlgebraicExtensionRequired, NonConvergence
from .intlattice import integer_relation_lattice, rational_solution_space
from .linalg import Mat, in_span, mat_over_field, vec_span_rref
from .upoly import UPoly, rational_roots, squarefree_decomposition


def _vec(M):
    return [M.data[i][j] for i in range(M.rows) for j in range(M.cols)]


def _unvec(v, n, zero, one):
    return Mat([[v[i * n + j] for j in range(n)] for i in range(n)],
               zero, one)


def bracket(A, B):
    return A * B - B * A


def bracket_closure(mats, field=QQ):
    """Basis of the smallest space containing ``mats`` closed under the
    Lie bracket.

    The basis keeps the original generators first (reduced against each
    other), then appends bracket products in discovery order, each reduced
    against the current span and scaled to leading coefficient 1.
    """
    zero, one = field.zero(), field.one()
    mats = [M for M in mats if not M.is_zero()]
    if not mats:
        return []
    n = mats[0].rows
    basis = []
    span = []

    def reduce_add(M):
        v = _vec(M)
        if in_span(span, v, zero, one):
            return False
        red = _reduce_vector(span, v, zero, one)
        lead = next((c for c in red if c != zero), None)
        if lead is None:
            return False
        red = [c / lead for c in red]
        basis.append(_unvec(red, n, zero, one))
        span.append(red)
        return True

    for M in mats:
        reduce_add(M)
    i = 0
    while i < len(basis):
        j = 0
        while j <= i:
            for X, Y in ((basis[i], basis[j]), (basis[j], basis[i])):
                if X is Y:
                    continue
                reduce_add(bracket(X, Y))
            j += 1
        i += 1
        if len(basis) > n * n:
            raise NonConvergence("bracket closure exceeded the ambient")
    return basis


def _reduce_vector(span, v, zero, one):
    """v minus its projection on the span (span rows in echelon form)."""
    if not span:
        return list(v)
    R, pivots = Mat(span, zero, one).rref()
    out = list(v)
    for pi, pc in enumerate(pivots):
        f = out[pc]
        if f != zero:
            out = [a - f * b for a, b in zip(out, R.data[pi])]
    return out


def rational_eigen_data(B, field=QQ):
    """(eigenvalue, multiplicity) pairs; raises when the characteristic
    polynomial does not split over Q."""
    cs = B.charpoly_coeffs()
    p = UPoly(field, cs, "lambda")
    roots = rational_roots(p)
    if sum(m for _, m in roots) != B.rows:
        raise AlgebraicExtensionRequired(
            "matrix has non-rational eigenvalues")
    return roots


def dunford(B, field=QQ):
    """Additive Jordan decomposition B = D + N over Q.

    Returns (D, N, P, eigenvalues) with P a diagonalizing conjugation for D
    (columns are eigenvectors) and eigenvalues listed in P's column order.
    """
    n = B.rows
    zero, one = field.zero(), field.one()
    roots = rational_eigen_data(B, field)
    # q(x) with q = lambda_i mod (x - lambda_i)^{m_i} via CRT
    moduli = []
    residues = []
    for lam, m in roots:
        moduli.append(UPoly(field, [-lam, 1]) ** m)
        residues.append(UPoly(field, [lam]))
    q = _crt_poly(residues, moduli, field)
    D = _poly_at_matrix(q, B, field)
    N = B - D
    # sanity: commuting and nilpotent
    assert D * N == N * D
    power = N
    for _ in range(n):
        power = power * N
    assert power.is_zero()
    P_cols = []
    eigenvalues = []
    for lam, m in roots:
        shifted = D - Mat.identity(n, zero, one).scale(field.coerce(lam))
        ker = shifted.kernel()
        assert len(ker) == m
        for v in ker:
            P_cols.append(v)
            eigenvalues.append(lam)
    P = Mat([[P_cols[j][i] for j in range(n)] for i in range(n)], zero, one)
    return D, N, P, eigenvalues


def _crt_poly(residues, moduli, field):
    if len(moduli) == 1:
        return residues[0] % moduli[0]
    total = moduli[0]
    acc = residues[0]
    for r, m in zip(residues[1:], moduli[1:]):
        # combine acc mod total with r mod m
        g, u, v = _poly_xgcd(total, m)
        assert g.degree == 0
        inv = u.scale(field.one() / g.constant_term())
        diff = (r - acc) % m
        acc = acc + total * ((inv * diff) % m)
        total = total * m
        acc = acc % total
    return acc


def _poly_xgcd(a, b):
    field = a.field
    r0, r1 = a, b
    s0, s1 = UPoly(field, [1], a.var), UPoly(field, [], a.var)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    # r0 = s0 a + t b for some t
    t = (r0 - s0 * a).exact_div(b) if b.degree >= 0 and not b.is_zero() \
        else UPoly(field, [], a.var)
    return r0, s0, t


def _poly_at_matrix(p, B, field):
    n = B.rows
    zero, one = field.zero(), field.one()
    acc = Mat.zeros(n, n, zero, one)
    for c in reversed(p.coeffs):
        acc = acc * B + Mat.identity(n, zero, one).scale(c)
    return acc


def envelope_of_one(B, field=QQ):
    """Basis of the smallest algebraic Lie algebra containing B."""
    n = B.rows
    zero, one = field.zero(), field.one()
    D, N, P, eigenvalues = dunford(B, field)
    out = []
    if not N.is_zero():
        out.append(N)
    if not D.is_zero():
        lattice = integer_relation_lattice(eigenvalues)
        diag_basis = rational_solution_space(lattice, n)
        Pinv = P.inverse()
        for a in diag_basis:
            Dg = Mat.zeros(n, n, zero, one)
            for i in range(n):
                Dg.data[i][i] = field.coerce(a[i])
            out.append(P * Dg * Pinv)
    return [M for M in out if not M.is_zero()]


def algebraic_envelope(mats, field=QQ):
    """Fixed point of bracket closure + per-element algebraic envelopes."""
    n = mats[0].rows if mats else 0
    current = bracket_closure(mats, field)
    for _ in range(n * n + 2):
        replaced = []
        for B in current:
            replaced.extend(envelope_of_one(B, field))
        new = bracket_closure(current + replaced, field)
        if len(new) == len(current):
            return new
        if len(new) > n * n:
            raise NonConvergence("envelope dimension exceeded ambient")
        current = new
    raise NonConvergence("envelope iteration did not stabilize")
