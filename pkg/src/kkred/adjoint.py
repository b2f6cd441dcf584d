"""The adjoint action on the off-diagonal block and its module structure.

Conventions.  The off-diagonal space consists of the n2 x n1 lower-left
blocks B_s, coordinatized ROW-MAJOR (B_1 = E_{1,1}, B_2 = E_{1,2}, ...).
``adjoint_action_matrix`` returns the matrix of B_s |-> B_s A1 - A2 B_s,
i.e. the action induced by B |-> [B, A_diag]; the level matrices used by
the reduction are its negative (the action of [A_diag, .]).
"""

import random
from fractions import Fraction

from .diffsys import wei_norman
from .errors import AlgebraicExtensionRequired, NonConvergence
from .linalg import (Mat, in_span, mat_over_field, sparse_kernel,
                     spans_equal, vec_span_rref)
from .ratfunc import RatFunc
from .upoly import UPoly, rational_roots


def adjoint_action_matrix(A1, A2):
    """Matrix of B_s |-> B_s A1 - A2 B_s in row-major coordinates."""
    n1 = A1.rows
    n2 = A2.rows
    N = n1 * n2
    zero, one = A1.zero, A1.one
    out = Mat.zeros(N, N, zero, one)
    for r in range(n2):
        for c in range(n1):
            j = r * n1 + c
            # image of E_{r,c}: row r gets row c of A1; minus col r of A2
            for cc in range(n1):
                out.data[r * n1 + cc][j] = out.data[r * n1 + cc][j] \
                    + A1.data[c][cc]
            for rr in range(n2):
                out.data[rr * n1 + c][j] = out.data[rr * n1 + c][j] \
                    - A2.data[rr][r]
    return out


class PsiAction:
    """The adjoint action data for a two-super-block split.

    ``matrix``: (n1 n2)^2 matrix over RatFunc (action of [., A_diag]).
    ``coeffs``/``components``: its Wei-Norman decomposition, so
    matrix = sum_i coeffs_i(x) * components_i with constant components.
    """

    def __init__(self, A1, A2):
        self.n1 = A1.rows
        self.n2 = A2.rows
        self.matrix = adjoint_action_matrix(A1, A2)
        wn = wei_norman(self.matrix)
        self.coeffs = wn.coeffs
        self.components = wn.gens
        self.field = A1.zero.field

    @property
    def dim(self):
        return self.n1 * self.n2

    def vec(self, Bs):
        """Row-major coordinates of an n2 x n1 block."""
        return [Bs.data[r][c] for r in range(self.n2) for c in range(self.n1)]

    def unvec(self, v, zero=None, one=None):
        zero = self.matrix.zero if zero is None else zero
        one = self.matrix.one if one is None else one
        return Mat([[v[r * self.n1 + c] for c in range(self.n1)]
                    for r in range(self.n2)], zero, one)


def build_psi(A_diag_sys, cut=1):
    """PsiAction of a block-diagonal system at the given 2-cut."""
    from .diffsys import split_diag_sub
    diag, S, (n1, n2) = split_diag_sub(A_diag_sys, cut)
    if not S.is_zero():
        raise ValueError("system is not block-diagonal at the cut")
    A1 = A_diag_sys.A.submatrix(range(n1), range(n1))
    A2 = A_diag_sys.A.submatrix(range(n1, n1 + n2), range(n1, n1 + n2))
    return PsiAction(A1, A2)


# ---- constant module machinery (everything below is over the constants) --


def apply_mat(M, v):
    return [sum((M.data[i][j] * v[j] for j in range(len(v))), M.zero)
            for i in range(M.rows)]


def spin(vectors, gens, zero, one):
    """Smallest subspace containing ``vectors`` stable under all ``gens``."""
    basis = vec_span_rref(list(vectors), zero, one)
    queue = list(basis)
    while queue:
        v = queue.pop()
        for G in gens:
            w = apply_mat(G, v)
            if not in_span(basis, w, zero, one):
                basis = vec_span_rref(basis + [w], zero, one)
                queue.append(w)
    return basis


def is_stable(basis, gens, zero, one):
    for G in gens:
        for v in basis:
            if not in_span(basis, apply_mat(G, v), zero, one):
                return False
    return True


def eigenring(components, field):
    """Commutant {E : E Psi_i = Psi_i E for all i} as a list of matrices."""
    N = components[0].rows if components else 0
    zero, one = field.zero(), field.one()
    rows = []
    for P in components:
        # (E P - P E)[a][b] = sum_k E[a][k] P[k][b] - P[a][k] E[k][b]
        for a in range(N):
            for b in range(N):
                row = {}
                for k in range(N):
                    if not field.is_zero(P.data[k][b]):
                        row[a * N + k] = row.get(a * N + k, zero) \
                            + P.data[k][b]
                    if not field.is_zero(P.data[a][k]):
                        row[k * N + b] = row.get(k * N + b, zero) \
                            - P.data[a][k]
                row = {c: v for c, v in row.items() if not field.is_zero(v)}
                if row:
                    rows.append(row)
    ker = sparse_kernel(rows, N * N, zero, one)
    return [Mat([[v[i * N + j] for j in range(N)] for i in range(N)],
                zero, one) for v in ker]


def restrict_gens(gens, basis, zero, one):
    """Matrices of the generators on the subspace spanned by ``basis``.

    ``basis`` vectors must span a stable subspace; coordinates are solved
    exactly against the basis.
    """
    B = Mat([list(b) for b in basis], zero, one).transpose()
    out = []
    for G in gens:
        cols = []
        for b in basis:
            img = apply_mat(G, b)
            sol = B.solve([img])[0]
            if sol is None:
                raise ValueError("subspace not stable")
            cols.append(sol)
        out.append(Mat([[cols[j][i] for j in range(len(basis))]
                        for i in range(len(basis))], zero, one))
    return out


def _rational_eigenvalues(M, field):
    """(eigenvalue, multiplicity) list if the char poly splits over Q."""
    cs = M.charpoly_coeffs()
    if field.params:
        if not all(field.is_rational(c) for c in cs):
            return None
        from .domains import QQ as _QQ
        p = UPoly(_QQ, [field.as_fraction(c) for c in cs], "lambda")
    else:
        p = UPoly(field, cs, "lambda")
    roots = rational_roots(p)
    if sum(m for _, m in roots) != M.rows:
        return None
    return roots


def _generic_element(basis_mats, rng, field):
    coeffs = [field.from_fraction(Fraction(rng.randint(-5, 5)))
              for _ in basis_mats]
    zero, one = field.zero(), field.one()
    N = basis_mats[0].rows
    out = Mat.zeros(N, N, zero, one)
    for c, B in zip(coeffs, basis_mats):
        out = out + B.scale(c)
    return out


def isotypical_decomposition(components, field, seed=0, retries=12):
    """Isotypical blocks of the module defined by the constant components.

    Returns a list of bases (each a list of coordinate vectors), found by
    splitting along generalized eigenspaces of generic commutant elements,
    refined until no block splits further.  Deterministic given the seed.
    """
    N = components[0].rows
    zero, one = field.zero(), field.one()
    ambient = [[one if i == j else zero for j in range(N)] for i in range(N)]
    blocks = [ambient]
    rng = random.Random(seed)
    changed = True
    while changed:
        changed = False
        new_blocks = []
        for basis in blocks:
            if len(basis) == 1:
                new_blocks.append(basis)
                continue
            sub = restrict_gens(components, basis, zero, one)
            er = eigenring(sub, field)
            if len(er) <= 1:
                new_blocks.append(basis)
                continue
            split = _split_by_eigenring(basis, sub, er, field, rng, retries)
            if split is None or len(split) == 1:
                new_blocks.append(basis)
            else:
                changed = True
                new_blocks.extend(split)
        blocks = new_blocks
    # deterministic presentation: ascending dimension, then lexicographic
    blocks.sort(key=lambda b: (len(b),))
    return blocks


def _split_by_eigenring(basis, sub_gens, er_basis, field, rng, retries):
    """Split a block along generalized eigenspaces of a generic commutant
    element; None when only one eigenvalue exists (no split possible)."""
    zero, one = field.zero(), field.one()
    s = len(basis)
    got_rational = False
    for _ in range(retries):
        P = _generic_element(er_basis, rng, field)
        ev = _rational_eigenvalues(P, field)
        if ev is None:
            continue
        got_rational = True
        if len(ev) == 1:
            # single eigenvalue: a shifted nilpotent cannot split this way,
            # but another combination might; keep trying a few times
            continue
        parts = []
        for lam, mult in ev:
            lam_e = field.from_fraction(lam) if not field.params \
                else field.coerce(Fraction(lam))
            shifted = P - Mat.identity(s, zero, one).scale(lam_e)
            power = Mat.identity(s, zero, one)
            for _ in range(mult):
                power = power * shifted
            ker = power.kernel()
            part = [_lift(basis, v) for v in ker]
            parts.append(part)
        return parts
    if not got_rational:
        raise AlgebraicExtensionRequired(
            "generic commutant element has irrational eigenvalues")
    return None


def _lift(basis, coords):
    n = len(basis[0])
    out = [basis[0][0] * 0 for _ in range(n)]
    for c, b in zip(coords, basis):
        for i in range(n):
            out[i] = out[i] + c * b[i]
    return out


def _radical(algebra_basis, field):
    """Radical of a matrix algebra via the trace form (char 0)."""
    zero, one = field.zero(), field.one()
    rows = []
    for A in algebra_basis:
        row = []
        for B in algebra_basis:
            row.append((A * B).trace())
        rows.append(row)
    M = Mat(rows, zero, one)
    ker = M.kernel()
    out = []
    for v in ker:
        s = len(algebra_basis[0].data)
        acc = Mat.zeros(s, s, zero, one)
        for c, B in zip(v, algebra_basis):
            acc = acc + B.scale(c)
        out.append(acc)
    return out


def _algebra_closure(gens, field):
    """Basis of the unital algebra generated by the matrices."""
    zero, one = field.zero(), field.one()
    s = gens[0].rows if gens else 0
    eye = Mat.identity(s, zero, one)
    basis_vecs = vec_span_rref([_mat_vec(eye)] + [_mat_vec(G) for G in gens],
                               zero, one)
    queue = list(basis_vecs)
    while queue:
        v = queue.pop()
        Mv = _vec_mat(v, s, zero, one)
        for G in gens:
            for prod in (Mv * G, G * Mv):
                w = _mat_vec(prod)
                if not in_span(basis_vecs, w, zero, one):
                    basis_vecs = vec_span_rref(basis_vecs + [w], zero, one)
                    queue.append(w)
    return [_vec_mat(v, s, zero, one) for v in basis_vecs]


def _mat_vec(M):
    return [M.data[i][j] for i in range(M.rows) for j in range(M.cols)]


def _vec_mat(v, s, zero, one):
    return Mat([[v[i * s + j] for j in range(s)] for i in range(s)],
               zero, one)


def irreducible_submodule(basis, components, field, seed=0):
    """An irreducible submodule inside the stable subspace ``basis``.

    Certified: the returned subspace has commutant of dimension 1 and a
    semisimple restriction algebra, and every spun basis vector generates
    the whole subspace.
    """
    zero, one = field.zero(), field.one()
    rng = random.Random(seed)
    current = list(basis)
    for _ in range(len(basis) + 2):
        if len(current) == 1:
            break
        sub = restrict_gens(components, current, zero, one)
        alg = _algebra_closure(sub, field)
        rad = _radical(alg, field)
        rad = [R for R in rad if not R.is_zero()]
        if rad:
            # J.V is a proper nonzero submodule
            vecs = []
            for R in rad:
                for j in range(R.cols):
                    vecs.append(R.col(j))
            span = vec_span_rref(vecs, zero, one)
            span = [v for v in span]
            assert span and len(span) < len(current)
            current = [_lift(current, v) for v in span]
            continue
        comm = eigenring(sub, field)
        if len(comm) == 1:
            break
        # semisimple with nontrivial commutant: split along an eigenspace
        for _ in range(12):
            P = _generic_element(comm, rng, field)
            ev = _rational_eigenvalues(P, field)
            if ev is None:
                continue
            if len(ev) == 1:
                continue
            lam = ev[0][0]
            lam_e = field.coerce(Fraction(lam))
            ker = (P - Mat.identity(len(current), zero, one)
                   .scale(lam_e)).kernel()
            current = [_lift(current, v) for v in ker]
            break
        else:
            raise AlgebraicExtensionRequired(
                "commutant splitting needs irrational eigenvalues")
    # certification by spinning
    for v in current:
        assert spans_equal(spin([v], components, zero, one), current,
                           zero, one), "irreducibility certificate failed"
    return current


def hom_space(src_basis, dst_basis, components, field):
    """All intertwiners L: src -> dst (L S_i = D_i L).

    Returned as matrices of shape (dim dst) x (dim src) in the given bases.
    """
    zero, one = field.zero(), field.one()
    S = restrict_gens(components, src_basis, zero, one)
    D = restrict_gens(components, dst_basis, zero, one)
    s, d = len(src_basis), len(dst_basis)
    rows = []
    for Si, Di in zip(S, D):
        # L Si - Di L = 0; unknowns L[a][b], a<d, b<s
        for a in range(d):
            for b in range(s):
                row = {}
                for k in range(s):
                    if not field.is_zero(Si.data[k][b]):
                        row[a * s + k] = row.get(a * s + k, zero) \
                            + Si.data[k][b]
                for k in range(d):
                    if not field.is_zero(Di.data[a][k]):
                        row[k * s + b] = row.get(k * s + b, zero) \
                            - Di.data[a][k]
                row = {c: v for c, v in row.items() if not field.is_zero(v)}
                if row:
                    rows.append(row)
    ker = sparse_kernel(rows, d * s, zero, one)
    return [Mat([[v[a * s + b] for b in range(s)] for a in range(d)],
                zero, one) for v in ker]


def associated_psi_space(generators_over_k, components, psi, field):
    """Smallest constant stable subspace whose extension contains the
    given vectors over k (entries RatFunc)."""
    from .diffsys import wei_norman_vector
    zero, one = field.zero(), field.one()
    consts = []
    for g in generators_over_k:
        _, vecs = wei_norman_vector(g, field)
        consts.extend(vecs)
    if not consts:
        return []
    return spin(consts, components, zero, one)


# ---- isotypical flags ----


class Flag:
    """Isotypical flag of one block, bottom-up.

    ``levels[k]`` holds the adapted data of W^[k+1]/W^[k]: a list of copies
    (each a list of r ambient coordinate vectors, transported by hom
    isomorphisms so the quotient action matches across copies) and the
    r x r quotient matrices of each constant component on one copy.
    """

    def __init__(self, block_basis, levels, field):
        self.block = block_basis
        self.levels = levels
        self.field = field

    @property
    def level_dims(self):
        return [sum(len(c) for c in lv["copies"]) for lv in self.levels]

    def adapted_vectors(self):
        out = []
        for lv in self.levels:
            for copy in lv["copies"]:
                out.extend(copy)
        return out


def _complement(lower, candidates, zero, one):
    """Extend ``lower`` to a basis of span(candidates + lower) preferring
    the candidates in order."""
    chosen = []
    current = list(lower)
    for cand in candidates:
        if not in_span(current, cand, zero, one):
            current.append(cand)
            chosen.append(cand)
    return chosen


def _coords_in(basis, v, zero, one):
    B = Mat([list(b) for b in basis], zero, one).transpose()
    sol = B.solve([list(v)])[0]
    if sol is None:
        raise ValueError("vector not in span")
    return sol


def _quotient_data(components, lower, comp, zero, one):
    """Quotient action matrices on span(comp) modulo span(lower)."""
    full = list(lower) + list(comp)
    q = len(comp)
    out = []
    for G in components:
        cols = []
        for v in comp:
            img = apply_mat(G, v)
            coords = _coords_in(full, img, zero, one)
            cols.append(coords[len(lower):])
        out.append(Mat([[cols[j][i] for j in range(q)] for i in range(q)],
                       zero, one))
    return out


def _minimize_couplings(level_vecs, level_mats, lower, components,
                        priority, zero, one):
    """Adjust lifts by elements of ``lower`` to null as many coupling
    coefficients as possible, highest-priority component first.

    ``level_mats``: quotient matrices lam_i of the components on the level
    (in the level_vecs order).  Returns corrected vectors.
    """
    if not lower:
        return level_vecs
    p = len(level_vecs)
    q = len(lower)
    full = list(lower) + [v for v in level_vecs]
    # current couplings gamma_i[t][j] and lower restriction of components
    gammas = []
    lowmats = []
    for gi, G in enumerate(components):
        gam = Mat.zeros(q, p, zero, one)
        for j, v in enumerate(level_vecs):
            img = apply_mat(G, v)
            coords = _coords_in(full, img, zero, one)
            for t in range(q):
                gam.data[t][j] = coords[t]
        gammas.append(gam)
        low = Mat.zeros(q, q, zero, one)
        for t, l in enumerate(lower):
            img = apply_mat(G, l)
            coords = _coords_in(full, img, zero, one)
            for tt in range(q):
                low.data[tt][t] = coords[tt]
        lowmats.append(low)
    # unknowns c[t][j] (q*p); new gamma_i = gamma_i + low_i c - c lam_i
    nunk = q * p
    committed = []  # rows [a_0..a_{nunk-1} | rhs]
    for gi in priority:
        gam, low, lam = gammas[gi], lowmats[gi], level_mats[gi]
        for t in range(q):
            for j in range(p):
                row = [zero] * (nunk + 1)
                for tp in range(q):
                    row[tp * p + j] = row[tp * p + j] + low.data[t][tp]
                for s in range(p):
                    row[t * p + s] = row[t * p + s] - lam.data[s][j]
                row[nunk] = -gam.data[t][j]
                trial = committed + [row]
                m_aug = Mat(trial, zero, one)
                m_lhs = Mat([r[:nunk] for r in trial], zero, one)
                if m_lhs.rank() == m_aug.rank():
                    committed.append(row)
    if not committed:
        return level_vecs
    lhs = Mat([r[:nunk] for r in committed], zero, one)
    sol = lhs.solve([[r[nunk] for r in committed]])[0]
    assert sol is not None
    out = []
    for j, v in enumerate(level_vecs):
        w = list(v)
        for t in range(q):
            cval = sol[t * p + j]
            if cval != zero:
                for i in range(len(w)):
                    w[i] = w[i] + cval * lower[t][i]
        out.append(w)
    return out


def build_isotypical_flag(block_basis, components, field, seed=0):
    """Construct the flag of one isotypical block (levels bottom-up)."""
    zero, one = field.zero(), field.one()
    # priority for coupling clean-up: last Wei-Norman component first
    priority = list(range(len(components)))[::-1]
    lower = []
    levels = []
    guard = 0
    while len(lower) < len(block_basis):
        guard += 1
        if guard > len(block_basis) + 1:
            raise NonConvergence("flag construction did not terminate")
        comp = _complement(lower, block_basis, zero, one)
        qgens = _quotient_data(components, lower, comp, zero, one)
        qdim = len(comp)
        qidentity = [[one if i == j else zero for j in range(qdim)]
                     for i in range(qdim)]
        U = irreducible_submodule(qidentity, qgens, field, seed=seed)
        homs = hom_space(U, qidentity, qgens, field)
        # images of the hom basis give the copies; in the split case they
        # are automatically in direct sum
        copies_q = []
        used = []
        allimgs = []
        for L in homs:
            # column i of L is the image of the i-th basis vector of U,
            # expressed in quotient coordinates
            imgs = [L.col(i) for i in range(len(U))]
            allimgs.extend(imgs)
            if any(in_span(used, w, zero, one) for w in imgs):
                continue
            cand = vec_span_rref(used + imgs, zero, one)
            if len(cand) != len(used) + len(imgs):
                continue
            used = cand
            copies_q.append(imgs)
        assert copies_q, "no copy found for the socle layer"
        if not spans_equal(used, vec_span_rref(allimgs, zero, one),
                           zero, one):
            raise AlgebraicExtensionRequired(
                "hom images are not in direct sum (non-split endomorphisms)")
        # quotient action on the first copy in its (transported) basis
        first = copies_q[0]
        lams = restrict_gens(qgens, first, zero, one)
        # check identical matrices across copies (hom transport)
        for cp in copies_q[1:]:
            assert restrict_gens(qgens, cp, zero, one) == lams
        # lift to ambient coordinates and minimize couplings
        lifted_copies = []
        for cp in copies_q:
            lifted = []
            for w in cp:
                amb = [zero] * len(block_basis[0])
                for cval, base in zip(w, comp):
                    if cval != zero:
                        for i in range(len(amb)):
                            amb[i] = amb[i] + cval * base[i]
                lifted.append(amb)
            lifted_copies.append(lifted)
        flat = [v for cp in lifted_copies for v in cp]
        lam_flat = _block_diag_mats(lams, len(lifted_copies), zero, one)
        flat = _minimize_couplings(flat, lam_flat, lower, components,
                                   priority, zero, one)
        r = len(first)
        lifted_copies = [flat[i * r:(i + 1) * r]
                         for i in range(len(lifted_copies))]
        levels.append({"copies": lifted_copies, "level_mats": lams})
        for cp in lifted_copies:
            lower.extend(cp)
        # stability of the accumulated space
        assert is_stable(vec_span_rref(lower, zero, one), components,
                         zero, one)
    return Flag(block_basis, levels, field)


def _block_diag_mats(lams, ncopies, zero, one):
    """Quotient matrices of the flattened level (copies block-diagonal)."""
    r = lams[0].rows if lams else 0
    out = []
    for lam in lams:
        big = Mat.zeros(r * ncopies, r * ncopies, zero, one)
        for c in range(ncopies):
            for i in range(r):
                for j in range(r):
                    big.data[c * r + i][c * r + j] = lam.data[i][j]
        out.append(big)
    return out
