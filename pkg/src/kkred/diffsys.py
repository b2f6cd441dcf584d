"""Differential systems with block structure, gauge action, Wei-Norman
decompositions, and the diagonal/off-diagonal split."""

from .errors import BlockStructureError, SingularGauge
from .linalg import Mat, mat_over_ratfunc
from .ratfunc import RatFunc, common_denominator
from .upoly import UPoly


class DiffSystem:
    """Square matrix over k = C(x) with an ordered block partition.

    The matrix must be block-lower-triangular for the partition; violations
    are rejected at construction with the offending coordinates.
    """

    __slots__ = ("A", "partition")

    def __init__(self, A, partition):
        n = A.rows
        if A.cols != n:
            raise BlockStructureError("matrix not square")
        if sum(partition) != n:
            raise BlockStructureError(
                f"partition {partition} does not sum to {n}")
        starts = block_starts(partition)
        for bi in range(len(partition)):
            for bj in range(bi + 1, len(partition)):
                for i in range(starts[bi], starts[bi] + partition[bi]):
                    for j in range(starts[bj], starts[bj] + partition[bj]):
                        if not A.data[i][j].is_zero():
                            raise BlockStructureError(
                                f"nonzero entry above the block diagonal "
                                f"at ({i}, {j})")
        self.A = A
        self.partition = tuple(partition)

    @property
    def size(self):
        return self.A.rows

    @property
    def field(self):
        return self.A.data[0][0].field if self.size else None

    def block(self, bi, bj):
        starts = block_starts(self.partition)
        return self.A.submatrix(
            range(starts[bi], starts[bi] + self.partition[bi]),
            range(starts[bj], starts[bj] + self.partition[bj]))

    def diagonal_block(self, bi):
        return self.block(bi, bi)

    def __eq__(self, other):
        return (isinstance(other, DiffSystem)
                and self.partition == other.partition and self.A == other.A)


def block_starts(partition):
    starts = []
    s = 0
    for n in partition:
        starts.append(s)
        s += n
    return starts


def mat_derivative(M):
    return M.map(lambda e: e.derivative())


def gauge_transform(P, A):
    """P[A] = P A P^{-1} + P' P^{-1}; the substitution Z = P Y.

    ``P`` and ``A`` are matrices over RatFunc.  Raises SingularGauge when
    P is not invertible over k.
    """
    try:
        Pi = P.inverse()
    except ValueError:
        raise SingularGauge("gauge matrix is singular") from None
    return (P * A + mat_derivative(P)) * Pi


def gauge_on_system(P, sys_):
    return DiffSystem(gauge_transform(P, sys_.A), sys_.partition)


class WeiNorman:
    """A(x) = sum_i a_i(x) M_i with C-independent coefficient functions.

    ``coeffs``: list of RatFunc, a basis of the C-span of the entries,
    in reduced-echelon order.  ``gens``: constant matrices over the field.
    """

    __slots__ = ("coeffs", "gens")

    def __init__(self, coeffs, gens):
        self.coeffs = list(coeffs)
        self.gens = list(gens)

    def __len__(self):
        return len(self.coeffs)

    def reconstruct(self, zero_rf, one_rf):
        rows = self.gens[0].rows if self.gens else 0
        cols = self.gens[0].cols if self.gens else 0
        out = Mat.zeros(rows, cols, zero_rf, one_rf)
        for a, M in zip(self.coeffs, self.gens):
            out = out + M.map(lambda c: a * c)
        return out


def function_basis(entries):
    """Reduced-echelon C-basis of the C-span of rational functions.

    Returns (basis functions, coordinates) where coordinates[i] expresses
    entries[i] in the basis.  Deterministic: common denominator, numerator
    coefficient vectors, rref.
    """
    nonzero = [e for e in entries if not e.is_zero()]
    if not nonzero:
        return [], [[] for _ in entries]
    field = nonzero[0].field
    var = nonzero[0].var
    den, nums = common_denominator(nonzero)
    deg = max(p.degree for p in nums)
    vecs = []
    for p in nums:
        cs = list(p.coeffs) + [field.zero()] * (deg + 1 - len(p.coeffs))
        vecs.append(cs)
    m = Mat(vecs, field.zero(), field.one())
    R, pivots = m.rref()
    basis_vecs = [R.data[i] for i in range(len(pivots))]
    basis = [RatFunc(UPoly(field, bv, var), den) for bv in basis_vecs]
    # coordinates of each entry in the echelon basis: entry row reduces
    # against R; since R is rref, coordinates are read off pivot columns
    coords_nonzero = []
    for cs in vecs:
        coords_nonzero.append([cs[pc] for pc in pivots])
    # re-check exactness (pivot reading is only valid because rows of R are
    # reduced; entries are combinations of them by construction)
    it = iter(coords_nonzero)
    coords = []
    for e in entries:
        if e.is_zero():
            coords.append([field.zero()] * len(pivots))
        else:
            coords.append(next(it))
    return basis, coords


def wei_norman(M):
    """Wei-Norman decomposition of a matrix over RatFunc."""
    entries = [M.data[i][j] for i in range(M.rows) for j in range(M.cols)]
    if not entries:
        return WeiNorman([], [])
    field = None
    for e in entries:
        if not e.is_zero():
            field = e.field
            break
    if field is None:
        return WeiNorman([], [])
    basis, coords = function_basis(entries)
    gens = []
    for b in range(len(basis)):
        g = Mat([[coords[i * M.cols + j][b] for j in range(M.cols)]
                 for i in range(M.rows)], field.zero(), field.one())
        gens.append(g)
    return WeiNorman(basis, gens)


def wei_norman_vector(vec, field):
    """Same decomposition for a vector of RatFuncs.

    Returns (coeff functions, constant vectors).
    """
    basis, coords = function_basis(list(vec))
    consts = []
    for b in range(len(basis)):
        consts.append([coords[i][b] for i in range(len(vec))])
    return basis, consts


def split_diag_sub(sys_, cut):
    """Two-super-block view at ``cut``: A = A_diag + A_sub.

    ``cut`` groups the first ``cut`` partition blocks as the top super
    block.  Returns (A_diag matrix, S matrix, (n1, n2)).
    """
    if not (0 < cut < len(sys_.partition)):
        raise BlockStructureError("cut must split the partition in two")
    n1 = sum(sys_.partition[:cut])
    n2 = sum(sys_.partition[cut:])
    A = sys_.A
    zero, one = A.zero, A.one
    diag = Mat.zeros(sys_.size, sys_.size, zero, one)
    for i in range(n1):
        for j in range(n1):
            diag.data[i][j] = A.data[i][j]
    for i in range(n1, sys_.size):
        for j in range(n1, sys_.size):
            diag.data[i][j] = A.data[i][j]
    S = A.submatrix(range(n1, sys_.size), range(n1))
    return diag, S, (n1, n2)


def assemble_two_block(A1, A2, S):
    """[[A1, 0], [S, A2]] as one matrix."""
    zero, one = A1.zero, A1.one
    n1, n2 = A1.rows, A2.rows
    out = Mat.zeros(n1 + n2, n1 + n2, zero, one)
    for i in range(n1):
        for j in range(n1):
            out.data[i][j] = A1.data[i][j]
    for i in range(n2):
        for j in range(n2):
            out.data[n1 + i][n1 + j] = A2.data[i][j]
        for j in range(n1):
            out.data[n1 + i][j] = S.data[i][j]
    return out
