"""Dense exact linear algebra over any of the package's field-like domains.

A matrix is generic over its entries: anything supporting field arithmetic
through the Python operators (Fraction, ParamRat, RatFunc) works.  The
``zero``/``one`` pair is supplied at construction so structural operations
do not need to guess the domain.
"""

from fractions import Fraction


class Mat:
    __slots__ = ("rows", "cols", "data", "zero", "one")

    def __init__(self, data, zero, one):
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")
        self.zero = zero
        self.one = one

    # --- constructors ---

    @classmethod
    def from_rows(cls, data, zero, one):
        return cls(data, zero, one)

    @classmethod
    def zeros(cls, r, c, zero, one):
        return cls([[zero for _ in range(c)] for _ in range(r)], zero, one)

    @classmethod
    def identity(cls, n, zero, one):
        m = cls.zeros(n, n, zero, one)
        for i in range(n):
            m.data[i][i] = one
        return m

    def copy(self):
        return Mat(self.data, self.zero, self.one)

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and all(
                    self.data[i][j] == other.data[i][j]
                    for i in range(self.rows) for j in range(self.cols)))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def is_zero(self):
        return all(e == self.zero for r in self.data for e in r)

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.data, other.data)],
                   self.zero, self.one)

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.data, other.data)],
                   self.zero, self.one)

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.data], self.zero, self.one)

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            z = self.zero
            out = [[z] * other.cols for _ in range(self.rows)]
            for i in range(self.rows):
                ri = self.data[i]
                for k in range(self.cols):
                    a = ri[k]
                    if a == z:
                        continue
                    rk = other.data[k]
                    oi = out[i]
                    for j in range(other.cols):
                        b = rk[j]
                        if b == z:
                            continue
                        oi[j] = oi[j] + a * b
            return Mat(out, self.zero, self.one)
        return self.scale(other)

    def scale(self, c):
        return Mat([[a * c for a in r] for r in self.data],
                   self.zero, self.one)

    def transpose(self):
        return Mat([[self.data[i][j] for i in range(self.rows)]
                    for j in range(self.cols)], self.zero, self.one)

    def map(self, f):
        return Mat([[f(a) for a in r] for r in self.data],
                   self.zero, self.one)

    def hstack(self, other):
        return Mat([r1 + r2 for r1, r2 in zip(self.data, other.data)],
                   self.zero, self.one)

    def vstack(self, other):
        return Mat(self.data + other.data, self.zero, self.one)

    def submatrix(self, rows, cols):
        return Mat([[self.data[i][j] for j in cols] for i in rows],
                   self.zero, self.one)

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def row(self, i):
        return list(self.data[i])

    def trace(self):
        t = self.zero
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    # --- elimination ---

    def rref(self):
        """Reduced row echelon form; returns (R, pivot column list)."""
        R = [list(r) for r in self.data]
        z = self.zero
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pri = None
            for i in range(pr, self.rows):
                if R[i][pc] != z:
                    pri = i
                    break
            if pri is None:
                continue
            R[pr], R[pri] = R[pri], R[pr]
            inv = self.one / R[pr][pc]
            R[pr] = [e * inv for e in R[pr]]
            for i in range(self.rows):
                if i == pr:
                    continue
                f = R[i][pc]
                if f == z:
                    continue
                R[i] = [a - f * b for a, b in zip(R[i], R[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return Mat(R, self.zero, self.one), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right kernel, one vector per free column.

        Deterministic: the free column's slot carries 1, pivot slots the
        negated echelon entries.  Returns a list of column vectors (lists).
        """
        R, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        for j in range(self.cols):
            if j in pivset:
                continue
            v = [self.zero] * self.cols
            v[j] = self.one
            for pi, pc in enumerate(pivots):
                v[pc] = -R.data[pi][j]
            basis.append(v)
        return basis

    def solve(self, rhs_cols):
        """Particular solutions of self * X = rhs for each rhs column.

        ``rhs_cols``: list of column vectors.  Returns list of solutions or
        None entries where inconsistent.
        """
        aug = self.hstack(Mat([[c[i] for c in rhs_cols]
                               for i in range(self.rows)],
                              self.zero, self.one))
        R, pivots = aug.rref()
        n = self.cols
        sols = []
        for k in range(len(rhs_cols)):
            col = n + k
            if col in pivots:
                sols.append(None)
                continue
            v = [self.zero] * n
            for pi, pc in enumerate(pivots):
                if pc < n:
                    v[pc] = R.data[pi][col]
            sols.append(v)
        return sols

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        aug = self.hstack(Mat.identity(self.rows, self.zero, self.one))
        R, pivots = aug.rref()
        if pivots[:self.rows] != list(range(self.rows)):
            raise ValueError("singular matrix")
        return Mat([r[self.rows:] for r in R.data], self.zero, self.one)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        R = [list(r) for r in self.data]
        z = self.zero
        det = self.one
        for pc in range(self.cols):
            pri = None
            for i in range(pc, self.rows):
                if R[i][pc] != z:
                    pri = i
                    break
            if pri is None:
                return z
            if pri != pc:
                R[pc], R[pri] = R[pri], R[pc]
                det = -det
            det = det * R[pc][pc]
            inv = self.one / R[pc][pc]
            for i in range(pc + 1, self.rows):
                f = R[i][pc] * inv
                if f == z:
                    continue
                R[i] = [a - f * b for a, b in zip(R[i], R[pc])]
        return det

    def charpoly_coeffs(self):
        """Coefficients c_0..c_n of det(lambda I - M), ascending.

        Faddeev-LeVerrier: division-free except by integers, so it works
        over any commutative Q-algebra domain (RatFunc entries included).
        """
        n = self.rows
        if n != self.cols:
            raise ValueError("not square")
        cs = [self.zero] * (n + 1)
        cs[n] = self.one
        Mk = Mat.identity(n, self.zero, self.one)
        A = self
        for k in range(1, n + 1):
            AM = A * Mk
            t = AM.trace()
            ck = t * (self.one * Fraction(-1, k))
            cs[n - k] = ck
            Mk = AM
            for i in range(n):
                Mk.data[i][i] = Mk.data[i][i] + ck
        return cs

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def mat_over_field(data, field):
    """Matrix with plain ConstField entries."""
    return Mat([[field.coerce(e) for e in r] for r in data],
               field.zero(), field.one())


def mat_over_ratfunc(data, field, var="x"):
    """Matrix with RatFunc entries (constants coerced)."""
    from .ratfunc import RatFunc
    z = RatFunc.const(field, 0, var)
    o = RatFunc.const(field, 1, var)

    def cv(e):
        if isinstance(e, RatFunc):
            return e
        return RatFunc.const(field, field.coerce(e), var)

    return Mat([[cv(e) for e in r] for r in data], z, o)


def char_poly(m, field=None, var="lambda"):
    """Characteristic polynomial as a UPoly in ``var``.

    For matrices over a ConstField the coefficients live in that field;
    for RatFunc entries they are RatFuncs and the result is returned as a
    list of coefficients instead (the caller keeps the pairing).
    """
    cs = m.charpoly_coeffs()
    if field is not None:
        from .upoly import UPoly
        return UPoly(field, cs, var)
    return cs


def vec_span_rref(vectors, zero, one):
    """Echelon basis of the span of the given coordinate vectors."""
    if not vectors:
        return []
    m = Mat(vectors, zero, one)
    R, pivots = m.rref()
    return [R.data[i] for i in range(len(pivots))]


def in_span(vectors, v, zero, one):
    """Is v in the span of vectors? Exact membership test."""
    if not vectors:
        return all(e == zero for e in v)
    m = Mat([list(w) for w in vectors] + [list(v)], zero, one)
    return m.rank() == Mat(vectors, zero, one).rank()


def spans_equal(vs, ws, zero, one):
    if not vs and not ws:
        return True
    ra = Mat(vs, zero, one).rank() if vs else 0
    rb = Mat(ws, zero, one).rank() if ws else 0
    if ra != rb:
        return False
    both = Mat(list(vs) + list(ws), zero, one)
    return both.rank() == ra


def sparse_kernel(rows, ncols, zero, one):
    """Right-kernel basis for a big sparse system.

    ``rows``: iterable of dict col->coeff.  Same output convention as
    Mat.kernel (unit at each free column).
    """
    pivots = {}  # pivot col -> row dict, pivot coefficient normalized to 1
    inserted = []
    for r in rows:
        r = {c: v for c, v in r.items() if v != zero}
        while True:
            hit = next((c for c in r if c in pivots), None)
            if hit is None:
                break
            f = r.pop(hit)
            for cc, vv in pivots[hit].items():
                if cc == hit:
                    continue
                nv = r.get(cc, zero) - f * vv
                if nv == zero:
                    r.pop(cc, None)
                else:
                    r[cc] = nv
        if not r:
            continue
        pc = min(r)
        inv = one / r[pc]
        pivots[pc] = {c: v * inv for c, v in r.items()}
        inserted.append(pc)
    # back-substitution: a pivot row can only mention pivots inserted later,
    # so reducing in reverse insertion order terminates
    for pc in reversed(inserted):
        row = pivots[pc]
        while True:
            qc = next((c for c in row if c != pc and c in pivots), None)
            if qc is None:
                break
            f = row.pop(qc)
            for cc, vv in pivots[qc].items():
                if cc == qc:
                    continue
                nv = row.get(cc, zero) - f * vv
                if nv == zero:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
    basis = []
    pivset = set(pivots)
    for j in range(ncols):
        if j in pivset:
            continue
        v = [zero] * ncols
        v[j] = one
        for pc, row in pivots.items():
            c = row.get(j)
            if c is not None and c != zero:
                v[pc] = -c
        basis.append(v)
    return basis
