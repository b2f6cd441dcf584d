"""Integer lattice utilities: Hermite normal form, integer kernels,
and the additive relation lattice of a list of rationals."""

from fractions import Fraction


def hnf_row(mat):
    """Row-style Hermite normal form of an integer matrix.

    Returns (H, U) with U unimodular, U @ mat = H, H in row HNF (pivot
    entries positive, entries above pivots reduced, zero rows last).
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    H = [list(r) for r in mat]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        # find nonzero pivot at or below row r, reduce column c by gcd steps
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(H[i][c]))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            if H[r][c] < 0:
                H[r] = [-e for e in H[r]]
                U[r] = [-e for e in U[r]]
            done = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c] != 0:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
            if r == m:
                break
    return H, U


def integer_kernel(mat):
    """Basis of {v in Z^n : mat @ v = 0}, saturated by construction.

    Works on the transpose via HNF: rows of U mapping to zero rows of H.
    """
    if not mat:
        return []
    n = len(mat[0])
    tr = [[mat[i][j] for i in range(len(mat))] for j in range(n)]
    H, U = hnf_row(tr)
    out = []
    for i, row in enumerate(H):
        if all(e == 0 for e in row):
            out.append(U[i])
    return [_normalize_sign(v) for v in out]


def _normalize_sign(v):
    for e in v:
        if e != 0:
            return [-x for x in v] if e < 0 else list(v)
    return list(v)


def integer_relation_lattice(values):
    """Basis of {e in Z^n : sum e_i * values_i = 0} for rational values."""
    vals = [Fraction(v) for v in values]
    if not vals:
        return []
    den = 1
    for v in vals:
        den = den * v.denominator // _gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    return integer_kernel([ints])


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def rational_solution_space(lattice, n):
    """Q-basis of {a in Q^n : <e, a> = 0 for all e in lattice rows}."""
    from .linalg import Mat
    if not lattice:
        return [[Fraction(1 if i == j else 0) for j in range(n)]
                for i in range(n)]
    m = Mat([[Fraction(e) for e in row] for row in lattice],
            Fraction(0), Fraction(1))
    return m.kernel()
