import random
from fractions import Fraction

import pytest

from kkred.domains import QQ
from kkred.linalg import (Mat, char_poly, in_span, mat_over_field,
                          mat_over_ratfunc, sparse_kernel, spans_equal)
from kkred.parsing import parse_ratfunc
from kkred.upoly import UPoly


def M(rows):
    return mat_over_field(rows, QQ)


def test_kernel_zero_matrix():
    k = M([[0, 0], [0, 0]]).kernel()
    assert len(k) == 2


def test_kernel_identity():
    assert M([[1, 0], [0, 1]]).kernel() == []


def test_kernel_rank_one():
    k = M([[1, 1], [2, 2]]).kernel()
    assert len(k) == 1
    assert k[0] == [Fraction(-1), Fraction(1)]


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(30):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = M([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        ker = m.kernel()
        assert m.rank() + len(ker) == c
        for v in ker:
            col = [sum(m.data[i][j] * v[j] for j in range(c)) for i in range(r)]
            assert all(e == 0 for e in col)


def test_charpoly_identity2():
    p = char_poly(M([[1, 0], [0, 1]]), QQ)
    assert p == UPoly(QQ, [1, -2, 1], "lambda")  # (l-1)^2


def test_charpoly_diag12():
    p = char_poly(M([[1, 0], [0, 2]]), QQ)
    assert p == UPoly(QQ, [2, -3, 1], "lambda")  # (l-1)(l-2)


def test_cayley_hamilton_random():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(1, 5)
        m = M([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        cs = m.charpoly_coeffs()
        acc = Mat.zeros(n, n, m.zero, m.one)
        p = Mat.identity(n, m.zero, m.one)
        for c in cs:
            acc = acc + p.scale(c)
            p = p * m
        assert acc.is_zero()


def test_charpoly_so3xsl2_psi():
    # [PAPER] chi_Psi = (l^2+x)(l^4+2l^2x^2+x^4+2l^2x-2x^3+2l^2+3x^2-2x+1)
    rows = [
        ["0", "1", "x", "1", "0", "0"],
        ["-1", "0", "0", "0", "1", "0"],
        ["-x", "0", "0", "0", "0", "1"],
        ["-x", "0", "0", "0", "1", "x"],
        ["0", "-x", "0", "-1", "0", "0"],
        ["0", "0", "-x", "-x", "0", "0"],
    ]
    psi = mat_over_ratfunc([[parse_ratfunc(e, QQ) for e in r] for r in rows], QQ)
    cs = psi.charpoly_coeffs()
    # expected: expand (l^2+x)*(l^4+2*l^2*x^2+x^4+2*l^2*x-2*x^3+2*l^2+3*x^2-2*x+1)
    x = parse_ratfunc("x", QQ)
    one = parse_ratfunc("1", QQ)
    f1 = {2: one, 0: x}
    f2 = {4: one, 2: 2 * x * x + 2 * x + 2 * one,
          0: x ** 4 - 2 * x ** 3 + 3 * x * x - 2 * x + one}
    prod = {}
    for d1, c1 in f1.items():
        for d2, c2 in f2.items():
            prod[d1 + d2] = prod.get(d1 + d2, 0 * one) + c1 * c2
    for d in range(7):
        assert cs[d] == prod.get(d, 0 * one), d


def test_solve_and_inverse():
    m = M([[2, 1], [1, 1]])
    inv = m.inverse()
    assert m * inv == Mat.identity(2, m.zero, m.one)
    sols = m.solve([[Fraction(3), Fraction(2)]])
    v = sols[0]
    assert [2 * v[0] + v[1], v[0] + v[1]] == [Fraction(3), Fraction(2)]


def test_sparse_kernel_matches_dense():
    rng = random.Random(13)
    for _ in range(20):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(c)]
                for _ in range(r)]
        dense = M(rows).kernel()
        sparse_rows = [{j: Fraction(v) for j, v in enumerate(row) if v}
                       for row in rows]
        sp = sparse_kernel(sparse_rows, c, Fraction(0), Fraction(1))
        assert spans_equal(dense, sp, Fraction(0), Fraction(1))
        assert len(dense) == len(sp)


def test_in_span():
    vs = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    assert in_span(vs, [Fraction(5), Fraction(3)], Fraction(0), Fraction(1))
    assert not in_span([vs[0]], [Fraction(0), Fraction(1)],
                       Fraction(0), Fraction(1))
