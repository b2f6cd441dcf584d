import random
from fractions import Fraction

import pytest

from kkred.domains import QQ
from kkred.envelope import (algebraic_envelope, bracket_closure, dunford,
                            envelope_of_one)
from kkred.linalg import Mat, mat_over_field, spans_equal


def M(rows):
    return mat_over_field(rows, QQ)


def vec(m):
    return [m.data[i][j] for i in range(m.rows) for j in range(m.cols)]


def test_closure_sl2():
    e = M([[0, 1], [0, 0]])
    f = M([[0, 0], [1, 0]])
    basis = bracket_closure([e, f])
    assert len(basis) == 3
    h = M([[1, 0], [0, -1]])
    assert spans_equal([vec(b) for b in basis], [vec(e), vec(f), vec(h)],
                       QQ.zero(), QQ.one())


def test_closure_commuting_diagonal():
    a = M([[1, 0], [0, 2]])
    b = M([[3, 0], [0, 5]])
    basis = bracket_closure([a, b])
    assert len(basis) == 2


def test_closure_zero():
    assert bracket_closure([M([[0, 0], [0, 0]])]) == []


def test_dunford_nilpotent():
    B = M([[0, 1], [0, 0]])
    D, N, P, ev = dunford(B)
    assert D.is_zero() and N == B
    assert ev == [0, 0]


def test_dunford_diagonalizable():
    B = M([[1, 0], [0, 2]])
    D, N, P, ev = dunford(B)
    assert N.is_zero() and D == B


def test_dunford_jordan_block():
    B = M([[1, 1], [0, 1]])
    D, N, P, ev = dunford(B)
    assert D == M([[1, 0], [0, 1]])
    assert N == M([[0, 1], [0, 0]])
    assert ev == [1, 1]


def test_dunford_mixed():
    B = M([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    D, N, P, ev = dunford(B)
    assert D + N == B and D * N == N * D
    nn = N * N * N
    assert nn.is_zero()
    # P diagonalizes D
    Pi = P.inverse()
    Dg = Pi * D * P
    for i in range(3):
        for j in range(3):
            if i != j:
                assert Dg.data[i][j] == QQ.zero()


def test_envelope_diag12():
    B = M([[1, 0], [0, 2]])
    env = envelope_of_one(B)
    assert len(env) == 1
    assert spans_equal([vec(env[0])], [vec(B)], QQ.zero(), QQ.one())


def test_envelope_nilpotent():
    B = M([[0, 1], [0, 0]])
    env = envelope_of_one(B)
    assert len(env) == 1
    assert spans_equal([vec(env[0])], [vec(B)], QQ.zero(), QQ.one())


def test_envelope_identity():
    B = M([[1, 0], [0, 1]])
    env = envelope_of_one(B)
    assert len(env) == 1


def test_envelope_contains_element():
    rng = random.Random(8)
    for _ in range(10):
        n = rng.randint(1, 3)
        B = M([[rng.randint(-2, 2) if j >= i else 0 for j in range(n)]
               for i in range(n)])
        env = envelope_of_one(B)
        if B.is_zero():
            assert env == []
            continue
        assert spans_equal([vec(x) for x in env] + [vec(B)],
                           [vec(x) for x in env], QQ.zero(), QQ.one())


def test_envelope_single_torus_dimension():
    # dim Lie(D) = n - rank(relation lattice); for one rational diagonal
    # element that is always 1 unless D = 0
    B = M([[2, 0], [0, 3]])
    assert len(algebraic_envelope([B])) == 1
    B2 = M([[1, 0, 0], [0, 2, 0], [0, 0, 4]])
    assert len(algebraic_envelope([B2])) == 1
    # two independent diagonals span the full diagonal torus at n = 2
    env = algebraic_envelope([M([[1, 0], [0, 2]]), M([[1, 0], [0, 3]])])
    assert len(env) == 2


def test_envelope_idempotent():
    mats = [M([[0, 1], [0, 0]]), M([[1, 0], [0, -1]])]
    e1 = algebraic_envelope(mats)
    e2 = algebraic_envelope(e1)
    assert spans_equal([vec(b) for b in e1], [vec(b) for b in e2],
                       QQ.zero(), QQ.one())


def test_envelope_conjugation_invariance():
    rng = random.Random(3)
    mats = [M([[0, 1], [0, 0]]), M([[2, 0], [0, 1]])]
    base = algebraic_envelope(mats)
    for _ in range(5):
        while True:
            g = M([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
            try:
                gi = g.inverse()
                break
            except ValueError:
                continue
        conj = [g * m * gi for m in mats]
        env = algebraic_envelope(conj)
        assert len(env) == len(base)


def test_envelope_sl2_dimension():
    e = M([[0, 1], [0, 0]])
    f = M([[0, 0], [1, 0]])
    env = algebraic_envelope([e, f])
    assert len(env) == 3
