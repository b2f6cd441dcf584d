import itertools
import random
from fractions import Fraction

import pytest

from kkred.adjoint import (PsiAction, adjoint_action_matrix,
                           associated_psi_space, build_isotypical_flag,
                           eigenring, hom_space, irreducible_submodule,
                           isotypical_decomposition, restrict_gens, spin)
from kkred.domains import QQ
from kkred.linalg import Mat, in_span, mat_over_field, spans_equal
from conftest import rmat, rvec


def blocks_of(A, n1, n2):
    A1 = A.submatrix(range(n1), range(n1))
    A2 = A.submatrix(range(n1, n1 + n2), range(n1, n1 + n2))
    return A1, A2


def test_adjoint_zero():
    A1 = rmat([["0", "0"], ["0", "0"]])
    A2 = rmat([["0"]])
    psi = adjoint_action_matrix(A1, A2)
    assert psi.is_zero()


def test_vec_identity_random():
    rng = random.Random(4)
    for _ in range(100):
        n1 = rng.randint(1, 3)
        n2 = rng.randint(1, 3)
        A1 = rmat([[str(rng.randint(-2, 2)) if rng.random() < .6 else "x"
                    for _ in range(n1)] for _ in range(n1)])
        A2 = rmat([[str(rng.randint(-2, 2)) for _ in range(n2)]
                   for _ in range(n2)])
        psi = adjoint_action_matrix(A1, A2)
        B = rmat([[str(rng.randint(-3, 3)) for _ in range(n1)]
                  for _ in range(n2)])
        img = B * A1 - A2 * B
        v = [B.data[r][c] for r in range(n2) for c in range(n1)]
        iv = [img.data[r][c] for r in range(n2) for c in range(n1)]
        pv = [sum((psi.data[i][j] * v[j] for j in range(n1 * n2)), psi.zero)
              for i in range(n1 * n2)]
        assert pv == iv


def test_psi_so3xb2_printed(so3xb2):
    # [PAPER 2.5.2] the printed 6x6 adjoint matrix
    A, A_diag = so3xb2
    A1, A2 = blocks_of(A_diag, 3, 2)
    psi = adjoint_action_matrix(A1, A2)
    printed = rmat([
        ["-x", "-1", "-x", "-1", "0", "0"],
        ["1", "-x", "0", "0", "-1", "0"],
        ["x", "0", "-x", "0", "0", "-1"],
        ["0", "0", "0", "x", "-1", "-x"],
        ["0", "0", "0", "1", "x", "0"],
        ["0", "0", "0", "x", "0", "x"]])
    assert psi == printed


def test_psi_so3xsl2_sign(so3xsl2):
    # the 2.5.1 display is the negative of the [., A_diag] convention
    A, A_diag = so3xsl2
    A1, A2 = blocks_of(A_diag, 3, 2)
    psi = adjoint_action_matrix(A1, A2)
    printed_neg = rmat([
        ["0", "1", "x", "1", "0", "0"],
        ["-1", "0", "0", "0", "1", "0"],
        ["-x", "0", "0", "0", "0", "1"],
        ["-x", "0", "0", "0", "1", "x"],
        ["0", "-x", "0", "-1", "0", "0"],
        ["0", "0", "-x", "-x", "0", "0"]])
    assert psi == printed_neg.scale(-psi.one)


def psi_action_for(A_diag, n1, n2):
    A1, A2 = blocks_of(A_diag, n1, n2)
    return PsiAction(A1, A2)


def test_wei_norman_of_psi_so3xb2(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    assert len(psi.coeffs) == 2  # functions {1, x}
    # reconstruction
    rec = psi.components[0].map(lambda c: psi.coeffs[0] * psi.matrix.one * c)
    total = Mat.zeros(6, 6, psi.matrix.zero, psi.matrix.one)
    for f, M in zip(psi.coeffs, psi.components):
        total = total + M.map(lambda c: f * psi.matrix.one * c)
    assert total == psi.matrix


def test_eigenring_so3xsl2_dim1(so3xsl2):
    A, A_diag = so3xsl2
    psi = psi_action_for(A_diag, 3, 2)
    er = eigenring(psi.components, QQ)
    assert len(er) == 1


def test_eigenring_so3xb2_dim1(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    er = eigenring(psi.components, QQ)
    assert len(er) == 1


def test_eigenring_identity_full_algebra():
    eye = mat_over_field([[1, 0], [0, 1]], QQ)
    er = eigenring([eye], QQ)
    assert len(er) == 4


def test_isotypical_so3xb2_single_block(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    blocks = isotypical_decomposition(psi.components, QQ)
    assert [len(b) for b in blocks] == [6]


def test_isotypical_b3xb2_blocks(b3xb2):
    A, A_diag = b3xb2
    psi = psi_action_for(A_diag, 3, 2)
    blocks = isotypical_decomposition(psi.components, QQ)
    assert sorted(len(b) for b in blocks) == [2, 4]


def test_irreducible_so3xsl2_whole(so3xsl2):
    A, A_diag = so3xsl2
    psi = psi_action_for(A_diag, 3, 2)
    ambient = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
               for i in range(6)]
    U = irreducible_submodule(ambient, psi.components, QQ)
    assert len(U) == 6


def test_irreducible_so3xb2_socle(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    ambient = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
               for i in range(6)]
    U = irreducible_submodule(ambient, psi.components, QQ)
    # V1 = <B1, B2, B3> (first row of the 2x3 block)
    expect = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
              for i in range(3)]
    assert spans_equal(U, expect, QQ.zero(), QQ.one())


def test_irreducible_nilpotent_line():
    # single nilpotent E_{1,2} on C^2: unique invariant line e1
    N = mat_over_field([[0, 1], [0, 0]], QQ)
    ambient = [[QQ.one(), QQ.zero()], [QQ.zero(), QQ.one()]]
    U = irreducible_submodule(ambient, [N], QQ)
    assert spans_equal(U, [[QQ.one(), QQ.zero()]], QQ.zero(), QQ.one())


def test_associated_space_so3xb2(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    # generator (0, -x, 1, 0, 0, 0)^T -> spin of constants {B2, B3}
    gen = rvec(["0", "-x", "1", "0", "0", "0"])
    W = associated_psi_space([gen], psi.components, psi, QQ)
    expect = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
              for i in range(3)]
    assert spans_equal(W, expect, QQ.zero(), QQ.one())
    # generator E2 = (0, 1/2, -1/(2x) | 0, -x, 1): associated space is all
    gen2 = rvec(["0", "1/2", "-1/(2*x)", "0", "-x", "1"])
    W2 = associated_psi_space([gen2], psi.components, psi, QQ)
    assert len(W2) == 6


def test_associated_space_fixed_constant():
    # constant vector killed by all components spans itself
    Z = mat_over_field([[0, 0], [0, 0]], QQ)
    W = associated_psi_space([rvec(["1", "0"])], [Z], None, QQ)
    assert spans_equal(W, [[QQ.one(), QQ.zero()]], QQ.zero(), QQ.one())


def test_hom_schur(so3xsl2):
    A, A_diag = so3xsl2
    psi = psi_action_for(A_diag, 3, 2)
    ambient = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
               for i in range(6)]
    homs = hom_space(ambient, ambient, psi.components, QQ)
    assert len(homs) == 1  # Schur: irreducible endomorphisms are scalar


def test_hom_nonisomorphic_zero(b3xb2):
    A, A_diag = b3xb2
    psi = psi_action_for(A_diag, 3, 2)
    blocks = isotypical_decomposition(psi.components, QQ)
    blocks = sorted(blocks, key=len)
    W2, W1 = blocks[0], blocks[1]
    # top irreducible of W1 (its socle) vs W2's socle: non-isomorphic
    U1 = irreducible_submodule(W1, psi.components, QQ)
    U2 = irreducible_submodule(W2, psi.components, QQ)
    homs = hom_space(U1, U2, psi.components, QQ)
    assert homs == []


def test_flag_so3xb2_levels(so3xb2):
    A, A_diag = so3xb2
    psi = psi_action_for(A_diag, 3, 2)
    blocks = isotypical_decomposition(psi.components, QQ)
    flag = build_isotypical_flag(blocks[0], psi.components, QQ)
    assert flag.level_dims == [3, 3]
    # bottom level is <B1,B2,B3>
    expect = [[QQ.one() if i == j else QQ.zero() for j in range(6)]
              for i in range(3)]
    bottom = [v for cp in flag.levels[0]["copies"] for v in cp]
    assert spans_equal(bottom, expect, QQ.zero(), QQ.one())


def test_flag_b3xb2_levels(b3xb2):
    A, A_diag = b3xb2
    psi = psi_action_for(A_diag, 3, 2)
    blocks = isotypical_decomposition(psi.components, QQ)
    blocks = sorted(blocks, key=len)
    flag2 = build_isotypical_flag(blocks[0], psi.components, QQ)
    assert flag2.level_dims == [1, 1]
    flag1 = build_isotypical_flag(blocks[1], psi.components, QQ)
    assert flag1.level_dims == [1, 1, 1, 1]


def test_flag_nesting_and_stability(so3xb2, b3xb2):
    for A, A_diag in (so3xb2, b3xb2):
        psi = psi_action_for(A_diag, 3, 2)
        blocks = isotypical_decomposition(psi.components, QQ)
        for block in blocks:
            flag = build_isotypical_flag(block, psi.components, QQ)
            acc = []
            for lv in flag.levels:
                for cp in lv["copies"]:
                    acc.extend(cp)
                from kkred.adjoint import is_stable
                from kkred.linalg import vec_span_rref
                span = vec_span_rref(acc, QQ.zero(), QQ.one())
                assert is_stable(span, psi.components, QQ.zero(), QQ.one())
            assert len(acc) == len(block)
