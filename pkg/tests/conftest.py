from fractions import Fraction

import pytest

from kkred.domains import QQ, ConstField
from kkred.linalg import Mat, mat_over_ratfunc
from kkred.parsing import parse_ratfunc
from kkred.ratfunc import RatFunc


def rmat(rows, field=QQ):
    """Matrix over RatFunc from strings/numbers."""
    parsed = [[parse_ratfunc(str(e), field) for e in r] for r in rows]
    return mat_over_ratfunc(parsed, field)


def rvec(entries, field=QQ):
    return [parse_ratfunc(str(e), field) for e in entries]


@pytest.fixture
def so3xsl2():
    """SO3 x SL2 system (entry (5,2) corrected so the printed gauge data is
    exactly consistent; see the frozen reduction artifacts)."""
    A_diag = rmat([
        ["0", "1", "x", "0", "0"],
        ["-1", "0", "0", "0", "0"],
        ["-x", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "1"],
        ["0", "0", "0", "-x", "0"]])
    S = [["-1/x + 1/(x-1)", "1 - 1/x^2", "x"],
         ["x + 1/(x-1)^2", "1 - 1/(x-1)", "-1 - 1/(x-1)"]]
    A = rmat([
        ["0", "1", "x", "0", "0"],
        ["-1", "0", "0", "0", "0"],
        ["-x", "0", "0", "0", "0"],
        S[0] + ["0", "1"],
        S[1] + ["-x", "0"]])
    return A, A_diag


@pytest.fixture
def so3xb2():
    """SO3 x B2 system, frozen consistently with the pinned elimination
    vector (1, x, -1-x) and the pinned reduced form."""
    A_diag = rmat([
        ["0", "1", "x", "0", "0"],
        ["-1", "0", "0", "0", "0"],
        ["-x", "0", "0", "0", "0"],
        ["0", "0", "0", "x", "1"],
        ["0", "0", "0", "0", "-x"]])
    A = rmat([
        ["0", "1", "x", "0", "0"],
        ["-1", "0", "0", "0", "0"],
        ["-x", "0", "0", "0", "0"],
        ["x + 1", "0", "2*x + 1", "x", "1"],
        ["x^2 + x", "x^2 + 2", "-x^2 - 1", "0", "-x"]])
    return A, A_diag


@pytest.fixture
def b3xb2():
    A_diag = rmat([
        ["1", "x", "0", "0", "0"],
        ["0", "-x - 1", "0", "0", "0"],
        ["0", "0", "x", "0", "0"],
        ["0", "0", "0", "x", "1"],
        ["0", "0", "0", "0", "-x"]])
    A = rmat([
        ["1", "x", "0", "0", "0"],
        ["0", "-x - 1", "0", "0", "0"],
        ["0", "0", "x", "0", "0"],
        ["-x", "1", "-1 - x", "x", "1"],
        ["x + 1", "(x + 1)/x", "2*x^2 + 1", "0", "-x"]])
    return A, A_diag
