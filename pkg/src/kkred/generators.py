"""Generators of a Zariski-dense subgroup of the connected Galois group:
parametric exponentials of nilpotent parts and torus relation data for
semisimple parts."""

from fractions import Fraction

from .domains import QQ, ConstField
from .envelope import dunford
from .errors import NotNilpotent
from .intlattice import integer_relation_lattice
from .linalg import Mat


def exp_nilpotent(N, param="t"):
    """exp(t N) as a matrix with entries polynomial in the parameter.

    Exact truncated series; raises NotNilpotent when N^n != 0.
    """
    n = N.rows
    power = Mat.identity(n, N.zero, N.one)
    for _ in range(n):
        power = power * N
    if not power.is_zero():
        raise NotNilpotent("matrix is not nilpotent")
    F = ConstField((param,))
    t = F.param(param)
    zero, one = F.zero(), F.one()
    out = Mat.identity(n, zero, one)
    term = Mat.identity(n, zero, one)
    Nf = N.map(lambda c: F.coerce(c))
    tk = one
    fact = Fraction(1)
    for k in range(1, n):
        term = term * Nf
        if term.is_zero():
            break
        tk = tk * t
        fact *= k
        out = out + term.scale(tk * F.from_fraction(Fraction(1, 1) / fact))
    return out


def torus_relations(eigenvalues):
    """Multiplicative torus relations from additive eigenvalue data.

    Returns (lattice basis, relation strings prod a_l^{e_l} = 1).
    """
    lattice = integer_relation_lattice(eigenvalues)
    rels = []
    for e in lattice:
        parts = []
        for i, k in enumerate(e):
            if k == 0:
                continue
            s = f"a{i + 1}"
            if k != 1:
                s += f"^{k}"
            parts.append(s)
        rels.append(("*".join(parts) if parts else "1") + " = 1")
    return lattice, rels


class DenseGenerator:
    """One parametric generator: a unipotent family and/or torus data."""

    def __init__(self, index, unipotent=None, torus=None):
        self.index = index
        self.unipotent = unipotent  # Mat over ConstField((t,)) or None
        self.torus = torus          # (P, eigenvalues, lattice, rels) or None


def dense_generators(lie_basis, field=QQ):
    """One generator description per Lie-basis element.

    Each element B splits as D + N (Dunford); N contributes a unipotent
    one-parameter family exp(tN), D a torus description through the
    relation lattice of its eigenvalues (log data taken additively).
    """
    out = []
    for idx, B in enumerate(lie_basis):
        D, N, P, eigenvalues = dunford(B, field)
        unip = None
        torus = None
        if not N.is_zero():
            unip = exp_nilpotent(N, param=f"t{idx + 1}")
        if not D.is_zero():
            lattice, rels = torus_relations(eigenvalues)
            torus = (P, eigenvalues, lattice, rels)
        out.append(DenseGenerator(idx, unip, torus))
    return out
