"""Integer kernel lattices and toric ideals of integer matrices.

kernel_basis performs a column-style Hermite reduction while carrying the
unimodular transform, so the returned vectors span the full kernel lattice
rather than a finite-index sublattice.  toric_ideal turns a kernel basis into
binomial generators and saturates; the saturation trick (graded-revlex with
the cheapest variable) needs a positive grading that makes the ideal
homogeneous, which is arranged per matrix shape below.
"""

from __future__ import annotations

from typing import Sequence

from .binomials import (
    Binomial,
    BinomialSet,
    Block,
    DimensionMismatchError,
    VariableSpace,
    split_pos_neg,
    substitute_ones,
)
from .groebner import saturate_all
from .matrices import IntMatrix


class LatticeBasis:
    """Basis of the kernel lattice {v in Z^N : Av = 0}."""

    __slots__ = ("dim", "vectors")

    def __init__(self, dim: int, vectors: Sequence[Sequence[int]]):
        self.dim = dim
        self.vectors = tuple(tuple(v) for v in vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return f"LatticeBasis(dim={self.dim}, {len(self.vectors)} vectors)"


def kernel_basis(A: IntMatrix) -> LatticeBasis:
    """Lattice basis of the integer kernel of A (column vectors v, Av = 0)."""
    m, n = A.nrows, A.ncols
    M = [list(A.row(i)) for i in range(m)]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colswap(a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    def colsub(dst, src, q):
        if q == 0:
            return
        for row in M:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    col = 0
    for r in range(m):
        if col >= n:
            break
        while True:
            piv = None
            for j in range(col, n):
                e = M[r][j]
                if e != 0 and (piv is None or abs(e) < abs(M[r][piv])):
                    piv = j
            if piv is None:
                break
            if piv != col:
                colswap(piv, col)
            pv = M[r][col]
            done = True
            for j in range(col + 1, n):
                if M[r][j]:
                    colsub(j, col, M[r][j] // pv)
                    if M[r][j]:
                        done = False
            if done:
                break
        if col < n and M[r][col] != 0:
            col += 1
    vectors = [tuple(U[i][j] for i in range(n)) for j in range(col, n)]
    return LatticeBasis(n, vectors)


def _lattice_generators(A: IntMatrix, space: VariableSpace) -> BinomialSet:
    gens = [Binomial(*split_pos_neg(v)) for v in kernel_basis(A)]
    return BinomialSet(space, gens)


def toric_ideal(A: IntMatrix, space: VariableSpace | None = None) -> BinomialSet:
    """Generating set of the toric ideal of A.

    Forms the lattice-basis ideal of ker_Z(A) and saturates at every variable.
    Nonnegative matrices without zero columns use their column sums as the
    positive grading; zero columns contribute x_j - 1 directly; matrices with
    negative entries are computed through an added homogenizing variable that
    is substituted away at the end.
    """
    N = A.ncols
    if space is None:
        space = VariableSpace(Block("x", N))
    if space.dim != N:
        raise DimensionMismatchError(
            f"matrix has {N} columns but the variable space has dimension {space.dim}"
        )

    if all(e >= 0 for row in A for e in row):
        sums = [sum(A.column(j)) for j in range(N)]
        zero_cols = [j for j in range(N) if sums[j] == 0]
        if not zero_cols:
            return saturate_all(_lattice_generators(A, space), sums)
        # an all-zero column means x_j - 1 itself lies in the ideal; split it off
        keep = [j for j in range(N) if sums[j] > 0]
        out = [Binomial(tuple(1 if i == j else 0 for i in range(N)), (0,) * N) for j in zero_cols]
        if keep:
            sub = IntMatrix([[A[i, j] for j in keep] for i in range(A.nrows)], ncols=len(keep))
            inner = toric_ideal(sub, VariableSpace(Block("x", len(keep))))
            for b in inner:
                lhs = [0] * N
                rhs = [0] * N
                for pos, j in enumerate(keep):
                    lhs[j] = b.lhs[pos]
                    rhs[j] = b.rhs[pos]
                out.append(Binomial(lhs, rhs))
        return BinomialSet(space, out)

    # negative entries: adjoin a homogenizing variable via an all-ones row so
    # that total degree becomes a valid positive grading, then set it to 1
    aux = "t"
    names = {b.name for b in space.blocks}
    while aux in names:
        aux = "_" + aux
    ext_space = VariableSpace(*space.blocks, Block(aux, 1))
    rows = [list(A.row(i)) + [0] for i in range(A.nrows)]
    rows.append([1] * N + [1])
    sat = saturate_all(_lattice_generators(IntMatrix(rows), ext_space))
    return substitute_ones(sat, aux)
