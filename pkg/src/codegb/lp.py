"""Exact feasibility of {x >= 0 : Ax >= b} by phase-one simplex.

Everything runs over Fraction; Bland's rule guarantees termination, so the
result is a decision procedure, not a numerical heuristic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)

# generous bound; Bland's rule cannot cycle, so hitting this means a bug
_MAX_PIVOTS = 200000


def feasible_point(
    rows: Sequence[Sequence[int]], rhs: Sequence, dim: int
) -> Optional[tuple]:
    """Some nonnegative rational x with rows[k] . x >= rhs[k] for every k.

    Returns None when the system is infeasible.
    """
    m = len(rows)
    if m == 0:
        return (_ZERO,) * dim
    n = dim
    ncols = n + 2 * m + 1  # structural, surplus/slack, artificial, rhs

    T = []
    basis = []
    artificial = set()
    for i, (r, b) in enumerate(zip(rows, rhs)):
        if len(r) != n:
            raise ValueError("row length disagrees with dim")
        row = [Fraction(v) for v in r] + [_ZERO] * (2 * m) + [Fraction(b)]
        row[n + i] = Fraction(-1)
        if row[-1] < 0:
            row = [-v for v in row]  # flip so rhs >= 0; surplus becomes a slack
        if row[-1] == 0 and row[n + i] < 0:
            row = [-v for v in row]
        if row[n + i] > 0:
            basis.append(n + i)
        else:
            a = n + m + i
            row[a] = _ONE
            basis.append(a)
            artificial.add(a)
        T.append(row)

    # reduced costs for minimizing the sum of artificials
    obj = [_ZERO] * ncols
    for i in range(m):
        if basis[i] in artificial:
            for j in range(ncols):
                obj[j] -= T[i][j]
    for a in artificial:
        obj[a] += _ONE

    for _ in range(_MAX_PIVOTS):
        enter = -1
        for j in range(ncols - 1):
            # a departed artificial is never brought back (its column is dead)
            if obj[j] < 0 and j not in artificial:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise AssertionError("phase-one objective unbounded")
        piv = T[leave][enter]
        prow = [v / piv for v in T[leave]]
        T[leave] = prow
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [v - f * w for v, w in zip(T[i], prow)]
        if obj[enter]:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, prow)]
        basis[leave] = enter
    else:
        raise AssertionError("pivot limit exceeded")

    if -obj[-1] != 0:
        return None
    x = [_ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    return tuple(x)
