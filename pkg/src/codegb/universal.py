"""Universal Groebner bases sieved out of a Graver basis.

Every Graver element is either discarded by the two-sided divisibility lemma,
or gets an open polyhedral cone of weight vectors; the element belongs to some
reduced basis iff that cone is non-empty.  Cone systems are decided exactly
with the rational LP solver, and every positive answer carries a weight-vector
witness that has been re-substituted into all strict inequalities.

A shortcut applies to generalized ideals in characteristic two: membership is
then read off the shape of the binomial alone, no cones involved.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .binomials import GENERALIZED, Binomial, BinomialSet
from .graver import GraverBasis
from .lp import feasible_point


class WrongKindOrCharacteristicError(ValueError):
    pass


class ConeSystem:
    """Open cone {w >= 0 : row . w > 0 for every row}."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: Iterable[Sequence[int]]):
        rs = []
        seen = set()
        for r in rows:
            t = tuple(r)
            if len(t) != dim:
                raise ValueError("cone row length disagrees with dim")
            assert any(t), "zero cone row: construction bug"
            if t not in seen:
                seen.add(t)
                rs.append(t)
        self.dim = dim
        self.rows = tuple(rs)

    def __repr__(self):
        return f"ConeSystem(dim={self.dim}, {len(self.rows)} rows)"


class UniversalBasis:
    """Union of all reduced Groebner bases, one canonical orientation each."""

    __slots__ = ("elements", "kind", "code", "witnesses")

    def __init__(self, elements: BinomialSet, kind, code, witnesses=None):
        self.elements = elements
        self.kind = kind
        self.code = code
        self.witnesses = dict(witnesses or {})

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _dot(r, w):
    acc = 0
    for a, b in zip(r, w):
        if a:
            acc += a * b
    return acc


# The relaxation sweep works in floats, so its output is only a guess; the
# caller must re-check the integer vector exactly before trusting it.
_RELAX_SCALE = 1 << 20
_RELAX_SWEEPS = 200


def _relaxation_candidate(rows, dim):
    """Cyclic Agmon-Motzkin relaxation driving every row above 1."""
    w = [1.0] * dim
    norms = [float(sum(e * e for e in r)) for r in rows]
    for _ in range(_RELAX_SWEEPS):
        moved = False
        for r, nrm in zip(rows, norms):
            s = 0.0
            for a, b in zip(w, r):
                if b:
                    s += a * b
            if s < 1.0:
                step = (1.25 - s) / nrm
                w = [max(0.0, a + step * e) for a, e in zip(w, r)]
                moved = True
        if not moved:
            return tuple(round(a * _RELAX_SCALE) for a in w)
    return None


def cone_is_empty(cone: ConeSystem, hints: Iterable[Sequence] = ()):
    """(True, None) when the open cone is empty, else (False, witness).

    By conic scaling the strict system has a point iff {w >= 0 : Rw >= 1}
    does.  Candidate witnesses come from hints, then from a float relaxation
    sweep, and only as a last resort from the exact LP; emptiness itself is
    always decided by the LP.  Every witness is checked back against all the
    strict inequalities before being returned.
    """
    rows = cone.rows
    if any(all(e <= 0 for e in r) for r in rows):
        return True, None
    rowset = set(rows)
    for r in rows:
        if tuple(-e for e in r) in rowset:
            return True, None
    for w in hints:
        if len(w) == cone.dim and all(_dot(r, w) > 0 for r in rows):
            return False, tuple(w)
    cand = _relaxation_candidate(rows, cone.dim)
    if cand is not None and all(_dot(r, cand) > 0 for r in rows):
        return False, cand
    w = feasible_point(rows, [1] * len(rows), cone.dim)
    if w is None:
        return True, None
    assert all(_dot(r, w) > 0 for r in rows)
    return False, w


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def prune_by_lemma(g: Binomial, graver: GraverBasis) -> bool:
    """True when another Graver element has both sides dividing one side of g.

    Such an element can never appear in a reduced basis: whichever of its
    sides leads, it rewrites that side of g.
    """
    gc = g.canonical()
    for e in graver.elements:
        if e == gc:
            continue
        for side in (g.lhs, g.rhs):
            if _divides(e.lhs, side) and _divides(e.rhs, side):
                return True
    return False


def cone_rows(g: Binomial, graver: GraverBasis) -> ConeSystem:
    """Cone system for g with designated sides (u, u') = (g.lhs, g.rhs).

    Targets are u minus one variable, for each variable in the support of u,
    plus u' itself.  For each Graver element, whichever side divides a target
    must be the cheaper side under the sought weight vector.  The element g
    itself contributes the row u - u' through the u' target.
    """
    u, up = g.lhs, g.rhs
    n = len(u)
    targets = []
    for ij in range(n):
        if u[ij]:
            targets.append(tuple(u[t] - (1 if t == ij else 0) for t in range(n)))
    targets.append(up)
    rows = []
    for e in graver.elements:
        v, vp = e.lhs, e.rhs
        for t in targets:
            if _divides(v, t):
                assert not _divides(vp, t), "both sides divide a target despite pruning"
                rows.append(tuple(b - a for a, b in zip(v, vp)))
            elif _divides(vp, t):
                rows.append(tuple(a - b for a, b in zip(v, vp)))
    return ConeSystem(n, rows)


def _oriented(g: Binomial) -> Binomial:
    """Orientation rule: nonzero side first for one-sided elements, else the
    side with the smaller support first."""
    lhs, rhs = g.lhs, g.rhs
    if not any(rhs):
        return g
    if not any(lhs):
        return g.swapped()
    if sum(1 for e in lhs if e) > sum(1 for e in rhs if e):
        return g.swapped()
    return g


def universal_basis(graver: GraverBasis) -> UniversalBasis:
    """Union of all reduced Groebner bases, computed by the cone sieve."""
    kept = []
    witnesses = {}
    pool: list = []
    for g in graver.elements:
        og = _oriented(g)
        if prune_by_lemma(og, graver):
            continue
        empty, w = cone_is_empty(cone_rows(og, graver), hints=pool)
        if empty:
            continue
        kept.append(g)
        witnesses[g.canonical()] = w
        # most-recently-useful witness first; elements of one reduced basis
        # tend to arrive in runs, so this keeps the hit rate high
        if w in pool:
            pool.remove(w)
        pool.insert(0, w)
        if len(pool) > 64:
            pool.pop()
    out = BinomialSet(graver.elements.space, kept)
    return UniversalBasis(out, graver.kind, graver.code, witnesses)


def universal_basis_char2(graver: GraverBasis) -> UniversalBasis:
    """Shape-based shortcut, valid for generalized ideals over GF(2^r).

    Keeps every element whose two sides are both nonconstant, plus the square
    relations x_ij^2 - 1; everything else is dropped.
    """
    code = graver.code
    if graver.kind != GENERALIZED or code.ff.p != 2:
        raise WrongKindOrCharacteristicError(
            "shortcut applies to generalized ideals in characteristic 2 only"
        )
    kept = []
    for g in graver.elements:
        lhs, rhs = g.lhs, g.rhs
        if any(lhs) and any(rhs):
            kept.append(g)
            continue
        side = lhs if any(lhs) else rhs
        if sum(side) == 2 and max(side) == 2:
            kept.append(g)
    out = BinomialSet(graver.elements.space, kept)
    return UniversalBasis(out, graver.kind, graver.code)
