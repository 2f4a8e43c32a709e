"""Graver bases of code ideals through Lawrence liftings.

Both pipelines share one shape: lift the defining integer matrix, take the
toric ideal, kill the pI-block variables, run Buchberger over the doubled
x/y space, and finally set y to 1.  The intermediate basis is asserted to
consist of mirrored binomials x^u y^v - x^v y^u, which is what makes the last
substitution lossless.  An exhaustive-search oracle over bounded exponent
vectors provides an independent cross-check for small codes.
"""

from __future__ import annotations

from typing import Optional

from .binomials import (
    GENERALIZED,
    ORDINARY,
    Binomial,
    BinomialSet,
    Block,
    VariableSpace,
    generalized_space,
    ordinary_space,
    split_pos_neg,
    substitute_ones,
    word_of_binomial,
)
from .codes import LinearCode
from .groebner import buchberger
from .matrices import build_He, build_Hplus_e, lawrence_lift
from .orders import MonomialOrder, degrevlex
from .toric import toric_ideal

SEARCH_LIMIT = 10 ** 8


class SearchSpaceTooLargeError(ValueError):
    pass


class GraverBasis:
    """Primitive binomials of a code ideal."""

    __slots__ = ("elements", "kind", "code")

    def __init__(self, elements: BinomialSet, kind: str, code: LinearCode):
        self.elements = elements
        self.kind = kind
        self.code = code

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GraverBasis)
            and self.kind == other.kind
            and self.elements == other.elements
        )

    def __repr__(self):
        return f"GraverBasis({self.kind}, {len(self.elements)} elements)"


def _pipeline(code: LinearCode, mat, xshape, kind: str, order: Optional[MonomialOrder]) -> GraverBasis:
    p = code.ff.p
    lifted = lawrence_lift(mat, p)
    space = VariableSpace(Block("x", xshape), Block("y", xshape), Block("z", mat.nrows))
    assert lifted.ncols == space.dim
    gens = toric_ideal(lifted, space)
    s = substitute_ones(gens, "z")
    if order is None:
        order = degrevlex(s.space.dim)
    gb = buchberger(s, order)
    nx = s.space.block("x").size
    for b in gb:
        # mirrored shape x^u y^v - x^v y^u
        assert b.lhs[:nx] == b.rhs[nx:] and b.lhs[nx:] == b.rhs[:nx]
    out = substitute_ones(gb.binomials, "y")
    for b in out:
        assert b.is_pure
        assert word_of_binomial(code, b, kind) is not None
    return GraverBasis(out, kind, code)


def graver_ordinary(code: LinearCode, order: Optional[MonomialOrder] = None) -> GraverBasis:
    """Graver basis of the code ideal (one variable per coordinate slot)."""
    return _pipeline(code, build_He(code), (code.n, code.ff.r), ORDINARY, order)


def graver_generalized(code: LinearCode, order: Optional[MonomialOrder] = None) -> GraverBasis:
    """Graver basis of the generalized code ideal (one variable per nonzero element)."""
    q = code.ff.q
    return _pipeline(code, build_Hplus_e(code), (code.n, q - 1), GENERALIZED, order)


def graver_bruteforce(code: LinearCode, kind: str) -> GraverBasis:
    """Exhaustive oracle: enumerate difference vectors, keep primitive members.

    A binomial pair (u, v) with disjoint supports and entries in [0, p] is the
    same datum as d = u - v in [-p, p]^N, so the sweep runs over d.  Membership
    is linear in d, which allows one field-syndrome table per coordinate and an
    incremental accumulation down the recursion.
    """
    ff = code.ff
    p, q = ff.p, ff.q
    if kind == ORDINARY:
        space = ordinary_space(code.n, ff.r)
        per_slot = list(ff.basis)
    elif kind == GENERALIZED:
        space = generalized_space(code.n, q)
        per_slot = [ff.from_power(t) for t in range(1, q)]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    N = space.dim
    if (2 * p + 1) ** N > SEARCH_LIMIT:
        raise SearchSpaceTooLargeError(
            f"brute-force sweep of size (2p+1)^N = {(2 * p + 1) ** N} exceeds {SEARCH_LIMIT}"
        )

    # syndrome of the unit difference vector for each variable slot
    m = code.m
    idx2elt = [ff.zero()] + [ff.from_power(k) for k in range(1, q)]
    add = [[(a + b).k for b in idx2elt] for a in idx2elt]
    width = len(per_slot)
    unit_syndromes = []
    for j in range(code.n):
        for t in range(width):
            word = [ff.zero()] * code.n
            word[j] = per_slot[t]
            unit_syndromes.append(tuple(e.k for e in code._syndrome(word)))

    # scaled copies for every coefficient in [-p, p]
    scaled = []
    for s in unit_syndromes:
        per_c = {}
        for c in range(-p, p + 1):
            per_c[c] = tuple(idx2elt[k].times(c).k for k in s)
        scaled.append(per_c)

    members = []
    d = [0] * N
    zero_synd = (0,) * m

    def sweep(i, synd):
        if i == N:
            if synd == zero_synd and any(d):
                members.append(tuple(d))
            return
        per_c = scaled[i]
        for c in range(-p, p + 1):
            d[i] = c
            if c == 0:
                sweep(i + 1, synd)
            else:
                delta = per_c[c]
                sweep(i + 1, tuple(add[a][b] for a, b in zip(synd, delta)))
        d[i] = 0

    sweep(0, zero_synd)

    # primitivity: keep members with no conformally smaller member, sweeping
    # by ascending L1 norm so every dropped vector has a kept witness
    members.sort(key=lambda v: sum(abs(e) for e in v))
    kept = []

    def conforms(small, big):
        for a, b in zip(small, big):
            if a * b < 0 or abs(a) > abs(b):
                return False
        return True

    for v in members:
        if not any(w != v and conforms(w, v) for w in kept):
            kept.append(v)

    out = BinomialSet(space, [Binomial(*split_pos_neg(v)) for v in kept])
    return GraverBasis(out, kind, code)
