"""Buchberger's algorithm specialized to pure-difference binomials.

Reducing a difference of monomials by differences of monomials again yields a
difference (or zero), so the whole computation stays inside exponent-vector
pairs.  Monomials are packed into single integers (one bit field per variable,
with a guard bit) so divisibility, lcm and the reduction step are a handful of
big-integer operations; the field width grows automatically if an exponent
overflows.  Pair selection follows the normal strategy (smallest lcm first,
insertion index as tie-break) with the coprimality and chain criteria.
"""

from __future__ import annotations

import heapq
from typing import Optional, Sequence

from .binomials import Binomial, BinomialSet, VariableSpace
from .orders import GradedRevlexOrder, MonomialOrder


class GroebnerBasis:
    """A reduced basis; each element is stored with its leading side first."""

    __slots__ = ("space", "order", "elements")

    def __init__(self, space: VariableSpace, order: MonomialOrder, elements: Sequence[Binomial]):
        self.space = space
        self.order = order
        self.elements = tuple(elements)

    @property
    def binomials(self) -> BinomialSet:
        return BinomialSet(self.space, self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.space == other.space
            and set(self.elements) == set(other.elements)
        )

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements)"


def _normal_tuple(m: tuple, elements) -> tuple:
    """Tuple-arithmetic normal form of a monomial against lead-first binomials."""
    changed = True
    while changed:
        changed = False
        for g in elements:
            u = g.lhs
            if all(a >= b for a, b in zip(m, u)):
                m = tuple(a - b + c for a, b, c in zip(m, u, g.rhs))
                changed = True
                break
    return m


def reduce(binom: Binomial, basis: GroebnerBasis) -> Optional[Binomial]:
    """Normal form of a binomial; None when both sides collapse together."""
    lhs = _normal_tuple(binom.lhs, basis.elements)
    rhs = _normal_tuple(binom.rhs, basis.elements)
    if lhs == rhs:
        return None
    if basis.order.compare(lhs, rhs) < 0:
        lhs, rhs = rhs, lhs
    return Binomial(lhs, rhs)


class _Overflow(Exception):
    pass


def buchberger(gens, order: MonomialOrder, space: VariableSpace | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by pure-difference binomials."""
    if isinstance(gens, BinomialSet):
        space = gens.space
        binoms = gens.sorted()
    else:
        if space is None:
            raise ValueError("space required when gens is not a BinomialSet")
        binoms = sorted(
            (b.canonical() for b in gens), key=lambda b: (sum(b.lhs), b.lhs, b.rhs)
        )
    if order.dim != space.dim:
        raise ValueError("order dimension disagrees with the variable space")
    for width in (8, 16, 32, 64):
        try:
            return _run(binoms, order, space, width)
        except _Overflow:
            continue
    raise OverflowError("exponent does not fit 63 bits")


def _run(binoms, order: MonomialOrder, space: VariableSpace, width: int) -> GroebnerBasis:
    dim = space.dim
    okey = order.key
    W = width
    cap = (1 << (W - 1)) - 1
    fieldmask = (1 << W) - 1
    guard = 0
    for i in range(dim):
        guard |= 1 << (W * i + W - 1)

    def pack(u):
        m = 0
        for i in range(dim - 1, -1, -1):
            e = u[i]
            if e > cap:
                raise _Overflow
            m = (m << W) | e
        return m

    def unpack(m):
        out = []
        for _ in range(dim):
            out.append(m & fieldmask)
            m >>= W
        return tuple(out)

    def smask(m):
        s = 0
        i = 0
        while m:
            f = m & fieldmask
            if f:
                if f > cap:
                    raise _Overflow
                s |= 1 << i
            m >>= W
            i += 1
        return s

    # parallel arrays over basis elements, leading side first
    lead_p, trail_p, lead_t, trail_t = [], [], [], []
    lead_sm, lead_dg, trail_dg = [], [], []

    heap: list = []
    pending = set()
    counter = 0

    def normalize(m_p, m_dg):
        changed = True
        while changed:
            changed = False
            msk = smask(m_p)
            mg = m_p | guard
            for g in range(len(lead_p)):
                if lead_dg[g] <= m_dg and not (lead_sm[g] & ~msk):
                    lp = lead_p[g]
                    if (mg - lp) & guard == guard:
                        m_p = m_p - lp + trail_p[g]
                        m_dg = m_dg - lead_dg[g] + trail_dg[g]
                        changed = True
                        break
        return m_p, m_dg

    def push_pairs(t):
        nonlocal counter
        lt = lead_t[t]
        sm_t = lead_sm[t]
        for i in range(t):
            if not (lead_sm[i] & sm_t):
                continue  # coprime leading monomials: S-pair reduces to zero
            li = lead_t[i]
            lcm = tuple(a if a > b else b for a, b in zip(li, lt))
            entry = (okey(lcm), counter, i, t, pack(lcm), sum(lcm), lead_sm[i] | sm_t)
            counter += 1
            heapq.heappush(heap, entry)
            pending.add((i, t))

    def add_element(a_p, a_dg, a_t, b_p, b_dg, b_t):
        lead_p.append(a_p)
        trail_p.append(b_p)
        lead_t.append(a_t)
        trail_t.append(b_t)
        lead_sm.append(smask(a_p))
        lead_dg.append(a_dg)
        trail_dg.append(b_dg)
        push_pairs(len(lead_p) - 1)

    for b in binoms:
        a_p, a_dg = normalize(pack(b.lhs), sum(b.lhs))
        b_p, b_dg = normalize(pack(b.rhs), sum(b.rhs))
        if a_p == b_p:
            continue
        a_t, b_t = unpack(a_p), unpack(b_p)
        if okey(a_t) < okey(b_t):
            a_p, a_dg, a_t, b_p, b_dg, b_t = b_p, b_dg, b_t, a_p, a_dg, a_t
        add_element(a_p, a_dg, a_t, b_p, b_dg, b_t)

    while heap:
        _, _, i, j, L_p, L_dg, L_sm = heapq.heappop(heap)
        pending.discard((i, j))
        # chain criterion: a third lead divides the lcm and both mixed pairs
        # are no longer waiting
        skip = False
        Lg = L_p | guard
        for g in range(len(lead_p)):
            if g == i or g == j:
                continue
            if lead_dg[g] <= L_dg and not (lead_sm[g] & ~L_sm) and (Lg - lead_p[g]) & guard == guard:
                a = (i, g) if i < g else (g, i)
                if a in pending:
                    continue
                b = (j, g) if j < g else (g, j)
                if b in pending:
                    continue
                skip = True
                break
        if skip:
            continue
        a_p = L_p - lead_p[i] + trail_p[i]
        a_dg = L_dg - lead_dg[i] + trail_dg[i]
        b_p = L_p - lead_p[j] + trail_p[j]
        b_dg = L_dg - lead_dg[j] + trail_dg[j]
        a_p, a_dg = normalize(a_p, a_dg)
        b_p, b_dg = normalize(b_p, b_dg)
        if a_p == b_p:
            continue
        a_t, b_t = unpack(a_p), unpack(b_p)
        if okey(a_t) < okey(b_t):
            a_p, a_dg, a_t, b_p, b_dg, b_t = b_p, b_dg, b_t, a_p, a_dg, a_t
        add_element(a_p, a_dg, a_t, b_p, b_dg, b_t)

    # autoreduction: keep minimal leading monomials, then normalize the trails
    idx = sorted(range(len(lead_p)), key=lambda g: okey(lead_t[g]))
    kept = []
    for g in idx:
        mg = lead_p[g] | guard
        dominated = False
        for h in kept:
            if lead_dg[h] <= lead_dg[g] and not (lead_sm[h] & ~lead_sm[g]):
                if (mg - lead_p[h]) & guard == guard and lead_p[h] != lead_p[g]:
                    dominated = True
                    break
        if dominated or any(lead_p[h] == lead_p[g] for h in kept):
            continue
        kept.append(g)

    final = []
    kept_elems = [Binomial(lead_t[g], trail_t[g]) for g in kept]
    for pos, g in enumerate(kept):
        others = [e for t, e in enumerate(kept_elems) if t != pos]
        trail = _normal_tuple(trail_t[g], others)
        assert trail != lead_t[g]
        final.append(Binomial(lead_t[g], trail))
    final.sort(key=lambda b: okey(b.lhs))
    return GroebnerBasis(space, order, final)


def saturate_variable(s: BinomialSet, v: int, grading: Sequence[int] | None = None) -> BinomialSet:
    """Generators of (ideal : x_v^infinity).

    Computes a basis for a graded-revlex order with x_v cheapest and divides
    each element by the largest x_v power dividing it.  The divide-out step is
    valid when the ideal is homogeneous w.r.t. a positive grading; pass one as
    `grading` when the standard total degree does not work.
    """
    dim = s.space.dim
    if not 0 <= v < dim:
        raise IndexError(f"variable index {v} outside 0..{dim - 1}")
    prec = [i for i in range(dim) if i != v] + [v]
    order = GradedRevlexOrder(dim, precedence=prec, weights=grading)
    gb = buchberger(s, order)
    out = []
    for b in gb.elements:
        m = min(b.lhs[v], b.rhs[v])
        if m:
            lhs = list(b.lhs)
            rhs = list(b.rhs)
            lhs[v] -= m
            rhs[v] -= m
            out.append(Binomial(lhs, rhs))
        else:
            out.append(b)
    return BinomialSet(s.space, out)


def saturate_all(s: BinomialSet, grading: Sequence[int] | None = None) -> BinomialSet:
    """Saturate w.r.t. the product of all variables, one variable at a time."""
    for v in range(s.space.dim):
        s = saturate_variable(s, v, grading)
    return s
