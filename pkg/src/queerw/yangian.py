"""Defining relations of the rank-one super-Yangian and their W-algebra images.

Generators T(i,j)^(m) carry indices i, j in {+1, -1} and level m >= 0, with
parity p(i) + p(j) where p is 0 on positive and 1 on negative indices.
Level 0 is the scalar delta_{ij}; the index symmetry

    T(-i,-j)^(m) = (-1)^m T(i,j)^(m)

canonicalizes every generator onto the pair (1,1) / (-1,1).

A relation instance fixes indices (i,j,k,l) and levels (m,r) in the
coefficient-wise defining relation: the super-sign-weighted difference of
brackets [T(i,j)^(m+1), T(k,l)^(r-1)] - [T(i,j)^(m-1), T(k,l)^(r+1)] equals
an eight-term quadratic right-hand side.  ``check_relation`` pushes both
sides through the evaluation map into the W-algebra of q(n),

    T(1,1)^(k)  |-> (-1)^k pi(e(n,1)^(n+k-1)),
    T(-1,1)^(k) |-> (-1)^k pi(f(n,1)^(n+k-1)),

and compares exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pbw import Element, supercommutator
from .sergeev import sergeev_cache


@dataclass(frozen=True)
class YGenerator:
    i: int
    j: int
    level: int

    def __post_init__(self):
        if self.i not in (1, -1) or self.j not in (1, -1):
            raise ValueError("indices must be +1 or -1")
        if self.level < 0:
            raise ValueError("level must be >= 0")


@dataclass(frozen=True)
class YRelationInstance:
    """One coefficient-wise relation: indices (i,j,k,l), levels m, r >= 1."""

    i: int
    j: int
    k: int
    l: int
    m: int
    r: int

    def __post_init__(self):
        for idx in (self.i, self.j, self.k, self.l):
            if idx not in (1, -1):
                raise ValueError("indices must be +1 or -1")
        if self.m < 1 or self.r < 1:
            raise ValueError("levels must be >= 1")


def parity_of_index(i):
    return 0 if i > 0 else 1


def canonicalize(g):
    """(sign, canonical generator) with indices in {(1,1), (-1,1)}.

    Level-0 generators collapse to the scalar delta: (delta_ij, None).
    """
    if g.level == 0:
        return (1 if g.i == g.j else 0), None
    sign = 1
    i, j = g.i, g.j
    if j < 0:
        i, j = -i, -j
        if g.level % 2 == 1:
            sign = -sign
    return sign, YGenerator(i, j, g.level)


def phi_image(g, ctx):
    """Image of a single generator in the W-algebra of q(n)."""
    sign, canon = canonicalize(g)
    if canon is None:
        return ctx.scalar(sign)
    if sign == 0:
        return ctx.zero()
    cache = sergeev_cache(ctx)
    n = cache.n
    kind = "e" if canon.i > 0 else "f"
    img = cache.reduced(kind, n, 1, n + canon.level - 1)
    if canon.level % 2 == 1:
        img = -img
    if sign < 0:
        img = -img
    return img


def _term(ctx, i, j, level):
    return phi_image(YGenerator(i, j, level), ctx)


def relation_sides(inst, ctx, flip=None):
    """Evaluate (lhs, rhs) of a relation instance in the W-algebra.

    ``flip`` negates one of the nine signed constituents (0 = the global
    super-sign factor, 1..8 = the quadratic terms); it exists so the tests
    can confirm that every sign in the relation is load-bearing.
    """
    i, j, k, l, m, r = inst.i, inst.j, inst.k, inst.l, inst.m, inst.r
    t = lambda a, b, lev: _term(ctx, a, b, lev)

    lhs = (supercommutator(t(i, j, m + 1), t(k, l, r - 1))
           - supercommutator(t(i, j, m - 1), t(k, l, r + 1)))
    sfactor = (-1) ** (parity_of_index(i) * parity_of_index(k)
                       + parity_of_index(i) * parity_of_index(l)
                       + parity_of_index(k) * parity_of_index(l))
    if flip == 0:
        sfactor = -sfactor
    lhs = ctx.reduce(lhs.scale(sfactor))

    tail = (-1) ** (parity_of_index(k) + parity_of_index(l))
    products = [
        (1, (k, j, m), (i, l, r - 1)),
        (1, (k, j, m - 1), (i, l, r)),
        (-1, (k, j, r - 1), (i, l, m)),
        (-1, (k, j, r), (i, l, m - 1)),
        (-tail, (-k, j, m), (-i, l, r - 1)),
        (tail, (-k, j, m - 1), (-i, l, r)),
        (tail, (k, -j, r - 1), (i, -l, m)),
        (-tail, (k, -j, r), (i, -l, m - 1)),
    ]
    rhs = ctx.zero()
    for pos, (sign, (a1, b1, l1), (a2, b2, l2)) in enumerate(products, start=1):
        if flip == pos:
            sign = -sign
        rhs = rhs + ctx.product(t(a1, b1, l1), t(a2, b2, l2)).scale(sign)
    return lhs, rhs


def check_relation(inst, ctx):
    """Exact-equality verdict for one relation instance under the map."""
    lhs, rhs = relation_sides(inst, ctx)
    return lhs == rhs


def enumerate_relations(max_level):
    """All index tuples and levels m, r <= max_level, deduplicated.

    The index symmetry identifies (i,j) with (-i,-j) and (k,l) with (-k,-l);
    one representative per class is kept, in deterministic order.
    """
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    seen = set()
    out = []
    for i in (1, -1):
        for j in (1, -1):
            for k in (1, -1):
                for l in (1, -1):
                    ci, cj = (i, j) if j > 0 else (-i, -j)
                    ck, cl = (k, l) if l > 0 else (-k, -l)
                    for m in range(1, max_level + 1):
                        for r in range(1, max_level + 1):
                            key = (ci, cj, ck, cl, m, r)
                            if key in seen:
                                continue
                            seen.add(key)
                            out.append(YRelationInstance(ci, cj, ck, cl, m, r))
    return out
