"""Recursive trace-like elements of U(q(n)) and the W-algebra generators.

The recursion (level m >= 2, base level 1 is the generator itself) is

    e(i,j)^(m) = sum_k e(i,k) e(k,j)^(m-1) + (-1)^(m+1) sum_k f(i,k) f(k,j)^(m-1)
    f(i,j)^(m) = sum_k e(i,k) f(k,j)^(m-1) + (-1)^(m+1) sum_k f(i,k) e(k,j)^(m-1)

Raw forms live in U(g) and grow quickly; the reduced forms are computed by
running the same recursion through the quotient (left multiplication by a
generator descends to U(g)/I_chi because the ideal is a left ideal), which
keeps every intermediate inside U(b).  Both are memoized per context.

The signed-index family F with indices in +-1..+-n uses the analogous
recursion F(i,j)^(m) = sum_k (-1)^p(k) F(i,k) F(k,j)^(m-1), with
F(i,j) = e(|i|,|j|) for equal signs and f(|i|,|j|) for mixed signs.
"""

from __future__ import annotations

from fractions import Fraction

from .core import gen_e, gen_f, z_combination
from .pbw import Element, multiply


class SergeevCache:
    """Memo table for the recursive elements of one Whittaker context."""

    def __init__(self, ctx):
        self.ctx = ctx
        if ctx.algebra.name != "q":
            raise ValueError("recursive elements require the q preset")
        self.n = ctx.algebra.n
        self._raw = {}
        self._reduced = {}

    def _gen(self, kind, i, j):
        return self.ctx.generator(gen_e(i, j) if kind == "e" else gen_f(i, j))

    def _check(self, kind, i, j, m):
        if kind not in ("e", "f"):
            raise ValueError(f"kind must be 'e' or 'f', got {kind!r}")
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"indices ({i},{j}) out of range for n={n}")
        if m < 1:
            raise ValueError(f"level must be >= 1, got {m}")

    def raw(self, kind, i, j, m):
        """The element of U(g), in the context order, straightened."""
        self._check(kind, i, j, m)
        key = (kind, i, j, m)
        hit = self._raw.get(key)
        if hit is not None:
            return hit
        if m == 1:
            out = self._gen(kind, i, j)
        else:
            sign = Fraction(-1) ** (m + 1)
            out = Element.zero(self.ctx.order)
            flip = "f" if kind == "e" else "e"
            for k in range(1, self.n + 1):
                out = out + multiply(self._gen("e", i, k),
                                     self.raw(kind, k, j, m - 1))
                out = out + multiply(self._gen("f", i, k),
                                     self.raw(flip, k, j, m - 1)).scale(sign)
        self._raw[key] = out
        return out

    def reduced(self, kind, i, j, m):
        """Canonical representative of the class of raw(kind,i,j,m)."""
        self._check(kind, i, j, m)
        key = (kind, i, j, m)
        hit = self._reduced.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        if m == 1:
            out = ctx.reduce(self._gen(kind, i, j))
        else:
            sign = Fraction(-1) ** (m + 1)
            out = ctx.zero()
            flip = "f" if kind == "e" else "e"
            for k in range(1, self.n + 1):
                out = out + ctx.reduce(multiply(self._gen("e", i, k),
                                                self.reduced(kind, k, j, m - 1)))
                out = out + ctx.reduce(multiply(self._gen("f", i, k),
                                                self.reduced(flip, k, j, m - 1))
                                       ).scale(sign)
        self._reduced[key] = out
        return out

    def central_raw(self, m):
        """sum_i e(i,i)^(2m+1): the level-(2m+1) trace, central in U(g)."""
        if m < 0:
            raise ValueError("level index must be >= 0")
        out = Element.zero(self.ctx.order)
        for i in range(1, self.n + 1):
            out = out + self.raw("e", i, i, 2 * m + 1)
        return out

    def central_reduced(self, m):
        if m < 0:
            raise ValueError("level index must be >= 0")
        out = self.ctx.zero()
        for i in range(1, self.n + 1):
            out = out + self.reduced("e", i, i, 2 * m + 1)
        return out


def sergeev_cache(ctx):
    """The per-context cache, created on first use."""
    if ctx._sergeev is None:
        ctx._sergeev = SergeevCache(ctx)
    return ctx._sergeev


def sergeev(ctx, kind, i, j, m):
    """Raw recursive element of U(q(n))."""
    return sergeev_cache(ctx).raw(kind, i, j, m)


def central_element(ctx, m):
    """Raw central element sum_i e(i,i)^(2m+1)."""
    return sergeev_cache(ctx).central_raw(m)


def _signed_base(cache, i, j):
    if i > 0 and j > 0 or i < 0 and j < 0:
        return cache._gen("e", abs(i), abs(j))
    return cache._gen("f", abs(i), abs(j))


def signed_f(ctx, i, j, m):
    """Signed-index recursive element over i, j in +-1..+-n (raw form)."""
    cache = sergeev_cache(ctx)
    n = cache.n
    if i == 0 or j == 0 or abs(i) > n or abs(j) > n:
        raise ValueError(f"indices ({i},{j}) out of range for n={n}")
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")
    if m == 1:
        return _signed_base(cache, i, j)
    out = Element.zero(ctx.order)
    for k in list(range(1, n + 1)) + list(range(-1, -n - 1, -1)):
        term = multiply(_signed_base(cache, i, k), signed_f(ctx, k, j, m - 1))
        if k < 0:
            term = -term
        out = out + term
    return out


def w_generators(ctx):
    """The finite generator family of the W-algebra, with Kazhdan degrees.

    Returns (evens, odds): evens[0] is the reduction of z and evens[k]
    (k >= 1) the reduction of e(n,1)^(n+k); odds[k] is Phi_k.  All 2n have
    degree 2k+2 and their top symbols span the annihilator of chi.
    """
    cache = sergeev_cache(ctx)
    n = cache.n
    evens = [ctx.reduce(ctx.combination(z_combination(ctx.algebra)))]
    for k in range(1, n):
        evens.append(cache.reduced("e", n, 1, n + k))
    odds = ctx.phi_generators(n)
    return evens, odds


def w_generator_families(ctx):
    """Named generator families of the W-algebra.

    ``family_a``: reductions of e(n,1)^(m) and f(n,1)^(m), m = n..2n-1.
    ``z0``: the reduction of z.  ``odd_z``: reductions of e(n,1)^(n+i) for
    odd i <= n-1.  ``phi``: the odd recursive family Phi_0..Phi_{n-1}.
    """
    cache = sergeev_cache(ctx)
    n = cache.n
    family_a = []
    for m in range(n, 2 * n):
        family_a.append(cache.reduced("e", n, 1, m))
        family_a.append(cache.reduced("f", n, 1, m))
    odd_z = {i: cache.reduced("e", n, 1, n + i) for i in range(1, n, 2)}
    return {
        "family_a": family_a,
        "z0": ctx.reduce(ctx.combination(z_combination(ctx.algebra))),
        "odd_z": odd_z,
        "phi": ctx.phi_generators(n),
    }
