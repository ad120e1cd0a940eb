"""PBW monomials and exact straightening in universal enveloping algebras.

Elements of U(g) are finite rational combinations of ordered monomials in a
fixed total order on the generators.  Monomials are square-free in odd
generators; odd squares are eliminated eagerly through g*g = [g,g]/2.

A monomial is a flat tuple (p1, e1, p2, e2, ...) of generator positions and
exponents with strictly increasing positions; the empty tuple is 1.
Coefficients are exact: plain ints wherever possible, Fractions as soon as a
true denominator appears.  Nothing here ever rounds.

The straightening routine commutes one generator at a time through a sorted
monomial.  Swapping past an even power h^a uses the closed form

    h^a g = sum_t binom(a,t) (ad h)^t(g) h^(a-t),

which keeps the recursion shallow for large exponents; odd letters swap
singly with the Koszul sign.  Pushes (monomial, generator) are memoized per
order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .core import AlgebraSpec, GeneratorId, ODD, Scalar

Monomial = tuple

_CACHE_LIMIT = 2_000_000


def _norm(c):
    """Prefer plain ints for integral rationals (exact either way)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _half(c):
    if isinstance(c, int):
        return c // 2 if c % 2 == 0 else Fraction(c, 2)
    return _norm(c / 2)


class GeneratorOrder:
    """A strict total order on the generators of one algebra.

    ``split`` marks a contiguous right block (positions >= split); the
    Whittaker machinery uses it for the reduction targets.  Orders own the
    straightening caches, so equal elements should share an order object or
    an equal one.
    """

    def __init__(self, algebra, gens, split=None):
        gens = tuple(gens)
        if sorted(gens, key=repr) != sorted(algebra.generators, key=repr):
            raise ValueError("order must list every generator exactly once")
        self.algebra = algebra
        self.gens = gens
        self.split = len(gens) if split is None else split
        self.pos = {g: p for p, g in enumerate(gens)}
        self.parity = tuple(algebra.parity_of(g) for g in gens)
        self.kdeg = tuple(algebra.dynkin_degree(g) + 2 for g in gens)
        self.wt = tuple(algebra.weight_of(g) for g in gens)
        self._bracket_pos = {}
        self._push_cache = {}
        self._ad_cache = {}

    def __eq__(self, other):
        return (isinstance(other, GeneratorOrder)
                and self.algebra == other.algebra
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.algebra, self.gens))

    def __repr__(self):
        return f"GeneratorOrder({self.algebra.name}, {len(self.gens)} gens)"

    def bracket_pos(self, pa, pb):
        """[gens[pa], gens[pb]] compiled to position space."""
        key = (pa, pb)
        hit = self._bracket_pos.get(key)
        if hit is None:
            combo = self.algebra.bracket(self.gens[pa], self.gens[pb])
            hit = tuple((self.pos[g], _norm(c)) for g, c in combo.items())
            self._bracket_pos[key] = hit
        return hit

    def ad_power(self, h, g, t):
        """(ad gens[h])^t(gens[g]) as a dict position -> coefficient."""
        key = (h, g, t)
        hit = self._ad_cache.get(key)
        if hit is not None:
            return hit
        if t == 0:
            out = {g: 1}
        else:
            out = {}
            for c, coef in self.ad_power(h, g, t - 1).items():
                for d, s in self.bracket_pos(h, c):
                    v = out.get(d, 0) + coef * s
                    if v:
                        out[d] = v
                    elif d in out:
                        del out[d]
        self._ad_cache[key] = out
        return out

    def clear_caches(self):
        self._push_cache.clear()

    # -- core straightening ---------------------------------------------------

    def push_gen(self, mono, g):
        """Canonical form of (mono * gens[g]) as a dict monomial -> coeff."""
        key = (mono, g)
        cache = self._push_cache
        hit = cache.get(key)
        if hit is not None:
            return hit
        out = self._push_gen_uncached(mono, g)
        if len(cache) > _CACHE_LIMIT:
            cache.clear()
        cache[key] = out
        return out

    def _push_gen_uncached(self, mono, g):
        parity = self.parity
        if not mono:
            return {(g, 1): 1}
        h = mono[-2]
        a = mono[-1]
        rest = mono[:-2]
        if h < g:
            return {mono + (g, 1): 1}
        if h == g:
            if parity[g] != ODD:
                return {rest + (g, a + 1): 1}
            # odd square: rest * (g g) = rest * [g,g]/2
            out = {}
            for c, coef in self.bracket_pos(g, g):
                half = _half(coef)
                for m2, c2 in self.push_gen(rest, c).items():
                    v = out.get(m2, 0) + half * c2
                    if v:
                        out[m2] = v
                    elif m2 in out:
                        del out[m2]
            return out
        # h > g: move g to the left through h^a
        out = {}
        if parity[h] == ODD:
            negate = parity[g] == ODD
            for m2, c2 in self.push_gen(rest, g).items():
                if negate:
                    c2 = -c2
                for m3, c3 in self.push_gen(m2, h).items():
                    v = out.get(m3, 0) + c2 * c3
                    if v:
                        out[m3] = v
                    elif m3 in out:
                        del out[m3]
            for c, coef in self.bracket_pos(h, g):
                for m2, c2 in self.push_gen(rest, c).items():
                    v = out.get(m2, 0) + coef * c2
                    if v:
                        out[m2] = v
                    elif m2 in out:
                        del out[m2]
            return out
        for t in range(a + 1):
            ad_t = self.ad_power(h, g, t)
            if not ad_t:
                break
            binom = comb(a, t)
            tail_exp = a - t
            for c, coef in ad_t.items():
                scale = binom * coef
                for m2, c2 in self.push_gen(rest, c).items():
                    acc = {m2: scale * c2}
                    for _ in range(tail_exp):
                        nxt = {}
                        for m3, c3 in acc.items():
                            for m4, c4 in self.push_gen(m3, h).items():
                                v = nxt.get(m4, 0) + c3 * c4
                                if v:
                                    nxt[m4] = v
                                elif m4 in nxt:
                                    del nxt[m4]
                        acc = nxt
                    for m3, c3 in acc.items():
                        v = out.get(m3, 0) + c3
                        if v:
                            out[m3] = v
                        elif m3 in out:
                            del out[m3]
        return out

    def mono_product(self, m1, m2):
        """Canonical form of m1 * m2 as a dict monomial -> coefficient."""
        push = self.push_gen
        acc = {m1: 1}
        for k in range(0, len(m2), 2):
            g = m2[k]
            for _ in range(m2[k + 1]):
                nxt = {}
                for m, c in acc.items():
                    for m3, c3 in push(m, g).items():
                        v = nxt.get(m3, 0) + c * c3
                        if v:
                            nxt[m3] = v
                        elif m3 in nxt:
                            del nxt[m3]
                acc = nxt
        return acc


def mono_pairs(mono):
    """Iterate (position, exponent) pairs of a flat monomial."""
    return zip(mono[::2], mono[1::2])


def mono_parity(order, mono):
    parity = order.parity
    return sum(mono[k + 1] for k in range(0, len(mono), 2)
               if parity[mono[k]] == ODD) % 2


def mono_kazhdan(order, mono):
    kdeg = order.kdeg
    return sum(mono[k + 1] * kdeg[mono[k]] for k in range(0, len(mono), 2))


def mono_weight(order, mono):
    wt = order.wt
    return sum(mono[k + 1] * wt[mono[k]] for k in range(0, len(mono), 2))


def mono_length(mono):
    return sum(mono[k + 1] for k in range(0, len(mono), 2))


def mono_word(mono):
    """Expand a flat monomial into its letter sequence of positions."""
    word = []
    for k in range(0, len(mono), 2):
        word.extend([mono[k]] * mono[k + 1])
    return tuple(word)


class Element:
    """Exact rational combination of PBW monomials, tied to one order.

    Immutable by convention: operations return fresh elements and never
    mutate ``terms``.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order, terms):
        self.order = order
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls(order, {})

    @classmethod
    def scalar(cls, order, c):
        c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls(order, {(): c} if c else {})

    @classmethod
    def one(cls, order):
        return cls.scalar(order, 1)

    @classmethod
    def generator(cls, order, gid):
        order.algebra.check_generator(gid)
        return cls(order, {(order.pos[gid], 1): 1})

    @classmethod
    def from_combination(cls, order, combo):
        terms = {}
        for gid, c in combo.items():
            order.algebra.check_generator(gid)
            c = _norm(c)
            if c:
                terms[(order.pos[gid], 1)] = c
        return cls(order, terms)

    # -- basic queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.order, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self):
        return f"<Element {self}>"

    def __str__(self):
        return render_element(self)

    def scalar_part(self):
        return self.terms.get((), 0)

    def parity_parts(self):
        """Split into even and odd components: dict parity -> Element."""
        parts = {0: {}, 1: {}}
        for m, c in self.terms.items():
            parts[mono_parity(self.order, m)][m] = c
        return {p: Element(self.order, t) for p, t in parts.items()}

    def parity(self):
        """Parity of a homogeneous element; None for 0, error when mixed."""
        seen = {mono_parity(self.order, m) for m in self.terms}
        if not seen:
            return None
        if len(seen) > 1:
            raise ValueError("element is not parity homogeneous")
        return seen.pop()

    def support_generators(self):
        seen = set()
        for m in self.terms:
            for k in range(0, len(m), 2):
                seen.add(self.order.gens[m[k]])
        return seen

    def sorted_terms(self):
        """Terms in length-lexicographic monomial order (for rendering)."""
        def key(item):
            word = mono_word(item[0])
            return (len(word), word)
        return sorted(self.terms.items(), key=key)

    # -- arithmetic --------------------------------------------------------------

    def _check_compatible(self, other):
        if self.order != other.order:
            raise ValueError("elements belong to different algebra contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.order, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Element(self.order, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Element(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.order, other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, c):
        c = _norm(c)
        if c == 0:
            return Element.zero(self.order)
        return Element(self.order, {m: _norm(c * v) for m, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)


def multiply(a, b):
    """Associative product in U(g), straightened to canonical form.

    The right factor is folded letter by letter through the left one; its
    monomials are walked as a prefix tree so that straightening work for a
    shared prefix is done once.
    """
    a._check_compatible(b)
    order = a.order
    if not a.terms or not b.terms:
        return Element.zero(order)
    push = order.push_gen
    out = {}
    words = sorted((mono_word(m), c) for m, c in b.terms.items())

    def emit(acc, coeff):
        for m, c in acc.items():
            v = out.get(m, 0) + coeff * c
            if v:
                out[m] = v
            elif m in out:
                del out[m]

    def walk(lo, hi, depth, acc):
        i = lo
        while i < hi:
            word = words[i][0]
            if len(word) == depth:
                emit(acc, words[i][1])
                i += 1
                continue
            g = word[depth]
            j = i
            while j < hi and len(words[j][0]) > depth and words[j][0][depth] == g:
                j += 1
            nxt = {}
            for m, c in acc.items():
                for m2, c2 in push(m, g).items():
                    v = nxt.get(m2, 0) + c * c2
                    if v:
                        nxt[m2] = v
                    elif m2 in nxt:
                        del nxt[m2]
            walk(i, j, depth + 1, nxt)
            i = j

    walk(0, len(words), 0, dict(a.terms))
    return Element(order, out)


def supercommutator(a, b):
    """[a,b] = ab - (-1)^{p(a)p(b)} ba, computed per parity component."""
    a._check_compatible(b)
    out = Element.zero(a.order)
    aparts = [(p, x) for p, x in a.parity_parts().items() if not x.is_zero()]
    bparts = [(p, x) for p, x in b.parity_parts().items() if not x.is_zero()]
    for pa, xa in aparts:
        for pb, xb in bparts:
            ba = multiply(xb, xa)
            if pa and pb:
                out = out + multiply(xa, xb) + ba
            else:
                out = out + multiply(xa, xb) - ba
    return out


def restraighten(a, new_order):
    """Express the same element of U(g) in another generator order.

    Round-trips exactly: restraighten(restraighten(a, o2), o1) == a.
    """
    if new_order.algebra != a.order.algebra:
        raise ValueError("target order covers a different algebra")
    if new_order == a.order:
        return Element(new_order, dict(a.terms))
    out = {}
    for mono, coeff in a.terms.items():
        acc = {(): coeff}
        for k in range(0, len(mono), 2):
            gid = a.order.gens[mono[k]]
            np = new_order.pos[gid]
            for _ in range(mono[k + 1]):
                nxt = {}
                for m, c in acc.items():
                    for m2, c2 in new_order.push_gen(m, np).items():
                        v = nxt.get(m2, 0) + c * c2
                        if v:
                            nxt[m2] = v
                        elif m2 in nxt:
                            del nxt[m2]
                acc = nxt
        for m, c in acc.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return Element(new_order, out)


def casimir_element(order):
    """Quadratic Casimir sum_a (-1)^{p(a)} x_a u^a built from the preset form.

    The right dual basis u^a satisfies (x_k | u^a) = delta_{ka}; centrality
    is not assumed here and is checked by the verification suites.
    """
    from .linalg import invert_matrix

    algebra = order.algebra
    if algebra.form is None:
        raise ValueError(f"preset {algebra.name} carries no invariant form data")
    gens = algebra.generators
    b = [[algebra.form_value(x, y) for y in gens] for x in gens]
    # u^a = sum_j C[a][j] gens[j] with sum_j C[a][j] B[k][j] = delta_{ka}
    bt = [[b[j][k] for j in range(len(gens))] for k in range(len(gens))]
    cmat = invert_matrix(bt)
    total = Element.zero(order)
    for a, ga in enumerate(gens):
        dual = Element.from_combination(
            order, {gj: cmat[a][j] for j, gj in enumerate(gens) if cmat[a][j] != 0})
        term = multiply(Element.generator(order, ga), dual)
        if algebra.parity_of(ga) == ODD:
            term = -term
        total = total + term
    return total


def render_coefficient(c):
    return str(c)


def render_element(elem):
    """Deterministic rendering in the CLI expression grammar."""
    if not elem.terms:
        return "0"
    parts = []
    for mono, coeff in elem.sorted_terms():
        factors = []
        for k in range(0, len(mono), 2):
            g = repr(elem.order.gens[mono[k]])
            e = mono[k + 1]
            factors.append(g if e == 1 else f"{g}^{e}")
        body = "*".join(factors)
        if not body:
            text = render_coefficient(abs(coeff))
        elif abs(coeff) == 1:
            text = body
        else:
            text = f"{render_coefficient(abs(coeff))}*{body}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, text))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out
