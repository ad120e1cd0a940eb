"""Whittaker reduction and the finite W-algebra membership machinery.

For each preset this module fixes the nilpotent subalgebra m, the character
chi, and a generator order with the m-generators as the right block.  The
projection ``reduce`` straightens to that order and strips trailing
m-letters against chi; the result is the canonical representative of the
class in U(g)/I_chi, supported on the complement.

For q(n) the complement is the Borel subalgebra b = h + n with the
n-generators leftmost, so the projection ``theta`` (kernel nU(b)) is a
single pass that drops every monomial containing an n-letter and sends
e(i,i) -> x_i, f(i,i) -> (-1)^(i+1) xi_i into the Cartan Clifford algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanElement
from .core import AlgebraSpec, GeneratorId, Scalar, gen_e, gen_f
from .pbw import (Element, GeneratorOrder, mono_kazhdan, mono_weight,
                  multiply, restraighten, supercommutator)


def _q_blocks(spec):
    n = spec.n
    key = lambda g: (g.i, g.j, g.family)
    nil = sorted((g for g in spec.generators if g.i < g.j), key=key)
    cartan = sorted((g for g in spec.generators if g.i == g.j), key=key)
    lower = sorted((g for g in spec.generators if g.i > g.j), key=key)
    chi = {}
    for g in lower:
        chi[g] = 1 if (g.family == "e" and g.i == g.j + 1) else 0
    return nil, cartan, lower, chi


class WhittakerData:
    """The reduction context for one preset: m, chi, orders, and caches."""

    def __init__(self, algebra):
        self.algebra = algebra
        if algebra.name == "q":
            nil, cartan, lower, chi = _q_blocks(algebra)
            self.nilradical = tuple(nil)
            self.complement = tuple(nil + cartan)
            self.m_generators = tuple(lower)
            self.chi = chi
            self.theta_generator = None
        elif algebra.name == "osp12":
            g = lambda name: GeneratorId(name)
            self.nilradical = ()
            self.complement = (g("X"), g("r"), g("H"), g("theta"))
            self.m_generators = (g("Y"),)
            self.chi = {g("Y"): Fraction(-1, 2)}
            # residual odd generator of the complement, with chi([theta,theta])
            self.theta_generator = g("theta")
        elif algebra.name == "sl12":
            g = lambda name: GeneratorId(name)
            self.nilradical = ()
            self.complement = (g("e"), g("ep"), g("fp"), g("h1"), g("h2"),
                               g("em"), g("fm"))
            self.m_generators = (g("f"),)
            self.chi = {g("f"): 1}
            self.theta_generator = None
        else:
            raise ValueError(f"no Whittaker data for preset {algebra.name}")
        gens = self.complement + self.m_generators
        self.order = GeneratorOrder(algebra, gens, split=len(self.complement))
        self._nil_positions = frozenset(self.order.pos[g] for g in self.nilradical)
        self._chi_pos = {self.order.pos[g]: v for g, v in self.chi.items()}
        self._phi_cache = {}
        self._sergeev = None

    def __repr__(self):
        return f"WhittakerData({self.algebra.name}, n={self.algebra.n})"

    def chi_of_theta_bracket(self):
        """chi([theta, theta]) for the residual odd generator, if present."""
        if self.theta_generator is None:
            return None
        combo = self.algebra.bracket(self.theta_generator, self.theta_generator)
        out = Fraction(0)
        for g, c in combo.items():
            out += c * self.chi.get(g, Fraction(0))
        return out

    # -- element constructors in the reduction order -------------------------

    def generator(self, gid):
        return Element.generator(self.order, gid)

    def combination(self, combo):
        return Element.from_combination(self.order, combo)

    def scalar(self, c):
        return Element.scalar(self.order, c)

    def one(self):
        return Element.one(self.order)

    def zero(self):
        return Element.zero(self.order)

    # -- the projection and membership test ----------------------------------

    def reduce(self, elem):
        """Canonical representative mod the left ideal generated by a - chi(a).

        Linear; kills u*(a - chi(a)) for every a in m, and is the identity on
        elements supported on the complement.
        """
        if elem.order != self.order:
            elem = restraighten(elem, self.order)
        split = self.order.split
        chi_pos = self._chi_pos
        out = {}
        for mono, coeff in elem.terms.items():
            kept = mono
            c = coeff
            for k in range(0, len(mono), 2):
                if mono[k] >= split:
                    kept = mono[:k]
                    for kk in range(k, len(mono), 2):
                        chi = chi_pos[mono[kk]]
                        if chi == 0:
                            c = 0
                            break
                        c *= chi ** mono[kk + 1]
                    break
            if c:
                v = out.get(kept, 0) + c
                if v:
                    out[kept] = v
                else:
                    del out[kept]
        return Element(self.order, out)

    def lift(self, reduced):
        """Canonical inclusion of a reduced element back into U(g)."""
        return reduced

    def is_whittaker(self, reduced):
        """True iff ad(a) maps the canonical representative into the ideal
        for every m-generator a."""
        for a in self.m_generators:
            z = supercommutator(self.generator(a), self.lift(reduced))
            if not self.reduce(z).is_zero():
                return False
        return True

    def product(self, x, y):
        """Product in U(g)/I_chi of canonical representatives."""
        return self.reduce(multiply(x, y))

    def commutator(self, x, y):
        """Supercommutator in U(g)/I_chi of canonical representatives."""
        return self.reduce(supercommutator(x, y))

    # -- filtration bookkeeping -----------------------------------------------

    def kazhdan_degree(self, elem):
        """Max over monomials of the shifted-degree sum; zero element errors."""
        if elem.is_zero():
            raise ValueError("the zero element has no Kazhdan degree")
        return max(mono_kazhdan(self.order, m) for m in elem.terms)

    def top_symbol(self, elem):
        """Highest-weight part of the top Kazhdan-degree component.

        The returned Element is supported on the selected monomials and
        stands for the class in the associated graded algebra (monomials
        read as supercommutative words).
        """
        if elem.is_zero():
            raise ValueError("the zero element has no top symbol")
        deg = self.kazhdan_degree(elem)
        top = {m: c for m, c in elem.terms.items()
               if mono_kazhdan(self.order, m) == deg}
        wt = max(mono_weight(self.order, m) for m in top)
        return Element(self.order, {m: c for m, c in top.items()
                                    if mono_weight(self.order, m) == wt})

    # -- the Cartan projection ------------------------------------------------

    def theta(self, elem):
        """Project U(b) onto U(h) along nU(b), into the Clifford algebra.

        Only meaningful for the q preset.  Raises if the element has support
        outside U(b).
        """
        if self.algebra.name != "q":
            raise ValueError("theta requires the q preset")
        if elem.order != self.order:
            elem = restraighten(elem, self.order)
        n = self.algebra.n
        split = self.order.split
        nil_pos = self._nil_positions
        terms = {}
        for mono, coeff in elem.terms.items():
            positions = mono[::2]
            if any(p >= split for p in positions):
                raise ValueError("element has support outside U(b)")
            if any(p in nil_pos for p in positions):
                continue
            mask = 0
            xexp = [0] * n
            c = coeff
            for k in range(0, len(mono), 2):
                g = self.order.gens[mono[k]]
                if g.family == "e":
                    xexp[g.i - 1] += mono[k + 1]
                else:
                    mask |= 1 << (g.i - 1)
                    if g.i % 2 == 0:
                        c = -c
            key = (mask, tuple(xexp))
            v = terms.get(key, 0) + c
            if v:
                terms[key] = v
            elif key in terms:
                del terms[key]
        return CartanElement(n, terms)

    # -- recursive generator families -----------------------------------------

    def phi_generators(self, count=None):
        """The odd family Phi_k = (ad(pi(e^(n+1)))/2)^k applied to Phi_0.

        Phi_0 is the reduction of the level-n odd recursive element
        f(n,1)^(n); returns the first ``count`` of them (default n).
        """
        if self.algebra.name != "q":
            raise ValueError("phi generators require the q preset")
        from .sergeev import sergeev_cache

        n = self.algebra.n
        if count is None:
            count = n
        cache = sergeev_cache(self)
        if 0 not in self._phi_cache:
            self._phi_cache[0] = cache.reduced("f", n, 1, n)
        top = max(self._phi_cache)
        if top < count - 1:
            ad_source = cache.reduced("e", n, 1, n + 1)
            for k in range(top + 1, count):
                prev = self._phi_cache[k - 1]
                self._phi_cache[k] = self.commutator(ad_source, prev).scale(
                    Fraction(1, 2))
        return [self._phi_cache[k] for k in range(count)]


def whittaker_data(algebra):
    """Build the Whittaker context for a preset algebra."""
    return WhittakerData(algebra)


def reduce(ctx, elem):
    return ctx.reduce(elem)


def is_whittaker(ctx, reduced):
    return ctx.is_whittaker(reduced)


def kazhdan_degree(ctx, elem):
    return ctx.kazhdan_degree(elem)


def top_symbol(ctx, elem):
    return ctx.top_symbol(elem)


def theta(ctx, elem):
    return ctx.theta(elem)


def phi_generators(ctx, count=None):
    return ctx.phi_generators(count)
