"""Named verification suites with machine-readable reports.

Each suite mechanically checks one family of identities at a chosen rank,
using exact arithmetic only; a mathematical failure is recorded as data
(status "fail" with a counterexample rendered in the CLI expression
grammar), never raised.  Reports are deterministic given (suite, params,
seed): checks appear in a fixed declared order and wall time is kept out of
the structured fields.

Suites that would blow up at the requested rank refuse to run: they return
a single "skip" check naming the supported range.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from . import cartan, linalg
from .core import (build_preset, gen_e, gen_f, jacobi_defect,
                   antisymmetry_defect, nilpotent_power, odd_annihilator,
                   z_combination, GeneratorId)
from .pbw import (Element, casimir_element, multiply, render_element,
                  restraighten, supercommutator, mono_kazhdan)
from .sergeev import (SergeevCache, sergeev_cache, signed_f, w_generators,
                      w_generator_families)
from .whittaker import WhittakerData, whittaker_data
from .yangian import (YGenerator, YRelationInstance, check_relation,
                      enumerate_relations, phi_image)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    anchor: str
    detail: str = ""


@dataclass
class Report:
    suite: str
    anchor: str
    params: dict
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    def counts(self):
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out


_DETAIL_LIMIT = 240


def _clip(text):
    if len(text) <= _DETAIL_LIMIT:
        return text
    return text[:_DETAIL_LIMIT] + "..."


class _Suite:
    """Accumulates checks for one report."""

    def __init__(self, name, anchor, params):
        self.report = Report(suite=name, anchor=anchor, params=dict(params))

    def check(self, name, ok, anchor="", detail=""):
        status = "pass" if ok else "fail"
        self.report.checks.append(
            CheckResult(name, status, anchor, _clip(detail) if detail else ""))
        return ok

    def equal(self, name, got, want, anchor=""):
        ok = got == want
        detail = ""
        if not ok:
            detail = _clip(f"got {got}; want {want}")
        return self.check(name, ok, anchor, detail)

    def zero(self, name, got, anchor=""):
        ok = (got == 0) if not hasattr(got, "is_zero") else got.is_zero()
        detail = "" if ok else _clip(f"got {got}")
        return self.check(name, ok, anchor, detail)

    def skip(self, name, reason):
        self.report.checks.append(CheckResult(name, "skip", "", reason))


_CTX_CACHE = {}


def _ctx(preset, n=None):
    key = (preset, n)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = whittaker_data(build_preset(preset, n))
    return _CTX_CACHE[key]


def _q_ctx(params):
    return _ctx("q", params["n"])


# ---------------------------------------------------------------------------
# Operations used by several suites
# ---------------------------------------------------------------------------

def standard_polynomial(elems):
    """Alternating sum over all orderings of the product of the arguments.

    Ordinary permutation signs; the statement concerns the underlying
    associative algebra, so no Koszul signs enter.  Prefix products are
    shared across permutations.
    """
    if not elems:
        raise ValueError("standard polynomial of an empty list")
    order = elems[0].order
    for e in elems:
        if e.order != order:
            raise ValueError("elements belong to different algebra contexts")
    cache = {}

    def prefix_product(perm):
        if perm in cache:
            return cache[perm]
        if len(perm) == 1:
            out = elems[perm[0]]
        else:
            out = multiply(prefix_product(perm[:-1]), elems[perm[-1]])
        cache[perm] = out
        return out

    total = Element.zero(order)
    for perm in permutations(range(len(elems))):
        inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
                         if perm[a] > perm[b])
        term = prefix_product(perm)
        total = total + (term if inversions % 2 == 0 else -term)
    return total


def _s4_fast(elems):
    """The 4-letter standard polynomial through ordinary commutators.

    Uses s4(a,b,c,d) = [a,b]o[c,d] - [a,c]o[b,d] + [a,d]o[b,c] with
    [x,y] = xy - yx and u o v = uv + vu, an identity of the free associative
    algebra (checked by full expansion in the test suite); the inner
    commutators collapse heavily on W elements, which makes this form far
    cheaper than the defining 24-term sum.
    """
    a, b, c, d = elems

    def comm(x, y):
        return multiply(x, y) - multiply(y, x)

    def jordan(x, y):
        return multiply(x, y) + multiply(y, x)

    return (jordan(comm(a, b), comm(c, d))
            - jordan(comm(a, c), comm(b, d))
            + jordan(comm(a, d), comm(b, c)))


def series_coefficients(n, max_degree):
    """Coefficients of prod_{k=0}^{n-1} (1+t^(2k+2))/(1-t^(2k+2))."""
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    for k in range(n):
        d = 2 * k + 2
        # multiply by (1 + t^d)
        nxt = list(coeffs)
        for i in range(d, max_degree + 1):
            nxt[i] += coeffs[i - d]
        coeffs = nxt
        # divide by (1 - t^d): cumulative sums with stride d
        for i in range(d, max_degree + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def _w_monomial_table(ctx, max_degree):
    """Ordered monomials in the W generators up to the given formal degree.

    Returns (entries, gens) where entries are (exponent tuple, formal degree,
    element) triples in deterministic order and gens the generator list
    (element, degree, is_odd).
    """
    evens, odds = w_generators(ctx)
    gens = ([(e, 2 * k + 2, False) for k, e in enumerate(evens)]
            + [(o, 2 * k + 2, True) for k, o in enumerate(odds)])
    exps = [()]
    for elem, d, is_odd in gens:
        nxt = []
        for vec in exps:
            used = sum(e * gens[idx][1] for idx, e in enumerate(vec))
            cap = 1 if is_odd else (max_degree - used) // d
            for e in range(0, max(cap, 0) + 1):
                if used + e * d <= max_degree:
                    nxt.append(vec + (e,))
        exps = nxt
    elem_cache = {(0,) * len(gens): ctx.one()}

    def elem_of(vec):
        hit = elem_cache.get(vec)
        if hit is not None:
            return hit
        idx = max(i for i, e in enumerate(vec) if e)
        prev = list(vec)
        prev[idx] -= 1
        out = ctx.product(elem_of(tuple(prev)), gens[idx][0])
        elem_cache[vec] = out
        return out

    entries = []
    for vec in sorted(exps):
        deg = sum(e * gens[i][1] for i, e in enumerate(vec))
        entries.append((vec, deg, elem_of(vec)))
    return entries, gens


def hilbert_check(n, max_degree, suite=None):
    """Compare graded dimensions of the W-monomial span with the product
    series; returns the Report (wrapped by run_suite normally)."""
    if suite is None:
        suite = _Suite("hilbert", _ANCHORS["hilbert"],
                       {"n": n, "max_degree": max_degree})
    if max_degree % 2 != 0:
        raise ValueError("max_degree must be even")
    ctx = _ctx("q", n)
    entries, _ = _w_monomial_table(ctx, max_degree)
    coeffs = series_coefficients(n, max_degree)
    by_degree = {}
    for vec, deg, elem in entries:
        by_degree.setdefault(deg, []).append((vec, elem))
    for d in range(0, max_degree + 1):
        group = by_degree.get(d, [])
        count = len(group)
        suite.equal(f"degree_{d}_count", count, coeffs[d],
                    anchor="monomial count per degree matches the series")
        if count:
            rows = []
            for vec, elem in group:
                top = {m: c for m, c in elem.terms.items()
                       if mono_kazhdan(ctx.order, m) == d}
                rows.append(top)
            rank = linalg.rank_of_rows(rows)
            suite.equal(f"degree_{d}_rank", rank, count,
                        anchor="top components are linearly independent")
    for d in range(1, max_degree + 1, 2):
        suite.equal(f"degree_{d}_odd_empty", len(by_degree.get(d, [])), 0,
                    anchor="all generator degrees are even")
    return suite.report


# ---------------------------------------------------------------------------
# Suite bodies
# ---------------------------------------------------------------------------

def _suite_claim1(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    if n < 2:
        suite.check("vacuous", True, detail="no levels below n at this rank")
    for l in range(1, n):
        for m in range(l + 1, n + 1):
            want = ctx.one() if m == l + 1 else ctx.zero()
            suite.equal(f"e_{m}_level_{l}", cache.reduced("e", m, 1, l), want,
                        anchor="pi(e(m,1)^(l)) = 1 if m = l+1 else 0")
            suite.zero(f"f_{m}_level_{l}", cache.reduced("f", m, 1, l),
                       anchor="pi(f(m,1)^(l)) = 0 for l+1 <= m <= n")
    for m in range(1, n - 1):
        suite.zero(f"e_n_low_{m}", cache.reduced("e", n, 1, m),
                   anchor="pi(e(n,1)^(m)) = 0 for m <= n-2")
    if n >= 2:
        suite.equal("e_n_unit", cache.reduced("e", n, 1, n - 1), ctx.one(),
                    anchor="pi(e(n,1)^(n-1)) = 1")
    for m in range(1, n):
        suite.zero(f"f_n_low_{m}", cache.reduced("f", n, 1, m),
                   anchor="pi(f(n,1)^(m)) = 0 for m <= n-1")


def _suite_claim11(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    spec = ctx.algebra
    for m in range(1, n + 1):
        want_e = ctx.combination({gen_e(k, k): 1 for k in range(1, m + 1)})
        want_f = ctx.combination({gen_f(k, k): (-1) ** (k - 1)
                                  for k in range(1, m + 1)})
        suite.equal(f"e_diag_sum_{m}", cache.reduced("e", m, 1, m), want_e,
                    anchor="pi(e(m,1)^(m)) = sum_k pi(e(k,k))")
        suite.equal(f"f_diag_sum_{m}", cache.reduced("f", m, 1, m), want_f,
                    anchor="pi(f(m,1)^(m)) = sum_k (-1)^(k-1) pi(f(k,k))")
    suite.equal("e_top_is_z", cache.reduced("e", n, 1, n),
                ctx.combination(z_combination(spec)),
                anchor="pi(e(n,1)^(n)) = pi(z)")
    suite.equal("f_top_is_h0", cache.reduced("f", n, 1, n),
                ctx.combination(odd_annihilator(spec, 0)),
                anchor="pi(f(n,1)^(n)) = pi(H_0)")


def _suite_claim2(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    spec = ctx.algebra
    for l in range(0, n):
        for p in range(1, n + 1):
            r = min(p, n - l)
            red_e = cache.reduced("e", p, 1, p + l)
            red_f = cache.reduced("f", p, 1, p + l)
            want_e = ctx.combination({gen_e(i, i + l): 1 for i in range(1, r + 1)})
            want_f = ctx.combination({gen_f(i, i + l): (-1) ** (l + 1 - i)
                                      for i in range(1, r + 1)})
            suite.equal(f"top_e_p{p}_l{l}", ctx.top_symbol(red_e), want_e,
                        anchor="P(pi(e(p,1)^(p+l))) = sum_i e(i,i+l)")
            suite.equal(f"top_f_p{p}_l{l}", ctx.top_symbol(red_f), want_f,
                        anchor="P(pi(f(p,1)^(p+l))) = sum_i (-1)^(l+1-i) f(i,i+l)")
            suite.equal(f"deg_p{p}_l{l}",
                        (ctx.kazhdan_degree(red_e), ctx.kazhdan_degree(red_f)),
                        (2 * l + 2, 2 * l + 2),
                        anchor="filtration degree of the level p+l family is 2l+2")


def _suite_inw(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    for m in range(1, 2 * n):
        for kind in ("e", "f"):
            red = cache.reduced(kind, n, 1, m)
            suite.check(f"{kind}_{m}_membership", ctx.is_whittaker(red),
                        anchor="ad(a) of the representative lies in the ideal"
                               " for every a in m",
                        detail="" )
    suite.check("z_membership",
                ctx.is_whittaker(ctx.combination(z_combination(ctx.algebra))),
                anchor="pi(z) lies in the W-algebra")


def _elem_square(ctx, combo_elem):
    return multiply(combo_elem, combo_elem)


def _suite_corhc(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    half = Fraction(1, 2)
    total = ctx.zero()
    for i in range(1, n + 1):
        gi = ctx.generator(gen_e(i, i))
        total = total + multiply(gi, gi).scale(half)
    for i in range(1, n):
        total = total + ctx.generator(gen_e(i, i + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            prod = multiply(ctx.generator(gen_f(i, i)), ctx.generator(gen_f(j, j)))
            total = total + prod.scale((-1) ** (i - j))
    z_elem = ctx.combination(z_combination(ctx.algebra))
    total = total + _elem_square(ctx, z_elem).scale(half) - z_elem
    got = cache.reduced("e", n, 1, n + 1)
    suite.equal("quadratic_form", got, ctx.reduce(total),
                anchor="pi(e(n,1)^(n+1)) = pi(sum e(i,i)^2/2 + sum e(i,i+1)"
                       " + sum (-1)^(i-j) f(i,i)f(j,j) + z^2/2 - z)")
    want_theta = cartan.omega_quadratic(n).scale(2)
    suite.equal("cartan_image", ctx.theta(got), want_theta,
                anchor="theta of it = sum x_i^2/2 + sum_{i<j} xi_i xi_j"
                       " + (sum x_i)^2/2 - sum x_i")


def _ordered_factor_sum(n, p, k):
    """Sum over weakly decreasing index tuples of the k-fold products
    (x_{i_1} + (-1)^(k-1) xi_{i_1}) ... (x_{i_k} + xi_{i_k})."""
    total = cartan.CartanElement.zero(n)
    for asc in combinations_with_replacement(range(1, p + 1), k):
        tup = tuple(reversed(asc))
        prod = cartan.CartanElement.one(n)
        for t, i in enumerate(tup, start=1):
            sgn = (-1) ** (k - t)
            factor = cartan.CartanElement.x_var(n, i) + \
                cartan.CartanElement.xi_var(n, i).scale(sgn)
            prod = cartan.h_multiply(prod, factor)
        total = total + prod
    return total


def _suite_hcgenerators(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    for k in range(1, n + 1):
        big = _ordered_factor_sum(n, n, k)
        img_e = ctx.theta(cache.reduced("e", n, 1, n + k - 1))
        img_f = ctx.theta(cache.reduced("f", n, 1, n + k - 1))
        suite.equal(f"even_part_k{k}", img_e, big.even_part(),
                    anchor="theta(pi(e(n,1)^(n+k-1))) ="
                           " even part of the ordered product sum")
        suite.equal(f"odd_part_k{k}", img_f, big.odd_part(),
                    anchor="theta(pi(f(n,1)^(n+k-1))) ="
                           " odd part of the ordered product sum")
    for l in range(0, n):
        for p in range(1, n + 1):
            want = _ordered_factor_sum(n, p, l + 1)
            got = ctx.theta(cache.reduced("e", p, 1, p + l)) + \
                ctx.theta(cache.reduced("f", p, 1, p + l))
            suite.equal(f"joint_sum_p{p}_l{l}", got, want,
                        anchor="theta(pi(e)) + theta(pi(f)) at level p+l"
                               " equals the ordered product sum over p indices")


def _suite_specialgen(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    spec = ctx.algebra
    phis = ctx.phi_generators(max(2 * n - 1, n))
    for k in range(n):
        suite.equal(f"top_phi_{k}", ctx.top_symbol(phis[k]),
                    ctx.combination(odd_annihilator(spec, k)),
                    anchor="P(Phi_k) = H_k")
    for m in range(n):
        for p in range(m, n):
            comm = ctx.commutator(phis[m], phis[p])
            if (m + p) % 2 == 1:
                suite.zero(f"phi_comm_{m}_{p}", comm,
                           anchor="[Phi_m, Phi_p] = 0 for odd m+p")
            else:
                want = ctx.commutator(phis[0], phis[m + p]).scale((-1) ** m)
                suite.equal(f"phi_comm_{m}_{p}", comm, want,
                            anchor="[Phi_m, Phi_p] = (-1)^m [Phi_0, Phi_(m+p)]"
                                   " for even m+p")
    evens, odds = w_generators(ctx)
    for i in range(0, (n - 1) // 2 + 1):
        w = ctx.commutator(phis[0], phis[2 * i])
        central = all(ctx.commutator(w, g).is_zero() for g in evens + odds)
        suite.check(f"witness_central_{2 * i}", central,
                    anchor="[Phi_0, Phi_2i] commutes with every W generator")
        img = ctx.theta(w)
        suite.check(f"witness_xi_free_{2 * i}", img.is_xi_free(),
                    anchor="theta([Phi_0, Phi_2i]) has no xi part",
                    detail="" if img.is_xi_free() else _clip(str(img)))
        suite.check(f"witness_supercent_{2 * i}",
                    img.is_xi_free() and cartan.supercent_check(img),
                    anchor="theta([Phi_0, Phi_2i]) is symmetric with"
                           " (x_i+x_j)-divisible derivative differences")


def _suite_evencommute(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    odd_levels = list(range(1, 2 * n, 2))
    for ai in range(len(odd_levels)):
        for bi in range(ai + 1, len(odd_levels)):
            i, j = odd_levels[ai], odd_levels[bi]
            zi = cache.reduced("e", n, 1, n + i)
            zj = cache.reduced("e", n, 1, n + j)
            suite.zero(f"even_comm_{i}_{j}", ctx.commutator(zi, zj),
                       anchor="[pi(e(n,1)^(n+i)), pi(e(n,1)^(n+j))] = 0"
                              " for odd i, j")
    f_base = cache.reduced("f", n, 1, n)
    for m in odd_levels:
        fm = cache.reduced("f", n, 1, n + m)
        suite.zero(f"odd_base_comm_{m}", ctx.commutator(f_base, fm),
                   anchor="[pi(f(n,1)^(n)), pi(f(n,1)^(n+m))] = 0 for odd m")


def _suite_q2_table(suite, params):
    ctx = _ctx("q", 2)
    cache = sergeev_cache(ctx)
    n = 2
    x1 = cartan.CartanElement.x_var(n, 1)
    x2 = cartan.CartanElement.x_var(n, 2)
    xi1 = cartan.CartanElement.xi_var(n, 1)
    xi2 = cartan.CartanElement.xi_var(n, 2)
    phis = ctx.phi_generators(2)
    phi0 = ctx.theta(phis[0])
    phi1 = ctx.theta(phis[1])
    suite.equal("phi0", phi0, xi1 + xi2, anchor="phi_0 = xi_1 + xi_2")
    suite.equal("phi1", phi1,
                cartan.h_multiply(x2, xi1) - cartan.h_multiply(x1, xi2),
                anchor="phi_1 = x_2 xi_1 - x_1 xi_2")
    z0 = ctx.theta(ctx.commutator(phis[0], phis[0]))
    suite.equal("z0", z0, (x1 + x2).scale(2), anchor="z_0 = 2x_1 + 2x_2")
    z1 = -ctx.theta(cache.reduced("e", 2, 1, 3)) \
        + cartan.h_multiply(z0, z0).scale(Fraction(1, 4)) \
        - z0.scale(Fraction(1, 2))
    suite.equal("z1", z1,
                cartan.h_multiply(x1, x2) - cartan.h_multiply(xi1, xi2),
                anchor="z_1 = x_1 x_2 - xi_1 xi_2")
    suite.equal("phi0_sq", cartan.h_multiply(phi0, phi0),
                z0.scale(Fraction(1, 2)), anchor="phi_0^2 = z_0/2")
    suite.equal("phi0_phi1", cartan.h_multiply(phi0, phi1),
                cartan.h_multiply(z0, cartan.h_multiply(xi1, xi2))
                .scale(Fraction(-1, 2)),
                anchor="phi_0 phi_1 = -z_0 xi_1 xi_2 / 2")
    suite.equal("phi1_sq", cartan.h_multiply(phi1, phi1),
                cartan.h_multiply(z0, cartan.h_multiply(x1, x2))
                .scale(Fraction(1, 2)),
                anchor="phi_1^2 = z_0 x_1 x_2 / 2")
    suite.equal("z1_phi0", cartan.h_commutator(z1, phi0), phi1.scale(-2),
                anchor="[z_1, phi_0] = -2 phi_1")
    suite.equal("z1_phi1", cartan.h_commutator(z1, phi1),
                cartan.h_multiply(cartan.h_multiply(x1, x2), phi0).scale(2),
                anchor="[z_1, phi_1] = 2 x_1 x_2 phi_0")


def _suite_supercent_central(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    for m in range(0, params.get("max_central", 2) + 1):
        img = ctx.theta(cache.central_reduced(m))
        xi_free = img.is_xi_free()
        suite.check(f"xi_free_{m}", xi_free,
                    anchor="theta of the level-(2m+1) trace has no xi part",
                    detail="" if xi_free else _clip(str(img)))
        suite.check(f"supercent_{m}", xi_free and cartan.supercent_check(img),
                    anchor="symmetric and d/dx_i - d/dx_j divisible by x_i+x_j")


def _suite_charpol(suite, params):
    n = params["n"]
    got = cartan.char_poly(cartan.t_matrix(n), n)
    want = cartan.char_poly_expected(n)
    names = [f"x{i}" for i in range(1, n + 1)] + ["lam"]
    suite.check("charpoly", got == want,
                anchor="det(lambda I - T) = lambda^n + sigma_2 lambda^(n-2)"
                       " + sigma_4 lambda^(n-4) + ...",
                detail="" if got == want
                else _clip(f"got {cartan.poly_render(got, names)}"))
    odd_ok = True
    for r in range(1, n + 1, 2):
        sig = cartan.elementary_symmetric(r, n)
        for mono in sig:
            if got.get(mono + (n - r,), 0) != 0:
                odd_ok = False
    suite.check("odd_sigma_vanish", odd_ok,
                anchor="no odd elementary symmetric coefficient appears")


def _suite_independence(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    phis = ctx.phi_generators(n)
    images = [ctx.theta(p) for p in phis]
    try:
        det = cartan.independence_det(n, images)
    except ValueError as exc:
        suite.check("xi_linear_form", False, detail=str(exc),
                    anchor="every theta(Phi_k) is xi-linear")
        return
    suite.check("xi_linear_form", True,
                anchor="every theta(Phi_k) is xi-linear")
    names = [f"x{i}" for i in range(1, n + 1)]
    suite.check("det_nonzero", bool(det),
                anchor="det of the xi-coefficient matrix is nonzero",
                detail=_clip(f"det = {cartan.poly_render(det, names)}"))
    if n == 1:
        suite.equal("det_rank_one", det, cartan.poly_const(1, 1),
                    anchor="single image is xi_1 itself")


def _suite_ad_omega(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    matrix = cartan.ad_omega_matrix(n)
    t_mat = cartan.t_matrix(n)

    def negate(m):
        return [[cartan.poly_scale(x, -1) for x in row] for row in m]

    def transpose(m):
        return [[m[j][i] for j in range(n)] for i in range(n)]

    candidates = [("t_matrix", t_mat), ("transpose", transpose(t_mat)),
                  ("negative", negate(t_mat)),
                  ("negative_transpose", negate(transpose(t_mat)))]
    matched = [nm for nm, cand in candidates if cand == matrix]
    if n == 1:
        matched = ["t_matrix"]  # all candidates coincide at rank one
    suite.check("matrix_convention", bool(matched),
                anchor="ad(omega) on span(xi) matches the zero-diagonal"
                       " +-x_j table or a stated variant",
                detail="matches: " + ",".join(matched) if matched
                else "no candidate matches")
    if matched:
        suite.check("matches_as_written", matched[0] == "t_matrix",
                    anchor="the column convention reproduces the table"
                           " exactly as written",
                    detail="matched " + matched[0])
    omega = cartan.omega_quadratic(n)
    engine_omega = ctx.theta(cache.reduced("e", n, 1, n + 1)).scale(Fraction(1, 2))
    suite.equal("omega_engine", engine_omega, omega,
                anchor="omega = theta(pi(e(n,1)^(n+1)))/2")
    xis = [cartan.CartanElement.xi_var(n, i) for i in range(1, n + 1)]
    images = [cartan.h_commutator(omega, xi) for xi in xis]
    skew_ok = True
    for j in range(n):
        for k in range(n):
            lhs = cartan.h_commutator(images[j], xis[k]) \
                + cartan.h_commutator(xis[j], images[k])
            if not lhs.is_zero():
                skew_ok = False
    suite.check("skew_symmetry", skew_ok,
                anchor="B(Tv,w) + B(v,Tw) = 0 with B(u,v) = [u,v]")
    phis = ctx.phi_generators(n)
    phi0 = ctx.theta(phis[0])
    acc = phi0
    ok = True
    for k in range(1, n):
        acc = cartan.h_commutator(omega, acc)
        if acc != ctx.theta(phis[k]):
            ok = False
    suite.check("phi_tower", ok,
                anchor="phi_k = T^k(phi_0) matches the engine images")


def _suite_center_onedir(suite, params):
    n = params["n"]
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    evens, odds = w_generators(ctx)
    for m in range(0, params.get("max_central", 2) + 1):
        red = cache.central_reduced(m)
        suite.check(f"central_{m}_membership", ctx.is_whittaker(red),
                    anchor="reduced central element lies in the W-algebra")
        ok = all(ctx.commutator(red, g).is_zero() for g in evens + odds)
        suite.check(f"central_{m}_commutes", ok,
                    anchor="reduced central element commutes with every"
                           " W generator")


def _suite_al_identity(suite, params):
    n = params["n"]
    seed = params["seed"]
    samples = params["samples"]
    ctx = _q_ctx(params)
    evens, odds = w_generators(ctx)
    pool = evens + odds
    rng = random.Random(seed)
    pair_cache = {}

    def sample_element():
        t = rng.choice((1, 2))
        idxs = tuple(rng.randrange(len(pool)) for _ in range(t))
        if len(idxs) == 1:
            return pool[idxs[0]]
        if idxs not in pair_cache:
            pair_cache[idxs] = ctx.product(pool[idxs[0]], pool[idxs[1]])
        return pair_cache[idxs]

    failures = 0
    first_failure = ""
    agree = True
    for s in range(samples):
        quad = [sample_element() for _ in range(4)]
        val = ctx.reduce(_s4_fast(quad))
        if s < 3 and ctx.reduce(standard_polynomial(quad)) != val:
            agree = False
        if not val.is_zero():
            failures += 1
            if not first_failure:
                first_failure = _clip(f"sample {s}: {render_element(val)}")
    suite.check("s4_forms_agree", agree,
                anchor="the commutator form equals the defining 24-term sum"
                       " on control samples")
    suite.check("s4_vanishes", failures == 0,
                anchor="sum over S_4 of sgn-weighted 4-fold products is 0"
                       " on the W-algebra",
                detail=first_failure if failures
                else f"{samples} quadruples, seed {seed}")


def _suite_yangian(suite, params):
    n = params["n"]
    max_level = params["max_level"]
    ctx = _q_ctx(params)
    insts = enumerate_relations(max_level)
    failures = 0
    first = ""
    for inst in insts:
        if not check_relation(inst, ctx):
            failures += 1
            if not first:
                first = f"{inst}"
    suite.check("relations", failures == 0,
                anchor="canonicalized level relations hold under the"
                       " evaluation map",
                detail=first if failures
                else f"{len(insts)} instances, levels <= {max_level}")
    fams = w_generator_families(ctx)
    covered = 0
    for member in fams["family_a"]:
        hit = False
        for k in range(1, 2 * n + 1):
            for i in (1, -1):
                img = phi_image(YGenerator(i, 1, k), ctx)
                if img == member or img == -member:
                    hit = True
        if hit:
            covered += 1
    suite.equal("surjectivity_witness", covered, len(fams["family_a"]),
                anchor="every member of the level n..2n-1 family is an"
                       " image up to sign")


def _suite_hilbert(suite, params):
    hilbert_check(params["n"], params["max_degree"], suite=suite)


def _suite_theta_injectivity(suite, params):
    n = params["n"]
    max_degree = params["max_degree"]
    ctx = _q_ctx(params)
    entries, _ = _w_monomial_table(ctx, max_degree)
    source_rows = [dict(elem.terms) for _, _, elem in entries]
    suite.equal("source_rank", linalg.rank_of_rows(source_rows), len(entries),
                anchor="the W monomials are linearly independent")
    image_rows = [dict(ctx.theta(elem).terms) for _, _, elem in entries]
    suite.equal("image_rank", linalg.rank_of_rows(image_rows), len(entries),
                anchor="their Cartan projections stay independent"
                       " (zero kernel on the span)")


def _suite_osp_relations(suite, params):
    ctx = _ctx("osp12")
    g = lambda name: ctx.generator(GeneratorId(name))
    omega = casimir_element(ctx.order)
    central = all(supercommutator(omega, ctx.generator(x)).is_zero()
                  for x in ctx.algebra.generators)
    suite.check("casimir_central", central,
                anchor="the dual-basis Casimir commutes with every generator")
    pi_omega = ctx.reduce(omega)
    explicit = ctx.reduce(g("X").scale(2) + g("H")
                          - multiply(g("H"), g("H"))
                          + multiply(g("r"), g("theta")).scale(2))
    suite.equal("casimir_reduced_form", pi_omega, explicit,
                anchor="pi(Omega) = pi(2X + H - H^2 + 2 r theta)")
    pi_theta = ctx.reduce(g("theta"))
    big_r = ctx.reduce(g("r") - multiply(g("H"), g("theta")))
    for name, elem in (("omega", pi_omega), ("theta", pi_theta), ("R", big_r)):
        suite.check(f"{name}_membership", ctx.is_whittaker(elem),
                    anchor="the generator lies in the W-algebra")
    suite.equal("chi_theta_sq", ctx.chi_of_theta_bracket(), Fraction(1),
                anchor="chi([theta,theta]) = 1 for this normalization")
    suite.equal("theta_squared", ctx.product(pi_theta, pi_theta),
                ctx.scalar(Fraction(1, 2)),
                anchor="pi(theta)^2 = 1/2")
    suite.zero("omega_R", ctx.commutator(pi_omega, big_r),
               anchor="[pi(Omega), R] = 0")
    suite.zero("omega_theta", ctx.commutator(pi_omega, pi_theta),
               anchor="[pi(Omega), pi(theta)] = 0")
    suite.equal("R_R", ctx.commutator(big_r, big_r), pi_omega,
                anchor="[R, R] = pi(Omega)")
    suite.equal("R_theta", ctx.commutator(big_r, pi_theta),
                ctx.scalar(Fraction(-1, 2)),
                anchor="[R, pi(theta)] = -1/2")
    suite.equal("theta_theta", ctx.commutator(pi_theta, pi_theta),
                ctx.one(), anchor="[pi(theta), pi(theta)] = 1")


def _suite_sl12_relations(suite, params):
    ctx = _ctx("sl12")
    g = lambda name: ctx.generator(GeneratorId(name))
    omega = casimir_element(ctx.order)
    central = all(supercommutator(omega, ctx.generator(x)).is_zero()
                  for x in ctx.algebra.generators)
    suite.check("casimir_central", central,
                anchor="the dual-basis Casimir commutes with every generator")
    a_raw = supercommutator(g("fm"), multiply(g("ep"), g("em")))
    suite.equal("a_closed_form", ctx.reduce(a_raw),
                ctx.reduce(multiply(g("h1"), g("em")) - g("ep")),
                anchor="pi([f-, e+ e-]) = pi(h_1 e- - e+)")
    b_raw = supercommutator(g("em"), multiply(g("fp"), g("fm")))
    suite.equal("b_closed_form", ctx.reduce(b_raw),
                ctx.reduce(multiply(g("h2"), g("fm")) - g("fp")),
                anchor="pi([e-, f+ f-]) = pi(h_2 f- - f+)")
    pi = ctx.reduce
    c_el = pi(g("h1") + g("h2"))
    om = pi(omega)
    em = pi(g("em"))
    fm = pi(g("fm"))
    a_el = pi(a_raw)
    b_el = pi(b_raw)
    named = [("C", c_el), ("Omega", om), ("eminus", em), ("fminus", fm),
             ("a", a_el), ("b", b_el)]
    for name, elem in named:
        suite.check(f"{name}_membership", ctx.is_whittaker(elem),
                    anchor="the generator lies in the W-algebra")
    for name, elem in named:
        suite.zero(f"omega_central_{name}", ctx.commutator(om, elem),
                   anchor="pi(Omega) is central among the generators")
    suite.equal("C_eminus", ctx.commutator(c_el, em), em,
                anchor="[pi(C), pi(e-)] = pi(e-)")
    suite.equal("C_a", ctx.commutator(c_el, a_el), a_el,
                anchor="[pi(C), pi(a)] = pi(a)")
    suite.equal("C_fminus", ctx.commutator(c_el, fm), -fm,
                anchor="[pi(C), pi(f-)] = -pi(f-)")
    suite.equal("C_b", ctx.commutator(c_el, b_el), -b_el,
                anchor="[pi(C), pi(b)] = -pi(b)")
    suite.equal("eminus_fminus", ctx.commutator(em, fm), ctx.one(),
                anchor="[pi(e-), pi(f-)] = 1")
    suite.equal("a_b", ctx.commutator(a_el, b_el), om,
                anchor="[pi(a), pi(b)] = pi(Omega)")
    odd_named = [("eminus", em), ("fminus", fm), ("a", a_el), ("b", b_el)]
    skip_pairs = {("eminus", "fminus"), ("a", "b")}
    for i1 in range(len(odd_named)):
        for i2 in range(i1, len(odd_named)):
            n1, e1 = odd_named[i1]
            n2, e2 = odd_named[i2]
            if (n1, n2) in skip_pairs or (n2, n1) in skip_pairs:
                continue
            suite.zero(f"odd_comm_{n1}_{n2}", ctx.commutator(e1, e2),
                       anchor="all other odd generator commutators vanish")


def _suite_sergeev_equg2(suite, params):
    n = params["n"]
    max_m = params.get("max_level", 4)
    ctx = _q_ctx(params)
    cache = sergeev_cache(ctx)
    failures = 0
    first = ""
    checks = 0
    for m in range(1, max_m + 1):
        sgn = (-1) ** (m + 1)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                ge = ctx.generator(gen_e(i, j))
                gf = ctx.generator(gen_f(i, j))
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        e_m = cache.raw("e", k, l, m)
                        f_m = cache.raw("f", k, l, m)
                        dj = 1 if j == k else 0
                        di = 1 if i == l else 0
                        cases = [
                            (supercommutator(ge, e_m),
                             (cache.raw("e", i, l, m).scale(dj)
                              - cache.raw("e", k, j, m).scale(di))),
                            (supercommutator(ge, f_m),
                             (cache.raw("f", i, l, m).scale(dj)
                              - cache.raw("f", k, j, m).scale(di))),
                            (supercommutator(gf, e_m),
                             (cache.raw("f", i, l, m).scale(sgn * dj)
                              - cache.raw("f", k, j, m).scale(di))),
                            (supercommutator(gf, f_m),
                             (cache.raw("e", i, l, m).scale(sgn * dj)
                              + cache.raw("e", k, j, m).scale(di))),
                        ]
                        for idx, (got, want) in enumerate(cases):
                            checks += 1
                            if got != want:
                                failures += 1
                                if not first:
                                    first = (f"case {idx} at (i,j,k,l,m)="
                                             f"({i},{j},{k},{l},{m})")
    suite.check("bracket_recursion", failures == 0,
                anchor="generator brackets with level-m elements reproduce"
                       " the delta-rule right-hand sides",
                detail=first if failures else f"{checks} identities")
    # signed-index family: equal-sign / mixed-sign reductions and the
    # (-1)^(m-1) flip under global index negation
    sf_checks = 0
    sf_failures = 0
    first_sf = ""
    for m in range(1, min(max_m, 3) + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                pos = signed_f(ctx, i, j, m)
                if pos != cache.raw("e", i, j, m):
                    sf_failures += 1
                    first_sf = first_sf or f"positive pair ({i},{j}) level {m}"
                neg_pair = signed_f(ctx, -i, -j, m)
                if neg_pair != pos.scale((-1) ** (m - 1)):
                    sf_failures += 1
                    first_sf = first_sf or f"negated pair ({i},{j}) level {m}"
                mixed = signed_f(ctx, -i, j, m)
                if mixed != cache.raw("f", i, j, m).scale((-1) ** (m + 1)):
                    sf_failures += 1
                    first_sf = first_sf or f"mixed pair ({i},{j}) level {m}"
                sf_checks += 3
    suite.check("signed_family", sf_failures == 0,
                anchor="signed-index family reduces to the e/f families"
                       " with the stated sign rules",
                detail=first_sf if sf_failures else f"{sf_checks} identities")


def _suite_jacobi(suite, params):
    preset = params.get("preset", "q")
    n = params["n"] if preset == "q" else None
    spec = build_preset(preset, n)
    gens = spec.generators
    anti = sum(1 for a in gens for b in gens if antisymmetry_defect(spec, a, b))
    suite.equal("antisymmetry_defects", anti, 0,
                anchor="[a,b] = -(-1)^(p(a)p(b)) [b,a] on all pairs")
    jac = 0
    first = ""
    for a in gens:
        for b in gens:
            for c in gens:
                if jacobi_defect(spec, a, b, c):
                    jac += 1
                    first = first or f"({a!r},{b!r},{c!r})"
    suite.equal("jacobi_defects", jac, 0,
                anchor="graded Jacobi identity on all generator triples")
    grading_bad = 0
    for a in gens:
        for b in gens:
            da = spec.dynkin_degree(a) + spec.dynkin_degree(b)
            for g2, _ in spec.bracket(a, b).items():
                if spec.dynkin_degree(g2) != da:
                    grading_bad += 1
    suite.equal("grading_compat", grading_bad, 0,
                anchor="brackets add Dynkin degrees")
    if preset == "osp12":
        th, rr = GeneratorId("theta"), GeneratorId("r")
        xx, yy, hh = GeneratorId("X"), GeneratorId("Y"), GeneratorId("H")
        suite.equal("form_theta_r", spec.form_value(th, rr), Fraction(1),
                    anchor="(theta|r) = 1")
        suite.equal("form_x_y", spec.form_value(xx, yy), Fraction(-1, 2),
                    anchor="(X|Y) = -1/2")
        suite.equal("form_h_h", spec.form_value(hh, hh), Fraction(-1),
                    anchor="(H|H) = -1")


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_ANCHORS = {
    "claim1": "pi(e(m,1)^(l)) = [m = l+1], pi(f(m,1)^(l)) = 0 for l < m <= n",
    "claim11": "pi(e(m,1)^(m)) and pi(f(m,1)^(m)) are signed diagonal sums",
    "claim2": "top symbols of the level p+l family are shifted diagonals",
    "inW": "the level-m corner elements lie in the W-algebra",
    "corhc": "explicit quadratic form of pi(e(n,1)^(n+1)) and its Cartan image",
    "hcgenerators": "Cartan images of the corner family as ordered product sums",
    "specialgen_abc": "P(Phi_k) = H_k and the Phi commutator parity table",
    "evencommute": "odd-level corner elements commute pairwise",
    "q2_table": "the rank-two Cartan relation table",
    "supercent_central": "central trace images satisfy the symmetric"
                         " divisibility condition",
    "charpol": "char poly of the skew table is the even sigma sum",
    "independence": "xi-coefficient determinant of the Phi images is nonzero",
    "ad_omega": "ad(omega) matrix matches the skew table; phi_k = T^k(phi_0)",
    "center_onedir": "reduced central elements centralize the W generators",
    "al_identity": "the 4-letter standard polynomial vanishes on samples",
    "yangian": "level relations hold under the evaluation map",
    "hilbert": "graded dimensions match prod (1+t^(2k+2))/(1-t^(2k+2))",
    "theta_injectivity": "theta has zero kernel on the low-degree span",
    "osp_relations": "the osp(1|2) W-algebra relation table",
    "sl12_relations": "the sl(1|2) W-algebra relation table",
    "sergeev_equG2": "bracket rules for the recursive families",
    "jacobi": "antisymmetry, graded Jacobi and grading compatibility",
}


def _needs_q(lo, hi):
    def check(params):
        n = params["n"]
        if not lo <= n <= hi:
            return f"supported for {lo} <= n <= {hi}, requested n={n}"
        return None
    return check


_SUITES = {
    "claim1": (_suite_claim1, _needs_q(1, 4)),
    "claim11": (_suite_claim11, _needs_q(1, 4)),
    "claim2": (_suite_claim2, _needs_q(1, 4)),
    "inW": (_suite_inw, _needs_q(1, 4)),
    "corhc": (_suite_corhc, _needs_q(1, 4)),
    "hcgenerators": (_suite_hcgenerators, _needs_q(1, 4)),
    "specialgen_abc": (_suite_specialgen, _needs_q(1, 4)),
    "evencommute": (_suite_evencommute, _needs_q(1, 4)),
    "q2_table": (_suite_q2_table, _needs_q(2, 2)),
    "supercent_central": (_suite_supercent_central, _needs_q(1, 3)),
    "charpol": (_suite_charpol, _needs_q(1, 8)),
    "independence": (_suite_independence, _needs_q(1, 4)),
    "ad_omega": (_suite_ad_omega, _needs_q(1, 4)),
    "center_onedir": (_suite_center_onedir, _needs_q(1, 4)),
    "al_identity": (_suite_al_identity, _needs_q(2, 3)),
    "yangian": (_suite_yangian, _needs_q(1, 3)),
    "hilbert": (_suite_hilbert, _needs_q(1, 3)),
    "theta_injectivity": (_suite_theta_injectivity, _needs_q(1, 3)),
    "osp_relations": (_suite_osp_relations, None),
    "sl12_relations": (_suite_sl12_relations, None),
    "sergeev_equG2": (_suite_sergeev_equg2, _needs_q(1, 3)),
    "jacobi": (_suite_jacobi, _needs_q(1, 4)),
}

SUITE_NAMES = tuple(_SUITES)


def default_params(name, n=2, seed=0, samples=100, max_level=None,
                   max_degree=None, preset="q"):
    params = {"n": n, "seed": seed, "samples": samples, "preset": preset}
    if name == "yangian":
        params["max_level"] = max_level if max_level is not None else \
            (4 if n <= 2 else 3)
    elif max_level is not None:
        params["max_level"] = max_level
    if name == "hilbert":
        params["max_degree"] = max_degree if max_degree is not None else \
            (12 if n == 1 else 8)
    elif name == "theta_injectivity":
        params["max_degree"] = max_degree if max_degree is not None else 8
    elif max_degree is not None:
        params["max_degree"] = max_degree
    return params


def run_suite(name, **overrides):
    """Run one named suite; unknown names list the registry."""
    if name not in _SUITES:
        known = ", ".join(SUITE_NAMES)
        raise ValueError(f"unknown suite {name!r}; valid suites: {known}")
    func, supported = _SUITES[name]
    params = default_params(name, **{k: v for k, v in overrides.items()
                                     if v is not None})
    suite = _Suite(name, _ANCHORS[name], params)
    reason = supported(params) if supported else None
    start = time.perf_counter()
    if reason is not None:
        suite.skip("feasibility", reason)
    else:
        func(suite, params)
    suite.report.wall_time = time.perf_counter() - start
    return suite.report


def run_all(**overrides):
    """Run every suite in registry order; unsupported ranks report skips."""
    return [run_suite(name, **overrides) for name in SUITE_NAMES]
