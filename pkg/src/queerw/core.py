"""Lie superalgebra presentations with exact rational structure constants.

An :class:`AlgebraSpec` records the generators of a finite-dimensional Lie
superalgebra together with parities, Dynkin degrees, ad-h weights and the
full bracket table.  Three presets ship with the package:

* ``q``     -- the queer superalgebra q(n): even generators e(i,j) and odd
  generators f(i,j) for 1 <= i,j <= n, Dynkin degree 2(j-i) on both,
* ``osp12`` -- osp(1|2) realized inside 3x3 supermatrices,
* ``sl12``  -- sl(1|2) realized inside 3x3 supermatrices.

The brackets of the two fixed presets are derived programmatically from the
matrix realizations (supercommutators of 3x3 supermatrices expressed back in
the chosen basis), so no structure constant is ever typed in by hand.

All scalars are :class:`fractions.Fraction`; nothing in this package rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_in_span

Scalar = Fraction

EVEN = 0
ODD = 1

PRESETS = ("q", "osp12", "sl12")


@dataclass(frozen=True)
class GeneratorId:
    """A basis generator: family tag plus matrix indices.

    For q(n) the family is "e" (even) or "f" (odd) with 1 <= i,j <= n.
    Generators of the fixed presets are named (family holds the name,
    i = j = 0).
    """

    family: str
    i: int = 0
    j: int = 0

    def __repr__(self):
        if self.i or self.j:
            return f"{self.family}({self.i},{self.j})"
        return self.family


def gen_e(i, j):
    return GeneratorId("e", i, j)


def gen_f(i, j):
    return GeneratorId("f", i, j)


# A linear combination of generators: GeneratorId -> Scalar, no zero entries.
Combination = dict


class AlgebraSpec:
    """Immutable presentation of a Lie superalgebra.

    Stores the generator catalogue, per-generator parity / Dynkin degree /
    ad-h weight, and the complete bracket table on ordered generator pairs.
    Instances are never mutated after construction and may be shared freely.
    """

    def __init__(self, name, n, generators, parity, dynkin, weight,
                 brackets, form=None):
        self.name = name
        self.n = n
        self.generators = tuple(generators)
        self._parity = dict(parity)
        self._dynkin = dict(dynkin)
        self._weight = dict(weight)
        self._brackets = {pair: dict(combo) for pair, combo in brackets.items()}
        self.form = None if form is None else dict(form)
        self.index = {g: k for k, g in enumerate(self.generators)}

    def __repr__(self):
        return f"AlgebraSpec({self.name!r}, n={self.n}, dim={len(self.generators)})"

    def __eq__(self, other):
        return (isinstance(other, AlgebraSpec)
                and self.name == other.name and self.n == other.n)

    def __hash__(self):
        return hash((self.name, self.n))

    def check_generator(self, g):
        if g not in self.index:
            raise ValueError(f"{g!r} is not a generator of {self.name}(n={self.n})")

    def parity_of(self, g):
        self.check_generator(g)
        return self._parity[g]

    def dynkin_degree(self, g):
        self.check_generator(g)
        return self._dynkin[g]

    def weight_of(self, g):
        self.check_generator(g)
        return self._weight[g]

    def kazhdan_degree_of(self, g):
        return self.dynkin_degree(g) + 2

    def grading(self, g):
        """(dynkin degree, ad-h weight, Kazhdan degree, parity) of a generator."""
        self.check_generator(g)
        return (self._dynkin[g], self._weight[g], self._dynkin[g] + 2,
                self._parity[g])

    def bracket(self, a, b):
        """Structure constants of [a, b] as a combination of generators."""
        self.check_generator(a)
        self.check_generator(b)
        return dict(self._brackets.get((a, b), ()))

    def bracket_with_combination(self, a, combo):
        """[a, sum c_g g] extended linearly in the second slot."""
        out = {}
        for g, c in combo.items():
            for h, s in self.bracket(a, g).items():
                out[h] = out.get(h, Fraction(0)) + c * s
        return {g: c for g, c in out.items() if c != 0}

    def form_value(self, a, b):
        if self.form is None:
            raise ValueError(f"preset {self.name} carries no invariant form data")
        return self.form.get((a, b), Fraction(0))


def bracket_gen(spec, a, b):
    """Exact structure-constant lookup for [a, b]."""
    return spec.bracket(a, b)


def grading(spec, g):
    """(dynkin degree, weight, Kazhdan degree, parity) of a generator."""
    return spec.grading(g)


def jacobi_defect(spec, a, b, c):
    """Left-hand side of the graded Jacobi identity on a generator triple.

    Returns (-1)^{p(a)p(c)}[a,[b,c]] + (-1)^{p(b)p(a)}[b,[c,a]]
    + (-1)^{p(c)p(b)}[c,[a,b]]; the zero combination iff the identity holds.
    """
    pa, pb, pc = spec.parity_of(a), spec.parity_of(b), spec.parity_of(c)
    out = {}
    for x, y, z, sign_exp in ((a, b, c, pa * pc), (b, c, a, pb * pa),
                              (c, a, b, pc * pb)):
        inner = spec.bracket(y, z)
        outer = spec.bracket_with_combination(x, inner)
        s = Fraction(-1) ** sign_exp
        for g, coef in outer.items():
            out[g] = out.get(g, Fraction(0)) + s * coef
    return {g: c for g, c in out.items() if c != 0}


def antisymmetry_defect(spec, a, b):
    """[a,b] + (-1)^{p(a)p(b)}[b,a]; zero iff the table is super-antisymmetric."""
    out = dict(spec.bracket(a, b))
    s = Fraction(-1) ** (spec.parity_of(a) * spec.parity_of(b))
    for g, c in spec.bracket(b, a).items():
        out[g] = out.get(g, Fraction(0)) + s * c
    return {g: c for g, c in out.items() if c != 0}


# ---------------------------------------------------------------------------
# q(n)
# ---------------------------------------------------------------------------

def _build_q(n):
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            gens.append(gen_e(i, j))
            gens.append(gen_f(i, j))
    parity = {g: (EVEN if g.family == "e" else ODD) for g in gens}
    dynkin = {g: 2 * (g.j - g.i) for g in gens}
    weight = dict(dynkin)

    def delta(a, b):
        return 1 if a == b else 0

    brackets = {}
    for a in gens:
        for b in gens:
            i, j, k, l = a.i, a.j, b.i, b.j
            combo = {}
            if a.family == "e" and b.family == "e":
                terms = ((gen_e(i, l), delta(j, k)), (gen_e(k, j), -delta(i, l)))
            elif a.family == "e" and b.family == "f":
                terms = ((gen_f(i, l), delta(j, k)), (gen_f(k, j), -delta(i, l)))
            elif a.family == "f" and b.family == "e":
                terms = ((gen_f(i, l), delta(j, k)), (gen_f(k, j), -delta(i, l)))
            else:
                terms = ((gen_e(i, l), delta(j, k)), (gen_e(k, j), delta(i, l)))
            for g, c in terms:
                if c:
                    combo[g] = combo.get(g, Fraction(0)) + c
            combo = {g: c for g, c in combo.items() if c != 0}
            if combo:
                brackets[(a, b)] = combo
    return AlgebraSpec("q", n, gens, parity, dynkin, weight, brackets)


def z_combination(spec):
    """The central element z = sum e(i,i) of q(n), as a generator combination."""
    if spec.name != "q":
        raise ValueError("z is specific to the q preset")
    return {gen_e(i, i): Fraction(1) for i in range(1, spec.n + 1)}


def nilpotent_power(spec, k):
    """k-th power of the principal even nilpotent, sum_{i<=n-k} e(i,i+k).

    k = 0 gives z; together with the odd family these combinations span the
    annihilator of the regular odd character.
    """
    if spec.name != "q":
        raise ValueError("specific to the q preset")
    if not 0 <= k <= spec.n - 1:
        raise ValueError(f"power {k} out of range for n={spec.n}")
    return {gen_e(i, i + k): Fraction(1) for i in range(1, spec.n - k + 1)}


def odd_annihilator(spec, k):
    """The odd combination sum_i (-1)^(i+k-1) f(i,i+k), for 0 <= k <= n-1."""
    if spec.name != "q":
        raise ValueError("specific to the q preset")
    if not 0 <= k <= spec.n - 1:
        raise ValueError(f"index {k} out of range for n={spec.n}")
    return {gen_f(i, i + k): Fraction(-1) ** (i + k - 1)
            for i in range(1, spec.n - k + 1)}


# ---------------------------------------------------------------------------
# Fixed presets from 3x3 supermatrix realizations.
#
# Matrices live in gl(1|2): row/column 1 is even, rows/columns 2 and 3 are
# odd, so E_rc has parity p(r)+p(c) with p(1)=0, p(2)=p(3)=1.
# ---------------------------------------------------------------------------

_GL12_PARITY = (0, 1, 1)


def _mat(entries):
    rows = [[Fraction(0)] * 3 for _ in range(3)]
    for (r, c), v in entries.items():
        rows[r - 1][c - 1] = Fraction(v)
    return tuple(tuple(row) for row in rows)


def _mat_mul(a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(3))
                       for c in range(3)) for r in range(3))


def _mat_combine(sa, a, sb, b):
    return tuple(tuple(sa * a[r][c] + sb * b[r][c] for c in range(3))
                 for r in range(3))


def _mat_parity(a):
    par = None
    for r in range(3):
        for c in range(3):
            if a[r][c] != 0:
                p = (_GL12_PARITY[r] + _GL12_PARITY[c]) % 2
                if par is None:
                    par = p
                elif par != p:
                    raise ValueError("matrix is not parity homogeneous")
    if par is None:
        raise ValueError("zero matrix has no parity")
    return par


def _supertrace(a):
    return a[0][0] - a[1][1] - a[2][2]


def _mat_bracket(a, b):
    sign = Fraction(-1) ** (_mat_parity(a) * _mat_parity(b))
    return _mat_combine(Fraction(1), _mat_mul(a, b), -sign, _mat_mul(b, a))


def _mat_vector(a):
    return {(r, c): a[r][c] for r in range(3) for c in range(3) if a[r][c] != 0}


def _build_from_matrices(name, named_matrices, dynkin, trace_scale):
    """Assemble an AlgebraSpec from named 3x3 supermatrices.

    Brackets are supercommutators of the matrices expressed back in the given
    basis; the invariant form is trace_scale * supertrace(ab).
    """
    gens = [GeneratorId(nm) for nm, _ in named_matrices]
    mats = {GeneratorId(nm): m for nm, m in named_matrices}
    parity = {g: _mat_parity(mats[g]) for g in gens}
    dyn = {GeneratorId(nm): d for nm, d in dynkin.items()}
    weight = dict(dyn)
    basis_vectors = [_mat_vector(mats[g]) for g in gens]

    brackets = {}
    for a in gens:
        for b in gens:
            lie = _mat_bracket(mats[a], mats[b])
            vec = _mat_vector(lie)
            if not vec:
                continue
            coeffs = solve_in_span(basis_vectors, vec)
            if coeffs is None:
                raise ValueError(f"[{a!r},{b!r}] falls outside the basis span")
            combo = {g: c for g, c in zip(gens, coeffs) if c != 0}
            if combo:
                brackets[(a, b)] = combo

    form = {}
    for a in gens:
        for b in gens:
            v = trace_scale * _supertrace(_mat_mul(mats[a], mats[b]))
            if v != 0:
                form[(a, b)] = v
    return AlgebraSpec(name, 0, gens, parity, dyn, weight, brackets, form=form)


def _build_osp12():
    named = [
        ("X", _mat({(2, 3): 1})),
        ("Y", _mat({(3, 2): 1})),
        ("H", _mat({(2, 2): 1, (3, 3): -1})),
        ("theta", _mat({(1, 2): 1, (3, 1): -1})),
        ("r", _mat({(1, 3): 1, (2, 1): 1})),
    ]
    dynkin = {"X": 2, "Y": -2, "H": 0, "theta": -1, "r": 1}
    return _build_from_matrices("osp12", named, dynkin, Fraction(1, 2))


def _build_sl12():
    named = [
        ("h1", _mat({(1, 1): 1, (3, 3): 1})),
        ("h2", _mat({(1, 1): 1, (2, 2): 1})),
        ("e", _mat({(2, 3): 1})),
        ("f", _mat({(3, 2): 1})),
        ("ep", _mat({(1, 3): 1})),
        ("em", _mat({(1, 2): 1})),
        ("fp", _mat({(2, 1): 1})),
        ("fm", _mat({(3, 1): 1})),
    ]
    dynkin = {"h1": 0, "h2": 0, "e": 2, "f": -2,
              "ep": 1, "em": -1, "fp": 1, "fm": -1}
    # Killing normalization: str(ad x ad y) = -2 str(xy) here, and the
    # quadratic Casimir is taken with respect to it.
    return _build_from_matrices("sl12", named, dynkin, Fraction(-2))


def build_preset(name, n=None):
    """Construct one of the shipped presets.

    ``q`` requires n >= 1; the fixed presets reject an explicit n.
    """
    if name == "q":
        if n is None:
            raise ValueError("preset q requires n")
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        return _build_q(n)
    if name in ("osp12", "sl12"):
        if n is not None:
            raise ValueError(f"preset {name} is fixed; do not pass n")
        return _build_osp12() if name == "osp12" else _build_sl12()
    raise ValueError(f"unknown preset {name!r}; choose one of {PRESETS}")
