"""Exact arithmetic in the Cartan Clifford algebra and its polynomial ring.

U(h) for q(n) is a Clifford algebra over Q[x_1..x_n]: the x_i are central,
xi_i xi_j = -xi_j xi_i for i != j, and xi_i^2 = x_i.  A CartanElement maps
(xi index set as a bitmask, x exponent tuple) to a rational coefficient;
xi sets are kept sorted ascending with the sign normalized away.

Plain commutative polynomials are dicts exponent-tuple -> Fraction, as used
for the skew operator matrix, characteristic polynomials and the symmetry /
divisibility tests.
"""

from __future__ import annotations

from fractions import Fraction

# Polynomial in n commuting variables: exponent tuple -> Fraction, no zeros.
Poly = dict


def poly_zero():
    return {}


def poly_const(n_vars, value):
    c = Fraction(value)
    return {(0,) * n_vars: c} if c else {}


def poly_var(n_vars, idx):
    exp = [0] * n_vars
    exp[idx] = 1
    return {tuple(exp): Fraction(1)}


def poly_add(a, b):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, Fraction(0)) + c
        if v:
            out[m] = v
        elif m in out:
            del out[m]
    return out


def poly_sub(a, b):
    return poly_add(a, {m: -c for m, c in b.items()})


def poly_scale(a, s):
    s = Fraction(s)
    if s == 0:
        return {}
    return {m: s * c for m, c in a.items()}


def poly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, Fraction(0)) + ca * cb
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


def poly_derivative(p, idx):
    out = {}
    for m, c in p.items():
        e = m[idx]
        if e:
            m2 = m[:idx] + (e - 1,) + m[idx + 1:]
            out[m2] = out.get(m2, Fraction(0)) + c * e
    return {m: c for m, c in out.items() if c != 0}


def poly_swap_vars(p, i, j):
    out = {}
    for m, c in p.items():
        lst = list(m)
        lst[i], lst[j] = lst[j], lst[i]
        m2 = tuple(lst)
        out[m2] = out.get(m2, Fraction(0)) + c
    return out


def poly_sub_negated(p, i, j):
    """Substitute x_i -> -x_j; the result is zero iff (x_i + x_j) divides p."""
    out = {}
    for m, c in p.items():
        e = m[i]
        lst = list(m)
        lst[i] = 0
        lst[j] += e
        m2 = tuple(lst)
        v = out.get(m2, Fraction(0)) + c * Fraction(-1) ** e
        if v:
            out[m2] = v
        elif m2 in out:
            del out[m2]
    return out


def poly_render(p, names):
    """Deterministic rendering with monomials in degrevlex order."""
    if not p:
        return "0"

    def key(m):
        return (sum(m), tuple(-e for e in reversed(m)))

    parts = []
    for m in sorted(p, key=key, reverse=True):
        c = p[m]
        factors = []
        for idx, e in enumerate(m):
            if e == 1:
                factors.append(names[idx])
            elif e > 1:
                factors.append(f"{names[idx]}^{e}")
        body = "*".join(factors)
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        parts.append(("-" if c < 0 else "+", text))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# The Clifford algebra over Q[x_1..x_n]
# ---------------------------------------------------------------------------

def _xi_insert(mask, j):
    """Multiply the sorted xi-word ``mask`` on the right by xi_j.

    Returns (new mask, sign, x_factor_index or None); xi_j^2 turns into the
    central factor x_j.
    """
    higher = bin(mask >> (j + 1)).count("1")
    sign = -1 if higher % 2 else 1
    bit = 1 << j
    if mask & bit:
        return mask & ~bit, sign, j
    return mask | bit, sign, None


class CartanElement:
    """Element of the Cartan Clifford algebra for a fixed n."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = {k: c for k, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def scalar(cls, n, c):
        c = Fraction(c)
        return cls(n, {(0, (0,) * n): c} if c else {})

    @classmethod
    def one(cls, n):
        return cls.scalar(n, 1)

    @classmethod
    def x_var(cls, n, i):
        """x_i for 1 <= i <= n."""
        exp = [0] * n
        exp[i - 1] = 1
        return cls(n, {(0, tuple(exp)): Fraction(1)})

    @classmethod
    def xi_var(cls, n, i):
        """xi_i for 1 <= i <= n."""
        return cls(n, {(1 << (i - 1), (0,) * n): Fraction(1)})

    @classmethod
    def from_poly(cls, n, poly):
        return cls(n, {(0, m): c for m, c in poly.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CartanElement.scalar(self.n, other)
        if not isinstance(other, CartanElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"<CartanElement {self}>"

    def __str__(self):
        return render_cartan(self)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("mismatched variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CartanElement.scalar(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, Fraction(0)) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return CartanElement(self.n, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CartanElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CartanElement.scalar(self.n, other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return CartanElement.zero(self.n)
        return CartanElement(self.n, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return h_multiply(self, other)

    def xi_degree_parts(self):
        parts = {}
        for (mask, xexp), c in self.terms.items():
            d = bin(mask).count("1")
            parts.setdefault(d, {})[(mask, xexp)] = c
        return {d: CartanElement(self.n, t) for d, t in parts.items()}

    def even_part(self):
        out = {k: c for k, c in self.terms.items()
               if bin(k[0]).count("1") % 2 == 0}
        return CartanElement(self.n, out)

    def odd_part(self):
        out = {k: c for k, c in self.terms.items()
               if bin(k[0]).count("1") % 2 == 1}
        return CartanElement(self.n, out)

    def parity(self):
        seen = {bin(mask).count("1") % 2 for mask, _ in self.terms}
        if not seen:
            return None
        if len(seen) > 1:
            raise ValueError("element is not parity homogeneous")
        return seen.pop()

    def is_xi_free(self):
        return all(mask == 0 for mask, _ in self.terms)

    def poly_part(self):
        """The xi-free component as a plain polynomial."""
        return {xexp: c for (mask, xexp), c in self.terms.items() if mask == 0}

    def xi_linear_coefficients(self):
        """Coefficient polynomials (phi_1..phi_n) of a xi-linear element.

        Raises ValueError when any term has xi-degree != 1.
        """
        coeffs = [dict() for _ in range(self.n)]
        for (mask, xexp), c in self.terms.items():
            if bin(mask).count("1") != 1:
                raise ValueError("element has a non-linear xi part")
            j = mask.bit_length() - 1
            coeffs[j][xexp] = c
        return coeffs


def h_multiply(a, b):
    """Exact product under x_i central, xi_i xi_j = -xi_j xi_i, xi_i^2 = x_i."""
    a._check(b)
    n = a.n
    out = {}
    for (ma, xa), ca in a.terms.items():
        for (mb, xb), cb in b.terms.items():
            mask = ma
            coeff = ca * cb
            xexp = [x + y for x, y in zip(xa, xb)]
            j = 0
            rem = mb
            while rem:
                if rem & 1:
                    mask, sign, extra = _xi_insert(mask, j)
                    if sign < 0:
                        coeff = -coeff
                    if extra is not None:
                        xexp[extra] += 1
                rem >>= 1
                j += 1
            key = (mask, tuple(xexp))
            v = out.get(key, Fraction(0)) + coeff
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return CartanElement(n, out)


def h_commutator(a, b):
    """Supercommutator in U(h), parity = xi-degree mod 2 per component."""
    a._check(b)
    out = CartanElement.zero(a.n)
    for pa, xa in ((0, a.even_part()), (1, a.odd_part())):
        if xa.is_zero():
            continue
        for pb, xb in ((0, b.even_part()), (1, b.odd_part())):
            if xb.is_zero():
                continue
            sign = Fraction(-1) ** (pa * pb)
            out = out + h_multiply(xa, xb) - h_multiply(xb, xa).scale(sign)
    return out


def render_cartan(elem):
    """Deterministic rendering: xi blocks ordered by degree then mask, x parts
    in degrevlex order."""
    if not elem.terms:
        return "0"
    n = elem.n
    names = [f"x{i}" for i in range(1, n + 1)]

    def term_key(item):
        (mask, xexp), _ = item
        deg = sum(xexp) + bin(mask).count("1")
        return (deg, tuple(-e for e in reversed(xexp)), mask)

    parts = []
    for (mask, xexp), c in sorted(elem.terms.items(), key=term_key,
                                  reverse=True):
        factors = []
        for idx, e in enumerate(xexp):
            if e == 1:
                factors.append(names[idx])
            elif e > 1:
                factors.append(f"{names[idx]}^{e}")
        for i in range(n):
            if mask & (1 << i):
                factors.append(f"xi{i + 1}")
        body = "*".join(factors)
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        parts.append(("-" if c < 0 else "+", text))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# The skew operator, characteristic polynomials, symmetric functions
# ---------------------------------------------------------------------------

def t_matrix(n):
    """The n x n matrix with zero diagonal, x_j above it and -x_j below it.

    Entry [i][j] is the coefficient of xi_{i+1} in the image of xi_{j+1}
    under the adjoint action of the quadratic element omega.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(poly_zero())
            elif i < j:
                row.append(poly_var(n, j))
            else:
                row.append(poly_scale(poly_var(n, j), -1))
        rows.append(row)
    return rows


def elementary_symmetric(r, n):
    """sigma_r = sum over i_1 < ... < i_r of x_{i_1}...x_{i_r}."""
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range for n={n}")
    out = {}
    from itertools import combinations

    for subset in combinations(range(n), r):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        out[tuple(exp)] = Fraction(1)
    return out


def _lift_poly(p, extra):
    """Append ``extra`` zero exponents to every monomial."""
    return {m + (0,) * extra: c for m, c in p.items()}


def poly_det(matrix):
    """Determinant of a square polynomial matrix.

    Laplace expansion along the first remaining column with memoization on
    the set of remaining rows; division-free and exact.
    """
    k = len(matrix)
    for row in matrix:
        if len(row) != k:
            raise ValueError("matrix is not square")
    if k == 0:
        return poly_const(0, 1)
    n_vars = None
    for row in matrix:
        for p in row:
            for m in p:
                n_vars = len(m)
                break
            if n_vars is not None:
                break
        if n_vars is not None:
            break
    if n_vars is None:
        return {}
    memo = {}
    full = (1 << k) - 1

    def minor(rows_mask):
        if rows_mask == 0:
            return poly_const(n_vars, 1)
        hit = memo.get(rows_mask)
        if hit is not None:
            return hit
        col = k - bin(rows_mask).count("1")
        out = {}
        sign = 1
        for i in range(k):
            if not rows_mask & (1 << i):
                continue
            entry = matrix[i][col]
            if entry:
                sub = minor(rows_mask & ~(1 << i))
                term = poly_mul(entry, sub)
                if sign < 0:
                    term = poly_scale(term, -1)
                out = poly_add(out, term)
            sign = -sign
        memo[rows_mask] = out
        return out

    return minor(full)


def char_poly(matrix, n):
    """det(lambda*Id - M) for an n x n matrix over Q[x_1..x_n].

    Returned as a polynomial in n+1 variables with lambda last.
    """
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square of size n")
    lam = poly_var(n + 1, n)
    lifted = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = poly_scale(_lift_poly(matrix[i][j], 1), -1)
            if i == j:
                entry = poly_add(entry, lam)
            row.append(entry)
        lifted.append(row)
    return poly_det(lifted)


def char_poly_expected(n):
    """lambda^n + sigma_2 lambda^(n-2) + sigma_4 lambda^(n-4) + ...

    in n+1 variables with lambda last."""
    out = {}
    for r in range(0, n + 1, 2):
        sig = elementary_symmetric(r, n)
        for m, c in sig.items():
            out[m + (n - r,)] = c
    return out


def supercent_check(p):
    """Symmetry plus the shifted-derivative divisibility condition.

    True iff p is symmetric in the x_i and, for every i < j, the difference
    of partials d/dx_i - d/dx_j is divisible by (x_i + x_j).
    """
    if isinstance(p, CartanElement):
        if not p.is_xi_free():
            raise ValueError("supercent check requires a xi-free element")
        n = p.n
        p = p.poly_part()
    else:
        n = len(next(iter(p), ()))
        if not p:
            return True
    for i in range(n):
        for j in range(i + 1, n):
            if poly_swap_vars(p, i, j) != p:
                return False
    for i in range(n):
        for j in range(i + 1, n):
            diff = poly_sub(poly_derivative(p, i), poly_derivative(p, j))
            if poly_sub_negated(diff, i, j):
                return False
    return True


def independence_det(n, theta_images):
    """Determinant of the xi-coefficient matrix of n xi-linear elements.

    Row k holds the coefficient polynomials of theta_images[k]; a nonzero
    determinant witnesses independence over the polynomial ring.
    """
    if len(theta_images) != n:
        raise ValueError(f"expected {n} images, got {len(theta_images)}")
    rows = [img.xi_linear_coefficients() for img in theta_images]
    return poly_det(rows)


def omega_quadratic(n):
    """The quadratic Cartan element omega = (sum x_i^2 / 2
    + sum_{i<j} xi_i xi_j + (sum x_i)^2 / 2 - sum x_i) / 2."""
    xs = [CartanElement.x_var(n, i) for i in range(1, n + 1)]
    xis = [CartanElement.xi_var(n, i) for i in range(1, n + 1)]
    total = CartanElement.zero(n)
    for x in xs:
        total = total + h_multiply(x, x).scale(Fraction(1, 2))
    for i in range(n):
        for j in range(i + 1, n):
            total = total + h_multiply(xis[i], xis[j])
    zsum = CartanElement.zero(n)
    for x in xs:
        zsum = zsum + x
    total = total + h_multiply(zsum, zsum).scale(Fraction(1, 2)) - zsum
    return total.scale(Fraction(1, 2))


def ad_omega_matrix(n):
    """Matrix of ad(omega) on the span of xi_1..xi_n.

    Column j holds the xi-coefficients of [omega, xi_{j+1}]; raises if any
    image fails to be xi-linear.
    """
    omega = omega_quadratic(n)
    cols = []
    for j in range(1, n + 1):
        image = h_commutator(omega, CartanElement.xi_var(n, j))
        cols.append(image.xi_linear_coefficients())
    return [[cols[j][i] for j in range(n)] for i in range(n)]
