"""Small exact linear algebra helpers over the rationals.

Everything here works on plain Python lists / dicts with Fraction entries.
No floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def invert_matrix(rows):
    """Invert a square matrix given as a list of Fraction rows.

    Raises ValueError if the matrix is singular.
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_in_span(basis_vectors, target):
    """Write ``target`` as a linear combination of ``basis_vectors``.

    Vectors are dicts mapping arbitrary hashable keys to Fractions.  Returns
    the list of coefficients, or None if target is outside the span.
    """
    keys = sorted({k for v in basis_vectors for k in v} | set(target),
                  key=repr)
    m = len(basis_vectors)
    rows = [[v.get(k, Fraction(0)) for v in basis_vectors] + [target.get(k, Fraction(0))]
            for k in keys]
    # Gaussian elimination on the (len(keys) x (m+1)) system.
    coeffs = [Fraction(0)] * m
    pivot_rows = []
    col = 0
    r = 0
    pivots = {}
    for col in range(m):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
    for i in range(r, len(rows)):
        if rows[i][m] != 0:
            return None
    for col, row in pivots.items():
        coeffs[col] = rows[row][m]
    return coeffs


def rank_of_rows(rows):
    """Exact rank of a family of sparse vectors (dicts key -> Fraction)."""
    work = [dict(row) for row in rows if row]
    rank = 0
    while work:
        row = work.pop()
        row = {k: c for k, c in row.items() if c != 0}
        if not row:
            continue
        rank += 1
        key = next(iter(row))
        inv = Fraction(1) / row[key]
        row = {k: c * inv for k, c in row.items()}
        reduced = []
        for other in work:
            c = other.get(key, Fraction(0))
            if c != 0:
                other = {k: other.get(k, Fraction(0)) - c * row.get(k, Fraction(0))
                         for k in set(other) | set(row)}
            reduced.append(other)
        work = reduced
    return rank
