"""Exact integer linear algebra: kernel lattices and ranks."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Z-basis of ``{x in Z^ncols : A x = 0}``.

    Unimodular row operations on ``[A^T | I]`` bring ``A^T`` to echelon form
    without fractions; the identity part of the rows that vanish is a basis
    of the kernel lattice.
    """
    m = len(A)
    rows = [[A[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(ncols)] for j in range(ncols)]
    r = 0
    for col in range(m):
        while True:
            nz = [i for i in range(r, ncols) if rows[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r][col]
            done = True
            for i in range(r + 1, ncols):
                if rows[i][col]:
                    q = rows[i][col] // piv
                    if q:
                        rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col]:
                        done = False
            if done:
                r += 1
                break
        if r == ncols:
            break
    basis = [row[m:] for row in rows[r:]]
    return [_normalize(v) for v in lll_reduce(basis)] if len(basis) <= 40 else basis


def _normalize(v: List[int]) -> List[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    first = next((x for x in v if x), 0)
    return [-x for x in v] if first < 0 else v


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(basis: List[List[int]], delta: Fraction = Fraction(3, 4)) -> List[List[int]]:
    """Textbook LLL with exact rational Gram-Schmidt; keeps the lattice."""
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def gram_schmidt():
        bstar: List[List[Fraction]] = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms: List[Fraction] = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = _dot(b[i], bstar[j]) / norms[j] if norms[j] else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(_dot(v, v))
        return mu, norms

    mu, norms = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return b


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss-style) elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][col]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r][col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                work[i] = [piv * a - f * b for a, b in zip(work[i], work[r])]
                g = 0
                for x in work[i]:
                    g = gcd(g, x)
                if g > 1:
                    work[i] = [x // g for x in work[i]]
        r += 1
        if r == len(work):
            break
    return r


def solve_rational(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
    """One solution of ``A x = b`` over Q, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x
