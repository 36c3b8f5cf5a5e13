"""Exact integer and rational linear algebra on plain Python lists.

Matrices are lists of rows.  Entries are ``int`` or ``fractions.Fraction``;
nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def primitive(v: Sequence[int]) -> Tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries.

    The zero vector is returned unchanged.
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def integerize(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer one."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            m[i] = [(p * m[i][j] - a * m[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank; rational entries are cleared of denominators row by row."""
    return bareiss_rank([integerize(r) if any(isinstance(x, Fraction) for x in r)
                         else list(r) for r in rows])


def rref(rows: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over the rationals, with pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel(rows: Sequence[Sequence[int]], ncols: int) -> List[Tuple[int, ...]]:
    """Integer basis (primitive vectors) of the rational null space."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(integerize(v))
    return basis


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_invariants(rows: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Standard elimination: bring the smallest nonzero entry to the corner,
    clear its row and column by integer division, and restart whenever a
    remainder survives or the corner fails to divide the rest.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    factors = []
    t = 0
    while t < min(nr, nc):
        nz = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if m[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = m[i][t] // p
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                            if m[i][j] % p), None)
                if bad is None:
                    break
                # fold the offending row in so the next pass shrinks the pivot
                m[t] = [a + b for a, b in zip(m[t], m[bad[0]])]
                continue
            nz = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc)
                  if m[i][j] and (i == t or j == t)]
            _, pi, pj = min(nz)
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        factors.append(abs(m[t][t]))
        t += 1
    return factors


def lattice_index(rays: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by ``rays`` in its saturation.

    Product of the Smith invariant factors; 1 exactly when the rays extend to
    a lattice basis.
    """
    out = 1
    for f in smith_invariants([list(primitive(r)) for r in rays]):
        out *= f
    return out
