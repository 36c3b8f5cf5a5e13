"""Tiny exact fields for subspace enumeration: Q, prime fields, and F_4.

Finite-field elements are ints ``0..q-1``.  For F_4 the element ``2`` is a
root ``w`` of ``w^2 + w + 1`` and ``3`` is ``w + 1``; addition is XOR.
"""

from fractions import Fraction
from typing import List, Sequence


class FiniteField:
    def __init__(self, q: int):
        if q not in (2, 3, 4) and not _is_prime(q):
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        self.elements = list(range(q))
        if q == 4:
            self._add = [[a ^ b for b in range(4)] for a in range(4)]
            # multiply as polynomials over F_2 modulo w^2 + w + 1
            def mul(a, b):
                r = 0
                for k in range(2):
                    if b >> k & 1:
                        r ^= a << k
                if r & 4:
                    r ^= 0b111
                return r
            self._mul = [[mul(a, b) for b in range(4)] for a in range(4)]
        else:
            self._add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        self._inv = [None] + [next(b for b in range(q) if self._mul[a][b] == 1) for a in range(1, q)]

    def __repr__(self):
        return f"F_{self.q}"

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def rref(self, rows: Sequence[Sequence[int]]):
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        m = [list(r) for r in rows]
        if not m:
            return [], []
        r = 0
        pivots = []
        for c in range(len(m[0])):
            piv = next((i for i in range(r, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = self.inv(m[r][c])
            m[r] = [self.mul(inv, x) for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    a = m[i][c]
                    m[i] = [self.sub(x, self.mul(a, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return [tuple(x) for x in m[:r]], pivots

    def rank(self, rows: Sequence[Sequence[int]]) -> int:
        return len(self.rref(rows)[1])


class Rationals:
    q = None

    def __repr__(self):
        return "Q"

    def rank(self, rows: Sequence[Sequence]) -> int:
        from .linalg import rank
        return rank([[Fraction(x) for x in r] for r in rows])


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def get_field(q=None):
    return Rationals() if q is None else FiniteField(q)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def all_vectors(n: int, q: int) -> List[tuple]:
    from itertools import product
    return list(product(range(q), repeat=n))
