"""Sparse multivariate integer polynomials, monomial maps and polynomial matrices.

Variables are arbitrary hashable names held in a fixed ordered tuple; a
polynomial stores ``{exponent_tuple: coefficient}`` with no zero coefficients.
"""

from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Exps = Tuple[int, ...]


class SparsePoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Exps, int]] = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nvars: int, c: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "SparsePoly":
        return cls(len(exps), {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == SparsePoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self.terms!r})"

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: Dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def divisible_by_monomial(self, exps: Sequence[int]) -> bool:
        return all(all(a >= b for a, b in zip(e, exps)) for e in self.terms)

    def as_signed_monomial(self) -> Optional[Tuple[int, Exps]]:
        """``(coeff, exps)`` if the polynomial is a single term, else None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        return c, e

    def set_zero(self, mask: Sequence[bool]) -> "SparsePoly":
        """Evaluate the variables flagged in ``mask`` at 0."""
        return SparsePoly(self.nvars, {e: c for e, c in self.terms.items()
                                       if not any(m and x for m, x in zip(mask, e))})

    def evaluate(self, values: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= v ** k
            total += t
        return total


class MonomialMap:
    """Substitution ``x_v -> sign * monomial``; unlisted variables are fixed.

    ``(A @ B)`` is the composite map "first B, then A" on points, i.e. each
    variable's image under A gets B substituted into it.
    """

    def __init__(self, variables: Sequence[Hashable],
                 images: Optional[Dict[Hashable, Tuple[int, Exps]]] = None):
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.images: Dict[Hashable, Tuple[int, Exps]] = {}
        for v, (s, e) in (images or {}).items():
            if (s, tuple(e)) != (1, self._unit(v)):
                self.images[v] = (s, tuple(e))

    def _unit(self, v) -> Exps:
        e = [0] * len(self.variables)
        e[self.index[v]] = 1
        return tuple(e)

    def image(self, v) -> Tuple[int, Exps]:
        return self.images.get(v, (1, self._unit(v)))

    def is_identity(self) -> bool:
        return not self.images

    def __eq__(self, other):
        return (isinstance(other, MonomialMap) and self.variables == other.variables
                and self.images == other.images)

    def __repr__(self):
        return f"MonomialMap({self.images!r})"

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        if self.variables != other.variables:
            raise ValueError("maps on different variable sets")
        images = {}
        for v in self.variables:
            s, e = self.image(v)
            exps = [0] * len(self.variables)
            for w, k in zip(self.variables, e):
                if k:
                    s2, e2 = other.image(w)
                    s *= s2 ** k
                    for i, x in enumerate(e2):
                        exps[i] += k * x
            images[v] = (s, tuple(exps))
        return MonomialMap(self.variables, images)

    def apply(self, p: SparsePoly) -> SparsePoly:
        out: Dict[Exps, int] = {}
        for e, c in p.terms.items():
            exps = [0] * len(self.variables)
            for v, k in zip(self.variables, e):
                if k:
                    s, e2 = self.image(v)
                    c *= s ** k
                    for i, x in enumerate(e2):
                        exps[i] += k * x
            t = tuple(exps)
            out[t] = out.get(t, 0) + c
        return SparsePoly(len(self.variables), out)


class PolyMatrix:
    """Sparse rectangular matrix of :class:`SparsePoly` with labelled rows/columns."""

    def __init__(self, row_labels: Sequence[Hashable], col_labels: Sequence[Hashable],
                 nvars: int, entries: Optional[Dict[Tuple[int, int], SparsePoly]] = None):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.nvars = nvars
        self.entries = {k: p for k, p in (entries or {}).items() if not p.is_zero()}
        self._memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], SparsePoly] = {}

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def __getitem__(self, rc: Tuple[int, int]) -> SparsePoly:
        return self.entries.get(rc, SparsePoly(self.nvars))

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.row_labels, self.col_labels, self.nvars,
                          {k: fn(p) for k, p in self.entries.items()})

    def to_lists(self) -> List[List[SparsePoly]]:
        r, c = self.shape
        return [[self[i, j] for j in range(c)] for i in range(r)]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> SparsePoly:
        """Determinant of the submatrix on ``rows`` x ``cols`` (index order kept).

        Laplace expansion along the sparsest column, memoised across calls.
        """
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("minor needs as many rows as columns")
        return self._det(rows, cols)

    def _det(self, rows, cols):
        if not rows:
            return SparsePoly.const(self.nvars, 1)
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        best = None
        for ci, c in enumerate(cols):
            nz = [ri for ri, r in enumerate(rows) if (r, c) in self.entries]
            if best is None or len(nz) < len(best[1]):
                best = (ci, nz)
                if not nz:
                    break
        ci, nz = best
        total = SparsePoly(self.nvars)
        c = cols[ci]
        sub_cols = cols[:ci] + cols[ci + 1:]
        for ri in nz:
            sub = self._det(rows[:ri] + rows[ri + 1:], sub_cols)
            if sub.is_zero():
                continue
            term = self.entries[rows[ri], c] * sub
            total = total - term if (ri + ci) % 2 else total + term
        self._memo[key] = total
        return total

    def det(self) -> SparsePoly:
        r, c = self.shape
        return self.minor(range(r), range(c))

    def minors(self, size: int) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...], SparsePoly]]:
        r, c = self.shape
        for rows in combinations(range(r), size):
            for cols in combinations(range(c), size):
                yield rows, cols, self._det(rows, cols)
