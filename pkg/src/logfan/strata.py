"""Rank stratification of the Grassmannian of n-planes in V_1 + V_2.

A point is an n-dimensional subspace F of k^(2n), given by n spanning rows;
columns ``0..n-1`` are the V_1 coordinates and ``n..2n-1`` the V_2 ones.
Its orbit invariant under GL(V_1) x GL(V_2) is ``(dim F∩V_1, dim F∩V_2)``.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import OutOfRange, RankDeficient, TooLarge
from .fields import FiniteField, gaussian_binomial, get_field, gl_order

CENSUS_CAP = 10 ** 6

#: Z_d is the zero locus of the (n+d)-th exterior power of p:
#: d1 + d2 >= n - d + 1.  The "displayed" variant drops the +1.
CONVENTIONS = ("rank", "displayed")


@dataclass(frozen=True)
class SubspaceBasis:
    rows: Tuple[Tuple, ...]
    q: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        n = len(self.rows)
        if any(len(r) != 2 * n for r in self.rows):
            raise ValueError(f"need {n} rows of length {2 * n}")
        if get_field(self.q).rank(self.rows) != n:
            raise RankDeficient("rows are linearly dependent")

    @property
    def n(self) -> int:
        return len(self.rows)

    def swapped(self) -> "SubspaceBasis":
        """The same plane with the V_1 and V_2 blocks exchanged."""
        n = self.n
        return SubspaceBasis(tuple(r[n:] + r[:n] for r in self.rows), self.q)


@dataclass(frozen=True)
class OrbitInvariant:
    d1: int
    d2: int
    rank_sum: int = 0

    def key(self) -> str:
        return f"{self.d1},{self.d2}"


def intersection_dims(F: SubspaceBasis) -> OrbitInvariant:
    """``d1 = n - rank(p_2|F)``, ``d2 = n - rank(p_1|F)``."""
    k = get_field(F.q)
    n = F.n
    r1 = k.rank([r[:n] for r in F.rows])
    r2 = k.rank([r[n:] for r in F.rows])
    return OrbitInvariant(n - r2, n - r1, r1 + r2)


def stratum_threshold(n: int, d: int, convention: str = "rank") -> int:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    return n - d + 1 if convention == "rank" else n - d


def in_stratum(F: SubspaceBasis, d: int, convention: str = "rank") -> bool:
    if not 0 <= d <= F.n:
        raise OutOfRange(f"d={d} outside 0..{F.n}")
    inv = intersection_dims(F)
    return inv.d1 + inv.d2 >= stratum_threshold(F.n, d, convention)


def is_graph_of_isomorphism(F: SubspaceBasis) -> bool:
    """F is the graph of an isomorphism V_2 -> V_1 iff it meets neither factor."""
    inv = intersection_dims(F)
    return inv.d1 == 0 and inv.d2 == 0


def enumerate_subspaces(ambient: int, dim: int, q: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every ``dim``-subspace of F_q^ambient as its reduced row echelon basis.

    One block per pivot-column set; free entries sit right of each pivot in
    non-pivot columns.
    """
    for pivots in combinations(range(ambient), dim):
        yield from _rref_block(pivots, ambient, q)


def _rref_block(pivots, ncols, q):
    free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, ncols) if c not in pivots]
    for values in product(range(q), repeat=len(free)):
        rows = [[0] * ncols for _ in pivots]
        for i, p in enumerate(pivots):
            rows[i][p] = 1
        for (i, c), v in zip(free, values):
            rows[i][c] = v
        yield tuple(tuple(r) for r in rows)


def grassmannian(n: int, q: int) -> Iterator[SubspaceBasis]:
    """All n-planes in F_q^(2n)."""
    for rows in enumerate_subspaces(2 * n, n, q):
        yield SubspaceBasis(rows, q)


@dataclass
class CensusTable:
    n: int
    q: int
    total: int = 0
    by_invariant: Dict[Tuple[int, int], int] = field(default_factory=dict)
    by_stratum: Dict[str, int] = field(default_factory=dict)
    by_stratum_displayed: Dict[str, int] = field(default_factory=dict)
    expected_total: int = 0

    @property
    def omega(self) -> int:
        return self.by_stratum.get("Omega", 0)

    @property
    def total_ok(self) -> bool:
        return self.total == self.expected_total

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "total": self.total,
            "gaussian_binomial": self.expected_total,
            "by_invariant": {f"{a},{b}": c for (a, b), c in sorted(self.by_invariant.items(), reverse=True)},
            "by_stratum": dict(self.by_stratum),
            "by_stratum_displayed": dict(self.by_stratum_displayed),
        }


def strata_counts(n: int, by_invariant: Dict[Tuple[int, int], int], convention: str) -> Dict[str, int]:
    out = {}
    for d in range(n + 1):
        t = stratum_threshold(n, d, convention)
        out[f"Z{d}"] = sum(c for (a, b), c in by_invariant.items() if a + b >= t)
    out["Omega"] = sum(by_invariant.values()) - out[f"Z{n}"]
    return out


def census(n: int, q: int) -> CensusTable:
    """Count n-planes of F_q^(2n) by orbit invariant and by stratum."""
    if q not in (2, 3, 4):
        raise OutOfRange(f"q={q} is not a prime power <= 4")
    if n < 1:
        raise OutOfRange(f"n={n} must be positive")
    expected = gaussian_binomial(2 * n, n, q)
    if expected > CENSUS_CAP:
        raise TooLarge(f"{expected} subspaces exceeds the cap of {CENSUS_CAP}")
    k = FiniteField(q)
    tally: Counter = Counter()
    for rows in enumerate_subspaces(2 * n, n, q):
        r1 = k.rank([r[:n] for r in rows])
        r2 = k.rank([r[n:] for r in rows])
        tally[(n - r2, n - r1)] += 1
    by_inv = dict(sorted(tally.items(), reverse=True))
    return CensusTable(
        n=n, q=q, total=sum(by_inv.values()), by_invariant=by_inv,
        by_stratum=strata_counts(n, by_inv, "rank"),
        by_stratum_displayed=strata_counts(n, by_inv, "displayed"),
        expected_total=expected,
    )


def canonical_form(F: SubspaceBasis) -> Tuple[Tuple[int, ...], ...]:
    return tuple(FiniteField(F.q).rref(F.rows)[0])


def invertible_matrices(n: int, q: int) -> List[Tuple[Tuple[int, ...], ...]]:
    k = FiniteField(q)
    out = []
    for entries in product(range(q), repeat=n * n):
        m = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if k.rank(m) == n:
            out.append(m)
    return out


def act(F: SubspaceBasis, g1, g2) -> SubspaceBasis:
    """Image of F under ``(g1, g2)`` in GL(V_1) x GL(V_2), vectors as columns."""
    k = FiniteField(F.q)
    n = F.n

    def apply(g, v):
        out = []
        for i in range(n):
            s = 0
            for j in range(n):
                s = k.add(s, k.mul(g[i][j], v[j]))
            out.append(s)
        return out

    return SubspaceBasis(tuple(tuple(apply(g1, r[:n]) + apply(g2, r[n:])) for r in F.rows), F.q)


def relating_element(F: SubspaceBasis, G: SubspaceBasis):
    """Some ``(g1, g2)`` with ``(g1, g2) . F == G``, by brute force; None if absent."""
    target = canonical_form(G)
    mats = invertible_matrices(F.n, F.q)
    for g1 in mats:
        for g2 in mats:
            if canonical_form(act(F, g1, g2)) == target:
                return g1, g2
    return None

