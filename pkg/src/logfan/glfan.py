"""Split permutations, the cones C_g, and the fan of the GL(n) compactification.

Elements of ``V = {1..n} x {1, 2}`` are pairs ``(k, t)`` with ``t`` the type.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import OutOfRange
from .polyhedra import Cone, Fan, cone_from_halfspaces

Elem = Tuple[int, int]

MAX_ENUM_N = 12
MAX_FAN_N = 8


@dataclass(frozen=True, order=True)
class SplitPermutation:
    """A permutation ``g`` of {1..n} (one-line notation) with split index ``m``.

    ``g`` is decreasing on the positions it sends into {1..m} and increasing
    on the positions it sends into {m+1..n}.
    """

    m: int
    g: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))
        if not is_split(self.g, self.m):
            raise ValueError(f"({self.g}, m={self.m}) is not a split permutation")

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def signs(self) -> Tuple[int, ...]:
        """The sign function: -1 at positions sent into {1..m}, +1 elsewhere."""
        return tuple(-1 if v <= self.m else 1 for v in self.g)

    @property
    def label(self) -> str:
        return f"m={self.m} g={','.join(map(str, self.g))}"

    def to_dict(self) -> dict:
        return {"m": self.m, "g": list(self.g)}


def is_split(g: Sequence[int], m: int) -> bool:
    n = len(g)
    if sorted(g) != list(range(1, n + 1)) or not 0 <= m <= n:
        return False
    low = [v for v in g if v <= m]
    high = [v for v in g if v > m]
    return low == sorted(low, reverse=True) and high == sorted(high)


def enumerate_split_permutations(n: int) -> List[SplitPermutation]:
    """All pairs ``(g, m)``, sorted by ``m`` then ``g``; there are ``2**n``.

    For each ``m`` and each m-subset ``A`` of positions there is exactly one
    such ``g``: it fills ``A`` with ``m, m-1, ..., 1`` and the remaining
    positions with ``m+1, ..., n``.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise OutOfRange(f"n={n} outside 1..{MAX_ENUM_N}")
    out = []
    for m in range(n + 1):
        for A in combinations(range(n), m):
            g = [0] * n
            low = iter(range(m, 0, -1))
            high = iter(range(m + 1, n + 1))
            for pos in range(n):
                g[pos] = next(low) if pos in A else next(high)
            out.append(SplitPermutation(m, tuple(g)))
    return sorted(out)


def cone_of_split_permutation(sp: SplitPermutation) -> Cone:
    """``{0 <= e(1) a_g(1) <= ... <= e(n) a_g(n)}`` as an H-form cone."""
    n, g, eps = sp.n, sp.g, sp.signs
    normals = []
    prev = None
    for j in range(n):
        h = [0] * n
        h[g[j] - 1] += eps[j]
        if prev is not None:
            h[g[prev] - 1] -= eps[prev]
        normals.append(h)
        prev = j
    return cone_from_halfspaces(n, normals)


def expected_rays(sp: SplitPermutation) -> List[Tuple[int, ...]]:
    """Closed-form rays: ``a_g(j) = e(j) * [j >= k]`` for k = 1..n."""
    n, g, eps = sp.n, sp.g, sp.signs
    rays = []
    for k in range(n):
        v = [0] * n
        for j in range(k, n):
            v[g[j] - 1] = eps[j]
        rays.append(tuple(v))
    return sorted(rays)


def anti_dominant_chamber(n: int) -> Cone:
    """``-W = {a_1 <= a_2 <= ... <= a_n}``; contains the diagonal line."""
    normals = []
    for i in range(n - 1):
        h = [0] * n
        h[i], h[i + 1] = -1, 1
        normals.append(h)
    if not normals:
        # n = 1: the whole line; keep one trivially satisfied zero row out
        return cone_from_halfspaces(1, [], allow_lineality=True)
    return cone_from_halfspaces(n, normals, allow_lineality=True)


def build_gl_fan(n: int) -> Fan:
    if not 1 <= n <= MAX_FAN_N:
        raise OutOfRange(f"n={n} outside 1..{MAX_FAN_N}")
    sps = enumerate_split_permutations(n)
    return Fan(n, tuple(cone_of_split_permutation(sp) for sp in sps),
               tuple(sp.label for sp in sps))


# ----------------------------------------------------------------------------
# chart permutations and the one-parameter-subgroup limit oracle
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ChartPermutation:
    """A permutation ``f`` of V whose rows ``(f(d,1), f(d,2))`` mix types.

    ``rows[d-1] == (f(d,1), f(d,2))``.
    """

    rows: Tuple[Tuple[Elem, Elem], ...]

    def __post_init__(self):
        rows = tuple((tuple(a), tuple(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        images = sorted(e for row in rows for e in row)
        if images != sorted(V(n)):
            raise ValueError("f is not a permutation of V")
        for d, (a, b) in enumerate(rows, 1):
            if a[1] == b[1]:
                raise ValueError(f"f({d},1) and f({d},2) have the same type")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __call__(self, d: int, t: int) -> Elem:
        return self.rows[d - 1][t - 1]

    def image(self, i: int, rows=None) -> List[Elem]:
        """``f(V_i)`` restricted to the given rows (1-based), in row order."""
        rows = range(1, self.n + 1) if rows is None else rows
        return [self(d, i) for d in rows]

    def block(self, i: int, j: int, rows=None) -> List[Elem]:
        """``f(V_i^{rows})_j``: images of type-``i`` slots that have type ``j``, sorted."""
        return sorted(e for e in self.image(i, rows) if e[1] == j)

    def pivot(self, d: int) -> Tuple[Elem, Elem]:
        return self.rows[d - 1]

    def encode(self) -> str:
        return " ".join(f"{a[0]}.{a[1]}/{b[0]}.{b[1]}" for a, b in self.rows)

    @classmethod
    def decode(cls, text: str) -> "ChartPermutation":
        """Inverse of :meth:`encode`: rows like ``1.2/1.1 2.1/2.2``."""
        rows = []
        for tok in text.split():
            a, b = tok.split("/")
            rows.append((tuple(map(int, a.split("."))), tuple(map(int, b.split(".")))))
        return cls(tuple(rows))

    def to_dict(self) -> dict:
        return {"rows": [[list(a), list(b)] for a, b in self.rows]}


def V(n: int) -> List[Elem]:
    return [(k, t) for k in range(1, n + 1) for t in (1, 2)]


def chart_of_split_permutation(sp: SplitPermutation) -> ChartPermutation:
    """A chart whose torus limits cut out exactly ``C_g``.

    Row ``d`` puts ``(g(d), 1)`` in slot 1 when the sign is +1, in slot 2
    otherwise; the other slots take ``(1,2), (2,2), ...`` in row order.
    """
    type2 = iter((k, 2) for k in range(1, sp.n + 1))
    rows = []
    for d in range(sp.n):
        e = (sp.g[d], 1)
        rows.append((e, next(type2)) if sp.signs[d] == 1 else (next(type2), e))
    return ChartPermutation(tuple(rows))


def chart_completions(sp: SplitPermutation) -> Iterator[ChartPermutation]:
    """Every chart satisfying the rule, over all fillings of the type-2 slots."""
    n = sp.n
    for perm in permutations(range(1, n + 1)):
        rows = []
        for d in range(n):
            e, o = (sp.g[d], 1), (perm[d], 2)
            rows.append((e, o) if sp.signs[d] == 1 else (o, e))
        yield ChartPermutation(tuple(rows))


def limit_exponents(f: ChartPermutation, a: Sequence[int]) -> List[int]:
    """Weights of the pivot coordinates under ``t -> diag(t^a)`` acting on the left.

    The one-parameter subgroup has a limit at 0 in the chart iff every weight
    is nonnegative.
    """
    if len(a) != f.n:
        raise ValueError(f"need {f.n} exponents, got {len(a)}")

    def w(v):
        return a[v[0] - 1] if v[1] == 1 else 0

    out = [w(f(1, 1)) - w(f(1, 2))]
    for d in range(2, f.n + 1):
        out.append(w(f(d, 1)) + w(f(d - 1, 2)) - w(f(d - 1, 1)) - w(f(d, 2)))
    return out


def has_limit(f: ChartPermutation, a: Sequence[int]) -> bool:
    return all(e >= 0 for e in limit_exponents(f, a))


def fan_by_label(n: int) -> Dict[str, SplitPermutation]:
    return {sp.label: sp for sp in enumerate_split_permutations(n)}
