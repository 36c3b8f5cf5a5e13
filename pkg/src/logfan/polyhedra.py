"""Rational polyhedral cones and fans with exact integer data.

A :class:`Cone` always carries both descriptions: primitive ray generators
(plus a lineality basis, empty for pointed cones) and inward halfspace
normals ``h`` with ``<h, x> >= 0``.  Rays are primitive and sorted, so two
cones describing the same set compare equal structurally.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NotPointed, RankMismatch
from .linalg import det, dot, kernel, lattice_index, primitive, rank

Vector = Tuple[int, ...]

#: Rank cap for the general double description path.
MAX_RANK = 8


# ----------------------------------------------------------------------------
# double description
# ----------------------------------------------------------------------------

def _dd(n, normals, rays=(), lineality=None, processed=()):
    """Motzkin's double description, incremental.

    Starts from the cone generated by ``rays`` and ``lineality`` (which must
    be the extreme rays / lineality basis of the cone cut out by
    ``processed``) and intersects with each of ``normals``.  With no starting
    data this is the whole space.  Returns ``(rays, lineality)``.
    """
    if lineality is None:
        lineality = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    lin = [tuple(v) for v in lineality]
    cons = [tuple(h) for h in processed]
    R = []
    for r in rays:
        z = 0
        for k, h in enumerate(cons):
            if dot(h, r) == 0:
                z |= 1 << k
        R.append((tuple(r), z))
    full = (1 << len(cons)) - 1

    for a in normals:
        a = tuple(a)
        if not any(a):
            continue
        k = len(cons)
        cons.append(a)
        bit = 1 << k
        pivot = next((l for l in lin if dot(a, l) != 0), None)
        if pivot is not None:
            s = dot(a, pivot)
            if s < 0:
                pivot = tuple(-x for x in pivot)
                s = -s
            new_lin = []
            for l in lin:
                if l == pivot or l == tuple(-x for x in pivot):
                    continue
                t = dot(a, l)
                new_lin.append(primitive([s * x - t * y for x, y in zip(l, pivot)]) if t else l)
            new_R = []
            for r, z in R:
                t = dot(a, r)
                v = primitive([s * x - t * y for x, y in zip(r, pivot)]) if t else r
                new_R.append((v, z | bit))
            new_R.append((pivot, full))
            lin, R = new_lin, new_R
            full |= bit
            continue

        pos, zero, neg = [], [], []
        for r, z in R:
            t = dot(a, r)
            if t > 0:
                pos.append((r, z, t))
            elif t < 0:
                neg.append((r, z, t))
            else:
                zero.append((r, z | bit))
        new_R = [(r, z) for r, z, _ in pos] + zero
        if pos and neg:
            allz = [z for _, z in R]
            for p, zp, tp in pos:
                for q, zq, tq in neg:
                    common = zp & zq
                    # combinatorial adjacency: no third ray vanishes on the common set
                    hits = sum(1 for zr in allz if common & zr == common)
                    if hits == 2:
                        v = primitive([tp * x - tq * y for x, y in zip(q, p)])
                        new_R.append((v, common | bit))
        R = new_R
        full |= bit
    out = sorted({r for r, _ in R})
    return out, lin


# ----------------------------------------------------------------------------
# cones
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Cone:
    """A rational polyhedral cone in Q^ambient_rank.

    Equality and hashing use the generators only; the halfspace list of a
    full-dimensional cone is its (unique) set of primitive facet normals.
    """

    ambient_rank: int
    rays: Tuple[Vector, ...]
    halfspaces: Tuple[Vector, ...]
    dim: int
    lineality: Tuple[Vector, ...] = ()

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.ambient_rank, self.rays, self._lin_key()) == (
            other.ambient_rank, other.rays, other._lin_key())

    def __hash__(self):
        return hash((self.ambient_rank, self.rays, self._lin_key()))

    def _lin_key(self):
        # canonical form of span(lineality)
        if not self.lineality:
            return ()
        from .linalg import rref
        red, _ = rref(self.lineality)
        return tuple(tuple(r) for r in red)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    @property
    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.rays) == self.dim

    def generators(self) -> List[Vector]:
        """Rays together with both signs of every lineality vector."""
        neg = [tuple(-x for x in l) for l in self.lineality]
        return list(self.rays) + list(self.lineality) + neg

    def contains(self, point: Sequence) -> bool:
        return all(dot(h, point) >= 0 for h in self.halfspaces)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators())

    def interior_contains(self, point: Sequence) -> bool:
        """Strict containment in the relative interior of a full-dimensional cone."""
        return self.is_full_dimensional and all(dot(h, point) > 0 for h in self.halfspaces)

    def facets(self) -> List[Tuple[Vector, Tuple[Vector, ...]]]:
        """``(normal, rays)`` for each facet, relative to the cone's span."""
        out = []
        seen = set()
        for h in self.halfspaces:
            tight = tuple(r for r in self.rays if dot(h, r) == 0)
            if tuple(tight) in seen:
                continue
            if rank(list(tight) + list(self.lineality)) == self.dim - 1 and len(tight) < len(self.rays):
                seen.add(tight)
                out.append((h, tight))
        return out

    def intersect(self, other: "Cone") -> "Cone":
        _check_rank(self, other)
        rays, lin = _dd(self.ambient_rank, other.halfspaces, self.rays,
                        self.lineality if self.lineality else [], self.halfspaces)
        return _finish(self.ambient_rank, list(self.halfspaces) + list(other.halfspaces),
                       rays, lin, allow_lineality=True)

    def is_face_of(self, other: "Cone") -> bool:
        """Whether this cone is a face of ``other``."""
        if not other.contains_cone(self):
            return False
        gens = self.generators()
        tight = [h for h in other.halfspaces if all(dot(h, g) == 0 for g in gens)]
        face_rays = [r for r in other.rays if all(dot(h, r) == 0 for h in tight)]
        return all(self.contains(r) for r in face_rays) and all(
            self.contains(g) for g in other.lineality)

    def to_dict(self, label: Optional[str] = None) -> dict:
        d = {}
        if label is not None:
            d["label"] = label
        d["rays"] = [list(r) for r in self.rays]
        d["halfspaces"] = [list(h) for h in self.halfspaces]
        return d


def _check_rank(*cones):
    ranks = {c.ambient_rank for c in cones}
    if len(ranks) > 1:
        raise RankMismatch(f"ambient ranks differ: {sorted(ranks)}")


def _finish(n, normals, rays, lin, allow_lineality):
    if lin and not allow_lineality:
        raise NotPointed(f"cone contains the line spanned by {lin[0]}")
    dim = rank(list(rays) + list(lin))
    hs = sorted({primitive(h) for h in normals if any(h)})
    if dim == n:
        # keep only facet-defining normals; these are unique for full cones
        facet = []
        for h in hs:
            tight = [r for r in rays if dot(h, r) == 0]
            if rank(tight + list(lin)) == n - 1:
                facet.append(h)
        hs = facet
    return Cone(n, tuple(sorted(rays)), tuple(hs), dim, tuple(lin))


def cone_from_halfspaces(ambient_rank: int, normals: Iterable[Sequence[int]],
                         allow_lineality: bool = False) -> Cone:
    """The cone ``{x : <h, x> >= 0 for every normal h}``.

    Raises :class:`NotPointed` if the cone contains a line, unless
    ``allow_lineality`` is set (used for supports such as ``a_1 <= ... <= a_n``).
    """
    n = ambient_rank
    normals = [tuple(int(x) for x in h) for h in normals]
    for h in normals:
        if len(h) != n:
            raise RankMismatch(f"normal {h} has length {len(h)}, expected {n}")
    if n > MAX_RANK:
        raise RankMismatch(f"ambient rank {n} exceeds the supported {MAX_RANK}")
    nz = [h for h in normals if any(h)]
    if len(nz) == n and det(nz) != 0:
        # simplicial fast path: rays are the columns of the inverse
        rays = []
        for i, hi in enumerate(nz):
            (v,) = kernel(nz[:i] + nz[i + 1:], n)
            rays.append(v if dot(hi, v) > 0 else tuple(-x for x in v))
        return _finish(n, nz, rays, [], allow_lineality)
    rays, lin = _dd(n, nz)
    return _finish(n, nz, rays, lin, allow_lineality)


def cone_from_rays(ambient_rank: int, rays: Iterable[Sequence[int]]) -> Cone:
    """The cone generated by ``rays``; halfspaces come from the dual cone."""
    n = ambient_rank
    gens = [primitive(r) for r in rays if any(r)]
    if not gens:
        # the origin: every coordinate forced to zero
        hs = [tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1)]
        return cone_from_halfspaces(n, hs)
    dual_rays, dual_lin = _dd(n, gens)
    hs = list(dual_rays) + list(dual_lin) + [tuple(-x for x in l) for l in dual_lin]
    return cone_from_halfspaces(n, hs)


def cone_is_smooth(c: Cone) -> bool:
    """Whether the primitive rays of ``c`` extend to a basis of Z^n."""
    rays = [primitive(r) for r in c.rays]
    if len(rays) != rank(rays):
        return False
    return lattice_index(rays) == 1


# ----------------------------------------------------------------------------
# embeddings and restriction
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceEmbedding:
    """Injective linear map Q^r -> Q^n given by an n x r integer matrix."""

    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        if rank(self.matrix) != self.source_rank:
            raise RankMismatch("embedding columns are linearly dependent")

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def __call__(self, x: Sequence) -> tuple:
        return tuple(dot(row, x) for row in self.matrix)

    def pullback(self, normal: Sequence[int]) -> Vector:
        """Normal ``h`` on Q^n composed with the embedding."""
        return tuple(sum(normal[i] * self.matrix[i][j] for i in range(self.target_rank))
                     for j in range(self.source_rank))


def restrict_cone(c: Cone, emb: SubspaceEmbedding) -> Cone:
    """Preimage of ``c`` under the embedding, as a cone in Q^r."""
    if c.ambient_rank != emb.target_rank:
        raise RankMismatch(f"cone rank {c.ambient_rank} != embedding target {emb.target_rank}")
    return cone_from_halfspaces(emb.source_rank, [emb.pullback(h) for h in c.halfspaces])


# ----------------------------------------------------------------------------
# fans
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Fan:
    """Maximal cones of a fan; faces are implicit."""

    ambient_rank: int
    maximal_cones: Tuple[Cone, ...]
    labels: Tuple[str, ...]

    def __post_init__(self):
        if len(self.maximal_cones) != len(self.labels):
            raise ValueError("need exactly one label per cone")
        for c in self.maximal_cones:
            if c.ambient_rank != self.ambient_rank:
                raise RankMismatch(f"cone of rank {c.ambient_rank} in fan of rank {self.ambient_rank}")

    def __len__(self):
        return len(self.maximal_cones)

    def items(self):
        return zip(self.labels, self.maximal_cones)

    def without(self, label: str) -> "Fan":
        keep = [(l, c) for l, c in self.items() if l != label]
        return Fan(self.ambient_rank, tuple(c for _, c in keep), tuple(l for l, _ in keep))

    def to_json_dict(self) -> dict:
        cones = sorted(self.items(), key=lambda lc: (lc[0], lc[1].rays))
        return {
            "ambient_rank": self.ambient_rank,
            "maximal_cones": [c.to_dict(label) for label, c in cones],
        }

    def to_json(self) -> str:
        return dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Fan":
        d = json.loads(text)
        n = d["ambient_rank"]
        cones, labels = [], []
        for entry in d["maximal_cones"]:
            cones.append(cone_from_halfspaces(n, [[int(x) for x in h] for h in entry["halfspaces"]]))
            labels.append(entry["label"])
        return cls(n, tuple(cones), tuple(labels))


_SAFE = 2 ** 53


def _safe_ints(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return obj if -_SAFE < obj < _SAFE else str(obj)
    if isinstance(obj, dict):
        return {k: _safe_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_safe_ints(v) for v in obj]
    return obj


def dumps(obj) -> str:
    """Deterministic JSON text, newline-terminated; huge ints become strings."""
    text = json.dumps(_safe_ints(obj), indent=1, sort_keys=False)
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join(re.findall(r'-?\d+|"-?\d+"', m.group(0))) + "]", text) + "\n"


# a list whose items are all plain (or stringified) integers
_FLAT_LIST = re.compile(r'\[(?:\s*(?:-?\d+|"-?\d+"),)*\s*(?:-?\d+|"-?\d+")\s*\]')


@dataclass
class VerificationReport:
    """Named boolean checks, with a witness recorded for each failure."""

    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, object] = field(default_factory=dict)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, passed: bool, witness=None):
        self.checks[name] = bool(passed)
        if not passed and witness is not None:
            self.witnesses[name] = witness

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks),
                "witnesses": self.witnesses, **self.details}


def fan_verify(f: Fan, support: Cone) -> VerificationReport:
    """Check face compatibility, smoothness and exact tiling of ``support``.

    Tiling is decided by facet pairing: every cone lies in the support and
    each of its facets either sits in a facet hyperplane of the support or is
    a facet of exactly one other maximal cone.
    """
    if support.ambient_rank != f.ambient_rank:
        raise RankMismatch(f"support rank {support.ambient_rank} != fan rank {f.ambient_rank}")
    report = VerificationReport()
    items = list(f.items())

    bad = None
    for (l1, c1), (l2, c2) in combinations(items, 2):
        if c1.contains_cone(c2) or c2.contains_cone(c1):
            bad = {"cones": [l1, l2], "reason": "containment"}
            break
        meet = c1.intersect(c2)
        if not (meet.is_face_of(c1) and meet.is_face_of(c2)):
            bad = {"cones": [l1, l2], "intersection_rays": [list(r) for r in meet.rays]}
            break
    report.record("face_compatible", bad is None, bad)

    rough = [l for l, c in items if not cone_is_smooth(c)]
    report.record("smooth", not rough, {"cones": rough})

    report.record("tiling", *_tiling(items, support))
    report.details["maximal_cones"] = len(items)
    return report


def _tiling(items, support):
    n = support.ambient_rank
    for label, c in items:
        if not c.is_full_dimensional:
            return False, {"cone": label, "reason": "not full-dimensional"}
        if not support.contains_cone(c):
            return False, {"cone": label, "reason": "outside support"}
    facet_owners: Dict[Tuple[Vector, ...], List[str]] = {}
    for label, c in items:
        for _, fr in c.facets():
            facet_owners.setdefault(fr, []).append(label)
    for label, c in items:
        for normal, fr in c.facets():
            on_boundary = any(all(dot(s, r) == 0 for r in fr) for s in support.halfspaces)
            if on_boundary and support.dim == n:
                continue
            owners = facet_owners[fr]
            if len(owners) != 2:
                return False, {"cone": label, "facet_rays": [list(r) for r in fr],
                               "shared_with": [o for o in owners if o != label]}
    return True, None
