"""Fans of the fixed-point compactifications of SO(2r+1), Sp(2r) and SO(2r).

Each classical group's maximal torus sits inside the diagonal torus of
GL(n) through a linear map Q^r -> Q^n; its fan is the trace of the GL fan.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import OutOfRange, RankMismatch
from .glfan import build_gl_fan
from .linalg import lattice_index, smith_invariants
from .polyhedra import (Cone, Fan, SubspaceEmbedding, VerificationReport, cone_from_halfspaces,
                        cone_is_smooth, fan_verify, restrict_cone)

KINDS = ("B", "C", "D")
MAX_N = 8


@dataclass(frozen=True)
class GroupEmbedding:
    kind: str
    r: int
    embedding: SubspaceEmbedding
    restricted_chamber: Cone

    @property
    def n(self) -> int:
        return self.embedding.target_rank

    @property
    def anti_chamber(self) -> Cone:
        """``-W'``, the support of the restricted fan."""
        return cone_from_halfspaces(self.r, [tuple(-x for x in h) for h in _chamber_normals(self.kind, self.r)])


def ambient_rank(kind: str, r: int) -> int:
    return 2 * r + 1 if kind == "B" else 2 * r


def _chamber_normals(kind: str, r: int) -> List[Tuple[int, ...]]:
    """Inward normals of W': a'_1 >= ... >= a'_r >= 0 (B, C) or >= |a'_r| (D)."""
    out = []
    for k in range(r - 1):
        h = [0] * r
        h[k], h[k + 1] = 1, -1
        out.append(tuple(h))
    h = [0] * r
    if kind == "D":
        h[r - 2], h[r - 1] = 1, 1
    else:
        h[r - 1] = 1
    out.append(tuple(h))
    return out


def make_embedding(kind: str, r: int) -> GroupEmbedding:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if r < (2 if kind == "D" else 1):
        raise OutOfRange(f"r={r} too small for type {kind}")
    n = ambient_rank(kind, r)
    cols = []
    for k in range(r):
        v = [0] * n
        v[k], v[n - 1 - k] = 1, -1
        cols.append(v)
    matrix = tuple(tuple(c[i] for c in cols) for i in range(n))
    chamber = cone_from_halfspaces(r, _chamber_normals(kind, r))
    return GroupEmbedding(kind, r, SubspaceEmbedding(matrix), chamber)


def c_plus_normals(r: int) -> List[Tuple[int, ...]]:
    """``a'_1 <= ... <= a'_{r-1} <= a'_r <= 0``."""
    return _chain_normals(r, last_sign=1)


def c_minus_normals(r: int) -> List[Tuple[int, ...]]:
    """``a'_1 <= ... <= a'_{r-1} <= -a'_r <= 0``."""
    return _chain_normals(r, last_sign=-1)


def _chain_normals(r, last_sign):
    out = []
    for k in range(r - 1):
        h = [0] * r
        h[k], h[k + 1] = -1, 1
        out.append(h)
    if r >= 2:
        out[-1][r - 1] = last_sign
    h = [0] * r
    h[r - 1] = -last_sign
    out.append(h)
    return [tuple(x) for x in out]


def _label(emb: GroupEmbedding, cone: Cone, sources: List[str]) -> str:
    if cone == emb.anti_chamber:
        return "-W'"
    if emb.kind == "D":
        if cone == cone_from_halfspaces(emb.r, c_plus_normals(emb.r)):
            return "C+"
        if cone == cone_from_halfspaces(emb.r, c_minus_normals(emb.r)):
            return "C-"
    return sources[0]


def chamber_orderings(emb: GroupEmbedding) -> List[Tuple[int, ...]]:
    """Orderings ``o`` with ``y_o(1) <= ... <= y_o(n)`` on an open part of ``-W'``.

    ``y`` is the image of a point of ``-W'``; each ordering names the Weyl
    translate of ``-W`` that the image enters.  Depth-first over prefixes,
    pruning any prefix that already cuts ``-W'`` down in dimension.
    """
    n, r = emb.n, emb.r
    rows = emb.embedding.matrix
    base = list(emb.anti_chamber.halfspaces)

    def diff(i, j):
        # pullback of y_j - y_i >= 0
        return tuple(b - a for a, b in zip(rows[i], rows[j]))

    out = []

    def extend(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        rest = [j for j in range(n) if j not in prefix]
        for i in rest:
            normals = base + [diff(a, b) for a, b in zip(prefix, prefix[1:])]
            if prefix:
                normals.append(diff(prefix[-1], i))
            normals += [diff(i, j) for j in rest if j != i]
            if cone_from_halfspaces(r, normals).dim == r:
                extend(prefix + [i])

    extend([])
    return out


def _reordered(emb: SubspaceEmbedding, order: Sequence[int]) -> SubspaceEmbedding:
    # compose with the coordinate permutation that sorts the image along ``order``
    return SubspaceEmbedding(tuple(emb.matrix[i] for i in order))


def restricted_fan(fan: Fan, emb: GroupEmbedding, saturate: bool = True) -> Fan:
    """Fan of the subtorus closure: trace of ``fan`` on Q^r, cut to ``-W'``.

    ``fan`` is a fan supported in ``-W`` (the GL fan).  The toric fan of the
    torus closure is its orbit under coordinate permutations, so with
    ``saturate`` every translate entering ``-W'`` is traced as well; without
    it only the cones of ``fan`` themselves are restricted.
    """
    if fan.ambient_rank != emb.n:
        raise RankMismatch(f"fan rank {fan.ambient_rank} != embedding target {emb.n}")
    orders = chamber_orderings(emb) if saturate else [tuple(range(emb.n))]
    support = emb.anti_chamber
    traces: Dict[Cone, List[str]] = {}
    for order in orders:
        e = _reordered(emb.embedding, order)
        for label, c in fan.items():
            t = restrict_cone(c, e).intersect(support)
            traces.setdefault(t, []).append(label)
    cones = list(traces)
    maximal = [c for c in cones if not any(o != c and o.contains_cone(c) for o in cones)]
    maximal.sort(key=lambda c: c.rays)
    labels = [_label(emb, c, traces[c]) for c in maximal]
    return Fan(emb.r, tuple(maximal), tuple(labels))


def verify_fixed(kind: str, r: int) -> VerificationReport:
    emb = make_embedding(kind, r)
    if emb.n > MAX_N:
        raise OutOfRange(f"ambient rank {emb.n} exceeds {MAX_N}")
    fan = restricted_fan(build_gl_fan(emb.n), emb)
    support = emb.anti_chamber
    report = VerificationReport()
    report.record("fan_valid", fan_verify(fan, support).ok)
    index = lattice_index(support.rays)
    if kind in ("B", "C"):
        ok = len(fan) == 1 and fan.maximal_cones[0] == support and (
            set(fan.maximal_cones[0].halfspaces) == set(support.halfspaces))
        report.record("single_chamber", ok, {"labels": list(fan.labels)})
        report.record("chamber_smooth", cone_is_smooth(support))
        wonderful = report.ok
    else:
        cp = cone_from_halfspaces(r, c_plus_normals(r))
        cm = cone_from_halfspaces(r, c_minus_normals(r))
        got = {c.halfspaces for c in fan.maximal_cones}
        report.record("two_cones", len(fan) == 2 and got == {cp.halfspaces, cm.halfspaces},
                      {"halfspaces": [[list(h) for h in hs] for hs in sorted(got)]})
        report.record("both_smooth", all(cone_is_smooth(c) for c in fan.maximal_cones))
        wall = cp.intersect(cm)
        report.record("common_wall", wall.dim == r - 1 and wall.is_face_of(cp) and wall.is_face_of(cm)
                      and all(ray[r - 1] == 0 for ray in wall.rays))
        report.record("chamber_index_two", index == 2, {"index": index})
        wonderful = False
    report.details.update({
        "kind": kind, "r": r, "maximal_cones": len(fan), "wonderful": wonderful,
        "chamber_lattice_index": index,
        "chamber_invariant_factors": smith_invariants([list(v) for v in support.rays]),
        "labels": list(fan.labels),
    })
    return report


def fixed_report_json(report: VerificationReport) -> dict:
    d = report.details
    return {"kind": d["kind"], "r": d["r"], "maximal_cones": d["maximal_cones"],
            "wonderful": d["wonderful"], "chamber_lattice_index": d["chamber_lattice_index"]}
