import json
from itertools import combinations, product

import pytest
from hypothesis import assume, given, settings, strategies as st

from logfan.errors import NotPointed, RankMismatch
from logfan.glfan import anti_dominant_chamber, build_gl_fan, cone_of_split_permutation, enumerate_split_permutations
from logfan.linalg import det, primitive
from logfan.polyhedra import (Fan, SubspaceEmbedding, cone_from_halfspaces, cone_from_rays, cone_is_smooth,
                              dumps, fan_verify, restrict_cone)


def test_half_line():
    c = cone_from_halfspaces(1, [(1,)])
    assert c.rays == ((1,),)


def test_two_dim_chain():
    c = cone_from_halfspaces(2, [(1, 0), (-1, 1)])
    assert c.rays == ((0, 1), (1, 1))
    assert c.dim == 2


def test_line_is_rejected():
    with pytest.raises(NotPointed):
        cone_from_halfspaces(2, [(1, 0), (-1, 0)])


def test_lower_dimensional_cone_is_fine():
    c = cone_from_halfspaces(2, [(1, 0), (-1, 0), (0, 1)])
    assert c.dim == 1 and c.rays == ((0, 1),)


def test_wrong_length_normal():
    with pytest.raises(RankMismatch):
        cone_from_halfspaces(2, [(1, 0, 0)])


@pytest.mark.parametrize("rays,smooth", [
    ([(1, 0), (0, 1)], True),
    ([(1, 1), (1, -1)], False),
    ([(2, 0)], True),
])
def test_smoothness_examples(rays, smooth):
    assert cone_is_smooth(cone_from_rays(2, rays)) is smooth


def test_fan_verify_gl2():
    rep = fan_verify(build_gl_fan(2), anti_dominant_chamber(2))
    assert rep.checks == {"face_compatible": True, "smooth": True, "tiling": True}


def test_fan_verify_reports_hole():
    fan = build_gl_fan(2).without("m=0 g=1,2")
    rep = fan_verify(fan, anti_dominant_chamber(2))
    assert rep.checks["tiling"] is False
    # the exposed facet is a_1 = 0, spanned by (0, 1)
    assert rep.witnesses["tiling"]["facet_rays"] == [[0, 1]]


def test_rank_one_fan():
    c = cone_from_halfspaces(1, [(-1,)])
    assert fan_verify(Fan(1, (c,), ("neg",)), c).ok


def test_rank_mismatch_in_verify():
    with pytest.raises(RankMismatch):
        fan_verify(build_gl_fan(2), anti_dominant_chamber(3))


def test_restrict_examples():
    odd = SubspaceEmbedding(((1,), (0,), (-1,)))
    c = cone_from_halfspaces(3, [(0, 1, 0), (-1, -1, 0), (1, 0, 1)])  # 0 <= a2 <= -a1 <= a3
    assert restrict_cone(c, odd) == cone_from_halfspaces(1, [(-1,)])

    even = SubspaceEmbedding(((1, 0), (0, 1), (0, -1), (-1, 0)))
    c = cone_from_halfspaces(4, [(0, -1, 0, 0), (0, 1, 1, 0), (-1, 0, -1, 0), (1, 0, 0, 1)])
    cplus = cone_from_halfspaces(2, [(-1, 1), (0, -1)])
    r = restrict_cone(c, even)
    assert r == cplus and set(r.halfspaces) == set(cplus.halfspaces)

    orthant = cone_from_halfspaces(2, [(1, 0), (0, 1)])
    assert restrict_cone(orthant, SubspaceEmbedding(((1, 0), (0, 1)))) == orthant


def test_embedding_must_be_injective():
    with pytest.raises(RankMismatch):
        SubspaceEmbedding(((1, 2), (2, 4)))


vec3 = st.tuples(*[st.integers(-3, 3)] * 3)


@settings(max_examples=120, deadline=None)
@given(st.lists(vec3, min_size=1, max_size=6))
def test_halfspace_ray_round_trip(normals):
    try:
        c = cone_from_halfspaces(3, normals)
    except NotPointed:
        assume(False)
    back = cone_from_rays(3, c.rays) if c.rays else c
    assert back == c
    # mutual containment on generators
    assert all(back.contains(r) for r in c.rays)
    assert all(c.contains(r) for r in back.rays)


def unimodular(n, ops):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, j, k in ops:
        if i % n != j % n:
            for row in m:
                row[i % n] += k * row[j % n]
    return m


@settings(max_examples=120, deadline=None)
@given(st.lists(vec3, min_size=3, max_size=3),
       st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2)), max_size=6),
       st.permutations(range(3)))
def test_smoothness_is_lattice_invariant(rays, ops, perm):
    assume(det(rays) != 0)
    U = unimodular(3, ops)
    moved = [tuple(sum(r[k] * U[k][j] for k in range(3)) for j in range(3)) for r in rays]
    permuted = [rays[i] for i in perm]
    s = cone_is_smooth(cone_from_rays(3, rays))
    assert cone_is_smooth(cone_from_rays(3, moved)) == s
    assert cone_is_smooth(cone_from_rays(3, permuted)) == s
    assert s == (abs(det([primitive(r) for r in rays])) == 1)


# --- cross-check fan_verify against sampling a grid of points ---

def sampling_accepts(fan, support, radius=4):
    n = fan.ambient_rank
    for p in product(range(-radius, radius + 1), repeat=n):
        # shift off the walls so interior tests are informative
        q = tuple(3 * x + (i + 1) for i, x in enumerate(p))
        for pt in (p, q):
            if not support.contains(pt):
                continue
            if not any(c.contains(pt) for c in fan.maximal_cones):
                return False
            if sum(c.interior_contains(pt) for c in fan.maximal_cones) > 1:
                return False
    return all(support.contains_cone(c) for c in fan.maximal_cones)


def fixtures():
    out = []
    for n in (1, 2, 3):
        out.append((build_gl_fan(n), anti_dominant_chamber(n)))
    fan2 = build_gl_fan(2)
    out.append((fan2.without("m=0 g=1,2"), anti_dominant_chamber(2)))
    merged = cone_from_rays(2, [(-1, 1), (1, 1)])
    out.append((Fan(2, (merged,) + fan2.without("m=0 g=1,2").without("m=1 g=1,2").maximal_cones,
                    ("merged", "a", "b")), anti_dominant_chamber(2)))
    extra = cone_from_rays(2, [(-1, 1), (1, 2)])
    out.append((Fan(2, fan2.maximal_cones + (extra,), fan2.labels + ("extra",)), anti_dominant_chamber(2)))
    fan3 = build_gl_fan(3)
    out.append((fan3.without(fan3.labels[3]), anti_dominant_chamber(3)))
    return out


@pytest.mark.parametrize("index,expected", list(enumerate([True, True, True, False, True, False, False])))
def test_fan_verify_agrees_with_sampling(index, expected):
    fan, support = fixtures()[index]
    rep = fan_verify(fan, support)
    assert sampling_accepts(fan, support) == expected
    assert (rep.checks["tiling"] and rep.checks["face_compatible"]) == expected


def test_merged_cone_tiles_but_is_not_smooth():
    fan, support = fixtures()[4]
    rep = fan_verify(fan, support)
    assert rep.checks["tiling"] and not rep.checks["smooth"]


def test_restrict_commutes_with_intersection():
    embeddings = {
        3: SubspaceEmbedding(((1,), (0,), (-1,))),
        4: SubspaceEmbedding(((1, 0), (0, 1), (0, -1), (-1, 0))),
        5: SubspaceEmbedding(((1, 0), (0, 1), (0, 0), (0, -1), (-1, 0))),
    }
    for n, emb in embeddings.items():
        cones = [cone_of_split_permutation(sp) for sp in enumerate_split_permutations(n)]
        for c1, c2 in combinations(cones[:12], 2):
            assert restrict_cone(c1.intersect(c2), emb) == restrict_cone(c1, emb).intersect(restrict_cone(c2, emb))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_split_permutations(4)), st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_restriction_pullback_soundness(sp, x):
    emb = SubspaceEmbedding(((1, 0), (0, 1), (0, -1), (-1, 0)))
    c = cone_of_split_permutation(sp)
    assert restrict_cone(c, emb).contains(x) == c.contains(emb(x))


def test_json_round_trip_and_format():
    fan = build_gl_fan(3)
    text = fan.to_json()
    assert text.endswith("\n")
    back = Fan.from_json(text)
    assert back.to_json() == text
    data = json.loads(text)
    keys = [(c["label"], c["rays"]) for c in data["maximal_cones"]]
    assert keys == sorted(keys)


def test_big_integers_become_strings():
    assert json.loads(dumps({"x": [2 ** 60, 1]}))["x"] == [str(2 ** 60), 1]
