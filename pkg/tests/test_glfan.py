from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from logfan.errors import OutOfRange
from logfan.glfan import (ChartPermutation, SplitPermutation, anti_dominant_chamber, build_gl_fan,
                          chart_completions, chart_of_split_permutation, cone_of_split_permutation,
                          enumerate_split_permutations, expected_rays, has_limit, limit_exponents)
from logfan.linalg import rank
from logfan.polyhedra import cone_from_halfspaces, cone_is_smooth, fan_verify


def brute_force_split(n):
    out = []
    for g in permutations(range(1, n + 1)):
        for m in range(n + 1):
            ok = True
            for x in range(n):
                for y in range(x + 1, n):
                    if g[x] <= m and g[y] <= m and g[x] < g[y]:
                        ok = False
                    if g[x] > m and g[y] > m and g[x] > g[y]:
                        ok = False
            if ok:
                out.append((m, g))
    return sorted(out)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    got = [(sp.m, sp.g) for sp in enumerate_split_permutations(n)]
    assert got == brute_force_split(n)
    assert len(got) == 2 ** n


def test_count_up_to_ten():
    for n in range(7, 11):
        assert len(enumerate_split_permutations(n)) == 2 ** n


def test_small_enumerations():
    assert [(sp.g, sp.m) for sp in enumerate_split_permutations(1)] == [((1,), 0), ((1,), 1)]
    assert {(sp.g, sp.m) for sp in enumerate_split_permutations(2)} == {
        ((1, 2), 0), ((1, 2), 1), ((2, 1), 1), ((2, 1), 2)}


def test_enumeration_bounds():
    with pytest.raises(OutOfRange):
        enumerate_split_permutations(0)
    with pytest.raises(OutOfRange):
        build_gl_fan(9)


def test_invalid_split_permutation():
    with pytest.raises(ValueError):
        SplitPermutation(0, (2, 1))


def test_cone_examples():
    c = cone_of_split_permutation(SplitPermutation(0, (1, 2)))
    assert set(c.halfspaces) == {(1, 0), (-1, 1)}
    assert c.rays == ((0, 1), (1, 1))
    c = cone_of_split_permutation(SplitPermutation(1, (1, 2)))
    assert set(c.halfspaces) == {(-1, 0), (1, 1)}
    assert c.rays == ((-1, 1), (0, 1))
    c = cone_of_split_permutation(SplitPermutation(1, (1,)))
    assert c.halfspaces == ((-1,),) and c.rays == ((-1,),)


@pytest.mark.parametrize("n", range(1, 6))
def test_cones_are_smooth_simplicial_with_expected_rays(n):
    for sp in enumerate_split_permutations(n):
        c = cone_of_split_permutation(sp)
        assert c.is_full_dimensional and c.is_simplicial and cone_is_smooth(c)
        assert set(c.rays) == set(expected_rays(sp))
        assert all(x in (-1, 0, 1) for r in c.rays for x in r)


def test_gl_fan_two():
    fan = build_gl_fan(2)
    want = [
        [(1, 0), (-1, 1)],    # 0 <= a1 <= a2
        [(-1, 0), (1, 1)],    # 0 <= -a1 <= a2
        [(0, 1), (-1, -1)],   # 0 <= a2 <= -a1
        [(0, -1), (-1, 1)],   # 0 <= -a2 <= -a1
    ]
    got = {frozenset(c.halfspaces) for c in fan.maximal_cones}
    assert got == {frozenset(cone_from_halfspaces(2, w).halfspaces) for w in want}


def test_gl_fan_one_and_three():
    f1 = build_gl_fan(1)
    assert {c.rays for c in f1.maximal_cones} == {((1,),), ((-1,),)}
    assert fan_verify(f1, anti_dominant_chamber(1)).ok
    f3 = build_gl_fan(3)
    assert len(f3) == 8 and fan_verify(f3, anti_dominant_chamber(3)).ok


def test_support_has_lineality():
    c = anti_dominant_chamber(3)
    assert c.lineality and rank(c.lineality) == 1
    assert c.contains((1, 1, 1)) and c.contains((-1, -1, -1))


def test_cones_pairwise_distinct():
    cones = build_gl_fan(4).maximal_cones
    assert len(set(cones)) == 16


def test_chart_examples():
    f = chart_of_split_permutation(SplitPermutation(1, (1, 2)))
    assert f(1, 2) == (1, 1) and f(2, 1) == (2, 1) and f(1, 1) == (1, 2) and f(2, 2) == (2, 2)
    f = chart_of_split_permutation(SplitPermutation(0, (1,)))
    assert f.rows == (((1, 1), (1, 2)),)
    f = chart_of_split_permutation(SplitPermutation(2, (2, 1)))
    assert f(1, 2) == (2, 1) and f(2, 2) == (1, 1) and f(1, 1) == (1, 2) and f(2, 1) == (2, 2)


def test_chart_validation_and_encoding():
    with pytest.raises(ValueError):
        ChartPermutation((((1, 1), (2, 1)), ((1, 2), (2, 2))))
    f = chart_of_split_permutation(SplitPermutation(1, (1, 2)))
    assert f.encode() == "1.2/1.1 2.1/2.2"
    assert ChartPermutation.decode(f.encode()) == f


def test_limit_examples():
    f = chart_of_split_permutation(SplitPermutation(1, (1, 2)))
    c = cone_of_split_permutation(SplitPermutation(1, (1, 2)))
    assert limit_exponents(f, (-3, 5)) == [3, 2] and has_limit(f, (-3, 5)) and c.contains((-3, 5))
    e = limit_exponents(f, (2, 5))
    assert e[0] == -2 and not has_limit(f, (2, 5)) and not c.contains((2, 5))
    for sp in enumerate_split_permutations(3):
        assert limit_exponents(chart_of_split_permutation(sp), (0, 0, 0)) == [0, 0, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_limit_iff_cone_exhaustive(n):
    box = list(product(range(-4, 5), repeat=n))
    for sp in enumerate_split_permutations(n):
        f = chart_of_split_permutation(sp)
        c = cone_of_split_permutation(sp)
        for a in box:
            assert has_limit(f, a) == c.contains(a)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_split_permutations(n)),
    st.lists(st.integers(-20, 20), min_size=n, max_size=n))))
def test_exponents_telescope(case):
    sp, a = case
    e = limit_exponents(chart_of_split_permutation(sp), a)
    s = [sp.signs[d] * a[sp.g[d] - 1] for d in range(sp.n)]
    assert e == [s[0]] + [s[d] - s[d - 1] for d in range(1, sp.n)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exponents_ignore_completion(n):
    box = list(product(range(-2, 3), repeat=n))
    for sp in enumerate_split_permutations(n):
        base = chart_of_split_permutation(sp)
        comps = list(chart_completions(sp))
        assert base in comps
        for f in comps:
            for a in box:
                assert limit_exponents(f, a) == limit_exponents(base, a)


def test_split_permutation_json():
    assert SplitPermutation(1, (2, 1)).to_dict() == {"m": 1, "g": [2, 1]}
