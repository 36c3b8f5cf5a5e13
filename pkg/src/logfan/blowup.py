"""Blow-up chart algebra: the substitutions b_{f,m}, the matrix of p, and minors.

Chart coordinates on the affine chart of a chart permutation ``f`` are the
variables ``x_{i,j}`` with ``i`` in f(V_1) and ``j`` in f(V_2).  Every
polynomial below lives in the ring on all of these (n^2 variables); smaller
coordinate patches are obtained by setting the missing variables to zero.
"""

import random
from itertools import combinations
from typing import List, Optional, Sequence, Set, Tuple

from .errors import OutOfRange, PivotNotOne
from .glfan import ChartPermutation, Elem
from .linalg import rank
from .poly import MonomialMap, PolyMatrix, SparsePoly
from .polyhedra import VerificationReport

Var = Tuple[Elem, Elem]

MAX_MINOR_N = 4


def chart_variables(f: ChartPermutation) -> Tuple[Var, ...]:
    return tuple((i, j) for i in sorted(f.image(1)) for j in sorted(f.image(2)))


def pivot_variable(f: ChartPermutation, d: int) -> Var:
    return f.pivot(d)


def patch_variables(f: ChartPermutation, m: int) -> Set[Var]:
    """Coordinates of the patch F_{f,m}: the first m pivots and the two blocks past row m."""
    later = range(m + 1, f.n + 1)
    out = {f.pivot(l) for l in range(1, m + 1)}
    out |= {(i, j) for i in f.block(1, 1, later) for j in f.block(2, 2, later)}
    out |= {(i, j) for i in f.block(1, 2, later) for j in f.block(2, 1, later)}
    return out


def blowup_substitution(f: ChartPermutation, m: int) -> MonomialMap:
    """``x_{i,j} -> x_pivot(m) * x_{i,j}`` on the mixed-type pairs past row m."""
    if not 1 <= m <= f.n:
        raise OutOfRange(f"m={m} outside 1..{f.n}")
    variables = chart_variables(f)
    idx = {v: k for k, v in enumerate(variables)}
    p = idx[f.pivot(m)]
    later = range(m + 1, f.n + 1)
    images = {}
    for i in f.image(1, later):
        for j in f.image(2, later):
            if i[1] != j[1]:
                e = [0] * len(variables)
                e[idx[(i, j)]] += 1
                e[p] += 1
                images[(i, j)] = (1, tuple(e))
    return MonomialMap(variables, images)


def composite_substitution(f: ChartPermutation, d: int) -> MonomialMap:
    """``b_{f,1} o ... o b_{f,d}``: apply ``b_{f,d}`` first on points."""
    if not 1 <= d <= f.n:
        raise OutOfRange(f"d={d} outside 1..{f.n}")
    c = blowup_substitution(f, 1)
    for m in range(2, d + 1):
        c = c @ blowup_substitution(f, m)
    return c


def pivot_monomial(f: ChartPermutation, d: int) -> Tuple[int, ...]:
    """Exponents of ``x_pivot(1)^d x_pivot(2)^(d-1) ... x_pivot(d)``."""
    variables = chart_variables(f)
    idx = {v: k for k, v in enumerate(variables)}
    e = [0] * len(variables)
    for l in range(1, d + 1):
        e[idx[f.pivot(l)]] = d - l + 1
    return tuple(e)


def matrix_blocks(f: ChartPermutation):
    """Row blocks and column blocks of the matrix of p, in printed order."""
    rows = [f.block(1, 1), f.block(2, 1), f.block(1, 2), f.block(2, 2)]
    cols = [[(1, j) for j in f.block(2, 1)], [(1, j) for j in f.block(2, 2)],
            [(2, j) for j in f.block(2, 1)], [(2, j) for j in f.block(2, 2)]]
    return rows, cols


def matrix_of_p(f: ChartPermutation) -> PolyMatrix:
    """The 2n x 2n matrix of p in the chart's adapted bases.

    Rows are labelled by elements of V, columns by ``(copy, j)`` with ``j`` in
    f(V_2); the four diagonal blocks are ``x_{f(V1)_1, f(V2)_2}``, identity,
    ``x_{f(V1)_2, f(V2)_1}``, identity.
    """
    variables = chart_variables(f)
    idx = {v: k for k, v in enumerate(variables)}
    nv = len(variables)
    row_blocks, col_blocks = matrix_blocks(f)
    row_labels = [e for b in row_blocks for e in b]
    col_labels = [c for b in col_blocks for c in b]
    ri = {e: k for k, e in enumerate(row_labels)}
    ci = {c: k for k, c in enumerate(col_labels)}

    def var(i, j):
        e = [0] * nv
        e[idx[(i, j)]] = 1
        return SparsePoly.monomial(e)

    entries = {}
    for i in f.block(1, 1):
        for j in f.block(2, 2):
            entries[ri[i], ci[(1, j)]] = var(i, j)
    for j in f.block(2, 1):
        entries[ri[j], ci[(1, j)]] = SparsePoly.const(nv, 1)
    for i in f.block(1, 2):
        for j in f.block(2, 1):
            entries[ri[i], ci[(2, j)]] = var(i, j)
    for j in f.block(2, 2):
        entries[ri[j], ci[(2, j)]] = SparsePoly.const(nv, 1)
    return PolyMatrix(row_labels, col_labels, nv, entries)


def substituted_matrix(f: ChartPermutation, d: int) -> PolyMatrix:
    """Matrix of p pulled back to the patch F_{f,d} through the composite map."""
    c = composite_substitution(f, d)
    keep = patch_variables(f, d)
    mask = [v not in keep for v in chart_variables(f)]
    return matrix_of_p(f).map_entries(lambda p: c.apply(p).set_zero(mask))


def distinguished_minor_labels(f: ChartPermutation, d: int):
    """Row and column labels of the minor that equals the pivot monomial.

    Rows: f(V1^{<=d})_1, f(V2)_1, f(V1^{<=d})_2, f(V2)_2.  The column index
    sets read f(V1)_2, f(V2^{<=d})_2, f(V1^{<=d})_2, f(V2)_2 in the four
    column blocks; an f(V1) element standing in a column block is read
    through its row partner ``f(l,1) -> f(l,2)``.  Returns
    ``(rows, cols, translated, problems)``.
    """
    first = range(1, d + 1)
    rows = f.block(1, 1, first) + f.block(2, 1) + f.block(1, 2, first) + f.block(2, 2)
    partner = {f(l, 1): f(l, 2) for l in range(1, f.n + 1)}
    _, col_blocks = matrix_blocks(f)
    wanted = [(1, f.block(1, 2)), (1, f.block(2, 2, first)),
              (2, f.block(1, 2, first)), (2, f.block(2, 2))]
    cols, translated, problems = [], 0, []
    for (copy, elems), block in zip(wanted, col_blocks):
        for e in elems:
            label = (copy, e)
            if label not in block and e in partner:
                label = (copy, partner[e])
                translated += 1
            if label not in block:
                problems.append({"copy": copy, "element": list(e)})
                continue
            cols.append(label)
    if len(rows) != len(cols) or len(set(cols)) != len(cols):
        problems.append({"rows": len(rows), "cols": len(cols)})
    return rows, cols, translated, problems


def verify_minor_divisibility(f: ChartPermutation, d: int) -> VerificationReport:
    """Every (n+d)-minor of the pulled-back matrix is divisible by the pivot
    monomial, and the distinguished minor equals it up to sign."""
    n = f.n
    if not 1 <= d <= n or n > MAX_MINOR_N:
        raise OutOfRange(f"need 1 <= d <= n <= {MAX_MINOR_N}, got n={n}, d={d}")
    M = substituted_matrix(f, d)
    mono = pivot_monomial(f, d)
    report = VerificationReport()
    checked = 0
    first_bad = None
    for rows, cols, minor in M.minors(n + d):
        checked += 1
        if first_bad is None and not minor.divisible_by_monomial(mono):
            first_bad = {"rows": [list(M.row_labels[r]) for r in rows],
                         "cols": [[M.col_labels[c][0], list(M.col_labels[c][1])] for c in cols]}
    report.record("all_divisible", first_bad is None, first_bad)

    rows, cols, translated, problems = distinguished_minor_labels(f, d)
    ok = False
    if not problems:
        ri = {e: k for k, e in enumerate(M.row_labels)}
        ci = {c: k for k, c in enumerate(M.col_labels)}
        value = M.minor(sorted(ri[r] for r in rows), sorted(ci[c] for c in cols))
        sm = value.as_signed_monomial()
        ok = sm is not None and abs(sm[0]) == 1 and sm[1] == mono
    report.record("distinguished_ok", ok, {"problems": problems} if problems else None)
    report.details.update({"n": n, "f": f.encode(), "d": d, "minors_checked": checked,
                           "column_labels_translated": translated})
    return report


def blowup_report_json(report: VerificationReport) -> dict:
    d = report.details
    return {"n": d["n"], "f": d["f"], "d": d["d"], "minors_checked": d["minors_checked"],
            "all_divisible": report.checks["all_divisible"],
            "distinguished_ok": report.checks["distinguished_ok"]}


def boundary_determinant(f: ChartPermutation) -> SparsePoly:
    """Determinant of the matrix of p pulled back to F_{f,n}."""
    return substituted_matrix(f, f.n).det()


def random_chart(n: int, rng: random.Random) -> ChartPermutation:
    """A uniformly random element of R."""
    ones = [(k, 1) for k in range(1, n + 1)]
    twos = [(k, 2) for k in range(1, n + 1)]
    rng.shuffle(ones)
    rng.shuffle(twos)
    rows = []
    for d in range(n):
        a, b = ones[d], twos[d]
        rows.append((a, b) if rng.random() < 0.5 else (b, a))
    return ChartPermutation(tuple(rows))


def schur_rank_identity(M: Sequence[Sequence], pivot_row: int, pivot_col: int) -> bool:
    """``rank(M) == 1 + rank(M')`` where M' is the Schur complement at a unit pivot."""
    if M[pivot_row][pivot_col] != 1:
        raise PivotNotOne(f"entry at ({pivot_row}, {pivot_col}) is {M[pivot_row][pivot_col]}")
    reduced = [[M[i][j] - M[i][pivot_col] * M[pivot_row][j]
                for j in range(len(M[0])) if j != pivot_col]
               for i in range(len(M)) if i != pivot_row]
    reduced = [r for r in reduced if r]
    return rank(M) == 1 + rank(reduced)
