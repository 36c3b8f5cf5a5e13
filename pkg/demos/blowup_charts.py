# Blow-up charts: monomial substitutions and the minors of the matrix of p.
import random

from logfan import (blowup_substitution, boundary_determinant, composite_substitution, matrix_of_p,
                    pivot_monomial, verify_minor_divisibility)
from logfan.blowup import chart_variables, random_chart, substituted_matrix
from logfan.glfan import SplitPermutation, chart_of_split_permutation

f = chart_of_split_permutation(SplitPermutation(1, (1, 2)))
names = ["x[%d.%d,%d.%d]" % (i + j) for i, j in chart_variables(f)]
print("chart", f.encode(), "variables", names)

print("b_1:", blowup_substitution(f, 1).images)
print("b_1 o b_2:", composite_substitution(f, 2).images)

M = matrix_of_p(f)
for row in M.to_lists():
    print(["0" if p.is_zero() else str(p.terms) for p in row])

for d in (1, 2):
    rep = verify_minor_divisibility(f, d)
    print(f"d={d}", rep.details["minors_checked"], "minors", rep.checks)

# on the deepest patch the determinant is a single monomial in the pivots
rng = random.Random(0)
g = random_chart(4, rng)
sign, exps = boundary_determinant(g).as_signed_monomial()
print(g.encode(), "det sign", sign, "exponents", exps, "expected", pivot_monomial(g, 4))

print("pulled-back matrix at d=2 has", len(substituted_matrix(f, 2).entries), "nonzero entries")
