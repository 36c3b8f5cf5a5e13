# One-parameter subgroups t -> diag(t^a) and where their limits land.
from itertools import product

from logfan import (chart_of_split_permutation, cone_of_split_permutation, enumerate_split_permutations,
                    limit_exponents)

sp = enumerate_split_permutations(2)[1]
f = chart_of_split_permutation(sp)
print("chart for", sp.label, ":", f.encode())

for a in [(-3, 5), (2, 5), (0, 0)]:
    e = limit_exponents(f, a)
    print(a, "exponents", e, "limit" if min(e) >= 0 else "no limit",
          "| in cone:", cone_of_split_permutation(sp).contains(a))

# every integer vector in a box has a limit in exactly the charts whose cone contains it
n = 3
for a in product(range(-2, 3), repeat=n):
    hits = [sp.label for sp in enumerate_split_permutations(n)
            if min(limit_exponents(chart_of_split_permutation(sp), a)) >= 0]
    if a in [(1, -2, 2), (-1, 0, 2), (0, 0, 0)]:
        print(a, "->", hits)
