# Counting n-planes of F_q^(2n) by how they meet the two factors.
from logfan import census, in_stratum, intersection_dims
from logfan.fields import gl_order
from logfan.strata import SubspaceBasis

F = SubspaceBasis([(1, 0, 0, 0), (0, 1, 1, 0)])
inv = intersection_dims(F)
print("dims:", inv.d1, inv.d2, "| Z_d membership:", [in_stratum(F, d) for d in range(3)])

for n, q in [(1, 2), (2, 2), (3, 2), (2, 3)]:
    t = census(n, q)
    print(f"n={n} q={q} total={t.total} (expected {t.expected_total})", t.by_stratum,
          "| GL order", gl_order(n, q))

# the printed off-by-one variant, for comparison
t = census(2, 2)
print("rank convention     ", t.by_stratum)
print("displayed convention", t.by_stratum_displayed)
print(t.to_json_dict()["by_invariant"])
