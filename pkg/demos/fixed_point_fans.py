# Fans of the compactifications of SO(2r+1), Sp(2r) and SO(2r) inside the GL one.
from logfan import build_gl_fan, make_embedding, restricted_fan, verify_fixed
from logfan.fixed_points import chamber_orderings, fixed_report_json
from logfan.linalg import smith_invariants

for kind, r in [("B", 1), ("B", 2), ("C", 2), ("D", 2), ("D", 3)]:
    emb = make_embedding(kind, r)
    fan = restricted_fan(build_gl_fan(emb.n), emb)
    print(kind, r, "labels", fan.labels, [c.halfspaces for c in fan.maximal_cones])
    print("   ", fixed_report_json(verify_fixed(kind, r)))

# type D: the chamber's rays span an index-2 sublattice
ch = make_embedding("D", 3).anti_chamber
print("D3 chamber rays", ch.rays, "invariant factors", smith_invariants([list(v) for v in ch.rays]))

# only translates of -W whose trace is full-dimensional in -W' are used
print("orderings for D3:", chamber_orderings(make_embedding("D", 3)))
print("untranslated trace for D2:", restricted_fan(build_gl_fan(4), make_embedding("D", 2), saturate=False).labels)
