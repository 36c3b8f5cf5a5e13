# The fan of the GL(n) compactification: one smooth cone per split permutation.
from logfan import anti_dominant_chamber, build_gl_fan, cone_of_split_permutation, enumerate_split_permutations
from logfan.polyhedra import fan_verify

n = 3
sps = enumerate_split_permutations(n)
print(len(sps), "split permutations for n =", n)

for sp in sps:
    c = cone_of_split_permutation(sp)
    print(f"{sp.label:14s} signs={sp.signs}  rays={list(c.rays)}")

fan = build_gl_fan(n)
report = fan_verify(fan, anti_dominant_chamber(n))
print("checks:", report.checks)

# drop a cone and the tiling check points at the hole
broken = fan.without(fan.labels[0])
print("without", fan.labels[0], "->", fan_verify(broken, anti_dominant_chamber(n)).witnesses["tiling"])

print(build_gl_fan(2).to_json())
