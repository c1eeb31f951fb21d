## CP^2 with a circle action
## three fixed points, one four-dimensional piece, no two-spheres

from gkmcalc import CohomologyClass, check_class, hilbert, localization_residue, solve_degree
from gkmcalc.corpus import get

space = get("cp2_s1").space()
stratum = space.strata[0]

for p in space.fixed_points:
    w1, w2 = stratum.weights(p)
    print(p, "weights", w1.as_polynomial().format(space.variables), w2.as_polynomial().format(space.variables))

print("sum of 1/(c1*c2):", stratum.residue_sum())  # has to vanish

## degree by degree
for k in range(4):
    print("degree", 2 * k)
    for c in solve_degree(space, k):
        print("   ", c)

data = hilbert(space, 5)
print("h =", data.equivariant)   # 1, 2, 3, 3, 3, ...
print("betti =", data.betti_vector, "consistent:", data.consistent)

## membership, and why (0, x, 3x) fails
good = CohomologyClass.parse(space, {"p1": "0", "p2": "x", "p3": "2*x"})
bad = CohomologyClass.parse(space, {"p1": "0", "p2": "x", "p3": "3*x"})
print(good, "->", check_class(space, good).member)
rep = check_class(space, bad)
print(bad, "->", rep.member, [str(v.provenance) for v in rep.violations])

r = localization_residue(bad, stratum)
print("localization sum leaves remainder", r.remainder.format(space.variables))
