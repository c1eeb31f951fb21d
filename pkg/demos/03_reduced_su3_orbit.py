## a reduced SU(3) coadjoint orbit: four fixed points on one four-dimensional piece
## the weights at p2 and p3 have opposite signs, so they are not index 0 or 4

from gkmcalc import hilbert, solve_degree
from gkmcalc.constraints import constraint_matrix
from gkmcalc.corpus import get
from gkmcalc.exactalg import rank

space = get("su3_reduced").space()
s = space.strata[0]
print("multipliers", dict(zip(s.points, [tuple(map(str, m)) for m in s.multipliers])))
print("localization weights", [str(w) for w in s.localization_weights()])

data = hilbert(space, 5)
print("h =", data.equivariant)
print("betti =", data.betti_vector)   # b2 = 2

## the four-point piece contributes one independent ABBV row in degree 1
system = constraint_matrix(space, 1)
for row, prov in zip(system.matrix.rows, system.provenance):
    print(prov.family, prov.detail, [str(x) for x in row])
print("rank", rank(system.matrix), "of", system.matrix.ncols, "columns")

for c in solve_degree(space, 1):
    print(c)
