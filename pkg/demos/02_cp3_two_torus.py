## CP^3 with a two-torus: a CP^2 piece plus three spheres to the fourth point

from gkmcalc import hilbert, multiply_classes, solve_degree, check_class, coordinates
from gkmcalc.corpus import get

space = get("cp3_t2").space()
for s in space.strata:
    print(s.kind, s.points, s.direction.as_polynomial().format(space.variables))

data = hilbert(space, 6)
print("h =", data.equivariant)   # (1 + t^2 + t^4 + t^6) / (1 - t^2)^2
print("q =", data.betti)

## products of degree-2 classes stay in the image
b1 = solve_degree(space, 1)
for i, a in enumerate(b1):
    for j, b in enumerate(b1[i:], start=i):
        prod, coords = multiply_classes(space, a, b)
        print(f"e{i}*e{j} = ", " + ".join(f"{c}*f{n}" for n, c in enumerate(coords) if c))

## coordinates of an arbitrary degree-2 member
a, b = b1[0], b1[-1]
mixed = a.scale(3) + b.scale(-2)
print(mixed, check_class(space, mixed).member, [str(x) for x in coordinates(space, mixed)])
