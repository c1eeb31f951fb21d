## the exact arithmetic underneath: polynomials, linear forms, rref

from fractions import Fraction

from gkmcalc.exactalg import (
    LinearForm, Polynomial, RationalMatrix, nullspace_basis, parse_polynomial, rank,
    reduce_mod_linear, rref,
)

names = ("x", "y")
f = parse_polynomial("x^2 - 3/2*x*y + 4*y^2", names)
g = parse_polynomial("x - y", names)
print((f * g).format(names))

## reduce mod a linear form: substitute for its pivot variable
alpha = LinearForm([1, -1])
print(reduce_mod_linear(f, alpha).format(names))           # value on the line x = y
print(reduce_mod_linear(f * alpha.as_polynomial(), alpha))   # zero

prim, s = LinearForm([-4, 6]).primitive()
print(prim.as_polynomial().format(names), s)

## rref over the rationals, no floating point anywhere
m = RationalMatrix.from_rows([[2, 1, -1], [4, 2, Fraction(1, 3)], [6, 3, -2]])
res = rref(m)
print(res.pivots, res.rank)
for row in res.matrix.rows:
    print([str(x) for x in row])
print("kernel", [[str(x) for x in v] for v in nullspace_basis(m)])
print(rank(RationalMatrix.identity(3)))
