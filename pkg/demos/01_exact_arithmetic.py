#!/usr/bin/env python3
# Exact scalars and exact linear algebra: no floats anywhere.

from cideals import GF, Q, Matrix, Subspace, char_poly, eigenspace, nullspace, rref

# Two kinds of field, one interface.  Rationals wrap Fraction, finite
# fields store residues mod a prime.
f5 = GF(5)
a = f5.scalar(3)
b = f5.scalar(4)
print("over GF(5):", a, "+", b, "=", a + b)          # 3 + 4 = 2
print("inverse of", a, "is", a.inverse())            # 3 * 2 = 6 = 1

r = Q.scalar("2/3")
s = Q.scalar("-1/6")
print("over Q:", r, "+", s, "=", r + s)
print("scalars render as text:", (r + s).text())

# Matrices are immutable and field-tagged.
m = Matrix.from_rows(Q, [
    [Q.scalar(x) for x in row]
    for row in ((1, 2, 3), (2, 4, 6), (1, 0, 1))
])
red, pivots = rref(m)
print("\nrref pivots:", pivots)
for i in range(red.rows):
    print("  ", [e.text() for e in red.row(i)])

# rank-nullity, exactly
ns = nullspace(m)
print("rank", len(pivots), "+ nullity", ns.dim, "=", m.cols)

# Characteristic polynomial, ascending coefficients, always monic.
# Works over any field including small characteristic.
comp = Matrix.from_rows(GF(2), [
    [GF(2).scalar(x) for x in row]
    for row in ((0, 0, 1), (1, 0, 0), (0, 1, 1))
])
coeffs = char_poly(comp)
print("\nchar poly over GF(2):", [c.text() for c in coeffs])

# Eigenspaces come back as canonical subspaces.
diag = Matrix.from_rows(Q, [
    [Q.scalar(x) for x in row]
    for row in ((2, 0, 0), (0, 2, 0), (0, 0, 7))
])
e2 = eigenspace(diag, Q.scalar(2))
print("eigenspace for 2 has dim", e2.dim)

# Subspaces are stored by their reduced row echelon basis, so equality
# is structural and sums/intersections are canonical.
u = Subspace.from_vectors(Q, 3, [(Q.scalar(1), Q.scalar(0), Q.scalar(0))])
w = Subspace.from_vectors(Q, 3, [(Q.scalar(1), Q.scalar(1), Q.scalar(0))])
both = u + w
print("\ndim(u + w) =", both.dim, " dim(u & w) =", (u & w).dim)
print("modular law bookkeeping:", both.dim == u.dim + w.dim - (u & w).dim)
