#!/usr/bin/env python3
# Building Lie algebras from structure constants and asking the basic
# questions: brackets, Jacobi, series, centre, quotients.

from cideals import (
    GF,
    Q,
    LieAlgebra,
    Subspace,
    builtin,
    is_nilpotent,
    is_solvable,
    normalizer,
    subspace_text,
)

# A bracket table lists [e_i, e_j] for i < j only; antisymmetry and
# [x, x] = 0 are implied.  Missing pairs mean the bracket is zero.
# This is the 3-dimensional algebra with [x, y] = z.
h3 = LieAlgebra(
    Q,
    3,
    ("x", "y", "z"),
    {(0, 1): (Q.scalar(0), Q.scalar(0), Q.scalar(1))},
)
print("built", h3.names, "dim", h3.dim)
print("jacobi violations:", h3.validate())  # empty list means all good

x = (Q.scalar(1), Q.scalar(0), Q.scalar(0))
y = (Q.scalar(0), Q.scalar(1), Q.scalar(0))
print("[x, y] =", [c.text() for c in h3.bracket(x, y)])
print("[y, x] =", [c.text() for c in h3.bracket(y, x)])

# A violating table reports the offending basis triples.
bad = LieAlgebra(Q, 3, None, {
    (0, 1): (Q.scalar(0), Q.scalar(0), Q.scalar(1)),
    (0, 2): (Q.scalar(1), Q.scalar(0), Q.scalar(0)),
    (1, 2): (Q.scalar(0), Q.scalar(1), Q.scalar(0)),
})
for i, j, k, residual in bad.validate():
    print("violated at triple", (i, j, k),
          "residual", [c.text() for c in residual])

# Series.  Terms stop at the first repetition; a final zero term is a
# real term, not padding.
print("\nderived series dims:", [t.dim for t in h3.derived_series().terms])
print("lower central dims: ", [t.dim for t in h3.lower_central_series().terms])
print("solvable:", is_solvable(h3), " nilpotent:", is_nilpotent(h3))

t2 = builtin("t", GF(3), 2)  # upper triangular 2x2 matrices
print("\nt(2) over GF(3): lower central dims",
      [t.dim for t in t2.lower_central_series().terms])
print("t(2) solvable:", is_solvable(t2), " nilpotent:", is_nilpotent(t2))

# Centre, centralizers, normalizers all land in canonical subspaces.
print("\ncentre of h3:", subspace_text(h3.centre()))
line_x = Subspace.from_vectors(Q, 3, [x])
print("centralizer of x:", subspace_text(h3.centralizer(line_x)))
print("normalizer of span{x}:", subspace_text(normalizer(h3, line_x)))

# Quotients need an ideal; the centre always qualifies.
quot, proj, lift = h3.quotient(h3.centre())
print("\nh3 / centre has dim", quot.dim)
u = proj(x)
v = proj(y)
print("quotient bracket of the images:",
      [c.text() for c in quot.bracket(u, v)], "(abelian once z is gone)")

# Restriction to a subalgebra gives the induced structure constants.
sl2 = builtin("sl2", GF(5))
borel = Subspace.from_vectors(
    GF(5), 3,
    [(GF(5).scalar(1), GF(5).scalar(0), GF(5).scalar(0)),
     (GF(5).scalar(0), GF(5).scalar(0), GF(5).scalar(1))],
)
sub, into, back = sl2.restrict(borel)
print("\nBorel of sl2 restricted: dim", sub.dim,
      "solvable:", is_solvable(sub))
