#!/usr/bin/env python3
# Walking the subspace lattice of a finite-field algebra: counting,
# enumerating, filtering to subalgebras and ideals, and the budget
# guard that keeps blowups honest.

from cideals import (
    GF,
    BudgetExceeded,
    builtin,
    core,
    enum_ideals,
    enum_subalgebras,
    enum_subspaces,
    gaussian_binomial,
    maximal_subalgebras,
    one_dim_ideals,
    parse_subspace,
    projective_points,
    subspace_count,
    subspace_text,
)

# How many k-dim subspaces does GF(p)^n have?  Gaussian binomials know.
print("2-dim subspaces of GF(2)^4:", gaussian_binomial(4, 2, 2))
print("all subspaces of GF(3)^3: ", subspace_count(3, 3))

h3 = builtin("heisenberg", GF(2), 3)

# Enumeration is deterministic: dimensions ascending, then a fixed
# order within each dimension.  Every subspace appears exactly once in
# reduced-row-echelon form.
subs = list(enum_subspaces(h3))
print("\nsubspaces of h3/GF(2):", len(subs))
planes = list(enum_subspaces(h3, dims=(2,)))
print("planes only:", [subspace_text(s) for s in planes])

algs = enum_subalgebras(h3)
ideals = enum_ideals(h3)
print("subalgebras:", len(algs), " ideals:", len(ideals))

# Maximal subalgebras drive most of the structure theory downstream.
maxes = maximal_subalgebras(h3)
print("\nmaximal subalgebras:")
for m in maxes:
    print("  ", subspace_text(m))

# The core of a subalgebra: its largest subspace that is an ideal of
# the whole algebra.  For an ideal that is the subalgebra itself.
sl2 = builtin("sl2", GF(5))
borel = parse_subspace(GF(5), 3, "1,0,0; 0,0,1")
print("\ncore of the Borel in sl2:", subspace_text(core(sl2, borel)) or "0")
print("core of an ideal is itself:",
      core(h3, ideals[2]) == ideals[2])

# Lines through the origin, one representative per projective point.
pts = list(projective_points(GF(3), 2))
print("\nprojective points of GF(3)^2:", [tuple(c.text() for c in p) for p in pts])

# One-dimensional ideals work over the rationals too (no enumeration,
# just eigenspace bookkeeping of the adjoint action).
from cideals import Q

h3q = builtin("heisenberg", Q, 3)
print("1-dim ideals of h3/Q:", [subspace_text(s) for s in one_dim_ideals(h3q)])

# Budgets turn exponential scans into errors instead of hangs.
big = builtin("t", GF(3), 3)  # dim 6: around 66k subspaces
try:
    list(enum_subspaces(big, budget=1000))
except BudgetExceeded as err:
    print("\nbudget guard:", err)
