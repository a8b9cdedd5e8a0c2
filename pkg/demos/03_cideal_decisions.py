#!/usr/bin/env python3
# Deciding whether a subalgebra B is a c-ideal: some ideal C must give
# L = B + C with B meet C inside the core of B (the largest ideal of
# the whole algebra contained in B).  Every yes comes with a verified
# certificate C; a finite-field no is backed by a complete scan.

from cideals import (
    GF,
    Q,
    Subspace,
    builtin,
    is_cideal,
    line_cideal,
    parse_subspace,
    subspace_text,
    verify_certificate,
)

sl2 = builtin("sl2", GF(5))
f5 = GF(5)

# Ideals are always c-ideals: take C = L.
full = Subspace.full(f5, 3)
v = is_cideal(sl2, full)
print("whole algebra:", v.answer, "via", v.method)

# One-dimensional subalgebras have a clean decision rule: the line Fx
# is a c-ideal exactly when it is an ideal or x lies outside the
# derived algebra.  The rule is decisive over every field.
e = (f5.scalar(1), f5.scalar(0), f5.scalar(0))
v = line_cideal(sl2, e)
print("line through e:", v.answer, "via", v.method,
      "(e sits inside [L, L] and the line is not an ideal)")

outside = (Q.scalar(1), Q.scalar(0), Q.scalar(0))
t2q = builtin("t", Q, 2)
v = line_cideal(t2q, outside)
print("line in t(2)/Q:", v.answer, "via", v.method,
      "certificate:", subspace_text(v.certificate))

# The Borel subalgebra of sl2 is the classic negative example.  Over a
# finite field the decision scans every ideal, so the no is exhaustive.
borel = parse_subspace(f5, 3, "1,0,0; 0,0,1")
v = is_cideal(sl2, borel)
print("\nBorel of sl2/GF(5):", v.answer,
      "via", v.method, "exhaustive:", v.exhaustive)

# Over the rationals there is no finite ideal scan.  The decision tries
# derived terms and a lattice of characteristic ideals as candidate
# certificates; a found certificate is still verified, but a miss is
# reported as unknown rather than no.
sl2q = builtin("sl2", Q)
borel_q = parse_subspace(Q, 3, "1,0,0; 0,0,1")
v = is_cideal(sl2q, borel_q)
print("Borel of sl2/Q:", v.answer, "exhaustive:", v.exhaustive)

diag = parse_subspace(Q, 3, "1,0,0; 0,0,1")
v = is_cideal(t2q, diag)
print("diagonal of t(2)/Q:", v.answer, "via", v.method,
      "certificate:", subspace_text(v.certificate))
assert verify_certificate(t2q, diag, v.certificate)
print("certificate re-checked against the definition: ok")

# Certificates can be validated by hand too.
h3 = builtin("heisenberg", GF(3), 3)
b = parse_subspace(GF(3), 3, "1,0,0")
c = parse_subspace(GF(3), 3, "0,1,0; 0,0,1")
print("\nhand-picked certificate for a line in h3:",
      verify_certificate(h3, b, c))
bad_c = parse_subspace(GF(3), 3, "0,1,0")
print("a non-spanning candidate is rejected:",
      verify_certificate(h3, b, bad_c))
