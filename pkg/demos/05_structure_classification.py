#!/usr/bin/env python3
# Structure analysis: solvability invariants, Frattini and radical
# computations, and the classifier that predicts when every line is a
# c-ideal.

import json

from cideals import (
    GF,
    Q,
    abelian_socle,
    builtin,
    classify_line_cideals,
    derived_length,
    direct_sum,
    frattini,
    is_supersolvable,
    nilpotency_class,
    radicals,
    abelian_socle,
    structure_profile,
    subspace_text,
    supersolvable_flag,
)

h3 = builtin("heisenberg", GF(3), 3)
t2 = builtin("t", GF(3), 2)
sl2 = builtin("sl2", GF(3))

print("derived length:   h3 =", derived_length(h3),
      " t(2) =", derived_length(t2), " sl2 =", derived_length(sl2))
print("nilpotency class: h3 =", nilpotency_class(h3),
      " t(2) =", nilpotency_class(t2))

# Supersolvable algebras carry a complete flag of ideals, one dimension
# per step.  The flag itself is returned, not just a boolean.
flag = supersolvable_flag(t2)
print("\nflag of ideals in t(2):", [subspace_text(s) or "0" for s in flag])
print("sl2 supersolvable:", is_supersolvable(sl2))

# Frattini: intersection of maximal subalgebras, plus its core.
f, phi = frattini(h3)
print("\nFrattini subalgebra of h3:", subspace_text(f))
print("Frattini ideal of h3:     ", subspace_text(phi))

nil, solv = radicals(sl2)
print("radicals of sl2: nilpotent", subspace_text(nil) or "0",
      " solvable", subspace_text(solv) or "0")
print("socle of h3:", subspace_text(abelian_socle(h3)))

# The classifier sorts solvable algebras into three cases by when all
# of their lines are c-ideals:
#   cube_zero                  [[L,L],L] = 0
#   abelian_plus_almost_abelian  L = A (+) U with U = U^2 (+) Fx, [x,u] = u
#   neither                    some line fails
for label, alg in (
    ("h3", h3),
    ("t(2)", t2),
    ("sl2", sl2),
    ("abelian(1) + almost_abelian(3)",
     direct_sum(builtin("abelian", GF(5), 1), builtin("almost_abelian", GF(5), 3))),
):
    res = classify_line_cideals(alg)
    extra = ""
    if res.case == "abelian_plus_almost_abelian":
        extra = f"  abelian part: {subspace_text(res.abelian_part) or '0'}"
    print(f"{label:32} -> {res.case}{extra}")

# One-call overview; enumeration-backed fields are None over Q since
# there is nothing finite to enumerate.
profile = structure_profile(builtin("t", Q, 2))
print("\nprofile of t(2)/Q:")
print(json.dumps(profile.as_dict(), indent=2, sort_keys=True))
