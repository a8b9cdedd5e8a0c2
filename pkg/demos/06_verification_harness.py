#!/usr/bin/env python3
# The self-checking layer: replaying structural claims about c-ideals
# against real algebras, fuzzing random solvable inputs, and the JSON
# document format that makes every failure reproducible.

from cideals import (
    GF,
    Q,
    CIdealVerdict,
    builtin,
    fuzz,
    parse,
    run_suite,
    serialize,
)

# Eleven replayable claims, T1 through T11.  Each report carries a
# status, a reason when not passing, and witnesses that replay.
h3 = builtin("heisenberg", GF(3), 3)
print("all suites on h3/GF(3):")
for r in run_suite(h3):
    print(f"  {r.theorem_id:>4}  {r.status:<8} {r.seconds:.3f}s")

# Suites whose premises fail are passes with the premise recorded;
# suites that need machinery unavailable over a field are skipped with
# the reason spelled out.
t2q = builtin("t", Q, 2)
print("\nselected suites on t(2)/Q:")
for r in run_suite(t2q, suites="T1,T7,T8"):
    line = f"  {r.theorem_id:>4}  {r.status:<8}"
    if r.reason:
        line += f" {r.reason}"
    print(line)

# The harness accepts a replacement decision procedure, which is how
# it checks itself: a hook that always answers yes must be caught.
def liar(alg, b, budget):
    return CIdealVerdict("yes", None, "liar", False)

sl2 = builtin("sl2", GF(3))
(report,) = run_suite(sl2, "T1", decide=liar)
print("\ncorrupted decision procedure on sl2:", report.status)
print("  reason:", report.reason)
print("  witnesses:", report.witnesses)

# Fuzzing: deterministic random solvable algebras, all suites, failures
# packaged with a serialized copy of the offending algebra.
result = fuzz(seed=7, count=3, field=GF(2), suites="T1,T7,T8")
print("\nfuzz over GF(2):", result.count, "algebras,",
      len(result.reports), "reports,", result.failure_count, "failures")
for r in result.reports[:4]:
    print(f"  {r.algebra_id:<24} {r.theorem_id:>4}  {r.status}")

# Algebras travel as one-line JSON documents with string scalars, so
# byte-exact round trips are part of the contract.
doc = serialize(builtin("t", GF(3), 2))
print("\ndocument:", doc.strip())
print("round trip is exact:", serialize(parse(doc)) == doc)
