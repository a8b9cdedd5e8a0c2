"""The c-ideal decision engine.

A subalgebra B of L is a *c-ideal* when some ideal C of L satisfies
L = B + C with B ∩ C contained in the core of B (the largest ideal of L
inside B).  Ideals are always c-ideals with witness C = L, and a line
Fx is a c-ideal exactly when it is an ideal or x lies outside [L, L];
that line rule is decisive over every field.

For anything else the problem is reduced modulo the core: B is a
c-ideal of L exactly when B/B_L has an ideal complement in L/B_L, which
pins the witness dimension.  Over a finite field the reduced algebra's
ideals are enumerated at that dimension, so Yes and No are both exact.
Over Q a Yes is still possible through ideals that can be constructed
canonically (derived and central series terms, centralizers, and their
sums and intersections); when none of those work the honest answer is
Unknown.  Every Yes carries a certificate that is re-verified against
the definition before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotSubalgebra, PreconditionUnmet, ZeroVector
from .linalg import Subspace, subspace_text, vector_is_zero
from .liealg import LieAlgebra, quotient_algebra
from .lattice import DEFAULT_BUDGET, core, enum_ideals

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

METHOD_IDEAL = "ideal_is_trivially_cideal"
METHOD_LINE = "line_rule"
METHOD_ENUM = "exhaustive_enumeration"
METHOD_LATTICE = "characteristic_lattice"
METHOD_DERIVED = "derived_term"


@dataclass(frozen=True)
class CIdealVerdict:
    """Outcome of a c-ideal decision.

    ``certificate`` is a witness ideal C when the answer is yes.
    ``exhaustive`` records that the verdict is definitive: every yes is
    (certificates are verified), every finite-field no is (the ideal
    enumeration is complete), and the line rule's no is decisive over
    any field; only unknown is non-definitive.
    """

    answer: str
    certificate: Subspace | None = None
    method: str = ""
    exhaustive: bool = False

    def as_dict(self) -> dict:
        return {
            "answer": self.answer,
            "certificate": None if self.certificate is None else subspace_text(self.certificate),
            "method": self.method,
            "exhaustive": self.exhaustive,
        }


def verify_certificate(l: LieAlgebra, b: Subspace, c: Subspace) -> bool:
    """Check the definition directly: C ideal, B + C = L, B ∩ C <= core(B)."""
    return (
        l.is_ideal(c)
        and (b + c).dim == l.dim
        and (b & c) <= core(l, b)
    )


def _yes(l, b, c, method) -> CIdealVerdict:
    if not verify_certificate(l, b, c):
        raise AssertionError(
            f"internal error: {method} produced a certificate that fails re-verification"
        )
    return CIdealVerdict(YES, c, method, True)


@lru_cache(maxsize=512)
def _derived_subspace(l: LieAlgebra) -> Subspace:
    full = l.full_space()
    return l.span_product(full, full)


def line_cideal(l: LieAlgebra, x: tuple) -> CIdealVerdict:
    """Decide the line Fx, exactly, over any field.

    Fx is a c-ideal iff it is an ideal or x lies outside [L, L].  In the
    second case a concrete witness exists: the span of [L, L] and all
    but one of its complement representatives is a codimension-one
    ideal that misses x.
    """
    if vector_is_zero(x):
        raise ZeroVector("a line needs a nonzero spanning vector")
    line = Subspace.from_vectors(l.field, l.dim, [x])
    if l.is_ideal(line):
        return _yes(l, line, l.full_space(), METHOD_LINE)
    derived = _derived_subspace(l)
    if x in derived:
        return CIdealVerdict(NO, None, METHOD_LINE, True)
    enlarged = derived + line
    cert = Subspace.from_vectors(
        l.field, l.dim, derived.vectors() + enlarged.complement_reps()
    )
    return _yes(l, line, cert, METHOD_LINE)


def is_cideal(l: LieAlgebra, b: Subspace, budget: int = DEFAULT_BUDGET) -> CIdealVerdict:
    """Decide whether the subalgebra b is a c-ideal of l.

    Exact over finite fields.  Over Q the answer is yes (verified
    certificate), no (only from the decisive line rule) or unknown.
    """
    if not l.is_subalgebra(b):
        raise NotSubalgebra("c-ideal decisions apply to subalgebras")
    if l.is_ideal(b):
        return _yes(l, b, l.full_space(), METHOD_IDEAL)
    if b.dim == 1:
        return line_cideal(l, b.vectors()[0])

    b_core = core(l, b)
    reduced, project, lift = quotient_algebra(l, b_core)
    b_red = Subspace.from_vectors(
        reduced.field, reduced.dim, [project(v) for v in b.vectors()]
    )
    target = reduced.dim - b_red.dim

    def lifted(c_red: Subspace) -> Subspace:
        vecs = [lift(v) for v in c_red.vectors()] + list(b_core.vectors())
        return Subspace.from_vectors(l.field, l.dim, vecs)

    if l.field.p is not None:
        for cand in enum_ideals(reduced, budget):
            if cand.dim == target and (b_red + cand).dim == reduced.dim:
                return _yes(l, b, lifted(cand), METHOD_ENUM)
        return CIdealVerdict(NO, None, METHOD_ENUM, True)

    for cand in reduced.derived_series().terms[1:]:
        if cand.dim == target and (b_red + cand).dim == reduced.dim:
            return _yes(l, b, lifted(cand), METHOD_DERIVED)
    for cand in characteristic_ideals(reduced):
        if cand.dim == target and (b_red + cand).dim == reduced.dim:
            return _yes(l, b, lifted(cand), METHOD_LATTICE)
    return CIdealVerdict(UNKNOWN, None, METHOD_LATTICE, False)


def is_cideal_by_scan(l: LieAlgebra, b: Subspace, budget: int = DEFAULT_BUDGET) -> CIdealVerdict:
    """Definition-faithful oracle: try every ideal of L as the witness.

    Slower than :func:`is_cideal` but shares none of its reduction
    logic, which is what makes it useful as a cross-check.  Finite
    fields only.
    """
    if not l.is_subalgebra(b):
        raise NotSubalgebra("c-ideal decisions apply to subalgebras")
    b_core = core(l, b)
    for cand in enum_ideals(l, budget):
        if (b + cand).dim == l.dim and (b & cand) <= b_core:
            return CIdealVerdict(YES, cand, METHOD_ENUM, True)
    return CIdealVerdict(NO, None, METHOD_ENUM, True)


@lru_cache(maxsize=128)
def characteristic_ideals(l: LieAlgebra, cap: int = 256) -> tuple:
    """Ideals available without enumeration, closed under + and ∩.

    Seeds: 0, L, the derived and lower-central terms, the ascending
    central series, and the centralizers of all of those.  The closure
    is capped to keep the search finite; order is deterministic.
    """
    found = {l.zero_space(), l.full_space()}
    seeds = set()
    seeds.update(l.derived_series().terms)
    seeds.update(l.lower_central_series().terms)
    z = l.zero_space()
    upper = [z]
    while True:
        nxt = l.transporter(l.full_space(), upper[-1])
        if nxt == upper[-1]:
            break
        upper.append(nxt)
    seeds.update(upper)
    for s in list(seeds):
        seeds.add(l.centralizer(s))
    found.update(seeds)
    while len(found) < cap:
        ordered = sorted(found, key=Subspace.sort_key)
        new = set()
        for i, u in enumerate(ordered):
            for v in ordered[i + 1 :]:
                for w in (u + v, u & v):
                    if w not in found:
                        new.add(w)
        if not new:
            break
        for w in sorted(new, key=Subspace.sort_key):
            if len(found) >= cap:
                break
            found.add(w)
    for u in found:
        assert l.is_ideal(u)
    return tuple(sorted(found, key=Subspace.sort_key))


@dataclass(frozen=True)
class FrattiniConsequence:
    """Result of :func:`frattini_consequence_check`.

    When the premise fails (b is not a c-ideal of l) the check passes
    vacuously and the two conclusion fields are None.
    """

    passed: bool
    premise_holds: bool
    verdict: CIdealVerdict
    is_ideal: bool | None
    inside_frattini_ideal: bool | None

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "premise_holds": self.premise_holds,
            "verdict": self.verdict.as_dict(),
            "is_ideal": self.is_ideal,
            "inside_frattini_ideal": self.inside_frattini_ideal,
        }


def frattini_consequence_check(
    l: LieAlgebra,
    b: Subspace,
    c_sub: Subspace,
    budget: int = DEFAULT_BUDGET,
) -> FrattiniConsequence:
    """Check: a c-ideal lying inside a Frattini subalgebra is an ideal
    inside the Frattini ideal.

    ``b`` must sit inside F(c_sub) for a subalgebra c_sub of l (raises
    PreconditionUnmet otherwise).  Finite fields only, since Frattini
    subalgebras come from maximal-subalgebra enumeration.
    """
    from .structure import frattini, frattini_of_subalgebra

    if not l.is_subalgebra(b):
        raise NotSubalgebra("b must be a subalgebra")
    if not l.is_subalgebra(c_sub):
        raise NotSubalgebra("c_sub must be a subalgebra")
    f_c = frattini_of_subalgebra(l, c_sub, budget)
    if not b <= f_c:
        raise PreconditionUnmet(
            "b does not lie inside the Frattini subalgebra of c_sub"
        )
    verdict = is_cideal(l, b, budget)
    if verdict.answer != YES:
        return FrattiniConsequence(True, False, verdict, None, None)
    ideal_ok = l.is_ideal(b)
    _, phi = frattini(l, budget)
    inside = b <= phi
    return FrattiniConsequence(ideal_ok and inside, True, verdict, ideal_ok, inside)
