"""Structural predicates and invariants.

Solvability, nilpotency and supersolvability; the ascending central
series; nilradical and solvable radical; Frattini subalgebra and ideal;
abelian socle; almost-abelian recognition; and the classifier for the
two shapes of algebra in which every line is a c-ideal (cube zero, or
an abelian ideal plus an almost-abelian ideal).

Radicals, Frattini objects and the socle rest on exhaustive ideal or
maximal-subalgebra enumeration, so they require a finite field; the
predicates and the classifier are pure linear algebra and work over Q
as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import Subspace, scale_vector, subspace_text
from .liealg import LieAlgebra, is_nilpotent, is_solvable, restricted_algebra
from .lattice import (
    DEFAULT_BUDGET,
    core,
    enum_ideals,
    maximal_subalgebras,
    one_dim_ideals,
)

CASE_CUBE_ZERO = "cube_zero"
CASE_SPLIT = "abelian_plus_almost_abelian"
CASE_NEITHER = "neither"


def is_abelian(l: LieAlgebra) -> bool:
    return not l._pairs


def derived_length(l: LieAlgebra) -> int | None:
    """Steps for the derived series to reach 0, or None if it never does."""
    terms = l.derived_series().terms
    return len(terms) - 1 if terms[-1].dim == 0 else None


def nilpotency_class(l: LieAlgebra) -> int | None:
    """Steps for the lower central series to reach 0, or None."""
    terms = l.lower_central_series().terms
    return len(terms) - 1 if terms[-1].dim == 0 else None


def upper_central_series(l: LieAlgebra) -> tuple:
    """0 = Z_0 <= Z_1 <= ... up to the hypercentre (ascending, stabilized)."""
    terms = [l.zero_space()]
    full = l.full_space()
    while True:
        nxt = l.transporter(full, terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return tuple(terms)


# ---------------------------------------------------------------------------
# supersolvability

def _refine_through(lower: Subspace, upper: Subspace, flag: list):
    # Extend the flag one dimension at a time from lower to upper.
    cur = lower
    for v in upper.vectors():
        if v in cur:
            continue
        cur = Subspace.from_vectors(cur.field, cur.ambient_dim, cur.vectors() + (v,))
        flag.append(cur)


def _nilpotent_flag(l: LieAlgebra) -> tuple:
    # Between consecutive terms of the ascending central series every
    # intermediate subspace is an ideal, so any refinement works.
    series = upper_central_series(l)
    flag = [l.zero_space()]
    for lower, upper in zip(series, series[1:]):
        _refine_through(flag[-1], upper, flag)
    return tuple(flag)


@lru_cache(maxsize=512)
def supersolvable_flag(l: LieAlgebra) -> tuple | None:
    """A complete flag of ideals 0 = I_0 < I_1 < ... < I_n = L, or None.

    Nilpotent algebras are refined through the ascending central
    series.  Otherwise the search recurses: for each line ideal, take
    the quotient and try to finish there, backtracking across the
    candidate lines.  Over Q the candidate lines come from the joint
    eigenspace families, which is exactly the set available to a
    rational structure; a None over Q means the rational form has no
    such flag.
    """
    if l.dim == 0:
        return (l.zero_space(),)
    if is_nilpotent(l):
        return _nilpotent_flag(l)
    for line in one_dim_ideals(l):
        reduced, project, lift = l.quotient(line)
        rest = supersolvable_flag(reduced)
        if rest is None:
            continue
        flag = [l.zero_space()]
        for w in rest:
            vecs = [lift(v) for v in w.vectors()] + list(line.vectors())
            flag.append(Subspace.from_vectors(l.field, l.dim, vecs))
        return tuple(flag)
    return None


def is_supersolvable(l: LieAlgebra) -> bool:
    return supersolvable_flag(l) is not None


# ---------------------------------------------------------------------------
# enumeration-backed invariants (finite fields)

def radicals(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple[Subspace, Subspace]:
    """(nilradical, solvable radical), verified against the ideal list.

    The nilradical is the sum of all nilpotent ideals and the radical
    the sum of all solvable ideals; both sums are checked to still have
    the defining property and to contain every contributing ideal.
    """
    ideals = enum_ideals(l, budget)
    nil = [i for i in ideals if is_nilpotent(l, i)]
    sol = [i for i in ideals if is_solvable(l, i)]
    nilrad = l.zero_space()
    for i in nil:
        nilrad = nilrad + i
    rad = l.zero_space()
    for i in sol:
        rad = rad + i
    if not is_nilpotent(l, nilrad) or any(not (i <= nilrad) for i in nil):
        raise AssertionError("nilradical failed its own verification")
    if not is_solvable(l, rad) or any(not (i <= rad) for i in sol):
        raise AssertionError("solvable radical failed its own verification")
    return nilrad, rad


def frattini(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple[Subspace, Subspace]:
    """(F(L), phi(L)): intersection of the maximal subalgebras, and its core.

    For a zero- or one-dimensional algebra F(L) is 0.
    """
    maxes = maximal_subalgebras(l, budget)
    f = l.full_space() if maxes else l.zero_space()
    for m in maxes:
        f = f & m
    return f, core(l, f)


@lru_cache(maxsize=512)
def _frattini_of_subalgebra(l: LieAlgebra, u: Subspace, budget: int) -> Subspace:
    alg, _, from_coords = restricted_algebra(l, u)
    f_sub, _ = frattini(alg, budget)
    return Subspace.from_vectors(
        l.field, l.dim, [from_coords(v) for v in f_sub.vectors()]
    )


def frattini_of_subalgebra(l: LieAlgebra, u: Subspace, budget: int = DEFAULT_BUDGET) -> Subspace:
    """F(u) for a subalgebra u, expressed in the coordinates of L."""
    return _frattini_of_subalgebra(l, u, budget)


def abelian_socle(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """The sum of the minimal abelian ideals."""
    ideals = [i for i in enum_ideals(l, budget) if i.dim > 0]
    out = l.zero_space()
    for i in ideals:
        if any(j.dim < i.dim and j <= i for j in ideals):
            continue
        if l.span_product(i, i).dim == 0:
            out = out + i
    return out


# ---------------------------------------------------------------------------
# almost-abelian shape and the line classifier

def almost_abelian_witness(l: LieAlgebra):
    """The vector x with L = [L,L] + Fx and [x, y] = y on [L,L], or None.

    An almost-abelian algebra is a nonzero abelian ideal extended by a
    vector acting on it as the identity; by convention a
    one-dimensional algebra does not qualify (its derived algebra is
    zero).
    """
    full = l.full_space()
    squared = l.span_product(full, full)
    if squared.dim == 0 or l.dim - squared.dim != 1:
        return None
    if l.span_product(squared, squared).dim != 0:
        return None
    w = squared.complement_reps()[0]
    rows = squared.vectors()
    lam = l.bracket(w, rows[0])[squared.pivots[0]]
    if not lam:
        return None
    for b in rows:
        if l.bracket(w, b) != scale_vector(lam, b):
            return None
    return scale_vector(lam.inverse(), w)


def is_almost_abelian(l: LieAlgebra) -> bool:
    return almost_abelian_witness(l) is not None


@dataclass(frozen=True)
class LineClassification:
    """Which of the all-lines-are-c-ideals shapes an algebra has.

    ``case`` is one of CASE_CUBE_ZERO, CASE_SPLIT, CASE_NEITHER.  For
    the split case the parts are recorded: ``abelian_part`` (an abelian
    ideal), ``almost_abelian_part`` (an almost-abelian ideal summing
    with it to L) and ``scaling_vector``, the x acting as the identity
    on the almost-abelian part's derived algebra.
    """

    case: str
    abelian_part: Subspace | None = None
    almost_abelian_part: Subspace | None = None
    scaling_vector: tuple | None = None

    def as_dict(self) -> dict:
        from .linalg import vector_text

        return {
            "case": self.case,
            "abelian_part": None if self.abelian_part is None else subspace_text(self.abelian_part),
            "almost_abelian_part": (
                None if self.almost_abelian_part is None else subspace_text(self.almost_abelian_part)
            ),
            "scaling_vector": (
                None if self.scaling_vector is None else vector_text(self.scaling_vector)
            ),
        }


def classify_line_cideals(l: LieAlgebra) -> LineClassification:
    """Decide whether L has one of the two all-lines shapes.

    Either [[L,L],L] = 0, or L = A ⊕ B with A an abelian ideal and B an
    almost-abelian ideal.  The split is reconstructed explicitly (A is
    the centre, B is [L,L] plus the scaled complement vector) and then
    re-verified part by part before being returned.
    """
    full = l.full_space()
    squared = l.span_product(full, full)
    if l.span_product(full, squared).dim == 0:
        return LineClassification(CASE_CUBE_ZERO)
    if l.span_product(squared, squared).dim != 0:
        return LineClassification(CASE_NEITHER)
    centre = l.centre()
    if (centre & squared).dim != 0:
        return LineClassification(CASE_NEITHER)
    fixed = centre + squared
    if l.dim - fixed.dim != 1:
        return LineClassification(CASE_NEITHER)
    w = fixed.complement_reps()[0]
    rows = squared.vectors()
    lam = l.bracket(w, rows[0])[squared.pivots[0]]
    if not lam:
        return LineClassification(CASE_NEITHER)
    for b in rows:
        if l.bracket(w, b) != scale_vector(lam, b):
            return LineClassification(CASE_NEITHER)
    x = scale_vector(lam.inverse(), w)
    a_part = centre
    b_part = Subspace.from_vectors(l.field, l.dim, rows + (x,))
    split_ok = (
        l.is_ideal(a_part)
        and l.is_ideal(b_part)
        and (a_part + b_part).dim == l.dim
        and (a_part & b_part).dim == 0
        and l.span_product(a_part, a_part).dim == 0
        and is_almost_abelian(restricted_algebra(l, b_part)[0])
    )
    if not split_ok:
        raise AssertionError("split reconstruction failed its own verification")
    return LineClassification(CASE_SPLIT, a_part, b_part, x)


# ---------------------------------------------------------------------------
# profiles

@dataclass(frozen=True)
class StructureProfile:
    """A bundle of structural facts about one algebra.

    Enumeration-backed fields (nilradical, solvable_radical, frattini
    pair, socle) are None over Q.
    """

    field: str
    dim: int
    abelian: bool
    nilpotent: bool
    solvable: bool
    supersolvable: bool
    derived_length: int | None
    nilpotency_class: int | None
    centre: Subspace
    derived_dims: tuple
    lower_central_dims: tuple
    nilradical: Subspace | None
    solvable_radical: Subspace | None
    frattini_subalgebra: Subspace | None
    frattini_ideal: Subspace | None
    socle: Subspace | None

    def as_dict(self) -> dict:
        def sub(s):
            return None if s is None else subspace_text(s)

        return {
            "field": self.field,
            "dim": self.dim,
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "supersolvable": self.supersolvable,
            "derived_length": self.derived_length,
            "nilpotency_class": self.nilpotency_class,
            "centre": sub(self.centre),
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "nilradical": sub(self.nilradical),
            "solvable_radical": sub(self.solvable_radical),
            "frattini_subalgebra": sub(self.frattini_subalgebra),
            "frattini_ideal": sub(self.frattini_ideal),
            "socle": sub(self.socle),
        }


def structure_profile(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> StructureProfile:
    """Compute the full profile; enumeration parts only over finite fields."""
    finite = l.field.p is not None
    nilrad = rad = f = phi = soc = None
    if finite:
        nilrad, rad = radicals(l, budget)
        f, phi = frattini(l, budget)
        soc = abelian_socle(l, budget)
    return StructureProfile(
        field=str(l.field),
        dim=l.dim,
        abelian=is_abelian(l),
        nilpotent=is_nilpotent(l),
        solvable=is_solvable(l),
        supersolvable=is_supersolvable(l),
        derived_length=derived_length(l),
        nilpotency_class=nilpotency_class(l),
        centre=l.centre(),
        derived_dims=tuple(t.dim for t in l.derived_series().terms),
        lower_central_dims=tuple(t.dim for t in l.lower_central_series().terms),
        nilradical=nilrad,
        solvable_radical=rad,
        frattini_subalgebra=f,
        frattini_ideal=phi,
        socle=soc,
    )
