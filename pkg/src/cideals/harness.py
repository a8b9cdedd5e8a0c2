"""Verification suites for the c-ideal theory, plus the fuzz driver.

Each suite checks one published statement about c-ideals on one
concrete algebra and returns a report; a failing report carries a
witness that can be replayed against the decision modules in
isolation.  The suites:

T1   every maximal subalgebra is a c-ideal  ⟺  L is solvable
T2   a solvable L has a solvable maximal subalgebra that is a c-ideal;
     the converse holds in characteristic zero and is exercised over Q
     only with certificate-backed verdicts
T3   if every maximal nilpotent subalgebra is a c-ideal, L is solvable
T4   maximal nilpotent subalgebras of L/A are exactly the subspaces
     C + A with C maximal nilpotent in L
T5   if L is solvable and every maximal subalgebra of every maximal
     nilpotent subalgebra is a c-ideal of L, L is supersolvable
T6   as T5, replacing solvability by: every maximal nilpotent
     subalgebra has dimension at least two
T7   the decisive line rule agrees with the enumeration oracle on
     every line
T8   the classifier's two positive shapes  ⟺  every line is a c-ideal
T9   a c-ideal of L is a c-ideal of every intermediate subalgebra
T10  B is a c-ideal of L  ⟺  B/I is one of L/I, for ideals I inside B
T11  a c-ideal lying in a Frattini subalgebra is an ideal inside the
     Frattini ideal

Suites that need exhaustive enumeration report ``skipped`` over Q, as
does any suite whose hypothesis mismatches the field; a suite never
silently narrows its claim.  A budget overrun inside a suite also
surfaces as ``skipped`` with the reason.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BadParams, BudgetExceeded, FieldNotFinite
from .fields import Field
from .linalg import Subspace, subspace_text, vector_text
from .liealg import (
    LieAlgebra,
    is_solvable,
    quotient_algebra,
    restricted_algebra,
)
from .lattice import (
    DEFAULT_BUDGET,
    enum_ideals,
    enum_subalgebras,
    maximal_nilpotent_subalgebras,
    maximal_subalgebras,
    projective_points,
)
from .cideal import (
    YES,
    frattini_consequence_check,
    is_cideal,
    is_cideal_by_scan,
    line_cideal,
)
from .structure import (
    CASE_NEITHER,
    classify_line_cideals,
    frattini_of_subalgebra,
    is_supersolvable,
    supersolvable_flag,
)
from .catalog import random_solvable, serialize

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"

_SKIP_Q_ENUM = "exhaustive enumeration is not possible over Q"


@dataclass(frozen=True)
class TheoremReport:
    """One suite's outcome on one algebra.

    ``reason`` explains a skip or a failure; ``witnesses`` holds
    replayable data (subspace and vector texts, verdict dicts).
    """

    theorem_id: str
    algebra_id: str
    status: str
    reason: str | None
    witnesses: dict
    seconds: float

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "algebra_id": self.algebra_id,
            "status": self.status,
            "reason": self.reason,
            "witnesses": self.witnesses,
            "seconds": self.seconds,
        }


def _verdict_witness(v) -> dict:
    return v.as_dict()


def _t1(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    solvable = is_solvable(l)
    counter = None
    for m in maximal_subalgebras(l, budget):
        v = decide(l, m, budget)
        if v.answer != YES:
            counter = (m, v)
            break
    all_cideal = counter is None
    witnesses = {"solvable": solvable, "all_maximal_cideal": all_cideal}
    if counter is not None:
        witnesses["maximal_subalgebra"] = subspace_text(counter[0])
        witnesses["verdict"] = _verdict_witness(counter[1])
    if solvable == all_cideal:
        return PASS, None, witnesses
    return FAIL, "solvability and the all-maximal-c-ideal property disagree", witnesses


def _t2(l, budget, decide):
    solvable = is_solvable(l)
    if l.field.p is not None:
        if not solvable:
            return SKIP, "the converse direction needs characteristic zero", {}
        for m in maximal_subalgebras(l, budget):
            if is_solvable(l, m):
                v = decide(l, m, budget)
                if v.answer == YES:
                    witnesses = {
                        "maximal_subalgebra": subspace_text(m),
                        "verdict": _verdict_witness(v),
                    }
                    return PASS, None, witnesses
        return FAIL, "solvable algebra without a solvable maximal c-ideal", {}
    if l.dim == 0:
        return SKIP, "no maximal subalgebras in dimension zero", {}
    if not solvable:
        return SKIP, "no certificate-backed premise instance is constructible over Q", {}
    full = l.full_space()
    squared = l.span_product(full, full)
    reps = squared.complement_reps()
    m = Subspace.from_vectors(l.field, l.dim, squared.vectors() + reps[1:])
    v = decide(l, m, budget)
    if v.answer == YES and v.certificate is not None:
        # Premise holds with a verified certificate; the conclusion is
        # solvability, which is true on this branch.
        witnesses = {"maximal_subalgebra": subspace_text(m), "verdict": _verdict_witness(v)}
        return PASS, None, witnesses
    return SKIP, "c-ideal verdict was not certificate-backed", {"verdict": _verdict_witness(v)}


def _t3(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    for c in maximal_nilpotent_subalgebras(l, budget):
        v = decide(l, c, budget)
        if v.answer != YES:
            witnesses = {
                "premise_holds": False,
                "maximal_nilpotent": subspace_text(c),
                "verdict": _verdict_witness(v),
            }
            return PASS, None, witnesses
    solvable = is_solvable(l)
    witnesses = {"premise_holds": True, "solvable": solvable}
    if solvable:
        return PASS, None, witnesses
    return FAIL, "all maximal nilpotent subalgebras are c-ideals but L is not solvable", witnesses


def _t4(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    ours = maximal_nilpotent_subalgebras(l, budget)
    checked = 0
    for a in enum_ideals(l, budget):
        reduced, _, lift = quotient_algebra(l, a)
        for w_red in maximal_nilpotent_subalgebras(reduced, budget):
            preimage = Subspace.from_vectors(
                l.field, l.dim, [lift(v) for v in w_red.vectors()] + list(a.vectors())
            )
            if not any((c + a) == preimage for c in ours):
                witnesses = {
                    "ideal": subspace_text(a),
                    "preimage": subspace_text(preimage),
                }
                return FAIL, "a maximal nilpotent subalgebra of the quotient does not lift", witnesses
            checked += 1
    return PASS, None, {"pairs_checked": checked}


def _nilpotent_maximal_premise(l, budget, decide):
    """Is every maximal subalgebra of every maximal nilpotent subalgebra
    a c-ideal of l?  Returns (True, None) or (False, witness dict)."""
    for c in maximal_nilpotent_subalgebras(l, budget):
        alg, _, from_coords = restricted_algebra(l, c)
        for m in maximal_subalgebras(alg, budget):
            b = Subspace.from_vectors(l.field, l.dim, [from_coords(v) for v in m.vectors()])
            v = decide(l, b, budget)
            if v.answer != YES:
                return False, {
                    "maximal_nilpotent": subspace_text(c),
                    "maximal_subalgebra_of_it": subspace_text(b),
                    "verdict": _verdict_witness(v),
                }
    return True, None


def _t5(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    if not is_solvable(l):
        return PASS, None, {"premise_holds": False, "solvable": False}
    premise, counter = _nilpotent_maximal_premise(l, budget, decide)
    if not premise:
        return PASS, None, {"premise_holds": False, **counter}
    flag = supersolvable_flag(l)
    if flag is not None:
        witnesses = {"premise_holds": True, "flag": [subspace_text(w) for w in flag]}
        return PASS, None, witnesses
    return FAIL, "premise holds on a solvable algebra that is not supersolvable", {
        "premise_holds": True
    }


def _t6(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    maxnilp = maximal_nilpotent_subalgebras(l, budget)
    dims = sorted(c.dim for c in maxnilp)
    if dims and dims[0] < 2:
        return PASS, None, {"premise_holds": False, "min_maximal_nilpotent_dim": dims[0]}
    premise, counter = _nilpotent_maximal_premise(l, budget, decide)
    if not premise:
        return PASS, None, {"premise_holds": False, **counter}
    flag = supersolvable_flag(l)
    if flag is not None:
        witnesses = {"premise_holds": True, "flag": [subspace_text(w) for w in flag]}
        return PASS, None, witnesses
    return FAIL, "premise holds but the algebra is not supersolvable", {"premise_holds": True}


def _t7(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    checked = 0
    for x in projective_points(l.field, l.dim):
        quick = line_cideal(l, x)
        scan = is_cideal_by_scan(
            l, Subspace.from_vectors(l.field, l.dim, [x]), budget
        )
        if quick.answer != scan.answer:
            witnesses = {
                "point": vector_text(x),
                "line_rule": _verdict_witness(quick),
                "enumeration": _verdict_witness(scan),
            }
            return FAIL, "line rule and enumeration oracle disagree", witnesses
        checked += 1
    return PASS, None, {"lines_checked": checked}


def _spot_vectors(space: Subspace):
    vecs = list(space.vectors())
    out = list(vecs)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            out.append(tuple(a + b for a, b in zip(vecs[i], vecs[j])))
    return out


def _t8(l, budget, decide):
    classification = classify_line_cideals(l)
    positive = classification.case != CASE_NEITHER
    if l.field.p is not None:
        bad = None
        for x in projective_points(l.field, l.dim):
            v = line_cideal(l, x)
            if v.answer != YES:
                bad = (x, v)
                break
        all_lines = bad is None
        witnesses = {"case": classification.case, "all_lines_cideal": all_lines}
        if bad is not None:
            witnesses["point"] = vector_text(bad[0])
            witnesses["verdict"] = _verdict_witness(bad[1])
        if positive == all_lines:
            return PASS, None, witnesses
        return FAIL, "classifier and the line scan disagree", witnesses
    if positive:
        for x in _spot_vectors(l.full_space()):
            v = line_cideal(l, x)
            if v.answer != YES:
                witnesses = {
                    "case": classification.case,
                    "point": vector_text(x),
                    "verdict": _verdict_witness(v),
                }
                return FAIL, "classifier-positive algebra has a non-c-ideal line", witnesses
        return PASS, None, {"case": classification.case, "check": "spot lines only"}
    full = l.full_space()
    squared = l.span_product(full, full)
    for x in _spot_vectors(squared):
        if not any(x):
            continue
        v = line_cideal(l, x)
        if v.answer != YES:
            witnesses = {
                "case": classification.case,
                "point": vector_text(x),
                "verdict": _verdict_witness(v),
            }
            return PASS, None, witnesses
    return SKIP, "no counterexample line was located over Q", {"case": classification.case}


def _t9(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    subalgebras = enum_subalgebras(l, budget)
    checked = 0
    for b in subalgebras:
        v = decide(l, b, budget)
        if v.answer != YES:
            continue
        for k in subalgebras:
            if k.dim == l.dim or not b <= k:
                continue
            alg, to_coords, _ = restricted_algebra(l, k)
            b_inside = Subspace.from_vectors(
                alg.field, alg.dim, [to_coords(w) for w in b.vectors()]
            )
            vk = decide(alg, b_inside, budget)
            if vk.answer != YES:
                witnesses = {
                    "cideal": subspace_text(b),
                    "intermediate": subspace_text(k),
                    "outer_verdict": _verdict_witness(v),
                    "inner_verdict": _verdict_witness(vk),
                }
                return FAIL, "c-ideal property failed to persist to an intermediate subalgebra", witnesses
            checked += 1
    return PASS, None, {"pairs_checked": checked}


def _t10(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    ideals = enum_ideals(l, budget)
    checked = 0
    for b in enum_subalgebras(l, budget):
        v_outer = decide(l, b, budget)
        for i in ideals:
            if not i <= b:
                continue
            reduced, project, _ = quotient_algebra(l, i)
            b_red = Subspace.from_vectors(
                reduced.field, reduced.dim, [project(w) for w in b.vectors()]
            )
            v_inner = decide(reduced, b_red, budget)
            if (v_outer.answer == YES) != (v_inner.answer == YES):
                witnesses = {
                    "subalgebra": subspace_text(b),
                    "ideal": subspace_text(i),
                    "verdict_in_l": _verdict_witness(v_outer),
                    "verdict_in_quotient": _verdict_witness(v_inner),
                }
                return FAIL, "c-ideal status differs between L and the quotient", witnesses
            checked += 1
    return PASS, None, {"pairs_checked": checked}


def _t11(l, budget, decide):
    if l.field.p is None:
        return SKIP, _SKIP_Q_ENUM, {}
    subalgebras = enum_subalgebras(l, budget)
    checked = 0
    for c_sub in subalgebras:
        f_c = frattini_of_subalgebra(l, c_sub, budget)
        if f_c.dim == 0:
            continue
        for b in subalgebras:
            if b.dim == 0 or not b <= f_c:
                continue
            report = frattini_consequence_check(l, b, c_sub, budget)
            if not report.passed:
                witnesses = {
                    "subalgebra_with_frattini": subspace_text(c_sub),
                    "frattini_subalgebra": subspace_text(f_c),
                    "cideal": subspace_text(b),
                    "check": report.as_dict(),
                }
                return FAIL, "a c-ideal inside a Frattini subalgebra escaped the Frattini ideal", witnesses
            checked += 1
    return PASS, None, {"pairs_checked": checked}


_SUITES = {
    "T1": _t1,
    "T2": _t2,
    "T3": _t3,
    "T4": _t4,
    "T5": _t5,
    "T6": _t6,
    "T7": _t7,
    "T8": _t8,
    "T9": _t9,
    "T10": _t10,
    "T11": _t11,
}

SUITE_IDS = tuple(sorted(_SUITES, key=lambda s: int(s[1:])))


def normalize_suites(selection) -> tuple:
    """Accepts None, "all", a comma string or an iterable of suite ids."""
    if selection is None or selection == "all":
        return SUITE_IDS
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    ids = []
    for s in selection:
        s = s.upper()
        if s not in _SUITES:
            raise BadParams(f"unknown suite {s!r}; pick from {', '.join(SUITE_IDS)}")
        if s not in ids:
            ids.append(s)
    if not ids:
        raise BadParams("empty suite selection")
    return tuple(sorted(ids, key=lambda s: int(s[1:])))


def run_suite(
    l: LieAlgebra,
    suites=None,
    budget: int = DEFAULT_BUDGET,
    algebra_id: str | None = None,
    decide=None,
) -> list:
    """Run the selected suites on one algebra.

    ``decide`` replaces the c-ideal decision procedure and exists for
    harness self-tests; the default is :func:`cideals.cideal.is_cideal`.
    Budget overruns inside a suite produce a skipped report.
    """
    ids = normalize_suites(suites)
    if decide is None:
        decide = is_cideal
    aid = algebra_id if algebra_id is not None else f"<{l.field} dim {l.dim}>"
    reports = []
    for sid in ids:
        start = time.perf_counter()
        try:
            status, reason, witnesses = _SUITES[sid](l, budget, decide)
        except BudgetExceeded as e:
            status, reason, witnesses = SKIP, f"budget exceeded: {e}", {}
        elapsed = round(time.perf_counter() - start, 6)
        reports.append(TheoremReport(sid, aid, status, reason, witnesses, elapsed))
    return reports


@dataclass(frozen=True)
class FuzzResult:
    """Aggregated suite reports over generated algebras."""

    count: int
    reports: tuple
    failures: tuple

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "reports": [r.as_dict() for r in self.reports],
            "failures": [
                {
                    "algebra_id": f["algebra_id"],
                    "document": f["document"],
                    "report": f["report"].as_dict(),
                }
                for f in self.failures
            ],
        }


def fuzz(
    seed: int,
    count: int,
    field: Field,
    ambient_n: int = 3,
    suites=None,
    budget: int = DEFAULT_BUDGET,
    target_dim: int | None = None,
) -> FuzzResult:
    """Run suites over ``count`` generated solvable algebras.

    Instance k uses seed ``seed + k``; when ``target_dim`` is None the
    sample dimension varies deterministically with the seed.  Failures
    carry the offending algebra's full document.
    """
    if field.p is None:
        raise FieldNotFinite("fuzzing needs a finite field")
    if count < 0:
        raise BadParams("count must be >= 0")
    ambient_dim = ambient_n * (ambient_n + 1) // 2
    reports = []
    failures = []
    for k in range(count):
        s = seed + k
        tdim = target_dim if target_dim is not None else 2 + (s % 4)
        tdim = max(1, min(tdim, ambient_dim))
        algebra = random_solvable(s, field, ambient_n, tdim)
        aid = f"fuzz(seed={s},t({ambient_n}),{field})"
        for report in run_suite(algebra, suites, budget, aid):
            reports.append(report)
            if report.status == FAIL:
                failures.append(
                    {
                        "algebra_id": aid,
                        "document": serialize(algebra),
                        "report": report,
                    }
                )
    key = lambda r: (r.algebra_id, int(r.theorem_id[1:]))
    reports.sort(key=key)
    failures.sort(key=lambda f: key(f["report"]))
    return FuzzResult(count, tuple(reports), tuple(failures))
