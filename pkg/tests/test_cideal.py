import pytest

from cideals import (
    CIdealVerdict,
    GF,
    NO,
    NotSubalgebra,
    PreconditionUnmet,
    Q,
    Subspace,
    UNKNOWN,
    YES,
    ZeroVector,
    builtin,
    catalog_algebras,
    characteristic_ideals,
    enum_subalgebras,
    frattini,
    frattini_consequence_check,
    is_cideal,
    is_cideal_by_scan,
    line_cideal,
    verify_certificate,
)

from oracles import oracle_cideal


def vec(field, coords):
    return tuple(field.scalar(x) for x in coords)


def span(l, *coords_list):
    return Subspace.from_vectors(l.field, l.dim, [vec(l.field, c) for c in coords_list])


class TestVerifyCertificate:
    def test_accepts_witness(self, h3_q):
        # b = span{x}, c = span{y, z} is an ideal complement
        b = span(h3_q, [1, 0, 0])
        c = span(h3_q, [0, 1, 0], [0, 0, 1])
        assert verify_certificate(h3_q, b, c)

    def test_rejects_non_ideal(self, sl2_q):
        b = span(sl2_q, [0, 0, 1])
        borel = span(sl2_q, [1, 0, 0], [0, 0, 1])
        assert not verify_certificate(sl2_q, b, borel)

    def test_rejects_small_sum(self, h3_q):
        b = span(h3_q, [1, 0, 0])
        c = h3_q.centre()
        assert not verify_certificate(h3_q, b, c)

    def test_rejects_fat_intersection(self, sl2_gf5):
        borel = span(sl2_gf5, [1, 0, 0], [0, 0, 1])
        full = sl2_gf5.full_space()
        # L itself is an ideal with full sum, but meets the Borel outside
        # its core (which is zero in a simple algebra)
        assert not verify_certificate(sl2_gf5, borel, full)


class TestLineRule:
    def test_ideal_line_yes(self, h3_q):
        v = line_cideal(h3_q, vec(Q, [0, 0, 1]))
        assert v.answer == YES and v.exhaustive
        assert v.certificate == h3_q.full_space()

    def test_outside_derived_yes_with_complement_witness(self, h3_q):
        v = line_cideal(h3_q, vec(Q, [1, 0, 0]))
        assert v.answer == YES and v.exhaustive
        assert v.certificate is not None
        assert verify_certificate(h3_q, span(h3_q, [1, 0, 0]), v.certificate)

    def test_inside_derived_non_ideal_no(self, sl2_q):
        # sl2 is perfect, so every non-ideal line answers No, even over Q
        v = line_cideal(sl2_q, vec(Q, [1, 0, 0]))
        assert v.answer == NO
        assert v.exhaustive
        assert v.certificate is None

    def test_zero_vector_rejected(self, h3_q):
        with pytest.raises(ZeroVector):
            line_cideal(h3_q, h3_q.zero_vec())

    def test_matches_scan_on_finite_catalog(self):
        for field in (GF(2), GF(3)):
            for _, l in catalog_algebras(field, max_dim=3):
                for s in enum_subalgebras(l):
                    if s.dim != 1:
                        continue
                    quick = line_cideal(l, s.vectors()[0])
                    assert (quick.answer == YES) == oracle_cideal(l, s)


class TestIsCideal:
    def test_requires_subalgebra(self, sl2_q):
        with pytest.raises(NotSubalgebra):
            is_cideal(sl2_q, span(sl2_q, [1, 0, 0], [0, 1, 0]))

    def test_ideal_short_circuit(self, h3_q):
        z = h3_q.centre()
        v = is_cideal(h3_q, z)
        assert v.answer == YES
        assert v.method == "ideal_is_trivially_cideal"
        assert v.certificate == h3_q.full_space()
        assert v.exhaustive

    def test_line_delegates_to_line_rule(self, h3_q):
        v = is_cideal(h3_q, span(h3_q, [1, 0, 0]))
        assert v.answer == YES and v.method == "line_rule"

    def test_borel_is_not_cideal_gf5(self, sl2_gf5):
        borel = span(sl2_gf5, [1, 0, 0], [0, 0, 1])
        v = is_cideal(sl2_gf5, borel)
        assert v.answer == NO
        assert v.exhaustive
        assert v.method == "exhaustive_enumeration"

    def test_finite_yes_certificate_verifies(self, t2_gf2):
        for b in enum_subalgebras(t2_gf2):
            v = is_cideal(t2_gf2, b)
            assert v.answer in (YES, NO)
            if v.answer == YES:
                assert v.certificate is not None
                assert verify_certificate(t2_gf2, b, v.certificate)

    def test_matches_definitional_oracle(self):
        for field in (GF(2), GF(3)):
            for _, l in catalog_algebras(field, max_dim=3):
                for b in enum_subalgebras(l):
                    assert (is_cideal(l, b).answer == YES) == oracle_cideal(l, b)

    def test_q_derived_term_path(self, t2_q):
        diagonal = span(t2_q, [1, 0, 0], [0, 0, 1])
        v = is_cideal(t2_q, diagonal)
        assert v.answer == YES
        assert v.certificate is not None
        assert verify_certificate(t2_q, diagonal, v.certificate)

    def test_q_unknown_is_not_exhaustive(self, sl2_q):
        borel = span(sl2_q, [1, 0, 0], [0, 0, 1])
        v = is_cideal(sl2_q, borel)
        assert v.answer == UNKNOWN
        assert not v.exhaustive
        assert v.certificate is None

    def test_full_algebra_is_cideal(self, sl2_q):
        v = is_cideal(sl2_q, sl2_q.full_space())
        assert v.answer == YES

    def test_zero_subalgebra(self, h3_gf2):
        v = is_cideal(h3_gf2, h3_gf2.zero_space())
        # 0 + L = L and the meet is zero
        assert v.answer == YES

    def test_as_dict_shape(self, h3_gf2):
        v = is_cideal(h3_gf2, h3_gf2.centre())
        d = v.as_dict()
        assert set(d) == {"answer", "certificate", "exhaustive", "method"}
        assert isinstance(d["certificate"], str)


class TestScan:
    def test_scan_verdicts_are_exhaustive(self, h3_gf2):
        for b in enum_subalgebras(h3_gf2):
            v = is_cideal_by_scan(h3_gf2, b)
            assert v.exhaustive
            assert v.answer in (YES, NO)
            if v.answer == YES:
                assert verify_certificate(h3_gf2, b, v.certificate)

    def test_scan_needs_finite_field(self, h3_q):
        with pytest.raises(Exception):
            is_cideal_by_scan(h3_q, h3_q.centre())


class TestCharacteristicIdeals:
    def test_simple_algebra_two_members(self, sl2_q):
        got = characteristic_ideals(sl2_q)
        assert len(got) == 2
        assert {s.dim for s in got} == {0, 3}

    def test_members_are_ideals(self, t2_q, h3_q, aa3_q):
        for l in (t2_q, h3_q, aa3_q):
            for s in characteristic_ideals(l):
                assert l.is_ideal(s)

    def test_contains_standard_members(self, t2_q):
        got = characteristic_ideals(t2_q)
        derived = t2_q.span_product(t2_q.full_space(), t2_q.full_space())
        assert t2_q.zero_space() in got
        assert t2_q.full_space() in got
        assert derived in got
        assert t2_q.centre() in got

    def test_closed_under_sum_and_meet(self, t2_q):
        got = characteristic_ideals(t2_q)
        for a in got:
            for b in got:
                assert (a + b) in got
                assert (a & b) in got

    def test_deterministic(self, t2_q):
        assert characteristic_ideals(t2_q) == characteristic_ideals(t2_q)


class TestFrattiniConsequence:
    def test_positive_case(self, h3_gf2):
        z = h3_gf2.centre()  # equals the Frattini ideal of h3
        report = frattini_consequence_check(h3_gf2, z, h3_gf2.full_space())
        assert report.premise_holds
        assert report.passed
        assert report.is_ideal
        assert report.inside_frattini_ideal

    def test_precondition_checked(self, h3_gf2):
        outside = span(h3_gf2, [1, 0, 0])
        with pytest.raises(PreconditionUnmet):
            frattini_consequence_check(h3_gf2, outside, h3_gf2.full_space())

    def test_vacuous_when_not_cideal(self):
        # In the strictly upper-triangular algebra on 4 points the line
        # through e02 + e13 sits inside the Frattini subalgebra but is
        # not a c-ideal, so the premise fails and the check is vacuous.
        l = builtin("n", GF(2), 4)
        names = list(l.names)
        i, j = names.index("e02"), names.index("e13")
        x = tuple(
            l.field.one() if t in (i, j) else l.field.zero() for t in range(l.dim)
        )
        line = Subspace.from_vectors(l.field, l.dim, [x])
        f_sub, _ = frattini(l)
        assert line <= f_sub and not l.is_ideal(line)
        report = frattini_consequence_check(l, line, l.full_space())
        assert report.passed and not report.premise_holds
        assert report.verdict.answer == NO

    def test_as_dict(self, h3_gf2):
        report = frattini_consequence_check(h3_gf2, h3_gf2.centre(), h3_gf2.full_space())
        d = report.as_dict()
        assert set(d) == {
            "passed",
            "premise_holds",
            "verdict",
            "is_ideal",
            "inside_frattini_ideal",
        }


class TestVerdictInvariants:
    def test_yes_always_certified_on_catalog_gf2(self):
        for _, l in catalog_algebras(GF(2), max_dim=4):
            for b in enum_subalgebras(l):
                v = is_cideal(l, b)
                if v.answer == YES:
                    assert verify_certificate(l, b, v.certificate)
                else:
                    assert v.certificate is None
