import pytest

from cideals import (
    BudgetExceeded,
    FieldNotFinite,
    GF,
    NotSubalgebra,
    Q,
    Subspace,
    builtin,
    cartan_subalgebras,
    core,
    enum_ideals,
    enum_subalgebras,
    enum_subspaces,
    gaussian_binomial,
    is_nilpotent,
    maximal_nilpotent_subalgebras,
    maximal_subalgebras,
    normalizer,
    one_dim_ideals,
    projective_points,
    subspace_count,
)

from oracles import oracle_core


def vec(field, coords):
    return tuple(field.scalar(x) for x in coords)


def span(l, *coords_list):
    return Subspace.from_vectors(l.field, l.dim, [vec(l.field, c) for c in coords_list])


class TestCounting:
    def test_gaussian_binomial_known(self):
        assert gaussian_binomial(4, 2, 2) == 35
        assert gaussian_binomial(4, 2, 3) == 130
        assert gaussian_binomial(3, 1, 2) == 7
        assert gaussian_binomial(3, 1, 5) == 31
        assert gaussian_binomial(5, 0, 2) == 1
        assert gaussian_binomial(5, 5, 2) == 1

    def test_subspace_count(self):
        assert subspace_count(3, 2) == 16
        assert subspace_count(4, 2) == 67
        assert subspace_count(3, 2, dims=(1,)) == 7


class TestEnumSubspaces:
    def test_counts_match_formula(self):
        l = builtin("abelian", GF(2), 3)
        got = list(enum_subspaces(l))
        assert len(got) == 16
        assert len(set(got)) == 16
        for d in range(4):
            assert sum(1 for s in got if s.dim == d) == gaussian_binomial(3, d, 2)

    def test_dims_filter(self):
        l = builtin("abelian", GF(3), 3)
        lines = list(enum_subspaces(l, dims=(1,)))
        assert len(lines) == 13
        assert all(s.dim == 1 for s in lines)

    def test_deterministic_order(self):
        l = builtin("abelian", GF(2), 3)
        assert list(enum_subspaces(l)) == list(enum_subspaces(l))

    def test_budget_raises_before_first_yield(self):
        l = builtin("abelian", GF(2), 3)
        with pytest.raises(BudgetExceeded):
            enum_subspaces(l, budget=15)
        # equality with the budget is allowed
        assert len(list(enum_subspaces(l, budget=16))) == 16

    def test_infinite_field_rejected(self):
        l = builtin("abelian", Q, 2)
        with pytest.raises(FieldNotFinite):
            enum_subspaces(l)

    def test_all_returned_canonical(self):
        l = builtin("abelian", GF(3), 2)
        for s in enum_subspaces(l):
            assert Subspace.from_vectors(l.field, l.dim, list(s.vectors())) == s


class TestEnumClosedSets:
    def test_subalgebras_by_filter(self, h3_gf2):
        direct = [s for s in enum_subspaces(h3_gf2) if h3_gf2.is_subalgebra(s)]
        assert list(enum_subalgebras(h3_gf2)) == direct

    def test_ideals_by_filter(self, h3_gf2):
        direct = [s for s in enum_subspaces(h3_gf2) if h3_gf2.is_ideal(s)]
        got = list(enum_ideals(h3_gf2))
        assert got == direct
        assert len(got) == 6

    def test_sl2_simple(self, sl2_gf5):
        ideals = enum_ideals(sl2_gf5)
        assert [i.dim for i in ideals] == [0, 3]

    def test_results_cached(self, h3_gf2):
        assert enum_ideals(h3_gf2) is enum_ideals(h3_gf2)


class TestMaximal:
    def test_h3_has_three_maximals(self, h3_gf2):
        ms = maximal_subalgebras(h3_gf2)
        assert len(ms) == 3
        assert all(m.dim == 2 for m in ms)
        z = vec(GF(2), [0, 0, 1])
        assert all(z in m for m in ms)

    def test_maximality_is_strict(self, t2_gf2):
        ms = maximal_subalgebras(t2_gf2)
        subs = enum_subalgebras(t2_gf2)
        for m in ms:
            assert m.dim < t2_gf2.dim
            bigger = [s for s in subs if m < s and s.dim < t2_gf2.dim]
            assert not bigger

    def test_abelian_maximals_are_hyperplanes(self):
        l = builtin("abelian", GF(3), 2)
        ms = maximal_subalgebras(l)
        assert len(ms) == 4  # the 4 lines of GF(3)^2
        assert all(m.dim == 1 for m in ms)

    def test_zero_dim_has_none(self):
        l = builtin("abelian", GF(2), 0)
        assert maximal_subalgebras(l) == ()


class TestMaximalNilpotent:
    def test_nilpotent_algebra_shortcut(self, h3_gf2):
        assert maximal_nilpotent_subalgebras(h3_gf2) == (h3_gf2.full_space(),)

    def test_sl2_gf3_all_lines(self):
        l = builtin("sl2", GF(3))
        ms = maximal_nilpotent_subalgebras(l)
        assert all(m.dim == 1 for m in ms)
        assert len(ms) == 13

    def test_members_maximal_among_nilpotent(self, t2_gf2):
        ms = maximal_nilpotent_subalgebras(t2_gf2)
        nil = [
            s
            for s in enum_subalgebras(t2_gf2)
            if is_nilpotent(t2_gf2, s)
        ]
        for m in ms:
            assert is_nilpotent(t2_gf2, m)
            assert not any(m < s for s in nil)
        # everything nilpotent sits inside some maximal one
        for s in nil:
            assert any(s <= m for m in ms)


class TestCartan:
    def test_sl2_gf5_cartans(self, sl2_gf5):
        cs = cartan_subalgebras(sl2_gf5)
        assert cs
        for c in cs:
            assert is_nilpotent(sl2_gf5, c)
            assert normalizer(sl2_gf5, c) == c
        toral = span(sl2_gf5, [0, 0, 1])
        assert toral in cs

    def test_nilpotent_algebra_is_its_own_cartan(self, h3_gf3):
        assert cartan_subalgebras(h3_gf3) == (h3_gf3.full_space(),)


class TestCoreAndNormalizer:
    def test_core_of_ideal_is_itself(self, h3_gf2):
        z = h3_gf2.centre()
        assert core(h3_gf2, z) == z

    def test_core_of_borel(self, sl2_gf5):
        borel = span(sl2_gf5, [1, 0, 0], [0, 0, 1])
        assert core(sl2_gf5, borel).dim == 0

    def test_core_matches_oracle_everywhere(self, t2_gf2, h3_gf2):
        for l in (t2_gf2, h3_gf2):
            for b in enum_subalgebras(l):
                assert core(l, b) == oracle_core(l, b)

    def test_core_requires_subalgebra(self, sl2_gf5):
        with pytest.raises(NotSubalgebra):
            core(sl2_gf5, span(sl2_gf5, [1, 0, 0], [0, 1, 0]))

    def test_normalizer_of_line(self, sl2_q):
        line_e = span(sl2_q, [1, 0, 0])
        assert normalizer(sl2_q, line_e) == span(sl2_q, [1, 0, 0], [0, 0, 1])

    def test_normalizer_of_ideal_is_full(self, h3_q):
        assert normalizer(h3_q, h3_q.centre()) == h3_q.full_space()


class TestLines:
    def test_projective_point_count(self):
        pts = list(projective_points(GF(3), 3))
        assert len(pts) == 13
        assert len(set(pts)) == 13
        # canonical: first nonzero coordinate is 1
        for p in pts:
            lead = next(s for s in p if s)
            assert lead.value == 1

    def test_projective_points_dim_zero(self):
        assert list(projective_points(GF(2), 0)) == []

    def test_one_dim_ideals_gf_matches_filter(self, h3_gf2, t2_gf2, sl2_gf5):
        for l in (h3_gf2, t2_gf2, sl2_gf5):
            direct = sorted(
                (s for s in enum_subspaces(l, dims=(1,)) if l.is_ideal(s)),
                key=Subspace.sort_key,
            )
            assert list(one_dim_ideals(l)) == direct

    def test_one_dim_ideals_h3_q(self, h3_q):
        got = one_dim_ideals(h3_q)
        assert got == (h3_q.centre(),)

    def test_one_dim_ideals_are_ideals_q(self, aa3_q, t2_q, sl2_q):
        for l in (aa3_q, t2_q, sl2_q):
            for s in one_dim_ideals(l):
                assert s.dim == 1
                assert l.is_ideal(s)

    def test_one_dim_ideals_simple_q(self, sl2_q):
        assert one_dim_ideals(sl2_q) == ()
