from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cideals import (
    BadParams,
    DivisionByZero,
    Field,
    FieldMismatch,
    FieldNotFinite,
    GF,
    Q,
    ZeroPolynomial,
    poly_eval,
    poly_roots_in_field,
)


class TestFieldConstruction:
    def test_q_is_infinite(self):
        assert Q.p is None
        assert not Q.is_finite
        assert str(Q) == "Q"

    def test_gf_smallest(self):
        f = GF(2)
        assert f.p == 2
        assert f.is_finite
        assert str(f) == "GF(2)"

    def test_gf_rejects_composite(self):
        with pytest.raises(BadParams):
            GF(4)
        with pytest.raises(BadParams):
            GF(1)
        with pytest.raises(BadParams):
            GF(0)

    def test_gf_large_prime_bound(self):
        assert GF(2**31 - 1).p == 2**31 - 1  # Mersenne prime at the cap
        with pytest.raises(BadParams):
            GF(2**31 + 11)

    def test_fields_compare_by_value(self):
        assert GF(5) == GF(5)
        assert GF(5) != GF(7)
        assert Q == Field()

    def test_elements_finite_only(self):
        assert [s.value for s in GF(3).elements()] == [0, 1, 2]
        with pytest.raises(FieldNotFinite):
            Q.elements()


class TestScalarCoercion:
    def test_int_reduces_mod_p(self):
        assert GF(5).scalar(7).value == 2
        assert GF(5).scalar(-1).value == 4

    def test_string_fraction_over_q(self):
        s = Q.scalar("3/4")
        assert s.value == Fraction(3, 4)
        assert s.text() == "3/4"

    def test_string_over_gf_must_be_integral(self):
        assert GF(7).scalar("10").value == 3
        assert GF(7).scalar("-1").value == 6
        with pytest.raises(BadParams):
            GF(7).scalar("1/2")  # residue text must be an integer

    def test_float_rejected(self):
        with pytest.raises(BadParams):
            Q.scalar(0.5)

    def test_scalar_passthrough(self):
        s = Q.scalar(2)
        assert Q.scalar(s) is s

    def test_cross_field_scalar_rejected(self):
        with pytest.raises(FieldMismatch):
            GF(5).scalar(GF(7).scalar(1))


class TestScalarArithmetic:
    def test_basic_ops_gf(self):
        f = GF(5)
        a, b = f.scalar(3), f.scalar(4)
        assert (a + b).value == 2
        assert (a - b).value == 4
        assert (a * b).value == 2
        assert (a / b).value == 2  # 4 * 2 = 8 = 3
        assert (-a).value == 2

    def test_basic_ops_q(self):
        a, b = Q.scalar("1/2"), Q.scalar("1/3")
        assert (a + b).value == Fraction(5, 6)
        assert (a * b).value == Fraction(1, 6)
        assert (a / b).value == Fraction(3, 2)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            Q.scalar(1) / Q.scalar(0)
        with pytest.raises(DivisionByZero):
            GF(3).scalar(2).inverse() and GF(3).scalar(0).inverse()

    def test_cross_field_ops_raise(self):
        with pytest.raises(FieldMismatch):
            GF(3).scalar(1) + GF(5).scalar(1)

    def test_bool_and_eq(self):
        assert not GF(3).scalar(0)
        assert GF(3).scalar(2)
        assert GF(3).scalar(2) != GF(5).scalar(2)
        assert Q.scalar(2) == Q.scalar("2")

    def test_hash_consistent(self):
        assert hash(GF(5).scalar(2)) == hash(GF(5).scalar(7))

    @given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
    def test_field_axioms_gf7(self, x, y, z):
        f = GF(7)
        a, b, c = f.scalar(x), f.scalar(y), f.scalar(z)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + f.zero() == a
        assert a * f.one() == a
        assert a + (-a) == f.zero()

    @given(st.integers(1, 6))
    def test_inverse_gf7(self, x):
        f = GF(7)
        a = f.scalar(x)
        assert a * a.inverse() == f.one()

    @given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
    def test_q_ring_ops_match_fraction(self, x, y):
        a, b = Q.scalar(x), Q.scalar(y)
        assert (a + b).value == x + y
        assert (a * b).value == x * y


class TestPolynomials:
    def test_poly_eval_horner(self):
        # 2 - 3t + t^2 at t = 5 is 12
        coeffs = (Q.scalar(2), Q.scalar(-3), Q.scalar(1))
        assert poly_eval(coeffs, Q.scalar(5)).value == 12

    def test_rational_roots_quadratic(self):
        # 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        coeffs = (Q.scalar(1), Q.scalar(-3), Q.scalar(2))
        roots = poly_roots_in_field(coeffs)
        assert sorted(r.value for r in roots) == [Fraction(1, 2), Fraction(1)]

    def test_irrational_roots_absent(self):
        # t^2 - 2 has no rational roots
        coeffs = (Q.scalar(-2), Q.scalar(0), Q.scalar(1))
        assert poly_roots_in_field(coeffs) == set()

    def test_power_of_t(self):
        coeffs = (Q.scalar(0), Q.scalar(0), Q.scalar(0), Q.scalar(1))  # t^3
        roots = poly_roots_in_field(coeffs)
        assert [r.value for r in roots] == [0]

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomial):
            poly_roots_in_field((Q.scalar(0), Q.scalar(0)))

    def test_gf_roots_exhaustive(self):
        f = GF(5)
        # t^2 + 1 over GF(5): roots 2 and 3
        coeffs = (f.scalar(1), f.scalar(0), f.scalar(1))
        roots = poly_roots_in_field(coeffs)
        assert sorted(r.value for r in roots) == [2, 3]

    def test_gf_constant_no_roots(self):
        assert poly_roots_in_field((GF(3).scalar(2),)) == set()

    @given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
    def test_roots_actually_vanish_gf5(self, c0, c1, c2):
        f = GF(5)
        coeffs = (f.scalar(c0), f.scalar(c1), f.scalar(c2))
        if not any(c.value for c in coeffs):
            return
        for r in poly_roots_in_field(coeffs):
            assert not poly_eval(coeffs, r)
