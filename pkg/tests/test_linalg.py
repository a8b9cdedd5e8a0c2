import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cideals import (
    DimensionMismatch,
    FieldMismatch,
    GF,
    Matrix,
    NotSquare,
    Q,
    Subspace,
    char_poly,
    eigenspace,
    nullspace,
    parse_subspace,
    parse_vector,
    rref,
    subspace_text,
    vector_text,
)

from oracles import oracle_char_poly


def mat(field, rows):
    return Matrix.from_rows(field, [[field.scalar(x) for x in row] for row in rows])


def vec(field, coords):
    return tuple(field.scalar(x) for x in coords)


class TestMatrix:
    def test_shapes_and_entries(self):
        m = mat(Q, [[1, 2, 3], [4, 5, 6]])
        assert (m.rows, m.cols) == (2, 3)
        assert m.entry(1, 2).value == 6
        assert [s.value for s in m.row(0)] == [1, 2, 3]
        assert [s.value for s in m.column(2)] == [3, 6]

    def test_matmul_identity(self):
        m = mat(GF(5), [[1, 2], [3, 4]])
        assert m @ Matrix.identity(GF(5), 2) == m
        sq = m @ m
        # [[1,2],[3,4]]^2 = [[7,10],[15,22]] = [[2,0],[0,2]] mod 5
        assert [[s.value for s in sq.row(i)] for i in range(2)] == [[2, 0], [0, 2]]

    def test_mul_vector(self):
        m = mat(Q, [[1, 2], [3, 4]])
        out = m.mul_vector(vec(Q, [1, 1]))
        assert [s.value for s in out] == [3, 7]

    def test_transpose_trace(self):
        m = mat(Q, [[1, 2], [3, 4]])
        assert m.transpose().entry(0, 1).value == 3
        assert m.trace().value == 5

    def test_trace_needs_square(self):
        with pytest.raises(NotSquare):
            mat(Q, [[1, 2, 3], [4, 5, 6]]).trace()

    def test_shape_mismatch(self):
        a = mat(Q, [[1, 2]])
        b = mat(Q, [[1, 2]])
        with pytest.raises(DimensionMismatch):
            a @ b

    def test_field_mismatch(self):
        a = mat(Q, [[1]])
        b = mat(GF(2), [[1]])
        with pytest.raises(FieldMismatch):
            a + b


class TestRref:
    def test_known_form(self):
        m = mat(Q, [[2, 4, 0], [1, 2, 1]])
        r, pivots = rref(m)
        assert pivots == (0, 2)
        assert [[s.value for s in r.row(i)] for i in range(r.rows)] == [
            [1, 2, 0],
            [0, 0, 1],
        ]

    def test_zero_rows_dropped(self):
        m = mat(Q, [[1, 1], [2, 2], [3, 3]])
        r, pivots = rref(m)
        assert r.rows == 1
        assert pivots == (0,)

    def test_idempotent(self):
        m = mat(GF(3), [[1, 2, 0], [2, 1, 1], [0, 0, 1]])
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2


class TestNullspace:
    def test_known_kernel(self):
        m = mat(Q, [[1, 2, 3]])
        ker = nullspace(m)
        assert ker.dim == 2
        for v in ker.vectors():
            out = m.mul_vector(v)
            assert all(not s for s in out)

    def test_invertible_kernel_zero(self):
        m = mat(GF(5), [[1, 1], [0, 1]])
        assert nullspace(m).dim == 0

    def test_zero_map_kernel_full(self):
        m = Matrix.zeros(Q, 2, 3)
        assert nullspace(m).dim == 3


class TestCharPoly:
    def test_companion_known(self):
        # companion of t^2 - t - 1
        m = mat(Q, [[0, 1], [1, 1]])
        coeffs = char_poly(m)
        assert [c.value for c in coeffs] == [-1, -1, 1]

    def test_diagonal(self):
        m = mat(Q, [[2, 0], [0, 3]])
        # (t-2)(t-3) = 6 - 5t + t^2
        assert [c.value for c in char_poly(m)] == [6, -5, 1]

    def test_small_characteristic_lift(self):
        # 3x3 over GF(2): the division-free path must handle p <= n
        m = mat(GF(2), [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert char_poly(m) == oracle_char_poly(m)

    def test_needs_square(self):
        with pytest.raises(NotSquare):
            char_poly(mat(Q, [[1, 2]]))

    def test_matches_oracle_random_q(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randrange(1, 5)
            m = mat(Q, [[Fraction(rng.randrange(-3, 4)) for _ in range(n)] for _ in range(n)])
            assert char_poly(m) == oracle_char_poly(m)

    def test_matches_oracle_random_gf(self):
        for p in (2, 3, 5):
            rng = random.Random(100 + p)
            for _ in range(25):
                n = rng.randrange(1, 5)
                m = mat(GF(p), [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
                assert char_poly(m) == oracle_char_poly(m)

    def test_cayley_hamilton(self):
        rng = random.Random(7)
        for _ in range(10):
            m = mat(Q, [[rng.randrange(-2, 3) for _ in range(3)] for _ in range(3)])
            coeffs = char_poly(m)
            acc = Matrix.zeros(Q, 3, 3)
            power = Matrix.identity(Q, 3)
            for c in coeffs:
                acc = acc + power.scale(c)
                power = power @ m
            assert acc == Matrix.zeros(Q, 3, 3)


class TestEigenspace:
    def test_known(self):
        m = mat(Q, [[2, 1], [0, 2]])
        e2 = eigenspace(m, Q.scalar(2))
        assert e2.dim == 1
        assert vec(Q, [1, 0]) in e2
        assert eigenspace(m, Q.scalar(3)).dim == 0

    def test_eigenvector_property(self):
        m = mat(GF(5), [[1, 2], [0, 3]])
        for lam in (GF(5).scalar(1), GF(5).scalar(3)):
            space = eigenspace(m, lam)
            assert space.dim >= 1
            for v in space.vectors():
                assert m.mul_vector(v) == tuple(lam * c for c in v)


class TestSubspace:
    def test_canonical_basis(self):
        u = Subspace.from_vectors(Q, 3, [vec(Q, [2, 4, 0]), vec(Q, [1, 2, 1])])
        assert u.dim == 2
        assert u.pivots == (0, 2)
        # basis is RREF rows
        assert [[s.value for s in v] for v in u.vectors()] == [[1, 2, 0], [0, 0, 1]]

    def test_equality_ignores_presentation(self):
        a = Subspace.from_vectors(Q, 2, [vec(Q, [1, 1]), vec(Q, [1, -1])])
        b = Subspace.from_vectors(Q, 2, [vec(Q, [1, 0]), vec(Q, [0, 1])])
        assert a == b
        assert hash(a) == hash(b)

    def test_span_coerces(self):
        u = Subspace.span(Q, 2, [[1, 2]])
        assert vec(Q, [2, 4]) in u

    def test_membership_and_reduce(self):
        u = Subspace.from_vectors(Q, 3, [vec(Q, [1, 0, 1])])
        assert vec(Q, [2, 0, 2]) in u
        assert vec(Q, [1, 1, 1]) not in u
        residual = u.reduce(vec(Q, [1, 1, 1]))
        assert [s.value for s in residual] == [0, 1, 0]

    def test_sum_and_intersection(self):
        a = Subspace.from_vectors(Q, 3, [vec(Q, [1, 0, 0]), vec(Q, [0, 1, 0])])
        b = Subspace.from_vectors(Q, 3, [vec(Q, [0, 1, 0]), vec(Q, [0, 0, 1])])
        assert (a + b).dim == 3
        meet = a & b
        assert meet.dim == 1
        assert vec(Q, [0, 1, 0]) in meet

    def test_containment_operators(self):
        small = Subspace.from_vectors(Q, 2, [vec(Q, [1, 0])])
        big = Subspace.full(Q, 2)
        assert small <= big
        assert small < big
        assert not big <= small

    def test_complement_reps(self):
        u = Subspace.from_vectors(Q, 3, [vec(Q, [1, 0, 2])])
        reps = u.complement_reps()
        assert len(reps) == 2
        total = Subspace.from_vectors(Q, 3, list(u.vectors()) + list(reps))
        assert total.dim == 3

    def test_zero_and_full(self):
        z = Subspace.zero(GF(2), 3)
        f = Subspace.full(GF(2), 3)
        assert z.dim == 0 and f.dim == 3
        assert z <= f
        assert (z + f) == f
        assert (z & f) == z

    def test_ambient_mismatch(self):
        a = Subspace.zero(Q, 2)
        b = Subspace.zero(Q, 3)
        with pytest.raises(Exception):
            a + b

    def test_sort_key_orders_deterministically(self):
        a = Subspace.from_vectors(GF(2), 2, [vec(GF(2), [1, 0])])
        b = Subspace.from_vectors(GF(2), 2, [vec(GF(2), [0, 1])])
        ordered = sorted([b, a], key=Subspace.sort_key)
        assert ordered == sorted([a, b], key=Subspace.sort_key)

    @given(st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), max_size=4),
           st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), max_size=4))
    def test_grassmann_identity_gf5(self, rows_u, rows_v):
        f = GF(5)
        u = Subspace.from_vectors(f, 4, [vec(f, r) for r in rows_u])
        v = Subspace.from_vectors(f, 4, [vec(f, r) for r in rows_v])
        assert (u + v).dim + (u & v).dim == u.dim + v.dim

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), max_size=3))
    def test_rref_span_idempotence_q(self, rows):
        u = Subspace.from_vectors(Q, 3, [vec(Q, r) for r in rows])
        again = Subspace.from_vectors(Q, 3, list(u.vectors()))
        assert again == u
        assert again.basis == u.basis

    @given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=3),
           st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=3))
    def test_modularity_bounds_gf3(self, rows_u, rows_v):
        f = GF(3)
        u = Subspace.from_vectors(f, 3, [vec(f, r) for r in rows_u])
        v = Subspace.from_vectors(f, 3, [vec(f, r) for r in rows_v])
        assert (u & v) <= u <= (u + v)


class TestTextForms:
    def test_vector_round_trip(self):
        v = vec(Q, ["1", "0", "-1/2"])
        assert vector_text(v) == "1,0,-1/2"
        assert parse_vector(Q, 3, "1, 0, -1/2") == v

    def test_vector_wrong_arity(self):
        with pytest.raises(DimensionMismatch):
            parse_vector(Q, 2, "1,2,3")

    def test_subspace_round_trip(self):
        u = Subspace.from_vectors(GF(3), 3, [vec(GF(3), [1, 2, 0]), vec(GF(3), [0, 0, 1])])
        text = subspace_text(u)
        assert parse_subspace(GF(3), 3, text) == u

    def test_zero_subspace_text(self):
        z = Subspace.zero(Q, 4)
        assert subspace_text(z) == "0"
        assert parse_subspace(Q, 4, "0") == z
        assert parse_subspace(Q, 4, "") == z
