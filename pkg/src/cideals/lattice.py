"""Cores, normalizers and brute-force enumeration over finite fields.

Enumeration walks every subspace of GF(p)^n exactly once by generating
each reduced-row-echelon basis directly: choose pivot columns, then fill
the free entries.  The order is deterministic (dimension ascending, then
pivot columns lexicographically, then free entries counted in residue
order), results are cached per algebra, and a count is checked against
the budget before any work happens so overruns fail loudly instead of
truncating.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import BudgetExceeded, FieldNotFinite, NotSubalgebra
from .fields import Field, Scalar, poly_roots_in_field
from .linalg import Matrix, Subspace, char_poly, eigenspace, standard_vector
from .liealg import LieAlgebra, is_nilpotent, restricted_algebra

DEFAULT_BUDGET = 10**6


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """The number of k-dimensional subspaces of GF(p)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspace_count(n: int, p: int, dims=None) -> int:
    dims = range(n + 1) if dims is None else dims
    return sum(gaussian_binomial(n, k, p) for k in dims)


def _normalize_dims(l: LieAlgebra, dims) -> tuple[int, ...]:
    if dims is None:
        return tuple(range(l.dim + 1))
    if isinstance(dims, int):
        dims = (dims,)
    out = tuple(sorted(set(dims)))
    for k in out:
        if not 0 <= k <= l.dim:
            raise ValueError(f"dimension {k} outside 0..{l.dim}")
    return out


def _require_finite(l: LieAlgebra):
    if l.field.p is None:
        raise FieldNotFinite("enumeration needs a finite field")


def _check_budget(l: LieAlgebra, dims, budget: int):
    if budget < 1:
        raise BudgetExceeded(f"budget must be positive, got {budget}")
    total = subspace_count(l.dim, l.field.p, dims)
    if total > budget:
        raise BudgetExceeded(
            f"{total} subspaces of GF({l.field.p})^{l.dim} exceed the budget of {budget}"
        )


def enum_subspaces(l: LieAlgebra, dims=None, budget: int = DEFAULT_BUDGET):
    """Yield every subspace of the underlying space, canonically.

    ``dims`` selects dimensions (int or iterable; default all).  Raises
    BudgetExceeded before yielding anything if the count is too large,
    and FieldNotFinite over Q.
    """
    _require_finite(l)
    dims = _normalize_dims(l, dims)
    _check_budget(l, dims, budget)
    return _subspace_iter(l.field, l.dim, dims)


def _subspace_iter(field: Field, n: int, dims):
    elements = field.elements()
    zero, one = elements[0], field.one()
    for k in dims:
        if k == 0:
            yield Subspace.zero(field, n)
            continue
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivot_set
            ]
            for assignment in itertools.product(elements, repeat=len(free)):
                rows = [[zero] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = one
                for (r, c), val in zip(free, assignment):
                    rows[r][c] = val
                flat = tuple(x for row in rows for x in row)
                yield Subspace(field, n, Matrix(field, k, n, flat), pivots)


@lru_cache(maxsize=64)
def _all_subspaces(l: LieAlgebra) -> tuple:
    return tuple(_subspace_iter(l.field, l.dim, range(l.dim + 1)))


@lru_cache(maxsize=64)
def _subalgebras(l: LieAlgebra) -> tuple:
    return tuple(u for u in _all_subspaces(l) if l.is_subalgebra(u))


@lru_cache(maxsize=64)
def _ideals(l: LieAlgebra) -> tuple:
    full = l.full_space()
    return tuple(
        u for u in _subalgebras(l) if l.span_product(full, u) <= u
    )


def enum_subalgebras(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple:
    """Every bracket-closed subspace, in enumeration order."""
    _require_finite(l)
    _check_budget(l, None, budget)
    return _subalgebras(l)


def enum_ideals(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple:
    """Every ideal, in enumeration order."""
    _require_finite(l)
    _check_budget(l, None, budget)
    return _ideals(l)


def _maximal_among(candidates, proper_of_dim: int) -> tuple:
    """Subspaces of the list not strictly contained in another member."""
    picked = []
    for u in sorted(candidates, key=lambda s: -s.dim):
        if u.dim >= proper_of_dim:
            continue
        if not any(u.dim < m.dim and u <= m for m in picked):
            picked.append(u)
    return tuple(picked)


@lru_cache(maxsize=64)
def _maximal_subalgebras(l: LieAlgebra) -> tuple:
    return _maximal_among(_subalgebras(l), l.dim)


def maximal_subalgebras(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple:
    """Proper subalgebras contained in no larger proper subalgebra.

    Ordered by dimension descending, enumeration order within a
    dimension.
    """
    _require_finite(l)
    _check_budget(l, None, budget)
    return _maximal_subalgebras(l)


@lru_cache(maxsize=64)
def _maximal_nilpotent(l: LieAlgebra) -> tuple:
    if is_nilpotent(l):
        return (l.full_space(),)
    nil = [u for u in _subalgebras(l) if is_nilpotent(l, u)]
    # L itself is not nilpotent here, so every candidate is proper.
    return _maximal_among(nil, l.dim)


def maximal_nilpotent_subalgebras(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple:
    """Nilpotent subalgebras maximal among the nilpotent ones.

    When L is itself nilpotent the unique answer is L.
    """
    _require_finite(l)
    if is_nilpotent(l):
        return (l.full_space(),)
    _check_budget(l, None, budget)
    return _maximal_nilpotent(l)


@lru_cache(maxsize=64)
def _cartan_subalgebras(l: LieAlgebra) -> tuple:
    out = []
    for u in _subalgebras(l):
        if is_nilpotent(l, u) and normalizer(l, u) == u:
            out.append(u)
    return tuple(out)


def cartan_subalgebras(l: LieAlgebra, budget: int = DEFAULT_BUDGET) -> tuple:
    """Self-normalizing nilpotent subalgebras, by exhaustive filter."""
    _require_finite(l)
    _check_budget(l, None, budget)
    return _cartan_subalgebras(l)


# ---------------------------------------------------------------------------
# core and normalizer (any field)

def core(l: LieAlgebra, b: Subspace) -> Subspace:
    """The largest ideal of L contained in the subalgebra b.

    Computed as the limit of B_{i+1} = {x in B_i : [x, L] <= B_i}; each
    step is one linear solve, and the chain strictly descends until the
    fixed point, which is an ideal.
    """
    if not l.is_subalgebra(b):
        raise NotSubalgebra("core is defined for subalgebras")
    full = l.full_space()
    cur = b
    while True:
        nxt = cur & l.transporter(full, cur)
        if nxt == cur:
            return cur
        cur = nxt


def normalizer(l: LieAlgebra, u: Subspace) -> Subspace:
    """{x in L : [x, u] <= u}."""
    return l.transporter(u, u)


# ---------------------------------------------------------------------------
# one-dimensional ideals

def projective_points(field: Field, n: int):
    """One canonical vector per line of GF(p)^n (first nonzero entry 1)."""
    if field.p is None:
        raise FieldNotFinite("projective scan needs a finite field")
    elements = field.elements()
    zero, one = elements[0], field.one()
    for lead in range(n):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elements, repeat=n - 1 - lead):
            yield head + tail


def _spans_ideal(l: LieAlgebra, x: tuple) -> bool:
    # x is nonzero; [e_j, x] must be a multiple of x for every j.
    lead = next(k for k, c in enumerate(x) if c)
    inv = x[lead].inverse()
    for j in range(l.dim):
        w = l.bracket(l.basis_vector(j), x)
        ratio = w[lead] * inv
        for a, b in zip(w, x):
            if a != ratio * b:
                return False
    return True


@lru_cache(maxsize=256)
def ideal_line_families(l: LieAlgebra) -> tuple:
    """Maximal joint-eigenspace subspaces of the adjoint maps.

    Every nonzero vector of a family spans a one-dimensional ideal, and
    every one-dimensional ideal lies inside exactly one family.  Works
    over any field; over Q only rational eigenvalues arise, which is the
    correct notion for a rational structure.
    """
    if l.dim == 0:
        return ()
    ads = [l.ad_matrix(l.basis_vector(i)) for i in range(l.dim)]
    roots = []
    for m in ads:
        rs = sorted(poly_roots_in_field(char_poly(m)), key=lambda s: s.value)
        roots.append(rs)
    families = []

    def recurse(i: int, space: Subspace):
        if space.dim == 0:
            return
        if i == l.dim:
            families.append(space)
            return
        for lam in roots[i]:
            recurse(i + 1, space & eigenspace(ads[i], lam))

    recurse(0, l.full_space())
    return tuple(sorted(families, key=Subspace.sort_key))


def one_dim_ideals(l: LieAlgebra) -> tuple:
    """All lines Fx that are ideals of L.

    Over a finite field this is a complete projective scan.  Over Q the
    lines spanned by the canonical basis vectors of each joint
    eigenspace family are returned: when a family has dimension >= 2 it
    contains infinitely many such lines, so the list is a deterministic
    set of representatives (complete exactly when every family is a
    line); the families themselves come from
    :func:`ideal_line_families`.
    """
    field = l.field
    if field.p is not None:
        lines = [
            Subspace.from_vectors(field, l.dim, [x])
            for x in projective_points(field, l.dim)
            if _spans_ideal(l, x)
        ]
    else:
        lines = []
        for fam in ideal_line_families(l):
            for v in fam.vectors():
                lines.append(Subspace.from_vectors(field, l.dim, [v]))
    return tuple(sorted(set(lines), key=Subspace.sort_key))
