"""Lie algebras presented by structure constants.

An algebra is stored as the coordinate vectors of [e_i, e_j] for i < j;
antisymmetry is structural and the Jacobi identity is checked by
:meth:`LieAlgebra.validate`.  Subspaces of the underlying vector space
are handled by :class:`~cideals.linalg.Subspace`; this module adds the
bracket-aware constructions: products of subspaces, closures, series,
centralizers and transporters, quotients, restrictions and direct sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    AmbientMismatch,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotAnIdeal,
    NotSubalgebra,
)
from .fields import Field, Scalar
from .linalg import (
    Matrix,
    Subspace,
    add_vectors,
    nullspace,
    scale_vector,
    standard_vector,
    vector_is_zero,
    zero_vector,
)

SERIES_KINDS = ("derived", "lower_central")


@dataclass(frozen=True)
class SeriesResult:
    """A strictly descending series that has reached its fixed point.

    ``terms[0]`` is the starting subalgebra and ``terms[-1]`` equals the
    next step applied to itself, so ``stabilized`` is always True; it is
    kept explicit because callers branch on it.
    """

    kind: str
    terms: tuple
    stabilized: bool


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q or GF(p).

    Equality and hashing use the field, dimension and bracket table;
    basis labels and metadata are presentation only and ignored, which
    lets derived objects (quotients, restrictions) be cached by value.
    """

    __slots__ = ("field", "dim", "names", "meta", "table", "_pairs", "_hash")

    def __init__(self, field: Field, dim: int, names=None, brackets=None, meta=None):
        """``brackets`` maps pairs ``(i, j)`` with i < j to the coordinate
        sequence of [e_i, e_j]; missing pairs are zero.  Coordinates may
        be ints, Fractions, strings or Scalars.
        """
        if dim < 0:
            raise DimensionMismatch("negative dimension")
        self.field = field
        self.dim = dim
        if names is None:
            names = tuple(f"e{i}" for i in range(dim))
        else:
            names = tuple(str(n) for n in names)
            if len(names) != dim:
                raise DimensionMismatch(f"{len(names)} names for dimension {dim}")
        self.names = names
        self.meta = dict(meta) if meta else {}
        zero = zero_vector(field, dim)
        table = {}
        for (i, j), coords in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexOutOfRange(f"bracket pair ({i}, {j}) outside 0..{dim - 1}")
            if i >= j:
                raise IndexOutOfRange(f"bracket pair ({i}, {j}) must have i < j")
            vec = tuple(field.scalar(c) for c in coords)
            if len(vec) != dim:
                raise DimensionMismatch(
                    f"bracket ({i}, {j}) has {len(vec)} coordinates, expected {dim}"
                )
            table[(i, j)] = vec
        rows = []
        pairs = []
        for i in range(dim):
            for j in range(i + 1, dim):
                vec = table.get((i, j), zero)
                rows.append(vec)
                sparse = tuple((k, c) for k, c in enumerate(vec) if c)
                if sparse:
                    pairs.append((i, j, sparse))
        self.table = tuple(rows)
        self._pairs = tuple(pairs)
        self._hash = None

    # -- basics ------------------------------------------------------------

    def zero_vec(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> tuple:
        return standard_vector(self.field, self.dim, i)

    def basis(self) -> tuple:
        return tuple(self.basis_vector(i) for i in range(self.dim))

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def structure_vector(self, i: int, j: int) -> tuple:
        """[e_i, e_j] for any i, j."""
        if i == j:
            return self.zero_vec()
        if i < j:
            idx = i * self.dim - (i * (i + 1)) // 2 + (j - i - 1)
            return self.table[idx]
        idx = j * self.dim - (j * (j + 1)) // 2 + (i - j - 1)
        return tuple(-c for c in self.table[idx])

    def bracket(self, u: tuple, v: tuple) -> tuple:
        """[u, v], bilinear and antisymmetric by construction."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch(
                f"vectors of length {len(u)}, {len(v)} in a dim-{self.dim} algebra"
            )
        out = list(self.zero_vec())
        for i, j, sparse in self._pairs:
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, c in sparse:
                    out[k] = out[k] + coef * c
        return tuple(out)

    def ad_matrix(self, x: tuple) -> Matrix:
        """The matrix of y -> [x, y] on the chosen basis (columns are [x, e_j])."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        flat = tuple(cols[j][i] for i in range(self.dim) for j in range(self.dim))
        return Matrix(self.field, self.dim, self.dim, flat)

    def validate(self) -> list:
        """Jacobi-identity violations as ``(i, j, k, residual)`` tuples.

        An empty list means the structure constants define a Lie
        algebra.  Antisymmetry cannot be violated in this encoding.
        """
        violations = []
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                ej = self.basis_vector(j)
                vij = self.structure_vector(i, j)
                for k in range(j + 1, self.dim):
                    ek = self.basis_vector(k)
                    acc = self.bracket(vij, ek)
                    acc = add_vectors(acc, self.bracket(self.structure_vector(j, k), ei))
                    acc = add_vectors(acc, self.bracket(self.structure_vector(k, i), ej))
                    if not vector_is_zero(acc):
                        violations.append((i, j, k, acc))
        return violations

    # -- subspace constructions ---------------------------------------------

    def _check_subspace(self, u: Subspace):
        if u.field != self.field:
            raise FieldMismatch(f"subspace over {u.field} in an algebra over {self.field}")
        if u.ambient_dim != self.dim:
            raise AmbientMismatch(
                f"subspace of F^{u.ambient_dim} in a dim-{self.dim} algebra"
            )

    def span_product(self, u: Subspace, v: Subspace) -> Subspace:
        """The span of all [x, y] with x in u, y in v."""
        self._check_subspace(u)
        self._check_subspace(v)
        vecs = [self.bracket(x, y) for x in u.vectors() for y in v.vectors()]
        return Subspace.from_vectors(self.field, self.dim, vecs)

    def is_subalgebra(self, u: Subspace) -> bool:
        return self.span_product(u, u) <= u

    def is_ideal(self, u: Subspace) -> bool:
        return self.span_product(self.full_space(), u) <= u

    def subalgebra_closure(self, u: Subspace) -> Subspace:
        """The smallest subalgebra containing u."""
        self._check_subspace(u)
        cur = u
        while True:
            nxt = cur + self.span_product(cur, cur)
            if nxt == cur:
                return cur
            cur = nxt

    def series(self, kind: str, start: Subspace | None = None) -> SeriesResult:
        """Derived or lower central series from ``start`` (default: L).

        The lower central step brackets against the whole algebra, so
        for a proper starting subalgebra it descends through the ideal
        closure rather than the subalgebra's own central series; use
        :meth:`restrict` first for the intrinsic one.
        """
        if kind not in SERIES_KINDS:
            raise ValueError(f"unknown series kind {kind!r}")
        full = self.full_space()
        cur = full if start is None else start
        if start is not None:
            self._check_subspace(start)
            if not self.is_subalgebra(cur):
                raise NotSubalgebra("series must start at a subalgebra")
        terms = [cur]
        while True:
            left = cur if kind == "derived" else full
            nxt = self.span_product(left, cur)
            if nxt == cur:
                break
            terms.append(nxt)
            cur = nxt
        return SeriesResult(kind, tuple(terms), True)

    def derived_series(self, start: Subspace | None = None) -> SeriesResult:
        return self.series("derived", start)

    def lower_central_series(self, start: Subspace | None = None) -> SeriesResult:
        return self.series("lower_central", start)

    def transporter(self, gens: Subspace, target: Subspace) -> Subspace:
        """{x in L : [x, u] in target for every u in gens}.

        Centralizers, normalizers, the core iteration and the ascending
        central series are all instances of this one linear solve.
        """
        self._check_subspace(gens)
        self._check_subspace(target)
        if gens.dim == 0:
            return self.full_space()
        blocks = []
        for u in gens.vectors():
            cols = [target.reduce(self.bracket(self.basis_vector(i), u)) for i in range(self.dim)]
            flat = tuple(cols[j][i] for i in range(self.dim) for j in range(self.dim))
            blocks.append(Matrix(self.field, self.dim, self.dim, flat))
        stacked = blocks[0]
        for b in blocks[1:]:
            stacked = stacked.vstack(b)
        return nullspace(stacked)

    def centralizer(self, a: Subspace) -> Subspace:
        """{x in L : [x, a] = 0 for all a in the subspace}."""
        return self.transporter(a, self.zero_space())

    def centre(self) -> Subspace:
        return self.centralizer(self.full_space())

    # -- derived algebras ----------------------------------------------------

    def quotient(self, ideal: Subspace):
        """The quotient by an ideal, with the coordinate maps.

        Returns ``(Lbar, project, lift)``.  The quotient basis consists
        of the images of the standard vectors at the ideal's non-pivot
        columns, so ``project`` is linear with kernel exactly ``ideal``
        and ``project(lift(w)) == w``.
        """
        self._check_subspace(ideal)
        if not self.is_ideal(ideal):
            raise NotAnIdeal("quotient by a subspace that is not an ideal")
        pivot_set = set(ideal.pivots)
        cols = [c for c in range(self.dim) if c not in pivot_set]
        m = len(cols)
        field = self.field

        def project(v: tuple) -> tuple:
            r = ideal.reduce(v)
            return tuple(r[c] for c in cols)

        def lift(w: tuple) -> tuple:
            if len(w) != m:
                raise DimensionMismatch(f"quotient vector of length {len(w)}, expected {m}")
            out = list(zero_vector(field, self.dim))
            for c, wc in zip(cols, w):
                out[c] = wc
            return tuple(out)

        brackets = {}
        for a in range(m):
            ea = self.basis_vector(cols[a])
            for b in range(a + 1, m):
                vec = project(self.bracket(ea, self.basis_vector(cols[b])))
                if not vector_is_zero(vec):
                    brackets[(a, b)] = vec
        names = tuple(self.names[c] for c in cols)
        return LieAlgebra(field, m, names, brackets), project, lift

    def restrict(self, subalgebra: Subspace):
        """The subalgebra as an algebra on its canonical basis.

        Returns ``(S, to_coords, from_coords)`` where ``to_coords`` maps
        a member of the subspace to its coordinates on the RREF basis
        (these are just the entries at the pivot columns) and
        ``from_coords`` embeds back into L.
        """
        self._check_subspace(subalgebra)
        if not self.is_subalgebra(subalgebra):
            raise NotSubalgebra("restriction to a subspace that is not closed")
        rows = subalgebra.vectors()
        pivots = subalgebra.pivots
        k = subalgebra.dim
        field = self.field

        def to_coords(v: tuple) -> tuple:
            if v not in subalgebra:
                raise AmbientMismatch("vector outside the subalgebra")
            return tuple(v[p] for p in pivots)

        def from_coords(c: tuple) -> tuple:
            if len(c) != k:
                raise DimensionMismatch(f"coordinate vector of length {len(c)}, expected {k}")
            acc = zero_vector(field, self.dim)
            for coef, row in zip(c, rows):
                if coef:
                    acc = add_vectors(acc, scale_vector(coef, row))
            return acc

        brackets = {}
        for a in range(k):
            for b in range(a + 1, k):
                w = self.bracket(rows[a], rows[b])
                vec = tuple(w[p] for p in pivots)
                if not vector_is_zero(vec):
                    brackets[(a, b)] = vec
        names = tuple(self.names[p] for p in pivots)
        return LieAlgebra(field, k, names, brackets), to_coords, from_coords

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.dim, self.table))
        return self._hash

    def __repr__(self):
        return f"<LieAlgebra {self.field} dim {self.dim} names={','.join(self.names)}>"


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """The direct sum; each summand embeds as an ideal."""
    if a.field != b.field:
        raise FieldMismatch(f"direct sum over {a.field} and {b.field}")
    n, m = a.dim, b.dim
    field = a.field
    zero = field.zero()
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = a.structure_vector(i, j)
            if not vector_is_zero(vec):
                brackets[(i, j)] = vec + (zero,) * m
    for i in range(m):
        for j in range(i + 1, m):
            vec = b.structure_vector(i, j)
            if not vector_is_zero(vec):
                brackets[(n + i, n + j)] = (zero,) * n + vec
    names = []
    seen = {}
    for nm in a.names + b.names:
        count = seen.get(nm, 0) + 1
        seen[nm] = count
        names.append(nm if count == 1 else f"{nm}_{count}")
    return LieAlgebra(field, n + m, names, brackets)


# ---------------------------------------------------------------------------
# cached derived objects.  Keyed by value (LieAlgebra and Subspace hash their
# content), bounded so fuzzing cannot grow memory without limit.

@lru_cache(maxsize=256)
def restricted_algebra(l: LieAlgebra, u: Subspace):
    return l.restrict(u)


@lru_cache(maxsize=256)
def quotient_algebra(l: LieAlgebra, ideal: Subspace):
    return l.quotient(ideal)


@lru_cache(maxsize=1024)
def _solvable(l: LieAlgebra) -> bool:
    return l.derived_series().terms[-1].dim == 0


@lru_cache(maxsize=1024)
def _nilpotent(l: LieAlgebra) -> bool:
    return l.lower_central_series().terms[-1].dim == 0


def is_solvable(l: LieAlgebra, subspace: Subspace | None = None) -> bool:
    """Solvability of L, or of a subalgebra's intrinsic algebra."""
    if subspace is None:
        return _solvable(l)
    if subspace.dim == 0:
        return True
    return _solvable(restricted_algebra(l, subspace)[0])


def is_nilpotent(l: LieAlgebra, subspace: Subspace | None = None) -> bool:
    """Nilpotency of L, or of a subalgebra's intrinsic algebra."""
    if subspace is None:
        return _nilpotent(l)
    if subspace.dim == 0:
        return True
    return _nilpotent(restricted_algebra(l, subspace)[0])
