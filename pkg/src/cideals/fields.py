"""Exact scalar arithmetic over the rationals and over prime fields.

A :class:`Field` is either Q (``p is None``) or GF(p) for a word-sized
prime p.  A :class:`Scalar` wraps a ``fractions.Fraction`` over Q and an
int residue in ``[0, p)`` over GF(p); arithmetic never leaves the field
and mixing fields is a hard error.  No floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    BadParams,
    DivisionByZero,
    FieldMismatch,
    FieldNotFinite,
    ZeroPolynomial,
)

_MAX_MODULUS = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise BadParams(f"modulus must be an int, got {self.p!r}")
            if not 2 <= self.p <= _MAX_MODULUS or not _is_prime(self.p):
                raise BadParams(f"modulus must be a prime <= 2**31, got {self.p}")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def zero(self) -> "Scalar":
        return Scalar._make(self, 0 if self.p is not None else Fraction(0))

    def one(self) -> "Scalar":
        return Scalar._make(self, 1 if self.p is not None else Fraction(1))

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, decimal/fraction string or Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used in {self}")
            return value
        if isinstance(value, str):
            value = value.strip()
            if self.p is not None:
                try:
                    value = int(value, 10)
                except ValueError:
                    raise BadParams(f"bad residue text {value!r} for {self}") from None
            else:
                try:
                    value = Fraction(value)
                except (ValueError, ZeroDivisionError):
                    raise BadParams(f"bad rational text {value!r}") from None
        if isinstance(value, float):
            raise BadParams("floats are not exact; pass int, Fraction or text")
        return Scalar(self, value)

    def elements(self):
        """All field elements, in residue order.  Finite fields only."""
        if self.p is None:
            raise FieldNotFinite("cannot enumerate the rationals")
        return tuple(Scalar._make(self, k) for k in range(self.p))

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


Q = Field()


def GF(p: int) -> Field:
    """The prime field with p elements."""
    return Field(p)


class Scalar:
    """An immutable field element.

    Over Q the value is a normalized Fraction; over GF(p) it is the int
    residue in ``[0, p)``.  Operators raise :class:`FieldMismatch` when
    the operands disagree on the field and :class:`DivisionByZero` on
    inversion of zero.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        p = field.p
        if p is None:
            self.value = value if type(value) is Fraction else Fraction(value)
        else:
            self.value = int(value) % p

    @classmethod
    def _make(cls, field, value):
        # Internal fast path; `value` must already be normalized.
        s = object.__new__(cls)
        s.field = field
        s.value = value
        return s

    def __bool__(self):
        return self.value != 0

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        f = self.field
        if f != other.field:
            raise FieldMismatch(f"{f} + {other.field}")
        v = self.value + other.value
        return Scalar._make(f, v if f.p is None else v % f.p)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        f = self.field
        if f != other.field:
            raise FieldMismatch(f"{f} - {other.field}")
        v = self.value - other.value
        return Scalar._make(f, v if f.p is None else v % f.p)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        f = self.field
        if f != other.field:
            raise FieldMismatch(f"{f} * {other.field}")
        v = self.value * other.value
        return Scalar._make(f, v if f.p is None else v % f.p)

    def __neg__(self):
        f = self.field
        return Scalar._make(f, -self.value if f.p is None else (-self.value) % f.p)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise DivisionByZero(f"inverse of zero in {self.field}")
        f = self.field
        if f.p is None:
            return Scalar._make(f, 1 / self.value)
        return Scalar._make(f, pow(self.value, -1, f.p))

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} / {other.field}")
        return self * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.field.p, self.value))

    def text(self) -> str:
        """Canonical text form: ``"n"`` or ``"n/d"`` over Q, the residue over GF(p)."""
        return str(self.value)

    __str__ = text

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"


def poly_eval(coeffs, x: Scalar) -> Scalar:
    """Evaluate sum(coeffs[k] * t**k) at t = x by Horner's rule."""
    coeffs = list(coeffs)
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int):
    # Positive divisors of n > 0, unsorted.
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


def poly_roots_in_field(coeffs) -> set[Scalar]:
    """Roots, inside the coefficient field, of sum(coeffs[k] * t**k).

    Over GF(p) every element is tried, so the answer is complete.  Over
    Q the rational-root theorem is applied after clearing denominators;
    irrational and complex roots are silently absent, which is the
    correct contract for eigenvalue searches over Q.

    Raises ZeroPolynomial for an empty or all-zero coefficient list.
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise ZeroPolynomial("no coefficients given")
    field = coeffs[0].field
    for c in coeffs[1:]:
        if c.field != field:
            raise FieldMismatch("polynomial coefficients from different fields")
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    if len(coeffs) == 1:
        return set()
    if field.p is not None:
        return {x for x in field.elements() if not poly_eval(coeffs, x)}

    roots: set[Scalar] = set()
    low = 0
    while not coeffs[low]:
        low += 1
    if low:
        roots.add(field.zero())
    tail = coeffs[low:]
    if len(tail) == 1:
        return roots
    den = lcm(*(c.value.denominator for c in tail))
    ints = [int(c.value * den) for c in tail]
    for num in _divisors(abs(ints[0])):
        for d in _divisors(abs(ints[-1])):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                s = Scalar._make(field, cand)
                if not poly_eval(coeffs, s):
                    roots.add(s)
    return roots
