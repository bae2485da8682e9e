"""Matrix words, continuants, the gluing sum, and dihedral equivalence.

A tuple here always means: a number field, a generator element w, and a
vector of integer multipliers (k_1, ..., k_n), standing for the entries
k_i * w.  Keeping the integers rather than the field elements makes
membership in <w> trivially exact and enumeration an integer search.

The two independent routes to the word matrix (direct 2x2 product and
continuant assembly) deliberately coexist; agreement between them is one
of the main cross-checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .numfield import (
    FieldElement,
    NumberField,
    coords_from_json,
    coords_to_json,
    field_from_descriptor,
    field_to_descriptor,
    subgroup_member,
)
from .polynomials import QPoly


class SizeTooSmall(ValueError):
    """Gluing needs both operands to have at least two entries."""


class NotPlusMinusOne(ValueError):
    """Unit-entry reduction asked at an entry that is not +-1."""


@dataclass(frozen=True)
class Mat2:
    m11: FieldElement
    m12: FieldElement
    m21: FieldElement
    m22: FieldElement

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def det(self) -> FieldElement:
        return self.m11 * self.m22 - self.m12 * self.m21

    def pm_identity_sign(self) -> Optional[int]:
        """+1 for Id, -1 for -Id, None otherwise."""
        field = self.m11.field
        one = field.one()
        if self.m12.is_zero and self.m21.is_zero:
            if self.m11 == one and self.m22 == one:
                return 1
            if self.m11 == -one and self.m22 == -one:
                return -1
        return None

    def unimodular_inverse(self) -> "Mat2":
        """Inverse assuming det = 1 (true for all generator products)."""
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)


@dataclass(frozen=True)
class ZPolyGraded:
    """Integer polynomial produced by expanding an n-entry word in one
    symbolic generator; only exponents of parity n can occur."""

    poly: QPoly
    size: int

    def grading_respected(self) -> bool:
        return all(
            c == 0 or (self.size - k) % 2 == 0
            for k, c in enumerate(self.poly.coeffs)
        )


class QuiddityTuple:
    """Integer multipliers over a chosen generator of a number field."""

    __slots__ = ("field", "generator", "multipliers")

    def __init__(
        self,
        field: NumberField,
        generator: FieldElement,
        multipliers: Sequence[int],
    ):
        if len(multipliers) < 1:
            raise ValueError("a tuple needs at least one entry")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "multipliers", tuple(int(k) for k in multipliers))

    def __setattr__(self, *a):
        raise AttributeError("QuiddityTuple is immutable")

    @property
    def n(self) -> int:
        return len(self.multipliers)

    def entries(self) -> list[FieldElement]:
        w = self.generator
        return [w * k for k in self.multipliers]

    def with_multipliers(self, ks: Sequence[int]) -> "QuiddityTuple":
        return QuiddityTuple(self.field, self.generator, ks)

    def __eq__(self, other):
        if isinstance(other, QuiddityTuple):
            return (
                self.multipliers == other.multipliers
                and self.generator == other.generator
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.multipliers, self.generator))

    def __repr__(self):
        return f"QuiddityTuple{self.multipliers}"

    def to_json(self) -> dict:
        return {
            "field": field_to_descriptor(self.field),
            "generator": coords_to_json(self.generator),
            "multipliers": list(self.multipliers),
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuiddityTuple":
        field = field_from_descriptor(data["field"])
        gen = coords_from_json(field, data["generator"])
        return cls(field, gen, data["multipliers"])


# ---------------------------------------------------------------------------
# Word matrices and continuants.
# ---------------------------------------------------------------------------


def e_matrix(x: FieldElement) -> Mat2:
    field = x.field
    return Mat2(x, -field.one(), field.one(), field.zero())


def m_product_entries(entries: Sequence[FieldElement]) -> Mat2:
    """E(a_n) * ... * E(a_1), the last entry applied on the left."""
    if not entries:
        raise ValueError("empty word")
    acc = e_matrix(entries[0])
    for a in entries[1:]:
        acc = e_matrix(a) * acc
    return acc


def m_product(t: QuiddityTuple) -> Mat2:
    return m_product_entries(t.entries())


def continuant(entries: Sequence, field: Optional[NumberField] = None):
    """K_n by the recurrence K_j = a_j K_{j-1} - K_{j-2}, K_0 = 1.

    Accepts FieldElements (returns one; field needed only when the list
    is empty) or plain rationals/polynomials (returns their type).
    """
    if not entries:
        if field is not None:
            return field.one()
        return Fraction(1)
    first = entries[0]
    if isinstance(first, FieldElement):
        one = first.field.one()
    elif isinstance(first, QPoly):
        one = QPoly.one()
    else:
        one = Fraction(1)
    km2, km1 = one * 0, one  # K_{-1} = 0, K_0 = 1
    for a in entries:
        km2, km1 = km1, a * km1 - km2
    return km1


def m_from_continuants(t: QuiddityTuple) -> Mat2:
    """Assemble the word matrix from four continuants of sub-tuples."""
    a = t.entries()
    n = len(a)
    field = t.field
    if n == 1:
        return Mat2(a[0], -field.one(), field.one(), field.zero())
    return Mat2(
        continuant(a, field),
        -continuant(a[1:], field),
        continuant(a[:-1], field),
        -continuant(a[1:-1], field),
    )


def euler_expansion(multipliers: Sequence[int]) -> ZPolyGraded:
    """The integer polynomial p with p(w) = K_n(k_1 w, ..., k_n w)."""
    if not multipliers:
        return ZPolyGraded(poly=QPoly.one(), size=0)
    entries = [QPoly((0, int(k))) for k in multipliers]
    return ZPolyGraded(poly=continuant(entries), size=len(multipliers))


def is_quiddity(t: QuiddityTuple) -> Optional[int]:
    """epsilon in {+1, -1} when the word matrix is epsilon * Id, else None."""
    return m_product(t).pm_identity_sign()


# ---------------------------------------------------------------------------
# The gluing sum and dihedral equivalence.
# ---------------------------------------------------------------------------


def oplus_multipliers(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) < 2 or len(b) < 2:
        raise SizeTooSmall("both operands need at least two entries")
    n, m = len(a), len(b)
    return (
        (a[0] + b[m - 1],)
        + tuple(a[1 : n - 1])
        + (a[n - 1] + b[0],)
        + tuple(b[1 : m - 1])
    )


def oplus_sum(a: QuiddityTuple, b: QuiddityTuple) -> QuiddityTuple:
    """(a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1})."""
    if a.generator != b.generator:
        raise ValueError("operands live over different generators")
    return a.with_multipliers(oplus_multipliers(a.multipliers, b.multipliers))


def rotations(seq: Sequence[int]) -> Iterable[tuple[int, ...]]:
    s = tuple(seq)
    for r in range(len(s)):
        yield s[r:] + s[:r]


def dihedral_images(seq: Sequence[int]) -> list[tuple[int, ...]]:
    """All 2n rotations of the sequence and of its reversal."""
    out = list(rotations(seq))
    out += list(rotations(tuple(reversed(seq))))
    return out


def canonical_multipliers(seq: Sequence[int]) -> tuple[int, ...]:
    return min(dihedral_images(seq))


def canonical_form(t: QuiddityTuple) -> tuple[int, ...]:
    """Lexicographically least multiplier vector over the 2n images."""
    return canonical_multipliers(t.multipliers)


def equivalent(a, b) -> bool:
    """True iff b is a rotation of a or of reversed a (multiplier level)."""
    sa = a.multipliers if isinstance(a, QuiddityTuple) else tuple(a)
    sb = b.multipliers if isinstance(b, QuiddityTuple) else tuple(b)
    if len(sa) != len(sb):
        return False
    return canonical_multipliers(sa) == canonical_multipliers(sb)


# ---------------------------------------------------------------------------
# Removing a +-1 entry.
# ---------------------------------------------------------------------------


def reduce_pm_one(t: QuiddityTuple, position: int) -> tuple[QuiddityTuple, bool]:
    """Drop the +-1 entry at `position` (0-based), absorbing it into its
    neighbors: with s the sign of the entry, both neighbors lose s and
    the word matrix gains a factor of s.

    Interior positions splice in place, so the result's word matrix is
    exactly s times the input's.  Edge positions are first rotated to an
    interior slot; rotation conjugates the word matrix, which preserves
    +-Id, so for quiddity inputs the sign bookkeeping is still exact.
    """
    n = t.n
    if n < 3:
        raise ValueError("need at least three entries to reduce")
    if not (0 <= position < n):
        raise IndexError("position out of range")
    w = t.generator
    entry = w * t.multipliers[position]
    one = t.field.one()
    if entry == one:
        s = 1
    elif entry == -one:
        s = -1
    else:
        raise NotPlusMinusOne(f"entry at {position} is not +-1")
    # 1 = (s * k_pos) * w, so the unit shift stays inside <w>
    unit_mult = subgroup_member(one, w)
    assert unit_mult is not None
    ks = list(t.multipliers)
    if position == 0 or position == n - 1:
        r = (position - 1) % n
        ks = ks[r:] + ks[:r]
        position = 1
    left, right = position - 1, position + 1
    ks[left] -= s * unit_mult
    ks[right] -= s * unit_mult
    del ks[position]
    return t.with_multipliers(ks), s == -1
