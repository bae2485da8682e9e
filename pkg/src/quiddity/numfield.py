"""Number fields presented by a minimal polynomial, with certified roots.

A field is its monic minimal polynomial plus one isolating rectangle per
complex root; a distinguished index says which root the generator means.
Elements are exact coordinate vectors on the power basis, so all algebra
is rational arithmetic; only questions about a specific embedding (which
root is bigger, is the modulus at least 2) touch the rectangles, and
those are answered by refining rectangles until the answer is certified,
never by floating point.

Real roots are isolated by sign-variation bisection.  Nonreal roots are
isolated in the upper half plane by rectangle subdivision, where a cell
is discarded once a disk around it provably contains no root and a
cluster of surviving cells is accepted once a disk around it provably
contains exactly one; both certificates come from the strict disk counts
in polycrit.  Totality is an exact counting argument, so cells that
straddle the real axis can linger harmlessly until excluded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from .polynomials import (
    GaussRat,
    QPoly,
    as_rat,
    composed_product,
    count_real_roots,
    is_perfect_square,
    rational_sqrt,
    real_roots_isolated,
    refine_real_root,
)
from .polycrit import gauss_disk_count_strict, irreducible_over_Q


class NotMonic(ValueError):
    """Minimal polynomial cannot be normalized to a monic one."""


class NotSquarefree(ValueError):
    """Candidate minimal polynomial has repeated roots."""


class NotIrreducible(ValueError):
    """Candidate minimal polynomial has a proven rational factor."""


class IrreducibilityUnknown(ValueError):
    """No irreducibility proof and no explicit assume flag."""


class AmbiguousHint(ValueError):
    """Root hint matches zero roots, or cannot be narrowed to one."""


class ZeroGenerator(ValueError):
    """Subgroup membership is degenerate for w = 0."""


class UndecidableAtPrecision(RuntimeError):
    """A certified answer was not reached within the allowed refinement."""


_MAX_DEPTH = 64
_LADDER = (
    Fraction(1),
    Fraction(18, 17),
    Fraction(19, 17),
    Fraction(21, 17),
    Fraction(23, 17),
    Fraction(26, 17),
)


# ---------------------------------------------------------------------------
# Exact interval and rectangle arithmetic.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatInterval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def make(cls, lo, hi) -> "RatInterval":
        lo, hi = as_rat(lo), as_rat(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        return cls(lo, hi)

    @classmethod
    def point(cls, v) -> "RatInterval":
        v = as_rat(v)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rat(other)
            return RatInterval(self.lo + q, self.hi + q)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rat(other)
            return RatInterval(self.lo - q, self.hi - q)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rat(other)
            a, b = self.lo * q, self.hi * q
            return RatInterval(min(a, b), max(a, b))
        ps = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def sq(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            return RatInterval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))
        a, b = self.lo * self.lo, self.hi * self.hi
        return RatInterval(min(a, b), max(a, b))

    def contains(self, v) -> bool:
        v = as_rat(v)
        return self.lo <= v <= self.hi

    def touches(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class BoxC:
    """Axis-aligned rectangle in C with exact rational corners."""

    re: RatInterval
    im: RatInterval

    @classmethod
    def make(cls, re_lo, re_hi, im_lo, im_hi) -> "BoxC":
        return cls(RatInterval.make(re_lo, re_hi), RatInterval.make(im_lo, im_hi))

    @classmethod
    def point(cls, re, im=0) -> "BoxC":
        return cls(RatInterval.point(re), RatInterval.point(im))

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    @property
    def center(self) -> GaussRat:
        return GaussRat(self.re.mid, self.im.mid)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return BoxC(self.re + other, self.im)
        return BoxC(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return BoxC(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return BoxC(self.re - other, self.im)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BoxC(self.re * other, self.im * other)
        return BoxC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "BoxC":
        return BoxC(self.re, -self.im)

    def abs2(self) -> RatInterval:
        return self.re.sq() + self.im.sq()

    def touches(self, other: "BoxC") -> bool:
        return self.re.touches(other.re) and self.im.touches(other.im)

    def is_point(self) -> bool:
        return self.re.width == 0 and self.im.width == 0

    def is_real_line(self) -> bool:
        return self.im.lo == 0 and self.im.hi == 0

    def sort_key(self):
        return (self.re.lo, self.re.hi, self.im.lo, self.im.hi)


# ---------------------------------------------------------------------------
# Rectangle subdivision for nonreal roots.
# ---------------------------------------------------------------------------


def _split4(cell: BoxC) -> list[BoxC]:
    rm, im = cell.re.mid, cell.im.mid
    return [
        BoxC(RatInterval(cell.re.lo, rm), RatInterval(cell.im.lo, im)),
        BoxC(RatInterval(rm, cell.re.hi), RatInterval(cell.im.lo, im)),
        BoxC(RatInterval(cell.re.lo, rm), RatInterval(im, cell.im.hi)),
        BoxC(RatInterval(rm, cell.re.hi), RatInterval(im, cell.im.hi)),
    ]


def _sqrt_lower(s: Fraction) -> Fraction:
    """A rational lower bound for sqrt(s), s >= 0, within 2^-12."""
    scale = 1 << 12
    return Fraction(
        isqrt(s.numerator * s.denominator * scale * scale),
        s.denominator * scale,
    )


def _cell_excluded(p: QPoly, cell: BoxC) -> bool:
    """Certified: the closed cell contains no nonreal root of p.

    Real roots never obstruct: when the covering disk dips below the
    search strip, the roots on its real trace are counted exactly and
    subtracted.  The disk count matching the real count forces the disk
    (hence the cell) to be free of nonreal roots, because a disk centered
    on or above the axis that contains a lower-half root also contains
    its upper partner.
    """
    r0 = (cell.re.width + cell.im.width) / 2
    if r0 == 0:
        r0 = Fraction(1, 1024)
    c = cell.center
    for mult in _LADDER:
        r = r0 * mult
        got = gauss_disk_count_strict(p, c, r)
        if got is None:
            continue
        if got == 0:
            return True
        if c.im >= r:
            # disk entirely above the axis: genuinely occupied
            return False
        # undershooting the trace radius only risks missing an exclusion
        rho = _sqrt_lower(r * r - c.im * c.im)
        if rho > 0 and got == count_real_roots(p, c.re - rho, c.re + rho):
            return True
    return False


def _cluster_certified_single(p: QPoly, bbox: BoxC) -> bool:
    """Certified: a disk covering bbox, strictly above the real axis,
    contains exactly one root of p."""
    r0 = (bbox.re.width + bbox.im.width) / 2
    if r0 == 0:
        r0 = Fraction(1, 1024)
    c = bbox.center
    for mult in _LADDER:
        r = r0 * mult
        if c.im <= r:
            break  # disk would dip below the axis
        got = gauss_disk_count_strict(p, c, r)
        if got == 1:
            return True
        if got is not None and got != 1:
            return False
    return False


def _components(cells: list[BoxC]) -> list[list[BoxC]]:
    n = len(cells)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if cells[i].touches(cells[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[BoxC]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(cells[i])
    return list(groups.values())


def _bbox(cells: Sequence[BoxC]) -> BoxC:
    return BoxC(
        RatInterval(min(c.re.lo for c in cells), max(c.re.hi for c in cells)),
        RatInterval(min(c.im.lo for c in cells), max(c.im.hi for c in cells)),
    )


def _boxes_disjoint(boxes: Sequence[BoxC]) -> bool:
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if boxes[i].touches(boxes[j]):
                return False
    return True


def _upper_half_roots(p: QPoly, pairs: int) -> list[BoxC]:
    """Isolating boxes for the `pairs` roots of p with positive
    imaginary part.  p squarefree with rational coefficients."""
    if pairs == 0:
        return []
    bound = p.cauchy_root_bound()
    cells = [BoxC(RatInterval(-bound, bound), RatInterval(Fraction(0), bound))]
    for _ in range(_MAX_DEPTH):
        split: list[BoxC] = []
        for c in cells:
            split.extend(_split4(c))
        cells = [c for c in split if not _cell_excluded(p, c)]
        comps = _components(cells)
        if len(comps) == pairs:
            boxes = [_bbox(comp) for comp in comps]
            if _boxes_disjoint(boxes) and all(
                _cluster_certified_single(p, b) for b in boxes
            ):
                return sorted(boxes, key=BoxC.sort_key)
    raise UndecidableAtPrecision(
        "rectangle subdivision failed to isolate the nonreal roots"
    )


def _shrink_box(p: QPoly, box: BoxC, width: Fraction) -> BoxC:
    """Shrink an isolating rectangle of a nonreal root by regridding:
    split into 16 cells, drop provably empty ones, take the hull."""
    while box.width > width:
        cells = []
        for quarter in _split4(box):
            cells.extend(_split4(quarter))
        kept = [c for c in cells if not _cell_excluded(p, c)]
        if not kept:
            raise UndecidableAtPrecision("root escaped its rectangle")
        nxt = _bbox(kept)
        if nxt.width >= box.width:
            raise UndecidableAtPrecision("rectangle refinement stalled")
        box = nxt
    return box


# ---------------------------------------------------------------------------
# The field objects.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumberField:
    min_poly: QPoly
    degree: int
    root_boxes: tuple[BoxC, ...]
    selected_root: int
    irreducibility: str  # "proven" or "assumed"

    def __post_init__(self):
        if not (0 <= self.selected_root < len(self.root_boxes)):
            raise ValueError("selected root index out of range")

    def selected_box(self) -> BoxC:
        return self.root_boxes[self.selected_root]

    def root_is_real(self, index: int) -> bool:
        return self.root_boxes[index].is_real_line()

    def with_selected(self, index: int) -> "NumberField":
        if not (0 <= index < self.degree):
            raise ValueError("selected root index out of range")
        return NumberField(
            self.min_poly, self.degree, self.root_boxes, index, self.irreducibility
        )

    def refined(self, index: int, width) -> "NumberField":
        """New field handle whose index-th box has width <= width."""
        width = as_rat(width)
        box = self.root_boxes[index]
        if box.width <= width:
            return self
        new_box = _refine_one(self.min_poly, box, width)
        boxes = list(self.root_boxes)
        boxes[index] = new_box
        return NumberField(
            self.min_poly, self.degree, tuple(boxes), self.selected_root,
            self.irreducibility,
        )

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "FieldElement":
        coords = [Fraction(0)] * self.degree
        coords[0] = as_rat(q)
        return FieldElement(self, tuple(coords))

    def generator(self) -> "FieldElement":
        """The element alpha itself (the selected root as a number)."""
        if self.degree == 1:
            return self.from_rational(-self.min_poly.coeffs[0])
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElement(self, tuple(coords))


def _refine_one(p: QPoly, box: BoxC, width: Fraction) -> BoxC:
    if box.is_point():
        return box
    if box.is_real_line():
        lo, hi = refine_real_root(p, box.re.lo, box.re.hi, width)
        return BoxC(RatInterval(lo, hi), RatInterval.point(0))
    if box.re.width == 0 and p.degree == 2 and p.lc() == 1:
        # quadratic-shortcut shape: exact real part -c1/2, imaginary
        # part a square root of the rational s = c0 - c1^2/4
        s = p.coeffs[0] - p.coeffs[1] * p.coeffs[1] / 4
        if box.im.lo > 0:
            lo, hi = refine_real_root(QPoly((-s, 0, 1)), box.im.lo, box.im.hi, width)
            return BoxC(box.re, RatInterval(lo, hi))
        lo, hi = refine_real_root(QPoly((-s, 0, 1)), -box.im.hi, -box.im.lo, width)
        return BoxC(box.re, RatInterval(-hi, -lo))
    return _shrink_box(p, box, width)


class FieldElement:
    """Exact element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence[Fraction]):
        coords = tuple(as_rat(c) for c in coords)
        if len(coords) != field.degree:
            raise ValueError("coordinate vector has the wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    # identity is algebraic: refinement state of the boxes is irrelevant
    def _key(self):
        return (
            self.field.min_poly.coeffs,
            self.field.selected_root,
            self.coords,
        )

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._key() == other._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldElement{self.coords}"

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_poly(self) -> QPoly:
        return QPoly(self.coords)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rat(other)
            return FieldElement(self.field, tuple(c * q for c in self.coords))
        if not isinstance(other, FieldElement):
            return NotImplemented
        prod = self.as_poly() * other.as_poly()
        red = prod % self.field.min_poly
        coords = list(red.coeffs) + [Fraction(0)] * (
            self.field.degree - len(red.coeffs)
        )
        return FieldElement(self.field, tuple(coords[: self.field.degree]))

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        g, u = _half_ext_gcd(self.as_poly(), self.field.min_poly)
        if g.degree != 0:
            raise NotIrreducible(
                "element is a zero divisor: the assumed minimal polynomial factors"
            )
        u = u * (1 / g.coeffs[0])
        red = u % self.field.min_poly
        coords = list(red.coeffs) + [Fraction(0)] * (
            self.field.degree - len(red.coeffs)
        )
        return FieldElement(self.field, tuple(coords[: self.field.degree]))

    def rational_value(self) -> Optional[Fraction]:
        if all(c == 0 for c in self.coords[1:]):
            return self.coords[0]
        return None

    def min_poly_over_Q(self) -> QPoly:
        """Monic minimal polynomial of this element over Q."""
        d = self.field.degree
        powers = [self.field.one()]
        for _ in range(d):
            powers.append(powers[-1] * self)
        # first k with 1, x, ..., x^k linearly dependent
        for k in range(1, d + 1):
            rows = [list(powers[j].coords) for j in range(k + 1)]
            dep = _dependence(rows)
            if dep is not None:
                # normalize to monic in the top power
                top = dep[k]
                return QPoly([c / top for c in dep])
        raise AssertionError("element has no minimal polynomial below field degree")


def _half_ext_gcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """(g, u) with u*a = g mod b."""
    r0, r1 = a, b
    u0, u1 = QPoly.one(), QPoly.zero()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    return r0, u0


def _dependence(rows: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """Coefficients c (last nonzero) with sum c_i rows[i] = 0, or None."""
    k = len(rows) - 1
    n = len(rows[0])
    # solve sum_{i<k} c_i rows[i] = -rows[k] by Gaussian elimination
    a = [[rows[i][j] for i in range(k)] + [-rows[k][j]] for j in range(n)]
    piv_cols: list[int] = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(n):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
    # consistent?
    for i in range(r, n):
        if a[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for row_idx, col in enumerate(piv_cols):
        sol[col] = a[row_idx][k]
    return sol + [Fraction(1)]


# ---------------------------------------------------------------------------
# Construction.
# ---------------------------------------------------------------------------


def isolate_roots(p: QPoly) -> list[BoxC]:
    """Pairwise-disjoint isolating boxes for all complex roots of the
    monic squarefree p, sorted by (re.lo, re.hi, im.lo, im.hi)."""
    d = p.degree
    if d == 1:
        return [BoxC.point(-p.coeffs[0])]
    intervals, exact = real_roots_isolated(p)
    pending = [(e, e) for e in exact]
    # tighten to unit width so hint rectangles have something to grab
    for lo, hi in intervals:
        if hi - lo > 1:
            lo, hi = refine_real_root(p, lo, hi, Fraction(1))
        pending.append((lo, hi))
    # separate touching isolating intervals so the closed boxes are disjoint
    changed = True
    while changed:
        changed = False
        pending.sort()
        for i in range(len(pending) - 1):
            if pending[i][1] < pending[i + 1][0]:
                continue
            refined = []
            for lo, hi in (pending[i], pending[i + 1]):
                if lo < hi:
                    lo, hi = refine_real_root(p, lo, hi, (hi - lo) / 4)
                refined.append((lo, hi))
            pending[i], pending[i + 1] = refined
            changed = True
    real_boxes = [
        BoxC(RatInterval(lo, hi), RatInterval.point(0)) for lo, hi in pending
    ]
    n_real = len(real_boxes)
    pairs = (d - n_real) // 2
    upper: list[BoxC] = []
    if pairs > 0 and d == 2:
        c1, c0 = p.coeffs[1], p.coeffs[0]
        disc = c1 * c1 - 4 * c0
        re = RatInterval.point(-c1 / 2)
        s = -disc / 4  # im^2
        if is_perfect_square(s):
            im = rational_sqrt(s)
            upper = [BoxC(re, RatInterval.point(im))]
        else:
            hi = 1 + s
            lo, hi = refine_real_root(QPoly((-s, 0, 1)), Fraction(0), hi, Fraction(1, 4))
            upper = [BoxC(re, RatInterval(lo, hi))]
    elif pairs > 0:
        upper = _upper_half_roots(p, pairs)
    lower = [b.conj() for b in upper]
    return sorted(real_boxes + upper + lower, key=BoxC.sort_key)


def field_make(
    min_poly: QPoly, root_hint: Optional[BoxC] = None, assume_irreducible: bool = False
) -> NumberField:
    """Build a NumberField whose generator is the root inside root_hint.

    The polynomial is normalized monic over Q.  Irreducibility must be
    proven by the criteria pipeline unless assume_irreducible is set; a
    proven factorization is always refused.
    """
    if min_poly.is_zero or min_poly.degree < 1:
        raise NotMonic("minimal polynomial must have degree >= 1")
    p = min_poly.monic()
    if p.gcd(p.derivative()).degree > 0:
        raise NotSquarefree("minimal polynomial has repeated roots")
    verdict = irreducible_over_Q(p)
    if verdict.status == "Disproven":
        raise NotIrreducible(
            f"minimal polynomial factors; witness factor {verdict.factor!r}"
        )
    if verdict.status == "Unknown" and not assume_irreducible:
        raise IrreducibilityUnknown(
            "no irreducibility proof; pass assume_irreducible to proceed"
        )
    boxes = isolate_roots(p)
    d = p.degree
    if d == 1:
        selected = 0
    else:
        if root_hint is None:
            raise AmbiguousHint("a root hint is required for degree >= 2")
        selected = _select_root(p, boxes, root_hint)
    return NumberField(
        min_poly=p,
        degree=d,
        root_boxes=tuple(boxes),
        selected_root=selected,
        irreducibility="proven" if verdict.status == "Proven" else "assumed",
    )


def _select_root(p: QPoly, boxes: list[BoxC], hint: BoxC) -> int:
    for _ in range(80):
        hits = [i for i, b in enumerate(boxes) if b.touches(hint)]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise AmbiguousHint("root hint contains no root")
        for i in hits:
            if boxes[i].width > 0:
                boxes[i] = _refine_one(p, boxes[i], boxes[i].width / 4)
    raise AmbiguousHint("root hint cannot be narrowed to a single root")


# ---------------------------------------------------------------------------
# Embeddings and exact comparisons.
# ---------------------------------------------------------------------------


def embed(x: FieldElement, conjugate_index: int, precision: int) -> BoxC:
    """Rectangle of width <= 2^-precision containing the image of x
    under the embedding sending the generator to the chosen root."""
    field = x.field
    if not (0 <= conjugate_index < field.degree):
        raise ValueError("conjugate index out of range")
    tol = Fraction(1, 2 ** precision)
    poly = x.as_poly()
    if poly.degree < 1:
        v = x.coords[0]
        return BoxC.point(v)
    # crude growth estimate: each refinement halves the box width, and
    # the interval evaluation is Lipschitz on the bounded box
    target = tol
    for _ in range(_MAX_DEPTH):
        box = field.root_boxes[conjugate_index]
        if box.width > target:
            field = field.refined(conjugate_index, target)
            box = field.root_boxes[conjugate_index]
        out = _eval_box(poly, box)
        if max(out.re.width, out.im.width) <= tol:
            return out
        target = target / 4
    raise UndecidableAtPrecision("embedding did not converge")


def _eval_box(poly: QPoly, box: BoxC) -> BoxC:
    acc = BoxC.point(poly.coeffs[-1])
    for c in reversed(poly.coeffs[:-1]):
        acc = acc * box + c
    return acc


def subgroup_member(x: FieldElement, w: FieldElement) -> Optional[int]:
    """k such that x = k*w with k a rational integer, else None."""
    if w.is_zero:
        raise ZeroGenerator("membership in <0> reduces to x = 0")
    q = x * w.inverse()
    val = q.rational_value()
    if val is not None and val.denominator == 1:
        return int(val)
    return None


def modulus_compare(x: FieldElement, conjugate_index: int, threshold) -> str:
    """Sign of |embedded x| - threshold, as "Less"/"Equal"/"Greater".

    Interval refinement decides the strict cases; a stall is resolved
    exactly through the polynomial whose roots are products of pairs of
    conjugates of x, which |x|^2 must satisfy.
    """
    t = as_rat(threshold)
    if t < 0:
        raise ValueError("threshold must be >= 0")
    t2 = t * t
    if x.is_zero:
        return "Equal" if t == 0 else "Less"
    precision = 4
    cp = None
    cp_rest = None
    for _ in range(_MAX_DEPTH):
        b = embed(x, conjugate_index, precision)
        m2 = b.abs2()
        if m2.lo > t2:
            return "Greater"
        if m2.hi < t2:
            return "Less"
        if cp is None:
            # |x|^2 = x * conj(x) is a root of the composed product of
            # the minimal polynomial of x with itself
            cp = composed_product(x.min_poly_over_Q()).squarefree_part()
        if cp(t2) != 0:
            # |x|^2 is a cp root and t2 is not, so they differ; keep
            # refining until the interval separates them
            precision += 6
            continue
        if cp_rest is None:
            cp_rest = cp // QPoly((-t2, 1))
        # |x|^2 is either exactly t2 or a root of cp_rest (never both,
        # since cp is squarefree); rule cp_rest out of the interval
        if (
            cp_rest(m2.lo) != 0
            and cp_rest(m2.hi) != 0
            and count_real_roots(cp_rest, m2.lo, m2.hi) == 0
        ):
            return "Equal"
        precision += 6
    raise UndecidableAtPrecision("modulus comparison did not resolve")


# ---------------------------------------------------------------------------
# JSON descriptors.
# ---------------------------------------------------------------------------


def _rat_str(v) -> str:
    return str(Fraction(v))


def field_to_descriptor(field: NumberField) -> dict:
    """Serializable form: coefficients low degree first, as exact strings.

    The selected root's isolating box doubles as the root hint, so the
    descriptor round-trips to a field handle with the same embedding.
    """
    box = field.selected_box()
    return {
        "min_poly": [_rat_str(c) for c in field.min_poly.coeffs],
        "root_hint": {
            "re": [_rat_str(box.re.lo), _rat_str(box.re.hi)],
            "im": [_rat_str(box.im.lo), _rat_str(box.im.hi)],
        },
        "assume_irreducible": field.irreducibility == "assumed",
    }


def field_from_descriptor(desc: dict) -> NumberField:
    poly = QPoly(tuple(Fraction(c) for c in desc["min_poly"]))
    hint = None
    if "root_hint" in desc and desc["root_hint"] is not None:
        rh = desc["root_hint"]
        hint = BoxC.make(
            Fraction(rh["re"][0]),
            Fraction(rh["re"][1]),
            Fraction(rh["im"][0]),
            Fraction(rh["im"][1]),
        )
    return field_make(
        poly,
        root_hint=hint,
        assume_irreducible=bool(desc.get("assume_irreducible", False)),
    )


def coords_to_json(x: FieldElement) -> list[str]:
    return [_rat_str(c) for c in x.coords]


def coords_from_json(field: NumberField, data) -> FieldElement:
    coords = [Fraction(c) for c in data]
    if len(coords) != field.degree:
        raise ValueError("coordinate vector length does not match the field degree")
    return FieldElement(field, coords)
