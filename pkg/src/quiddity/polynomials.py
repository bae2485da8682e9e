"""Exact rational and Gaussian-rational polynomial arithmetic.

Everything in here is carried by fractions.Fraction, so nothing ever
rounds.  Besides the ring operations the module provides the two
root-localization primitives the rest of the package is built on:

* Descartes-driven isolation and counting of real roots on an interval
  with exact rational endpoints, and
* scalar resultants plus Lagrange interpolation, from which composed
  resultant polynomials (root products, root differences) are assembled
  by evaluation at integer sample points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# The exact rational scalar used throughout.  fractions.Fraction already
# keeps numerator/denominator in lowest terms with a positive denominator.
BigRat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(value) -> Fraction:
    """Coerce ints, strings like "5/2" or "1.6", and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def is_perfect_square(q: Fraction) -> bool:
    if q < 0:
        return False
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a perfect-square rational."""
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


class QPoly:
    """Dense univariate polynomial over Q, low-degree coefficient first.

    The zero polynomial has empty coefficients and degree -1 (flagged by
    is_zero); every other instance keeps a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers ------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPoly":
        return cls((0,) * k + (c,))

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "QPoly(0)"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*X" if c != 1 else "X")
            else:
                parts.append(f"{c}*X^{k}" if c != 1 else f"X^{k}")
        return "QPoly(" + " + ".join(parts) + ")"

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

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
            c = as_rat(other)
            return QPoly(tuple(c * a for a in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QPoly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly((other,))
        return NotImplemented

    def __divmod__(self, other: "QPoly"):
        if not isinstance(other, QPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lcq = other.lc()
        quo = [ZERO] * max(len(rem) - dq, 1)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lcq
            if c != 0:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return QPoly(quo), QPoly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; works for Fraction, field elements, boxes."""
        if self.is_zero:
            return ZERO if isinstance(x, (int, Fraction)) else x * 0
        acc = x * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # -- calculus and rewrites ---------------------------------------------

    def derivative(self) -> "QPoly":
        return QPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "QPoly":
        if self.is_zero:
            return self
        l = self.lc()
        return self if l == 1 else self * (1 / l)

    def gcd(self, other: "QPoly") -> "QPoly":
        a, b = self, other
        while not b.is_zero:
            r = a % b
            # keep coefficients small on long chains
            a, b = b, r.monic() if not r.is_zero else r
        return a.monic() if not a.is_zero else a

    def shift(self, c) -> "QPoly":
        """p(X + c), by repeated synthetic division."""
        c = as_rat(c)
        n = self.degree
        if n < 0:
            return self
        work = list(self.coeffs)
        out = []
        for _ in range(n + 1):
            # divide work by (X - (-c)) collecting the remainder
            rem = work[-1]
            newwork = [work[-1]]
            for k in range(len(work) - 2, -1, -1):
                rem = work[k] + rem * c
                newwork.append(rem)
            newwork.reverse()
            out.append(newwork[0])
            work = newwork[1:]
            if not work:
                break
        return QPoly(out)

    def scale_arg(self, r) -> "QPoly":
        """p(r*X)."""
        r = as_rat(r)
        pw = ONE
        out = []
        for c in self.coeffs:
            out.append(c * pw)
            pw *= r
        return QPoly(out)

    def reverse(self) -> "QPoly":
        """X^deg * p(1/X): the coefficient-reversed polynomial."""
        return QPoly(tuple(reversed(self.coeffs)))

    def strip_low(self) -> tuple[int, "QPoly"]:
        """Split off X^v: returns (v, p // X^v)."""
        if self.is_zero:
            return 0, self
        v = 0
        while self.coeffs[v] == 0:
            v += 1
        return v, QPoly(self.coeffs[v:])

    def int_coeffs(self) -> list[int]:
        """Primitive integer coefficient vector with positive leading term."""
        if self.is_zero:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    def squarefree_part(self) -> "QPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def yun_decomposition(self) -> list[tuple["QPoly", int]]:
        """Squarefree decomposition: list of (factor, multiplicity)."""
        p = self.monic()
        if p.degree <= 0:
            return []
        out = []
        g = p.gcd(p.derivative())
        if g.degree == 0:
            return [(p, 1)]
        c = p // g
        d = p.derivative() // g - c.derivative()
        k = 1
        while c.degree > 0:
            a = c.gcd(d)
            if a.degree > 0:
                out.append((a.monic(), k))
            c2 = c // a
            d = d // a - c2.derivative()
            c = c2
            k += 1
        return out

    def cauchy_root_bound(self) -> Fraction:
        """All complex roots have modulus < this bound."""
        if self.degree < 1:
            return ONE
        l = abs(self.lc())
        m = max(abs(c) for c in self.coeffs[:-1]) if self.degree > 0 else ZERO
        return 1 + m / l


# ---------------------------------------------------------------------------
# Real roots: Descartes sign variations driving interval bisection.
# ---------------------------------------------------------------------------


def sign_variations(coeffs: Sequence[Fraction]) -> int:
    count = 0
    last = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last != 0 and s != last:
            count += 1
        last = s
    return count


def _descartes_bound(p: QPoly, a: Fraction, b: Fraction) -> int:
    """Upper bound (exact mod 2) on the number of roots of p in (a, b).

    Uses the Moebius substitution X -> (a + b*X)/(1 + X), which maps
    (0, inf) onto (a, b), then counts sign variations.
    """
    n = p.degree
    # numerator powers (a + b X)^i and (1 + X)^(n-i) expanded incrementally
    pa: list[list[Fraction]] = [[ONE]]
    for _ in range(n):
        prev = pa[-1]
        nxt = [ZERO] * (len(prev) + 1)
        for k, c in enumerate(prev):
            nxt[k] += a * c
            nxt[k + 1] += b * c
        pa.append(nxt)
    pb: list[list[Fraction]] = [[ONE]]
    for _ in range(n):
        prev = pb[-1]
        nxt = [ZERO] * (len(prev) + 1)
        for k, c in enumerate(prev):
            nxt[k] += c
            nxt[k + 1] += c
        pb.append(nxt)
    out = [ZERO] * (n + 1)
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        term_a = pa[i]
        term_b = pb[n - i]
        for k1, ca in enumerate(term_a):
            if ca == 0:
                continue
            for k2, cb in enumerate(term_b):
                out[k1 + k2] += c * ca * cb
    return sign_variations(out)


def real_roots_isolated(
    p: QPoly, lo: Fraction | None = None, hi: Fraction | None = None
) -> tuple[list[tuple[Fraction, Fraction]], list[Fraction]]:
    """Isolate the real roots of a squarefree p inside (lo, hi).

    Returns (open intervals each containing exactly one root, exact
    roots); the second list is kept for callers that special-case
    rational hits but is empty with the current splitting rule.
    Endpoints of the returned intervals are never roots.
    """
    if p.degree < 1:
        return [], []
    bound = p.cauchy_root_bound()
    if lo is None:
        lo = -bound
    if hi is None:
        hi = bound
    lo, hi = as_rat(lo), as_rat(hi)
    intervals: list[tuple[Fraction, Fraction]] = []
    exact: list[Fraction] = []
    # Roots sitting exactly on lo or hi are outside the open interval and
    # never counted; the variation bound can overshoot there but the
    # bisection still terminates because the root itself is excluded.
    # Split points are moved off roots, so no returned endpoint is ever a
    # root and the exact list stays empty; rational roots come back as
    # ordinary isolating intervals.
    work = [(lo, hi)]
    while work:
        a, b = work.pop()
        v = _descartes_bound(p, a, b)
        if v == 0:
            continue
        if v == 1:
            intervals.append((a, b))
            continue
        m = (a + b) / 2
        denom = 4
        while p(m) == 0:
            m = a + (b - a) / denom
            denom *= 2
        work.append((a, m))
        work.append((m, b))
    intervals.sort()
    exact.sort()
    return intervals, exact


def count_real_roots(p: QPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of real roots of squarefree p in the open interval (lo, hi)."""
    ivs, exact = real_roots_isolated(p, lo, hi)
    return len(ivs) + len(exact)


def refine_real_root(
    p: QPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a simple root by sign bisection."""
    flo = p(lo)
    if flo == 0 or p(hi) == 0:
        raise ValueError("endpoints of an isolating interval must not be roots")
    slo = 1 if flo > 0 else -1
    while hi - lo > width:
        m = (lo + hi) / 2
        fm = p(m)
        if fm == 0:
            return m, m
        if (1 if fm > 0 else -1) == slo:
            lo = m
        else:
            hi = m
    return lo, hi


# ---------------------------------------------------------------------------
# Gaussian rationals and the little complex-coefficient layer needed for
# disk counting at complex centers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussRat:
    """Element of Q(i) with exact components."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussRat":
        return cls(as_rat(re), as_rat(im))

    def __add__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRat":
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / n, -self.im / n)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def scale(self, r: Fraction) -> "GaussRat":
        return GaussRat(self.re * r, self.im * r)


G_ZERO = GaussRat(ZERO, ZERO)
G_ONE = GaussRat(ONE, ZERO)


def gpoly_strip(cs: Sequence[GaussRat]) -> tuple[GaussRat, ...]:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def gpoly_degree(cs: Sequence[GaussRat]) -> int:
    return len(cs) - 1


def gpoly_conj_reverse(cs: Sequence[GaussRat]) -> tuple[GaussRat, ...]:
    """z^n * conj(p(1/conj(z))): conjugated, reversed coefficients."""
    return gpoly_strip([c.conj() for c in reversed(cs)])


def gpoly_combine(a: Sequence[GaussRat], sa: GaussRat, b: Sequence[GaussRat], sb: GaussRat):
    """sa*a - sb*b coefficientwise (padded)."""
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        ca = a[k] if k < len(a) else G_ZERO
        cb = b[k] if k < len(b) else G_ZERO
        out.append(sa * ca - sb * cb)
    return gpoly_strip(out)


def gpoly_divmod(a: Sequence[GaussRat], b: Sequence[GaussRat]):
    b = gpoly_strip(b)
    if not b:
        raise ZeroDivisionError("gaussian polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    quo = [G_ZERO] * max(len(rem) - db, 1)
    for k in range(len(rem) - db - 1, -1, -1):
        c = rem[k + db] * inv
        if c:
            quo[k] = c
            for j, cb in enumerate(b):
                rem[k + j] = rem[k + j] - c * cb
    return gpoly_strip(quo), gpoly_strip(rem[:db] if db > 0 else [])


def gpoly_gcd(a: Sequence[GaussRat], b: Sequence[GaussRat]) -> tuple[GaussRat, ...]:
    a, b = gpoly_strip(a), gpoly_strip(b)
    while b:
        _, r = gpoly_divmod(a, b)
        a, b = b, r
    if a:
        inv = a[-1].inverse()
        a = tuple(c * inv for c in a)
    return a


def qpoly_at_disk(p: QPoly, center: GaussRat, radius: Fraction) -> tuple[GaussRat, ...]:
    """Coefficients of p(center + radius*X) over Q(i)."""
    # Taylor shift by synthetic division, then scale the argument.
    work = [GaussRat.of(c) for c in p.coeffs]
    n = len(work) - 1
    if n < 0:
        return ()
    out = []
    for _ in range(n + 1):
        rem = work[-1]
        new = [work[-1]]
        for k in range(len(work) - 2, -1, -1):
            rem = work[k] + rem * center
            new.append(rem)
        new.reverse()
        out.append(new[0])
        work = new[1:]
        if not work:
            break
    pw = ONE
    scaled = []
    for c in out:
        scaled.append(c.scale(pw))
        pw *= radius
    return gpoly_strip(scaled)


# ---------------------------------------------------------------------------
# Resultants and interpolation.
# ---------------------------------------------------------------------------


def resultant(f: QPoly, g: QPoly) -> Fraction:
    """Res(f, g) over Q by the Euclidean remainder formula."""
    if f.is_zero or g.is_zero:
        return ZERO
    if f.degree == 0:
        return f.lc() ** g.degree
    if g.degree == 0:
        return g.lc() ** f.degree
    r = f % g
    if r.is_zero:
        return ZERO
    sign = -1 if (f.degree % 2 == 1 and g.degree % 2 == 1) else 1
    return sign * g.lc() ** (f.degree - r.degree) * resultant(g, r)


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> QPoly:
    """The unique polynomial of degree < len(points) through the points."""
    total = QPoly.zero()
    xs = [as_rat(x) for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        xi, yi = as_rat(xi), as_rat(yi)
        if yi == 0:
            continue
        num = QPoly.one()
        den = ONE
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * QPoly((-xj, 1))
            den *= xi - xj
        total = total + num * (yi / den)
    return total


def composed_product(q: QPoly) -> QPoly:
    """Polynomial whose roots are all pairwise products of roots of q.

    Computed as Res_X(q(X), X^m q(Y/X)) by evaluation at integer sample
    points followed by interpolation; the X-degree of both arguments is
    constant in Y, so sampling commutes with the resultant.
    """
    m = q.degree
    if m < 1:
        return QPoly.one()
    target_deg = m * m
    samples: list[tuple[Fraction, Fraction]] = []
    y = 0
    while len(samples) < target_deg + 1:
        yv = as_rat(y)
        # X^m q(y/X) = sum_j b_j y^j X^(m-j)
        h = [ZERO] * (m + 1)
        pw = ONE
        for j, b in enumerate(q.coeffs):
            h[m - j] = b * pw
            pw *= yv
        samples.append((yv, resultant(q, QPoly(h))))
        y = -y + (1 if y <= 0 else 0)  # 0, 1, -1, 2, -2, ...
    return lagrange_interpolate(samples)


def root_difference_poly(q: QPoly) -> QPoly:
    """Polynomial whose roots are all differences z_i - z_j of roots of q."""
    m = q.degree
    if m < 1:
        return QPoly.one()
    target_deg = m * m
    samples: list[tuple[Fraction, Fraction]] = []
    s = 0
    while len(samples) < target_deg + 1:
        sv = as_rat(s)
        samples.append((sv, resultant(q, q.shift(sv))))
        s = -s + (1 if s <= 0 else 0)
    return lagrange_interpolate(samples)


def even_part_in_square(d: QPoly) -> QPoly:
    """Given D(S), the polynomial U(Y) whose roots are the squares S^2.

    Computed as Res_S(D(S), S^2 - Y) by evaluation and interpolation.
    """
    m = d.degree
    if m < 1:
        return QPoly.one()
    samples: list[tuple[Fraction, Fraction]] = []
    y = 0
    while len(samples) < m + 1:
        yv = as_rat(y)
        samples.append((yv, resultant(d, QPoly((-yv, 0, 1)))))
        y = -y + (1 if y <= 0 else 0)
    return lagrange_interpolate(samples)
