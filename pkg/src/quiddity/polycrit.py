"""Exact polynomial criteria: irreducibility tests and disk root counts.

Two families of tools live here.  The irreducibility side proves or
refutes irreducibility over Q with cheap classical certificates
(rational roots, Eisenstein with small shifts, Osada's prime bound,
reduction mod p).  The localization side counts polynomial roots in
disks with rational radius, exactly, through the Schur-Cohn reduction;
a strict variant over Q(i) serves complex-centered disks and powers the
rectangle subdivision used elsewhere for root isolation.

No floating point is used anywhere: every verdict is replayable from
the integers it carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polynomials import (
    BigRat,
    GaussRat,
    QPoly,
    as_rat,
    composed_product,
    count_real_roots,
    gpoly_conj_reverse,
    gpoly_degree,
    gpoly_gcd,
    gpoly_strip,
    qpoly_at_disk,
)


class BadPrime(ValueError):
    """Raised when a mod-p test is asked to use an unusable prime."""


class SingularStep(RuntimeError):
    """Every exact fallback of the Schur-Cohn reduction degenerated."""


@dataclass(frozen=True)
class DiskRootCount:
    """Certified number of roots in the open disk of given radius at 0."""

    poly: QPoly
    radius: BigRat
    count: int
    method: str  # "SchurCohn" or "RoucheBound"
    boundary_clear: bool


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str  # "Proven", "Disproven", "Unknown"
    criterion: Optional[str] = None
    prime: Optional[int] = None
    factor: Optional[QPoly] = None

    @property
    def proven(self) -> bool:
        return self.status == "Proven"


# ---------------------------------------------------------------------------
# Prime helpers.
# ---------------------------------------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _int_model(p: QPoly) -> list[int]:
    ints = p.int_coeffs()
    if len(ints) < 2:
        raise ValueError("need degree >= 1")
    return ints


# ---------------------------------------------------------------------------
# Irreducibility certificates.
# ---------------------------------------------------------------------------


def eisenstein(p: QPoly) -> Optional[int]:
    """Least prime passing the Eisenstein conditions on the primitive model.

    Conditions, for the integer coefficients a_0..a_n: q divides every
    a_i with i < n, q does not divide a_n, and q^2 does not divide a_0.
    Only primes dividing a_0 can qualify, so the search is finite.
    """
    a = _int_model(p)
    if a[0] == 0:
        return None
    for q in prime_divisors(a[0]):
        if a[-1] % q == 0:
            continue
        if a[0] % (q * q) == 0:
            continue
        if all(c % q == 0 for c in a[:-1]):
            return q
    return None


def osada(p: QPoly) -> Optional[int]:
    """|a_0| when it is prime and beats the sum of the other |a_i|.

    Applies to monic integer models only (sign of the leading term is
    normalized away by int_coeffs).
    """
    a = _int_model(p)
    if abs(a[-1]) != 1:
        return None
    n0 = abs(a[0])
    if not is_prime(n0):
        return None
    if n0 > sum(abs(c) for c in a[1:]):
        return n0
    return None


def _polmul_mod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """(a*b) mod (f, p) with f monic mod p, dense int lists low-first."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    df = len(f) - 1
    for k in range(len(prod) - 1, df - 1, -1):
        c = prod[k]
        if c:
            for j in range(df + 1):
                prod[k - df + j] = (prod[k - df + j] - c * f[j]) % p
    out = prod[:df]
    while out and out[-1] == 0:
        out.pop()
    return out or [0]


def _polgcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    def norm(v):
        v = [c % p for c in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = norm(a), norm(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        db = len(b) - 1
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv % p
            if c:
                for j in range(db + 1):
                    r[k - db + j] = (r[k - db + j] - c * b[j]) % p
        a, b = b, norm(r[:db])
    return a


def modp_irreducible(p: QPoly, prime: int) -> bool:
    """True iff the reduction of p mod prime is irreducible over F_prime.

    A true answer proves irreducibility over Q for the primitive model.
    """
    if not is_prime(prime):
        raise BadPrime(f"{prime} is not prime")
    a = _int_model(p)
    if a[-1] % prime == 0:
        raise BadPrime(f"{prime} divides the leading coefficient")
    n = len(a) - 1
    if n == 1:
        return True
    inv = pow(a[-1] % prime, prime - 2, prime)
    f = [c * inv % prime for c in a]
    # no irreducible factor of degree k for any k <= n/2 iff
    # gcd(X^(prime^k) - X, f) = 1 at every such k
    xq = [0, 1]
    for _ in range(n // 2):
        # Frobenius step: xq <- xq^prime mod f
        acc = [1]
        base = xq
        e = prime
        while e:
            if e & 1:
                acc = _polmul_mod(acc, base, f, prime)
            base = _polmul_mod(base, base, f, prime)
            e >>= 1
        xq = acc
        probe = list(xq)
        while len(probe) < 2:
            probe.append(0)
        probe[1] = (probe[1] - 1) % prime
        g = _polgcd_mod(probe, f, prime)
        if len(g) != 1 or g == [0]:
            return False
    return True


def _rational_roots(ints: list[int]) -> list[Fraction]:
    """All rational roots of the primitive integer polynomial."""
    if not ints:
        return []
    roots = []
    # roots at zero
    probe = QPoly(ints)
    if ints[0] == 0:
        roots.append(Fraction(0))
        v, probe = probe.strip_low()
        ints = [int(c) for c in probe.coeffs]
        if len(ints) < 2:
            return roots
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(m: int) -> list[int]:
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    seen = set()
    for num in divisors(a0):
        for den in divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, den)
                if cand in seen:
                    continue
                seen.add(cand)
                if probe(cand) == 0:
                    roots.append(cand)
    return roots


_EISENSTEIN_SHIFTS = (0, 1, -1, 2, -2, 3, -3)
_MODP_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def irreducible_over_Q(p: QPoly) -> IrreducibilityVerdict:
    """Cheap-certificate pipeline; Unknown when every criterion misses.

    Order: rational roots (refute, or settle degree <= 3), Eisenstein on
    p(X+c) for small shifts, Osada, reduction mod primes below 50.
    """
    if p.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    ints = p.int_coeffs()
    prim = QPoly(ints)
    if p.degree == 1:
        return IrreducibilityVerdict("Proven", criterion="degree-1")
    roots = _rational_roots(ints)
    if roots:
        r = roots[0]
        return IrreducibilityVerdict(
            "Disproven", criterion="rational-root", factor=QPoly((-r, 1))
        )
    if p.degree <= 3:
        return IrreducibilityVerdict("Proven", criterion="no-linear-factor")
    for c in _EISENSTEIN_SHIFTS:
        q = eisenstein(prim.shift(c) if c else prim)
        if q is not None:
            tag = "eisenstein" if c == 0 else f"eisenstein-shift({c})"
            return IrreducibilityVerdict("Proven", criterion=tag, prime=q)
    q = osada(prim)
    if q is not None:
        return IrreducibilityVerdict("Proven", criterion="osada", prime=q)
    for pr in _MODP_PRIMES:
        try:
            if modp_irreducible(prim, pr):
                return IrreducibilityVerdict("Proven", criterion="modp", prime=pr)
        except BadPrime:
            continue
    return IrreducibilityVerdict("Unknown")


# ---------------------------------------------------------------------------
# Rouche-style dominant-coefficient disk counts.
# ---------------------------------------------------------------------------


def rouche_dominant_count(
    p: QPoly, dominant_index: int, radius
) -> Optional[DiskRootCount]:
    """Count = dominant_index when that term beats all others on |z| = r.

    The check sum_{i != j} |a_i| r^i < |a_j| r^j is exact rational
    arithmetic; strict inequality also rules out boundary roots.
    """
    r = as_rat(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    if dominant_index < 0 or dominant_index > p.degree:
        return None
    aj = p.coeffs[dominant_index]
    if aj == 0:
        return None
    dominant = abs(aj) * r ** dominant_index
    rest = sum(
        abs(c) * r ** i for i, c in enumerate(p.coeffs) if i != dominant_index
    )
    if rest < dominant:
        return DiskRootCount(
            poly=p,
            radius=r,
            count=dominant_index,
            method="RoucheBound",
            boundary_clear=True,
        )
    return None


# ---------------------------------------------------------------------------
# Schur-Cohn counting in |z| < r, rational radius, exact boundary analysis.
# ---------------------------------------------------------------------------


def _chain_count(q: QPoly) -> Optional[int]:
    """Unit-disk root count by the Schur-Cohn reduction; None on a
    degenerate step.  Requires q(0) != 0 and no roots on |z| = 1."""
    n = q.degree
    if n <= 0:
        return 0
    a0, an = q.coeffs[0], q.coeffs[-1]
    gamma = a0 * a0 - an * an
    if gamma == 0:
        return None
    t = q * a0 - q.reverse() * an
    sub = _chain_count(t)
    if sub is None:
        return None
    return sub if gamma > 0 else n - sub


def _circle_free_unit_count(q: QPoly) -> int:
    """Unit-disk count for squarefree q with q(0) != 0, no roots on the
    circle, and no reciprocal root pairs.  Exhausts exact fallbacks."""
    n = q.degree
    if n <= 0:
        return 0
    direct = _chain_count(q)
    if direct is not None:
        return direct
    rev = _chain_count(q.reverse())
    if rev is not None:
        return n - rev
    # Certified annulus shrink: locate a root-free band (u, 1) in the
    # moduli via the composed-product polynomial, rescale into it, and
    # retry the chain at radii where no reciprocal pair can appear.
    cp = composed_product(q).squarefree_part()
    if cp(Fraction(1)) == 0:
        raise SingularStep("reciprocal pair survived preprocessing")
    u = None
    for k in range(1, 12):
        cand = 1 - Fraction(1, 2 ** k)
        if cp(cand * cand) != 0 and count_real_roots(cp, cand * cand, Fraction(1)) == 0:
            u = cand
            break
    if u is None:
        raise SingularStep("no certified root-free annulus found")
    tries = 24
    for j in range(1, tries):
        rho = u + (1 - u) * Fraction(j, tries)
        if cp(rho * rho) == 0:
            continue
        q2 = q.scale_arg(rho)
        c = _chain_count(q2)
        if c is not None:
            return c
        c = _chain_count(q2.reverse())
        if c is not None:
            return n - c
    raise SingularStep("Schur-Cohn chain degenerated at every retry radius")


def _cos_substitution(g: QPoly) -> QPoly:
    """For palindromic g of even degree 2m, the polynomial h with
    g(X)/X^m = h(X + 1/X); roots of g on the unit circle off +-1
    correspond to real roots of h in (-2, 2)."""
    m = g.degree // 2
    cheb = [QPoly((2,)), QPoly((0, 1))]  # X^k + X^-k as polys in Y
    while len(cheb) <= m:
        cheb.append(QPoly((0, 1)) * cheb[-1] - cheb[-2])
    h = QPoly((g.coeffs[m],))
    for k in range(1, m + 1):
        h = h + cheb[k] * g.coeffs[m + k]
    return h


def _unit_circle_count(g: QPoly) -> int:
    """Exact number of roots of squarefree, inversion-closed g on |z|=1."""
    circle = 0
    for pt in (1, -1):
        if g(Fraction(pt)) == 0:
            circle += 1
            g = g // QPoly((-pt, 1))
    if g.degree >= 2:
        h = _cos_substitution(g)
        circle += 2 * count_real_roots(h.squarefree_part(), Fraction(-2), Fraction(2))
    return circle


def _squarefree_disk_count(f: QPoly, r: Fraction) -> tuple[int, int]:
    """(inside, on-boundary) root counts of squarefree f for |z| < r."""
    q = f.scale_arg(r)
    v, q = q.strip_low()
    inside = v
    if q.degree < 1:
        return inside, 0
    on = 0
    g = q.monic().gcd(q.reverse().monic())
    if g.degree >= 1:
        on = _unit_circle_count(g)
        inside += (g.degree - on) // 2
        q = q // g
    if q.degree >= 1:
        inside += _circle_free_unit_count(q)
    return inside, on


def schur_cohn_count(p: QPoly, radius) -> DiskRootCount:
    """Exact multiplicity-weighted count of roots of p with |z| < radius.

    Boundary roots are detected exactly (gcd with the reversed
    polynomial, then unit-circle analysis through the X + 1/X
    substitution); boundary_clear reports their absence.  Repeated
    roots are handled by counting each squarefree factor separately.
    """
    r = as_rat(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    if p.degree < 1:
        return DiskRootCount(p, r, 0, "SchurCohn", True)
    total = 0
    boundary = 0
    for factor, mult in p.yun_decomposition():
        inside, on = _squarefree_disk_count(factor, r)
        total += mult * inside
        boundary += mult * on
    return DiskRootCount(p, r, total, "SchurCohn", boundary == 0)


# ---------------------------------------------------------------------------
# Strict disk counts at Gaussian-rational centers, for rectangle
# subdivision.  "Strict" means: certify or return None, never guess.
# ---------------------------------------------------------------------------


def gauss_disk_count_strict(
    p: QPoly, center: GaussRat, radius
) -> Optional[int]:
    """Roots of squarefree p in the open disk |z - center| < radius.

    Returns None whenever the certificate would need more care: a root
    on the boundary circle, a conjugate-reciprocal pair straddling it,
    or a degenerate reduction step.  A non-None answer also certifies
    that no root lies ON the circle.
    """
    r = as_rat(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    if p.degree < 1:
        return 0
    q = list(qpoly_at_disk(p, center, r))
    inside = 0
    while q and not q[0]:
        q.pop(0)
        inside += 1
    if gpoly_degree(q) < 1:
        return inside
    g = gpoly_gcd(q, gpoly_conj_reverse(q))
    if gpoly_degree(g) >= 1:
        return None

    def chain(f: Sequence[GaussRat]) -> Optional[int]:
        n = gpoly_degree(f)
        if n <= 0:
            return 0
        a0, an = f[0], f[-1]
        gamma = a0.abs2() - an.abs2()
        if gamma == 0:
            return None
        rev = gpoly_conj_reverse(f)
        a0c = a0.conj()
        t = []
        for k in range(max(len(f), len(rev))):
            cf = f[k] if k < len(f) else GaussRat(Fraction(0), Fraction(0))
            cr = rev[k] if k < len(rev) else GaussRat(Fraction(0), Fraction(0))
            t.append(a0c * cf - an * cr)
        sub = chain(gpoly_strip(t))
        if sub is None:
            return None
        return sub if gamma > 0 else n - sub

    got = chain(tuple(q))
    if got is None:
        return None
    return inside + got
