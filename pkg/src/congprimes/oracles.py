"""Independent enumeration oracles.

Everything here recomputes, by direct counting, quantities that the
symbol criteria predict: reduced binary quadratic forms, sums of three
squares, the ternary-form counts behind the congruent number criterion,
x^2 + 32y^2 representability, and a bounded exhaustive search for the
norm equation a^2 - (1+i)b^2 = p.  Deliberately naive; used to validate
the fast routes, never to replace them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import BoundExceeded, PreconditionViolation
from .gaussian import GaussianInt, ONE_PLUS_I
from .modmath import OddPrime, _SMALL_PRIMES
from .quartic import DeltaSolution, QuarticInt

DEFAULT_BOUND = 10**6


@dataclass(frozen=True)
class FormCount:
    """h = number of reduced forms of discriminant -4p, v2 = its 2-adic
    valuation."""

    p: OddPrime
    h: int
    v2: int


def class_number(p: OddPrime, bound: int = DEFAULT_BOUND) -> FormCount:
    """h(-4p) by enumerating reduced forms (a, b, c): b^2 - 4ac = -4p,
    -a < b <= a <= c, b even, and b >= 0 whenever a = c or a = |b|."""
    pv = p.value
    if pv % 4 != 1:
        # off this stratum the enumeration would also count imprimitive
        # forms (doubles of odd-discriminant forms), inflating h
        raise PreconditionViolation("class_number counts forms for p ≡ 1 (mod 4)")
    if pv > bound:
        raise BoundExceeded(f"class_number is configured for p <= {bound}")
    fourp = 4 * pv
    h = 0
    for a in range(1, isqrt(fourp // 3) + 1):
        for b in range(-a + 2 if a % 2 == 0 else -a + 1, a + 1):
            if b % 2:
                continue
            num = b * b + fourp
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c or a == -b):
                continue
            h += 1
    v2 = 0
    t = h
    while t % 2 == 0:
        t //= 2
        v2 += 1
    return FormCount(p, h, v2)


def r3(n: int, bound: int = DEFAULT_BOUND) -> int:
    """Number of (x, y, z) in Z^3 with x^2 + y^2 + z^2 = n (signed, ordered)."""
    if n < 0:
        raise PreconditionViolation("r3 takes a nonnegative integer")
    if n > bound:
        raise BoundExceeded(f"r3 is configured for n <= {bound}")
    if n == 0:
        return 1
    total = 0
    for x in range(isqrt(n) + 1):
        rem = n - x * x
        mx = 2 if x else 1
        for y in range(isqrt(rem) + 1):
            z2 = rem - y * y
            z = isqrt(z2)
            if z * z == z2:
                my = 2 if y else 1
                mz = 2 if z else 1
                total += mx * my * mz
    return total


def _is_squarefree(n: int) -> bool:
    m = n
    for q in _SMALL_PRIMES:
        if q * q > m:
            break
        if m % q == 0:
            m //= q
            if m % q == 0:
                return False
    # leftover cofactor has no prime factor <= 1000; a square would be q^2
    s = isqrt(m)
    return s * s != m or m == 1


def tunnell_a(n: int, bound: int = DEFAULT_BOUND) -> int:
    """a_n = #{n = 2x^2 + y^2 + 32z^2} - (1/2) #{n = 2x^2 + y^2 + 8z^2}
    for odd squarefree n (signed triples).  a_n = 0 is necessary for n to
    be congruent, and conjecturally sufficient."""
    if n <= 0 or n % 2 == 0:
        raise PreconditionViolation("tunnell_a takes an odd squarefree positive n")
    if n > bound:
        raise BoundExceeded(f"tunnell_a is configured for n <= {bound}")
    if not _is_squarefree(n):
        raise PreconditionViolation("tunnell_a takes an odd squarefree positive n")

    def count(zc: int) -> int:
        total = 0
        x = 0
        while 2 * x * x <= n:
            rem_x = n - 2 * x * x
            mx = 2 if x else 1
            z = 0
            while zc * z * z <= rem_x:
                y2 = rem_x - zc * z * z
                y = isqrt(y2)
                if y * y == y2 and y:  # y is odd since n is odd, never 0
                    total += mx * 2 * (2 if z else 1)
                z += 1
            x += 1
        return total

    big = count(32)
    small = count(8)
    assert small % 2 == 0
    return big - small // 2


def rep_x2_32y2(p: OddPrime) -> bool:
    """Whether p = x^2 + 32 y^2 for integers x, y (detects 8 | h(-4p))."""
    pv = p.value
    y = 0
    while 32 * y * y <= pv:
        x2 = pv - 32 * y * y
        x = isqrt(x2)
        if x * x == x2:
            return True
        y += 1
    return False


def _gaussian_sqrt(w: GaussianInt) -> GaussianInt | None:
    """Exact square root in Z[i], if one exists."""
    if not w:
        return GaussianInt(0)
    nw = w.norm()
    s = isqrt(nw)
    if s * s != nw:
        return None
    # norm(a) = s, so x^2 = (w.re + s)/2 and 2xy = w.im
    half = w.re + s
    if half % 2:
        return None
    x2 = half // 2
    x = isqrt(x2)
    if x * x != x2:
        return None
    if x:
        if w.im % (2 * x):
            return None
        cand = GaussianInt(x, w.im // (2 * x))
    else:
        if w.im:
            return None
        y = isqrt(-w.re)
        cand = GaussianInt(0, y)
    return cand if cand * cand == w else None


def delta_box_search(p: OddPrime, bound: int) -> DeltaSolution | None:
    """Exhaustive solution of a^2 - (1+i) b^2 = p over the box
    max(|re|, |im|) <= bound for both a and b; None if the box is empty.

    Scans every b in the box and derives the only possible a by exact
    Gaussian square root, which visits the same solution set as the naive
    four-fold loop.  A solution exists for some box iff p splits
    completely; bounds around 2*sqrt(p) suffice in practice.
    """
    pv = p.value
    for bre in range(-bound, bound + 1):
        for bim in range(-bound, bound + 1):
            b = GaussianInt(bre, bim)
            a2 = pv + ONE_PLUS_I * (b * b)
            a = _gaussian_sqrt(a2)
            if a is None:
                continue
            if max(abs(a.re), abs(a.im)) > bound:
                continue
            if a.re < 0 or (a.re == 0 and a.im < 0):
                a = -a
            return DeltaSolution(
                p=p, delta=QuarticInt.from_relative(a, b), a=a, b=b
            )
    return None
