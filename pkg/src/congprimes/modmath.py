"""Arbitrary-precision modular arithmetic.

Primality testing, quadratic residue symbols, modular square roots, and
the mod-p splitting data of x^4 - 2x^2 + 2.  Everything else in the
package sits on top of these primitives, so they are kept dependency-free
and deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt

from .errors import PreconditionViolation


def _sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for n in range(2, isqrt(limit) + 1):
        if flags[n]:
            flags[n * n :: n] = bytearray((limit - n * n) // n + 1)
    return [n for n in range(limit + 1) if flags[n]]


_SMALL_PRIMES = tuple(_sieve(1000))

# Deterministic Miller-Rabin witness tiers (each proven complete for its range).
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (2**64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

# Extra randomized rounds on top of base-2 + Lucas for n >= 2^64.
# 64 independent witnesses push the error probability below 4^-64 = 2^-128.
_EXTRA_MR_ROUNDS = 64


def _is_sprp(n: int, a: int) -> bool:
    """Strong-probable-prime test of odd n > 2 to base a."""
    a %= n
    if a == 0:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _half(x: int, n: int) -> int:
    # division by 2 mod odd n
    x %= n
    if x & 1:
        x += n
    return (x >> 1) % n


def _selfridge_d(n: int) -> int | None:
    """First D in 5, -7, 9, -11, ... with (D/n) = -1; None -> composite."""
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == 0 and abs(d) != n:
            return None
        if j == -1:
            return d
        d = -(d + 2) if d > 0 else -(d - 2)


def _is_strong_lucas_prp(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters (P=1, Q=(1-D)/4)."""
    s = isqrt(n)
    if s * s == n:
        return False
    D = _selfridge_d(n)
    if D is None:
        return False
    Q = (1 - D) // 4
    d = n + 1
    s2 = 0
    while d % 2 == 0:
        d //= 2
        s2 += 1
    # binary ladder for (U_d, V_d, Q^d) mod n
    U, V, qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = _half(U + V, n), _half(V + D * U, n)
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s2 - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def is_probable_prime(n: int) -> bool:
    """Primality test.

    Deterministic below 2^64 (Miller-Rabin with proven witness tiers).
    Above that: base-2 strong probable prime + strong Lucas, plus 64
    seeded-random Miller-Rabin rounds, so a composite slips through with
    probability below 2^-128.  No randomness escapes: the extra witnesses
    are derived from n, so the function is a pure function of n.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < 1_002_001:  # below 1001^2 trial division was complete
        return True
    if n < 2**64:
        for bound, bases in _MR_TIERS:
            if n < bound:
                return all(_is_sprp(n, a) for a in bases)
    if not _is_sprp(n, 2):
        return False
    if not _is_strong_lucas_prp(n):
        return False
    rng = random.Random(n)
    return all(_is_sprp(n, rng.randrange(2, n - 1)) for _ in range(_EXTRA_MR_ROUNDS))


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi].  For large lo this trial-sieves the window
    with primes below 10^5 and certifies survivors individually."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    if hi <= 10_000_000:
        flags = bytearray([1]) * (hi + 1)
        flags[0:2] = b"\x00\x00"
        for n in range(2, isqrt(hi) + 1):
            if flags[n]:
                flags[n * n :: n] = bytearray((hi - n * n) // n + 1)
        return [n for n in range(lo, hi + 1) if flags[n]]
    width = hi - lo + 1
    if width > 10_000_000:
        raise PreconditionViolation("window wider than 10^7 is not supported")
    base_limit = min(isqrt(hi), 100_000)
    flags = bytearray([1]) * width
    for q in _sieve(base_limit):
        start = max(q * q, ((lo + q - 1) // q) * q)
        if start <= hi:
            flags[start - lo :: q] = bytearray((hi - start) // q + 1)
    if isqrt(hi) <= base_limit:
        return [lo + k for k in range(width) if flags[k]]
    return [lo + k for k in range(width) if flags[k] and is_probable_prime(lo + k)]


@dataclass(frozen=True)
class OddPrime:
    """A certified odd prime.  Construction re-checks primality, so every
    downstream function may assume its argument really is an odd prime."""

    value: int
    residue_mod_16: int = field(init=False)

    def __post_init__(self):
        if self.value == 2:
            raise PreconditionViolation(
                "p = 2 is excluded: both classification questions are about odd primes"
            )
        if self.value < 3 or self.value % 2 == 0 or not is_probable_prime(self.value):
            raise PreconditionViolation(f"{self.value} is not an odd prime")
        object.__setattr__(self, "residue_mod_16", self.value % 16)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: OddPrime) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1}; a may be any integer."""
    return _jacobi(a, p.value)


def _sqrt_mod_int(a: int, p: int) -> int | None:
    a %= p
    if a == 0:
        return 0
    if _jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
        return min(x, p - x)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _jacobi(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, x = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(x, p - x)


def sqrt_mod(a: int, p: OddPrime) -> int | None:
    """Canonical square root of a mod p: the root in [0, p/2], or None
    when a is a non-residue."""
    return _sqrt_mod_int(a, p.value)


def eighth_root_of_unity(p: OddPrime) -> int:
    """Canonical primitive eighth root of unity mod p (p ≡ 1 mod 8 only):
    the canonical square root of the canonical sqrt(-1)."""
    if p.value % 8 != 1:
        raise PreconditionViolation("eighth roots of unity require p ≡ 1 (mod 8)")
    i_img = _sqrt_mod_int(-1, p.value)
    z = _sqrt_mod_int(i_img, p.value)
    assert z is not None  # i_img is a square exactly when p ≡ 1 (mod 8)
    return z


def quartic_roots(p: OddPrime) -> list[int]:
    """Roots of x^4 - 2x^2 + 2 mod p in the completely-split case.

    Returns the four roots [r, p-r, s, p-s] with r^2 = 1 + i', s^2 = 1 - i'
    (i' the canonical sqrt(-1)) when the quartic splits into linear factors,
    and [] otherwise.  The list is nonempty iff p ≡ 1 (mod 8) and
    (1+i'/p) = +1; a partial split (two roots, possible for p ≡ 5 mod 8)
    does not produce embeddings of the full quartic ring and yields [].
    """
    pv = p.value
    if pv % 4 != 1:
        return []
    i_img = _sqrt_mod_int(-1, pv)
    r = _sqrt_mod_int(1 + i_img, pv)
    s = _sqrt_mod_int(1 - i_img, pv)
    if r is None or s is None:
        return []
    return [r, pv - r, s, pv - s]
