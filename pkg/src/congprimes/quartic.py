"""Arithmetic in Z[x]/(x^4 - 2x^2 + 2) and the lattice machinery that
certifies a relative-norm-p element for completely split primes.

Write alpha for the class of x, and i := alpha^2 - 1 (so i^2 = -1 and
alpha^2 = 1 + i).  Every element is a + b*alpha with a, b in Z[i]; the
conjugation alpha -> -alpha fixes Z[i] and gives the relative norm
N(a + b*alpha) = a^2 - (1+i) b^2.  The absolute norm is the Z[i]-norm of
that Gaussian integer, hence always >= 0.

The unit group is generated by i and alpha + 1, with relative norms
N(i) = -1 and N(alpha+1) = -i (direct expansion: (1+alpha)(1-alpha) =
1 - alpha^2 = -i).  Multiplying by (alpha+1)^m therefore rotates a
relative norm w*p through the fourth roots of unity, which is how
solve_delta lands exactly on p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import (
    GeneratorNotFound,
    NotSplitError,
    PrecisionExhausted,
    PreconditionViolation,
)
from .gaussian import ONE_PLUS_I, GaussianInt
from .modmath import OddPrime, quartic_roots


class QuarticInt:
    """Element c0 + c1*alpha + c2*alpha^2 + c3*alpha^3 with integer
    coefficients, reduced by alpha^4 = 2*alpha^2 - 2."""

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0: int, c1: int = 0, c2: int = 0, c3: int = 0):
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "c3", c3)

    def __setattr__(self, *_):
        raise AttributeError("QuarticInt is immutable")

    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuarticInt):
            return other
        if isinstance(other, int):
            return QuarticInt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuarticInt(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.c3 + o.c3)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuarticInt(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2, self.c3 - o.c3)

    def __neg__(self):
        return QuarticInt(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a = self.coeffs()
        b = o.coeffs()
        e = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai:
                for j in range(4):
                    e[i + j] += ai * b[j]
        # alpha^4 = 2a^2 - 2, alpha^5 = 2a^3 - 2a, alpha^6 = 2a^2 - 4
        return QuarticInt(
            e[0] - 2 * e[4] - 4 * e[6],
            e[1] - 2 * e[5],
            e[2] + 2 * e[4] + 2 * e[6],
            e[3] + 2 * e[5],
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.coeffs() == o.coeffs()

    def __hash__(self):
        return hash(self.coeffs())

    def __bool__(self):
        return any(self.coeffs())

    def __repr__(self):
        return f"QuarticInt{self.coeffs()}"

    @classmethod
    def from_relative(cls, a: GaussianInt, b: GaussianInt) -> "QuarticInt":
        """Inverse of to_relative: a + b*alpha with a, b in Z[i]."""
        return cls(a.re - a.im, b.re - b.im, a.im, b.im)

    def to_relative(self) -> tuple[GaussianInt, GaussianInt]:
        """Write self = a + b*alpha over Z[i], using alpha^2 = 1 + i."""
        return (
            GaussianInt(self.c0 + self.c2, self.c2),
            GaussianInt(self.c1 + self.c3, self.c3),
        )

    def relative_norm(self) -> GaussianInt:
        """Norm to Z[i] under alpha -> -alpha: a^2 - (1+i) b^2."""
        a, b = self.to_relative()
        return a * a - ONE_PLUS_I * (b * b)

    def absolute_norm(self) -> int:
        return self.relative_norm().norm()


ALPHA = QuarticInt(0, 1)
I_ALG = QuarticInt(-1, 0, 1)          # alpha^2 - 1
UNIT_ALPHA_PLUS_1 = QuarticInt(1, 1)  # fundamental unit, relative norm -i
UNIT_NORM_ONE = I_ALG * UNIT_ALPHA_PLUS_1 * UNIT_ALPHA_PLUS_1  # relative norm +1


@dataclass(frozen=True)
class PrimeAboveP:
    """A degree-one prime of Z[alpha] over p, recorded by the root r of
    x^4 - 2x^2 + 2 mod p it reduces alpha to.  i_image = r^2 - 1 is where
    i lands in F_p."""

    p: OddPrime
    r: int
    i_image: int = field(init=False)

    def __post_init__(self):
        pv = self.p.value
        if not 0 <= self.r < pv or (pow(self.r, 4, pv) - 2 * self.r * self.r + 2) % pv:
            raise PreconditionViolation("r is not a root of x^4 - 2x^2 + 2 mod p")
        object.__setattr__(self, "i_image", (self.r * self.r - 1) % pv)


def embed(x: QuarticInt, at: PrimeAboveP) -> int:
    """Reduction of x in the residue field F_p of the given prime."""
    pv = at.p.value
    r = at.r
    return (((x.c3 * r + x.c2) * r + x.c1) * r + x.c0) % pv


def primes_above(p: OddPrime) -> list[PrimeAboveP]:
    """The four degree-one primes over a completely split p, sorted by
    root.  Raises NotSplitError unless p ≡ 1 (mod 8) and (1+i'/p) = +1."""
    roots = quartic_roots(p)
    if not roots:
        raise NotSplitError(f"{p} does not split completely in the quartic field")
    return [PrimeAboveP(p, r) for r in sorted(roots)]


@dataclass(frozen=True)
class IdealLattice:
    """A rank-4 Z-lattice in coefficient coordinates together with its
    index in Z[alpha].  |det(basis)| must equal ideal_norm."""

    basis: tuple[tuple[int, int, int, int], ...]
    ideal_norm: int

    def __post_init__(self):
        if len(self.basis) != 4 or any(len(row) != 4 for row in self.basis):
            raise PreconditionViolation("basis must be 4x4")
        if abs(_det4(self.basis)) != self.ideal_norm:
            raise PreconditionViolation(
                "basis determinant does not match the ideal norm")

    def rows(self) -> list[QuarticInt]:
        return [QuarticInt(*row) for row in self.basis]


def _det4(m) -> int:
    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for j, head in enumerate(rows[0]):
            if head:
                minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
                total += (-1) ** j * head * det(minor)
        return total

    return det([list(r) for r in m])


def _hnf4(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of an integer matrix with 4 columns and
    full column rank; returns the 4 nonzero rows (upper triangular,
    positive pivots, entries above a pivot reduced mod it)."""
    m = [list(r) for r in rows]
    r = 0
    for col in range(4):
        while True:
            nz = [i for i in range(r, len(m)) if m[i][col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][col]))
            i0, i1 = nz[0], nz[1]
            q = m[i1][col] // m[i0][col]
            m[i1] = [m[i1][t] - q * m[i0][t] for t in range(4)]
        if not nz:
            raise PreconditionViolation("matrix does not have full column rank")
        i0 = nz[0]
        m[r], m[i0] = m[i0], m[r]
        if m[r][col] < 0:
            m[r] = [-t for t in m[r]]
        for i in range(r):
            q = m[i][col] // m[r][col]
            if q:
                m[i] = [m[i][t] - q * m[r][t] for t in range(4)]
        r += 1
    return m[:4]


def build_ideal(p: OddPrime) -> IdealLattice:
    """HNF basis of the product of the two primes over p whose roots
    square to 1+i' and 1-i' respectively: the Z-module generated by
    p*alpha^k and g*alpha^k for g = (alpha - r)(alpha - s) mod p.
    Its index in Z[alpha] is p^2."""
    roots = quartic_roots(p)
    if not roots:
        raise NotSplitError(f"{p} does not split completely in the quartic field")
    pv = p.value
    r, s = roots[0], roots[2]

    def centered(x):
        x %= pv
        return x - pv if x > pv // 2 else x

    g = QuarticInt(centered(r * s), centered(-(r + s)), 1, 0)
    rows = []
    for k in range(4):
        row = [0, 0, 0, 0]
        row[k] = pv
        rows.append(row)
    gk = g
    for _ in range(4):
        rows.append(list(gk.coeffs()))
        gk = gk * ALPHA
    basis = _hnf4(rows)
    lat = IdealLattice(tuple(tuple(row) for row in basis), pv * pv)
    return lat


# Exact trace pairing on the monomial basis: sum over all four complex
# embeddings sigma of sigma(alpha^m) * conj(sigma(alpha^n)) equals
# TA[m][n] + TB[m][n]*sqrt(2).  (The embeddings send alpha to the four
# values (+-)2^(1/4) e^(+-i pi/8), so the pairing of alpha^m with alpha^n
# is 0 for m+n odd and 4 * 2^((m+n)/4) cos((m-n) pi/8) otherwise.)
_TA = ((4, 0, 4, 0), (0, 0, 0, 0), (4, 0, 8, 0), (0, 0, 0, 0))
_TB = ((0, 0, 0, 0), (0, 4, 0, 4), (0, 0, 0, 0), (0, 4, 0, 8))


def _gram_exact(rows) -> tuple[list[list[int]], list[list[int]]]:
    """Embedding Gram matrix of the rows, exactly, as (A, B) with
    G = A + B*sqrt(2)."""
    a_mid = [[sum(rows[i][k] * _TA[k][l] for k in range(4)) for l in range(4)] for i in range(4)]
    b_mid = [[sum(rows[i][k] * _TB[k][l] for k in range(4)) for l in range(4)] for i in range(4)]
    A = [[sum(a_mid[i][l] * rows[j][l] for l in range(4)) for j in range(4)] for i in range(4)]
    B = [[sum(b_mid[i][l] * rows[j][l] for l in range(4)) for j in range(4)] for i in range(4)]
    return A, B


def _scaled_gram(A, B, precision_bits: int) -> list[list[int]]:
    """Integer Gram matrix round(2^t * (A + B*sqrt2)).  The sqrt2 part is
    truncated toward zero, so each entry is off by less than 1."""
    shift = 1 << precision_bits
    four_t = shift * shift

    def ent(i, j):
        b = B[i][j]
        root = isqrt(2 * b * b * four_t)
        return A[i][j] * shift + (root if b >= 0 else -root)

    return [[ent(i, j) for j in range(4)] for i in range(4)]


def _int_gs(Q):
    """All-integer Gram-Schmidt data of a quadratic form: Gramians
    d[i] = det of the (i+1)x(i+1) principal minor, and lam[i][j] =
    d[j] * mu_ij.  All divisions below are exact.  Raises
    PrecisionExhausted if the form is not positive definite."""
    n = len(Q)
    d = [0] * n
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = Q[i][j]
            for k in range(j):
                u = (d[k] * u - lam[i][k] * lam[j][k]) // (d[k - 1] if k else 1)
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise PrecisionExhausted("scaled Gram matrix is not positive definite")
                d[i] = u
    return d, lam


def _lll_on_gram(Q):
    """LLL-reduce a positive definite integer Gram matrix in place with
    delta = 0.99; returns the unimodular transform U with
    Q_new = U Q_old U^T.  Exact integer arithmetic throughout."""
    n = len(Q)
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(k, j, q):  # b_k -= q * b_j
        for t in range(n):
            Q[k][t] -= q * Q[j][t]
        for t in range(n):
            Q[t][k] -= q * Q[t][j]
        U[k] = [U[k][t] - q * U[j][t] for t in range(n)]

    def swap(k, j):
        Q[k], Q[j] = Q[j], Q[k]
        for t in range(n):
            Q[t][k], Q[t][j] = Q[t][j], Q[t][k]
        U[k], U[j] = U[j], U[k]

    def reduce_once(k, j, d, lam):
        # nearest integer to mu_kj = lam[k][j] / d[j]
        q = (2 * lam[k][j] + d[j]) // (2 * d[j])
        if q:
            row_op(k, j, q)
        return q

    k = 1
    while k < n:
        d, lam = _int_gs(Q)
        if reduce_once(k, k - 1, d, lam):
            d, lam = _int_gs(Q)
        dkm2 = d[k - 2] if k >= 2 else 1
        # Lovasz with delta = 99/100, cleared of denominators
        if 100 * (d[k] * dkm2 + lam[k][k - 1] ** 2) < 99 * d[k - 1] ** 2:
            swap(k, k - 1)
            k = max(k - 1, 1)
        else:
            for j in range(k - 2, -1, -1):
                if reduce_once(k, j, d, lam):
                    d, lam = _int_gs(Q)
            k += 1
    return U


def lll_reduce(lattice: IdealLattice, precision_bits: int | None = None) -> IdealLattice:
    """Reduce the lattice basis with LLL (delta = 0.99) under the
    embedding quadratic form scaled to precision_bits fractional bits.
    The result spans the same Z-module; the first row has near-minimal
    embedding length."""
    if precision_bits is None:
        precision_bits = lattice.ideal_norm.bit_length() + 64
    if precision_bits < 16:
        raise PreconditionViolation("precision_bits is unreasonably small")
    rows = [list(r) for r in lattice.basis]
    A, B = _gram_exact(rows)
    Q = _scaled_gram(A, B, precision_bits)
    U = _lll_on_gram(Q)
    new_rows = [
        [sum(U[i][k] * rows[k][t] for k in range(4)) for t in range(4)] for i in range(4)
    ]
    return IdealLattice(tuple(tuple(r) for r in new_rows), lattice.ideal_norm)


def _fincke_pohst(Q, bound: int):
    """Yield all nonzero integer coordinate vectors x with x^T Q x <= bound
    (Q positive definite, exact arithmetic)."""
    n = len(Q)
    d, lam = _int_gs(Q)
    mu = [[Fraction(lam[i][j], d[j]) for j in range(n)] for i in range(n)]
    bstar = [Fraction(d[i], d[i - 1] if i else 1) for i in range(n)]
    x = [0] * n

    def rec(i, budget: Fraction):
        if i < 0:
            if any(x):
                yield tuple(x)
            return
        center = -sum(mu[j][i] * x[j] for j in range(i + 1, n))
        rad = budget / bstar[i]
        # floor(sqrt(rad)) with one unit of padding, exactly
        smax = Fraction(isqrt(rad.numerator * rad.denominator) + 1, rad.denominator)
        lo = math.ceil(center - smax)
        hi = math.floor(center + smax)
        for xi in range(lo, hi + 1):
            used = (xi - center) ** 2 * bstar[i]
            if used <= budget:
                x[i] = xi
                yield from rec(i - 1, budget - used)
        x[i] = 0

    yield from rec(n - 1, Fraction(bound))


@dataclass(frozen=True)
class DeltaSolution:
    """A certified solution a^2 - (1+i) b^2 = p: delta = a + b*alpha has
    relative norm exactly p and absolute norm p^2.  Construction verifies
    both, so a DeltaSolution can never hold a wrong answer."""

    p: OddPrime
    delta: QuarticInt
    a: GaussianInt
    b: GaussianInt

    def __post_init__(self):
        if QuarticInt.from_relative(self.a, self.b) != self.delta:
            raise PreconditionViolation("delta does not match its relative form")
        if self.delta.relative_norm() != GaussianInt(self.p.value):
            raise PreconditionViolation("relative norm is not exactly p")
        if self.delta.absolute_norm() != self.p.value**2:
            raise PreconditionViolation("absolute norm is not p^2")


def _unit_adjust(g: QuarticInt, p: OddPrime) -> QuarticInt:
    """Rotate a generator of relative norm w*p (w a fourth root of unity)
    to relative norm exactly p by multiplying with (alpha+1)^m, then fix
    the sign canonically (a.re > 0, ties broken lexicographically)."""
    pv = p.value
    nr = g.relative_norm()
    w, rem = divmod(nr, GaussianInt(pv))
    if rem or w.norm() != 1:
        raise GeneratorNotFound("candidate norm is not a unit multiple of p")
    m = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}[(w.re, w.im)]
    for _ in range(m):
        g = g * UNIT_ALPHA_PLUS_1
    assert g.relative_norm() == GaussianInt(pv)
    a, b = g.to_relative()
    t = (a.re, a.im, b.re, b.im)
    if a.re < 0 or (a.re == 0 and tuple(-v for v in t) < t):
        g = -g
    return g


def solve_delta(p: OddPrime) -> DeltaSolution:
    """Certified element of relative norm p for a completely split prime.

    Pipeline: ideal of norm p^2 -> LLL on the scaled embedding Gram ->
    generator search (first row, remaining rows, small combinations,
    then full enumeration below the unit-balanced length bound 4*sqrt(2)*p)
    -> unit adjustment.  Las Vegas: on failure raises GeneratorNotFound,
    never returns an unverified answer.  Precision starts at
    2*bitlen(p) + 64 and doubles on a positive-definiteness failure,
    capped at 16x.
    """
    lat = build_ideal(p)
    pv = p.value
    target = pv * pv
    base = 2 * pv.bit_length() + 64
    for mult in (1, 2, 4, 8, 16):
        prec = base * mult
        try:
            reduced = lll_reduce(lat, prec)
            rows = reduced.rows()
            for cand in rows:
                if cand.absolute_norm() == target:
                    return _finish(cand, p)
            for combo in _small_combos(rows):
                if combo.absolute_norm() == target:
                    return _finish(combo, p)
            A, B = _gram_exact([list(r) for r in reduced.basis])
            Q = _scaled_gram(A, B, prec)
            # embedding-length bound 4*sqrt(2)*p: some unit multiple of any
            # generator lands under it, so the enumeration is complete
            v = isqrt(32 * target) + 1
            bound = (v << prec) + 16
            bound += bound >> 20
            count = 0
            for coords in _fincke_pohst(Q, bound):
                count += 1
                if count > 200_000:
                    break
                cand = QuarticInt(
                    *[
                        sum(coords[k] * reduced.basis[k][t] for k in range(4))
                        for t in range(4)
                    ]
                )
                if cand.absolute_norm() == target:
                    return _finish(cand, p)
        except PrecisionExhausted:
            continue
    raise GeneratorNotFound(f"no relative-norm-{pv} generator found")


def _finish(g: QuarticInt, p: OddPrime) -> DeltaSolution:
    g = _unit_adjust(g, p)
    a, b = g.to_relative()
    return DeltaSolution(p=p, delta=g, a=a, b=b)


def _small_combos(rows):
    span = (-2, -1, 0, 1, 2)
    for c0 in span:
        for c1 in span:
            for c2 in span:
                for c3 in span:
                    if c0 or c1 or c2 or c3:
                        yield c0 * rows[0] + c1 * rows[1] + c2 * rows[2] + c3 * rows[3]
