"""Classification of odd primes.

v_level grades the 2-part of the class number h(-4p) as certified by
quadratic symbols:

  0: p ≡ 3 (mod 4)            (h odd)
  1: p ≡ 5 (mod 8)            (2 || h)
  2: p ≡ 1 (mod 8), (1+i'/p) = -1        (4 || h)
  3: split, (alpha*delta symbol) = -1    (8 || h)
  4: split, (alpha*delta symbol) = +1    (16 | h; "at least 4")

w_level grades 2-divisibility of the everywhere-locally-solvable descent
classes of y^2 = x^3 - p^2 x, defined only for p ≡ 1 (mod 8):

  1: (1+i'/p) = -1
  2: split, (zeta*alpha*delta symbol) = -1
  3: split, (zeta*alpha*delta symbol) = +1  ("at least 3")

Levels 4 and 3 are ceilings: deeper divisibility is not decided here.

congruent_status is what the levels settle about the congruent number
question: p ≡ 5, 7 (mod 8) are congruent (Monsky), p ≡ 3 (mod 8) are not,
and for p ≡ 1 (mod 8) levels w = 1, 2 certify NOT congruent (with
Sha(E_p)[2^inf] = (Z/2)^2 resp. (Z/4)^2), while w = 3 stays undecided.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ComputeFailed, GeneratorNotFound, NotSplitError, PrecisionExhausted
from .modmath import OddPrime, eighth_root_of_unity, legendre, sqrt_mod
from .quartic import DeltaSolution, embed, primes_above, solve_delta


class CongruentStatus(str, enum.Enum):
    CONGRUENT_MONSKY = "CONGRUENT_MONSKY"
    NOT_CONGRUENT = "NOT_CONGRUENT"
    UNDECIDED = "UNDECIDED"


class ShaReport(str, enum.Enum):
    SHA2_TRIVIAL_KNOWN = "SHA2_TRIVIAL_KNOWN"
    SHA_Z2xZ2 = "SHA_Z2xZ2"
    SHA_Z4xZ4 = "SHA_Z4xZ4"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SymbolSet:
    """The three quadratic symbols driving the classification.
    0 means "not applicable at this prime" (keeps tabular output total)."""

    chi_1pi: int = 0
    chi_alpha_delta: int = 0
    chi_zeta_alpha_delta: int = 0


@dataclass(frozen=True)
class Classification:
    p: int
    p_mod_16: int
    v_level: int
    w_level: int | None
    symbols: SymbolSet
    congruent_status: CongruentStatus
    sha_report: ShaReport


def _as_prime(p: int | OddPrime) -> OddPrime:
    return p if isinstance(p, OddPrime) else OddPrime(p)


def _symbols(p: OddPrime) -> SymbolSet:
    """Compute every applicable symbol at p, solving for delta once."""
    pv = p.value
    if pv % 8 != 1:
        return SymbolSet()
    i_img = sqrt_mod(-1, p)
    chi_1pi = legendre(1 + i_img, p)
    if chi_1pi != 1:
        return SymbolSet(chi_1pi=chi_1pi)
    try:
        sol: DeltaSolution = solve_delta(p)
        above = primes_above(p)
    except (GeneratorNotFound, PrecisionExhausted, NotSplitError) as exc:
        raise ComputeFailed(f"could not certify delta for p = {pv}") from exc
    # delta vanishes at exactly two of the four primes; evaluate at the
    # smallest root where it does not (any admissible choice agrees)
    admissible = [q for q in above if embed(sol.delta, q) != 0]
    q = admissible[0]
    e = embed(sol.delta, q)
    z = eighth_root_of_unity(p)
    return SymbolSet(
        chi_1pi=1,
        chi_alpha_delta=legendre(q.r * e, p),
        chi_zeta_alpha_delta=legendre(z * q.r * e, p),
    )


def v_level(p: int | OddPrime) -> tuple[int, SymbolSet]:
    """Certified 2-adic depth of h(-4p), capped at 4."""
    p = _as_prime(p)
    syms = _symbols(p)
    m8 = p.value % 8
    if m8 in (3, 7):
        return 0, syms
    if m8 == 5:
        return 1, syms
    if syms.chi_1pi != 1:
        return 2, syms
    return (4 if syms.chi_alpha_delta == 1 else 3), syms


def w_level(p: int | OddPrime) -> tuple[int | None, SymbolSet]:
    """Certified 2-divisibility depth of the distinguished locally solvable
    descent classes; None unless p ≡ 1 (mod 8)."""
    p = _as_prime(p)
    syms = _symbols(p)
    if p.value % 8 != 1:
        return None, syms
    if syms.chi_1pi != 1:
        return 1, syms
    return (3 if syms.chi_zeta_alpha_delta == 1 else 2), syms


def classify(p: int | OddPrime) -> Classification:
    """Full classification of one odd prime."""
    p = _as_prime(p)
    syms = _symbols(p)
    m8 = p.value % 8
    if m8 in (3, 7):
        v = 0
    elif m8 == 5:
        v = 1
    elif syms.chi_1pi != 1:
        v = 2
    else:
        v = 4 if syms.chi_alpha_delta == 1 else 3
    if m8 != 1:
        w = None
    elif syms.chi_1pi != 1:
        w = 1
    else:
        w = 3 if syms.chi_zeta_alpha_delta == 1 else 2

    if m8 in (5, 7):
        status, sha = CongruentStatus.CONGRUENT_MONSKY, ShaReport.SHA2_TRIVIAL_KNOWN
    elif m8 == 3:
        status, sha = CongruentStatus.NOT_CONGRUENT, ShaReport.SHA2_TRIVIAL_KNOWN
    elif w == 1:
        status, sha = CongruentStatus.NOT_CONGRUENT, ShaReport.SHA_Z2xZ2
    elif w == 2:
        status, sha = CongruentStatus.NOT_CONGRUENT, ShaReport.SHA_Z4xZ4
    else:
        status, sha = CongruentStatus.UNDECIDED, ShaReport.UNKNOWN

    return Classification(
        p=p.value,
        p_mod_16=p.residue_mod_16,
        v_level=v,
        w_level=w,
        symbols=syms,
        congruent_status=status,
        sha_report=sha,
    )
