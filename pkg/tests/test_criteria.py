import pytest

from congprimes.criteria import (
    Classification,
    CongruentStatus,
    ShaReport,
    SymbolSet,
    classify,
    v_level,
    w_level,
)
from congprimes.errors import PreconditionViolation
from congprimes.modmath import OddPrime, legendre, primes_in_range, sqrt_mod


# (p, v, w, status, sha) spot values, each confirmed by the brute-force
# suites in test_acceptance
TABLE = [
    (3, 0, None, "NOT_CONGRUENT", "SHA2_TRIVIAL_KNOWN"),
    (5, 1, None, "CONGRUENT_MONSKY", "SHA2_TRIVIAL_KNOWN"),
    (7, 0, None, "CONGRUENT_MONSKY", "SHA2_TRIVIAL_KNOWN"),
    (11, 0, None, "NOT_CONGRUENT", "SHA2_TRIVIAL_KNOWN"),
    (13, 1, None, "CONGRUENT_MONSKY", "SHA2_TRIVIAL_KNOWN"),
    (17, 2, 1, "NOT_CONGRUENT", "SHA_Z2xZ2"),
    (41, 3, 3, "UNDECIDED", "UNKNOWN"),
    (73, 2, 1, "NOT_CONGRUENT", "SHA_Z2xZ2"),
    (113, 3, 2, "NOT_CONGRUENT", "SHA_Z4xZ4"),
    (257, 4, 3, "UNDECIDED", "UNKNOWN"),
]


@pytest.mark.parametrize("p,v,w,status,sha", TABLE)
def test_classify_spot_values(p, v, w, status, sha):
    c = classify(p)
    assert c.p == p
    assert c.p_mod_16 == p % 16
    assert c.v_level == v
    assert c.w_level == w
    assert c.congruent_status == CongruentStatus(status)
    assert c.sha_report == ShaReport(sha)


def test_levels_match_classify():
    for p in primes_in_range(3, 600):
        c = classify(p)
        v, vs = v_level(p)
        w, ws = w_level(p)
        assert v == c.v_level
        assert w == c.w_level
        assert vs == ws == c.symbols


def test_accepts_odd_prime_wrapper():
    assert classify(OddPrime(41)) == classify(41)


def test_rejects_non_primes():
    for bad in (1, 2, 4, 9, 15, -11):
        with pytest.raises(PreconditionViolation):
            classify(bad)


def test_symbols_not_applicable_off_stratum():
    for p in (3, 5, 7, 11, 13, 19, 23, 29, 31, 37):
        c = classify(p)
        assert c.symbols == SymbolSet()


def test_symbols_stop_at_first_negative():
    # chi_1pi = -1 settles the level; the deeper symbols stay 0
    for p in (17, 73, 89, 97):
        c = classify(p)
        if c.symbols.chi_1pi == -1:
            assert c.symbols.chi_alpha_delta == 0
            assert c.symbols.chi_zeta_alpha_delta == 0


def test_deep_symbols_set_when_split():
    for p in (41, 113, 257, 337, 353):
        c = classify(p)
        assert c.symbols.chi_1pi == 1
        assert c.symbols.chi_alpha_delta in (-1, 1)
        assert c.symbols.chi_zeta_alpha_delta in (-1, 1)


def test_chi_1pi_both_sqrt_choices():
    # the defining symbol is insensitive to which sqrt(-1) is used
    for p in primes_in_range(17, 3000):
        if p % 8 != 1:
            continue
        P = OddPrime(p)
        i1 = sqrt_mod(-1, P)
        assert legendre(1 + i1, P) == legendre(1 + (p - i1), P)


def test_v_levels_partition_small_range():
    seen = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0}
    for p in primes_in_range(3, 3000):
        c = classify(p)
        seen[c.v_level] += 1
        if p % 4 == 3:
            assert c.v_level == 0
        elif p % 8 == 5:
            assert c.v_level == 1
        else:
            assert c.v_level >= 2
    assert all(seen[v] > 0 for v in seen)


def test_classification_is_frozen():
    c = classify(17)
    with pytest.raises(AttributeError):
        c.v_level = 0
