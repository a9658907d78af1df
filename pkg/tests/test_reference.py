"""Baseline-oracle unit tests and sweep-suite smoke checks."""

from math import factorial

import pytest

from factoradic import PrefixTooShort, RangeTooLarge, encode
from factoradic.reference import (
    check_factoradic_order,
    check_inversions,
    check_residues,
    inversions_bruteforce,
    mod_direct,
    nth_permutation_bruteforce,
)

from golden import GOLDEN_24


def test_bruteforce_reproduces_golden_rows():
    for n, row in GOLDEN_24.items():
        assert nth_permutation_bruteforce(n, 4) == row


def test_bruteforce_last_permutation_is_reversal():
    assert nth_permutation_bruteforce(5039, 7) == (6, 5, 4, 3, 2, 1, 0)


def test_bruteforce_bounds():
    with pytest.raises(PrefixTooShort):
        nth_permutation_bruteforce(24, 4)
    with pytest.raises(PrefixTooShort):
        nth_permutation_bruteforce(-1, 4)
    with pytest.raises(RangeTooLarge):
        nth_permutation_bruteforce(0, 9)


def test_inversions_bruteforce_golden():
    assert inversions_bruteforce((2, 3, 0, 1)) == {(0, 2), (0, 3), (1, 2), (1, 3)}
    assert inversions_bruteforce((0, 1, 2)) == frozenset()


def test_mod_direct():
    assert mod_direct(16, 4) == 0
    assert mod_direct(16, 3) == 1
    with pytest.raises(ValueError):
        mod_direct(5, 0)


def test_order_suite_passes_small():
    cases, mismatches = check_factoradic_order(smax=5)
    assert cases == sum(factorial(s) for s in range(1, 6))
    assert mismatches == []


def test_inversion_suite_passes():
    cases, mismatches = check_inversions(samples=50, max_size=30, seed=3)
    assert cases == 50
    assert mismatches == []


def test_inversion_suite_is_deterministic():
    assert check_inversions(samples=10, seed=1) == check_inversions(samples=10, seed=1)


def test_residue_suite_passes_small():
    cases, mismatches = check_residues(nmax=720, kmax=8)
    assert cases == 720 * 8
    assert mismatches == []


def test_order_suite_catches_planted_fault(monkeypatch):
    import factoradic.reference as reference

    def broken_encode(n, length=None):
        p = encode(n, length)
        return p[::-1] if n == 3 else p

    monkeypatch.setattr(reference, "encode", broken_encode)
    cases, mismatches = reference.check_factoradic_order(smax=3)
    assert any(n == 3 for _, n, _, _ in mismatches)
