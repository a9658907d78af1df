"""Residues n mod k read off the k-prefix of n's permutation writing.

The digit expansion n = sum a_j * j! gives n mod k directly: every j! with
j >= k is a multiple of k, so only digits j < k contribute, and those digits
are the inversion column sums of the k-prefix.  Hence

    n mod k  =  ( sum_{i<j<k} inv(i, j) * (j! mod k) ) mod k

over the k-prefix's inversion set.  Because the k-prefix's relative order
depends only on n mod k!, residues of arbitrarily large n reduce to a
k-entry computation.

Coefficients j! mod k vanish from the first j with k | j! onward (the
Kempner function S(k)), so the sum may stop at j < min(k, S(k)).
"""

from __future__ import annotations

import operator
from math import factorial
from typing import Sequence

from .core import _check_count, _count_earlier_larger, _validate_prefix, encode
from .errors import ModulusZero, PrefixTooShort
from .inversions import InversionSet, inversion_set


def _check_modulus(k) -> int:
    k = operator.index(k)
    if k < 1:
        raise ModulusZero(f"modulus must be >= 1, got {k}")
    return k


def kempner(k: int) -> int:
    """Smallest j with k | j! (S(1) = 0, S(6) = 3, S(p) = p for prime p)."""
    k = _check_modulus(k)
    j = 0
    w = 1 % k
    while w:
        j += 1
        w = (w * j) % k
    return j


def residue_from_prefix(prefix: Sequence[int], k: int, cutoff: bool = True) -> int:
    """n mod k for any n whose permutation writing starts with this k-prefix.

    Only the first k entries are read; extra entries are ignored.  With
    ``cutoff`` (the default) pairs whose coefficient j! mod k vanishes are
    skipped entirely; the result is identical either way.
    """
    k = _check_modulus(k)
    entries = tuple(prefix)
    if len(entries) < k:
        raise PrefixTooShort(f"need a {k}-prefix, got {len(entries)} entries")
    if k == 1:
        return 0
    head = _validate_prefix(entries[:k])
    limit = min(k, kempner(k)) if cutoff else k
    counts = _count_earlier_larger(head[:limit])
    total = 0
    w = 1
    for j in range(1, limit):
        w = (w * j) % k
        if counts[j] and w:
            total += counts[j] * w
    return total % k


def residue(n: int, k: int) -> int:
    """n mod k computed through the k-prefix inversion formula.

    n is first reduced mod k! (which leaves the k-prefix's relative order
    unchanged), encoded as a k-entry permutation, and handed to
    :func:`residue_from_prefix`.  Agrees with plain ``n % k``.
    """
    n = _check_count(n)
    k = _check_modulus(k)
    m = n % factorial(k)
    return residue_from_prefix(encode(m, k), k)


def prefix_inversions(n: int, s: int) -> InversionSet:
    """Inversion set of the s-prefix of n's permutation writing.

    Periodic in n with period s!, so n is reduced mod s! before encoding.
    """
    n = _check_count(n)
    s = operator.index(s)
    if s < 1:
        raise PrefixTooShort(f"prefix length must be >= 1, got {s}")
    return inversion_set(encode(n % factorial(s), s))


def divisible(n_or_prefix, k: int) -> bool:
    """True iff k divides the given integer, or the integer a prefix encodes.

    Accepts either a non-negative integer or a k-prefix (sequence of
    distinct entries).
    """
    try:
        n = operator.index(n_or_prefix)
    except TypeError:
        return residue_from_prefix(n_or_prefix, k) == 0
    return residue(n, k) == 0
