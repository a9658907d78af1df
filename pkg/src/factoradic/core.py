"""Codec between non-negative integers, factorial-base digits, and permutations.

Every non-negative integer n has a unique expansion

    n = sum_i a_i * i!        with 0 <= a_i <= i,

the factorial number system.  The digit sequence (a_0, ..., a_{s-1}) in turn
corresponds to a permutation of {0, ..., s-1}: fill positions from the right,
placing at position j the still-unused value that has exactly a_j unused
values above it.  Listing integers by this correspondence enumerates the
permutations that fix everything >= s before those that move s, which is the
same linear order as comparing sequences at their highest differing position
(larger entry there comes first).  ``encode``/``decode`` convert between the
two ends of this chain; the digit and permutation halves are exposed
separately as well.

All functions are pure and safe to call from multiple threads.
"""

from __future__ import annotations

import operator
from bisect import bisect_left, insort
from typing import Sequence

from ._fenwick import FenwickTree
from .errors import (
    DuplicateEntry,
    InvalidDigit,
    NotAPermutation,
    ParseError,
    PrefixTooShort,
    RangeTooLarge,
)

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is optional, plain int works
    def _mpz(x):
        return x

#: Hard cap on prefix lengths.  The integers themselves are unbounded, but a
#: permutation occupies O(s) memory, so absurd length requests are refused.
#: Module-level and adjustable by callers who know what they are doing.
MAX_PREFIX_LENGTH = 10**6

# Below these sizes the simple quadratic loops beat the divide-and-conquer
# machinery; thresholds chosen from benchmarks on CPython 3.10.
_BIG_BITS = 4096
_BIG_DIGITS = 1024
_BIG_PERM = 512
_LEAF = 32


# ---------------------------------------------------------------------------
# validation helpers

def _check_count(n) -> int:
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    return n


def _check_cap(s: int) -> None:
    if s > MAX_PREFIX_LENGTH:
        raise RangeTooLarge(
            f"prefix length {s} exceeds MAX_PREFIX_LENGTH={MAX_PREFIX_LENGTH}"
        )


def _validate_digits(digits: Sequence[int]) -> tuple[int, ...]:
    d = tuple(operator.index(x) for x in digits)
    if not d:
        raise InvalidDigit("empty digit sequence; zero is written as (0,)")
    for i, a in enumerate(d):
        if not 0 <= a <= i:
            raise InvalidDigit(f"digit {a} at index {i} outside 0..{i}")
    return d


def _validate_prefix(entries: Sequence[int]) -> tuple[int, ...]:
    p = tuple(operator.index(x) for x in entries)
    if not p:
        raise PrefixTooShort("empty prefix")
    if any(x < 0 for x in p):
        raise NotAPermutation(f"negative entry in {p}")
    if len(set(p)) != len(p):
        raise DuplicateEntry(f"repeated entry in {p}")
    return p


def _validate_complete(entries: Sequence[int]) -> tuple[int, ...]:
    p = tuple(operator.index(x) for x in entries)
    if not p:
        raise NotAPermutation("empty sequence; the identity is written as (0,)")
    s = len(p)
    seen = [False] * s
    for x in p:
        if not 0 <= x < s or seen[x]:
            raise NotAPermutation(f"{p} is not a permutation of 0..{s - 1}")
        seen[x] = True
    return p


# ---------------------------------------------------------------------------
# integer <-> digits

def _radix_product(lo: int, hi: int):
    """Product of (i + 1) for i in [lo, hi); equals hi!/lo!."""
    if hi - lo <= _LEAF:
        w = 1
        for i in range(lo, hi):
            w *= i + 1
        return _mpz(w)
    mid = (lo + hi) // 2
    return _radix_product(lo, mid) * _radix_product(mid, hi)


def _build_weights(lo: int, hi: int, tree: dict):
    if hi - lo <= _LEAF:
        w = 1
        for i in range(lo, hi):
            w *= i + 1
        w = _mpz(w)
    else:
        mid = (lo + hi) // 2
        w = _build_weights(lo, mid, tree) * _build_weights(mid, hi, tree)
    tree[lo, hi] = w
    return w


def _extract(n, lo: int, hi: int, out: list, tree: dict) -> None:
    if hi - lo <= _LEAF:
        q = n
        for i in range(lo, hi):
            q, r = divmod(q, i + 1)
            out[i] = int(r)
        return
    mid = (lo + hi) // 2
    q, r = divmod(n, tree[lo, mid])
    _extract(r, lo, mid, out, tree)
    _extract(q, mid, hi, out, tree)


def _digits_minimal(n: int) -> list[int]:
    """Digits of n, shortest form (trailing zeros stripped, length >= 1)."""
    if n == 0:
        return [0]
    if n.bit_length() <= _BIG_BITS:
        out = [0]
        q = n
        d = 2
        while q:
            q, r = divmod(q, d)
            out.append(r)
            d += 1
        return out
    # bracket a power-of-two length L with n < L!, then split recursively
    length = 64
    f = _radix_product(0, length)
    while f <= n:
        if length > MAX_PREFIX_LENGTH:
            raise RangeTooLarge(
                f"minimal prefix length of n exceeds MAX_PREFIX_LENGTH="
                f"{MAX_PREFIX_LENGTH}"
            )
        f *= _radix_product(length, 2 * length)
        length *= 2
    tree: dict = {}
    _build_weights(0, length, tree)
    out = [0] * length
    _extract(_mpz(n), 0, length, out, tree)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def digits_from_integer(n: int, length: int | None = None) -> tuple[int, ...]:
    """Factorial-base digits (a_0, ..., a_{s-1}) of n, with sum a_i * i! = n.

    Without ``length`` the shortest writing is returned (s = 1 for n = 0).
    With ``length`` the digits are zero-padded to exactly that many entries;
    ``PrefixTooShort`` is raised if n does not fit, i.e. if n >= length!.
    """
    n = _check_count(n)
    out = _digits_minimal(n)
    if length is None:
        _check_cap(len(out))
        return tuple(out)
    length = operator.index(length)
    if length < 1:
        raise PrefixTooShort(f"length must be >= 1, got {length}")
    _check_cap(length)
    if length < len(out):
        raise PrefixTooShort(
            f"n = {n} needs at least {len(out)} digits, got length {length}"
        )
    return tuple(out) + (0,) * (length - len(out))


def integer_from_digits(digits: Sequence[int]) -> int:
    """Evaluate sum a_i * i! for a factorial-base digit sequence."""
    d = _validate_digits(digits)
    if len(d) <= _BIG_DIGITS:
        total = 0
        w = 1
        for i, a in enumerate(d):
            if a:
                total += a * w
            w *= i + 1
        return total
    value, _ = _accumulate(d, 0, len(d))
    return int(value)


def _accumulate(d: Sequence[int], lo: int, hi: int):
    """(value, weight) of digit slice [lo, hi); weight = hi!/lo!."""
    if hi - lo <= _LEAF:
        v = 0
        w = 1
        for i in range(lo, hi):
            v += d[i] * w
            w *= i + 1
        return _mpz(v), _mpz(w)
    mid = (lo + hi) // 2
    vl, wl = _accumulate(d, lo, mid)
    vr, wr = _accumulate(d, mid, hi)
    return vl + wl * vr, wl * wr


def minimal_prefix_length(n: int) -> int:
    """Smallest s >= 1 with n < s!."""
    n = _check_count(n)
    if n.bit_length() > _BIG_BITS:
        return len(_digits_minimal(n))
    s = 1
    q = n
    d = 2
    while q:
        q //= d
        d += 1
        s += 1
    return s


# ---------------------------------------------------------------------------
# digits <-> permutation

def permutation_from_digits(digits: Sequence[int]) -> tuple[int, ...]:
    """Permutation of {0..s-1} whose digit sequence is ``digits``.

    Positions are filled from the right: position j receives the unused value
    with exactly digits[j] unused values above it.
    """
    d = _validate_digits(digits)
    s = len(d)
    _check_cap(s)
    out = [0] * s
    if s <= _BIG_PERM:
        pool = list(range(s))
        for j in range(s - 1, -1, -1):
            out[j] = pool.pop(j - d[j])
    else:
        pool = FenwickTree(s, ones=True)
        for j in range(s - 1, -1, -1):
            v = pool.select(j - d[j])
            out[j] = v
            pool.add(v, -1)
    return tuple(out)


def _count_earlier_larger(p: Sequence[int]) -> list[int]:
    """counts[j] = #{i < j : p[i] > p[j]} for a duplicate-free sequence."""
    s = len(p)
    counts = [0] * s
    if s <= _BIG_PERM:
        seen: list[int] = []
        for j, v in enumerate(p):
            idx = bisect_left(seen, v)
            counts[j] = j - idx
            insort(seen, v)
    else:
        order = sorted(range(s), key=p.__getitem__)
        rank = [0] * s
        for r, idx in enumerate(order):
            rank[idx] = r
        tree = FenwickTree(s)
        for j in range(s):
            counts[j] = j - tree.count_le(rank[j])
            tree.add(rank[j])
    return counts


def digits_from_permutation(entries: Sequence[int]) -> tuple[int, ...]:
    """Digit sequence of a prefix: digit j counts earlier entries above entry j.

    Works for any sequence of distinct non-negative integers; when the input
    is a permutation of {0..s-1} this inverts :func:`permutation_from_digits`.
    """
    p = _validate_prefix(entries)
    return tuple(_count_earlier_larger(p))


# ---------------------------------------------------------------------------
# the codec proper

def encode(n: int, length: int | None = None) -> tuple[int, ...]:
    """Permutation writing of n: the n-th permutation in the enumeration order.

    The default (minimal) writing has ``minimal_prefix_length(n)`` entries;
    passing ``length`` pads with trailing fixed points, and requires
    n < length!.
    """
    return permutation_from_digits(digits_from_integer(n, length))


def decode(entries: Sequence[int]) -> int:
    """Integer encoded by a complete permutation of {0..s-1}.

    Inverse of :func:`encode`; padded writings decode to the same integer.
    """
    p = _validate_complete(entries)
    return integer_from_digits(tuple(_count_earlier_larger(p)))


def minimal_form(entries: Sequence[int]) -> tuple[int, ...]:
    """Strip trailing fixed points down to the shortest writing (length >= 1)."""
    p = list(_validate_complete(entries))
    while len(p) > 1 and p[-1] == len(p) - 1:
        p.pop()
    return tuple(p)


def compare_factoradic(p: Sequence[int], q: Sequence[int]) -> int:
    """Three-way comparison in encoding order: -1, 0, or 1.

    Both arguments must be complete permutations; shorter writings are
    extended by fixed points before comparing, so (1, 0) equals (1, 0, 2).
    The sequences are compared at the highest position where they differ,
    and the one with the *larger* entry there comes first; this makes
    ``compare_factoradic(p, q) < 0`` equivalent to ``decode(p) < decode(q)``.
    """
    a = _validate_complete(p)
    b = _validate_complete(q)
    for j in range(max(len(a), len(b)) - 1, -1, -1):
        x = a[j] if j < len(a) else j
        y = b[j] if j < len(b) else j
        if x != y:
            return -1 if x > y else 1
    return 0


# ---------------------------------------------------------------------------
# text form

def format_permutation(entries: Sequence[int]) -> str:
    """Render a sequence of integers as "(2, 3, 0, 1)"."""
    return "(" + ", ".join(str(x) for x in entries) + ")"


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse "(2, 3, 0, 1)", "2,3,0,1", or "2 3 0 1" into a tuple.

    Only syntax is checked here; validity (distinctness, completeness) is
    enforced by whichever operation consumes the result.
    """
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    parts = t.replace(",", " ").split()
    if not parts:
        raise ParseError(f"no entries in permutation text {text!r}")
    entries = []
    for tok in parts:
        try:
            v = int(tok, 10)
        except ValueError:
            raise ParseError(f"invalid entry {tok!r} in {text!r}") from None
        if v < 0:
            raise ParseError(f"negative entry {v} in {text!r}")
        entries.append(v)
    return tuple(entries)
