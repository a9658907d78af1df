"""Human-readable linear divisibility rules for a modulus k.

A rule lists, for every index pair i < j of the k-prefix, the coefficient
j! mod k; an integer is divisible by k exactly when the weighted sum of its
prefix inversions is.  Coefficients are reported as balanced residues in
(-k/2, k/2] so that, say, k - 1 prints as -1, and pairs whose coefficient
vanishes (j >= S(k), the Kempner cutoff) are dropped altogether.  For k = 6
only three pairs survive:

    inv(0,1) + 2(inv(0,2) + inv(1,2))
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .core import _validate_prefix
from .errors import ModulusTooSmall, PrefixTooShort
from .modular import kempner

_FORMATS = ("plain", "latex", "json")


@dataclass(frozen=True)
class DivisibilityRule:
    """Rule for one modulus: nonzero terms (i, j, coefficient) sorted by (j, i)."""

    modulus: int
    terms: tuple[tuple[int, int, int], ...]
    effective_length: int

    def term_map(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, j, c in self.terms}

    def to_json_obj(self) -> dict:
        return {
            "k": self.modulus,
            "terms": [{"i": i, "j": j, "c": c} for i, j, c in self.terms],
        }

    def __str__(self) -> str:
        return render_rule(self)


def generate_rule(k: int) -> DivisibilityRule:
    """Divisibility rule for modulus k >= 2."""
    try:
        k = operator.index(k)
    except TypeError:
        raise ModulusTooSmall(f"modulus must be an integer >= 2, got {k!r}") from None
    if k < 2:
        raise ModulusTooSmall(f"rules need a modulus >= 2, got {k}")
    limit = min(k, kempner(k))
    terms = []
    w = 1
    for j in range(1, limit):
        w = (w * j) % k
        c = w if 2 * w <= k else w - k
        for i in range(j):
            terms.append((i, j, c))
    return DivisibilityRule(k, tuple(terms), limit)


def evaluate_rule(rule: DivisibilityRule, prefix: Sequence[int]) -> int:
    """Apply a rule to a prefix; returns the residue in [0, k).

    Needs only ``rule.effective_length`` entries, which may be fewer than k.
    """
    need = rule.effective_length
    entries = tuple(prefix)
    if len(entries) < need:
        raise PrefixTooShort(
            f"rule for {rule.modulus} reads {need} entries, got {len(entries)}"
        )
    head = _validate_prefix(entries[:need])
    total = sum(c for i, j, c in rule.terms if head[i] > head[j])
    return total % rule.modulus


def _grouped(rule: DivisibilityRule) -> list[tuple[int, list[tuple[int, int]]]]:
    """Coefficient groups in order of first appearance; pairs (i, j)-sorted."""
    order: list[int] = []
    groups: dict[int, list[tuple[int, int]]] = {}
    for i, j, c in rule.terms:
        if c not in groups:
            groups[c] = []
            order.append(c)
        groups[c].append((i, j))
    return [(c, sorted(groups[c])) for c in order]


def _render_terms(rule: DivisibilityRule, inv_fmt, group_open: str, group_close: str) -> str:
    chunks: list[tuple[int, str]] = []  # (sign, body)
    for c, pairs in _grouped(rule):
        body = " + ".join(inv_fmt(i, j) for i, j in pairs)
        if abs(c) == 1:
            chunks.extend((c, inv_fmt(i, j)) for i, j in pairs)
        else:
            chunks.append((c, f"{abs(c)}{group_open}{body}{group_close}"))
    out = []
    for sign, body in chunks:
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


def render_rule(rule: DivisibilityRule, fmt: str = "plain") -> str:
    """Render a rule as plain text, LaTeX, or a JSON object string.

    Plain text groups pairs sharing a coefficient, matching the style
    "inv(0,1) + 2(inv(0,2) + inv(1,2))"; unit coefficients stay bare.
    """
    if fmt == "plain":
        return _render_terms(rule, lambda i, j: f"inv({i},{j})", "(", ")")
    if fmt == "latex":
        return _render_terms(
            rule, lambda i, j: f"\\inv{{{i}, {j}}}", "\\left(", "\\right)"
        )
    if fmt == "json":
        return json.dumps(rule.to_json_obj())
    raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    for d in range(3, isqrt(k) + 1, 2):
        if k % d == 0:
            return False
    return True


def rule_table(k_max: int, primes_only: bool = False) -> list[DivisibilityRule]:
    """Rules for k = 2..k_max, optionally restricted to prime moduli."""
    if k_max < 2:
        raise ModulusTooSmall(f"table needs k_max >= 2, got {k_max}")
    return [
        generate_rule(k)
        for k in range(2, k_max + 1)
        if not primes_only or _is_prime(k)
    ]
