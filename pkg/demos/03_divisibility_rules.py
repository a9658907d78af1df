"""Divisibility by k from the first k entries alone.

Since every j! with j >= k is a multiple of k, only the digits a_j with
j < k matter for n mod k, and those digits live in the k-prefix of the
permutation writing.  So a permutation with a thousand entries reveals
n mod 7 after reading seven of them.  The rules printed below make the
computation human-sized: add the listed coefficient for every inverted
pair you can see, reduce mod k.
"""

import random

from factoradic import (
    divisible,
    encode,
    evaluate_rule,
    generate_rule,
    kempner,
    residue,
    residue_from_prefix,
    rule_table,
)

print("Rules for k = 2..12 (coefficients balanced into (-k/2, k/2]):\n")
for rule in rule_table(12):
    print(f"  {rule.modulus:2d}:  {rule}")

print("\nSome moduli finish early: k | j! makes every later coefficient 0.")
for k in (6, 8, 12):
    print(f"  k = {k:2d} reads only {kempner(k)} entries (k | {kempner(k)}!)")

n = 5_040_000_000_016
p = encode(n)
print(f"\nTake n = {n:,d}, whose writing has {len(p)} entries.")
print(f"  3-prefix {p[:3]} -> n mod 3 = {residue_from_prefix(p, 3)}")
print(f"  4-prefix {p[:4]} -> n mod 4 = {residue_from_prefix(p, 4)}")
print(f"  direct checks: {n % 3}, {n % 4}")

rule6 = generate_rule(6)
print(f"\nApplying the k = 6 rule '{rule6}' to the first three entries "
      f"{p[:3]}: {evaluate_rule(rule6, p[:3])}  (n mod 6 = {n % 6})")

rng = random.Random(6)
sample = rng.randrange(10**60)
hits = [k for k in range(2, 31) if divisible(sample, k)]
print(f"\nA random 60-digit integer:\n  {sample}")
print(f"divisors found among 2..30 via prefixes: {hits or 'none'}")
assert all(residue(sample, k) == sample % k for k in range(2, 31))
print("every prefix residue agrees with the direct computation.")
