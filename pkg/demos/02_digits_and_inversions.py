"""Factorial-base digits and where to see them inside a permutation.

The digit expansion n = sum a_i * i! (with 0 <= a_i <= i) is the integer
side of the codec.  The permutation side stores the same digits as
inversions: digit a_j counts how many earlier entries exceed entry j.  This
script takes n = 16 apart both ways and checks the equality on a larger
random example.
"""

import random

from factoradic import (
    digits_from_integer,
    digits_from_permutation,
    encode,
    integer_from_digits,
    inversion_set,
)

n = 16
digits = digits_from_integer(n)
print(f"n = {n}")
print(f"factorial-base digits (a_0, a_1, ...): {digits}")
terms = " + ".join(f"{a}*{i}!" for i, a in enumerate(digits) if a)
print(f"check: {terms} = {integer_from_digits(digits)}\n")

p = encode(n)
print(f"permutation writing: {p}")
inv = inversion_set(p)
print(f"inversion pairs (i, j) with p_i > p_j: {inv.render()}")
print(f"count of pairs per larger index j:    {inv.counts_by_larger()}")
print("...which is the digit sequence again.\n")

print("The indicator is queryable pair by pair:")
for i, j in [(0, 1), (0, 2), (1, 3)]:
    print(f"  inv({i},{j}) = {inv.inv(i, j)}")

print("\nOnly relative order matters; (20, 31, 5, 7) has the same pattern:")
print(f"  {inversion_set((20, 31, 5, 7)).render()}")

rng = random.Random(0)
big = list(range(2000))
rng.shuffle(big)
assert inversion_set(big).counts_by_larger() == digits_from_permutation(big)
total = inversion_set(big).count()
print(f"\nOn a random shuffle of 2000 entries the identity still holds "
      f"({total:,} inversions).")
