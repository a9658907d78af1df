"""Writing integers as permutations.

Permutations that move only finitely many points can be listed in a linear
order: compare two sequences at the highest position where they differ, and
put the one with the larger entry there first.  Numbering that list 0, 1, 2,
... turns every non-negative integer into a permutation and back.  This
script walks the first 24 entries of the list and shows that the writing is
positional: trailing fixed points are padding, exactly like leading zeros.
"""

from factoradic import (
    compare_factoradic,
    decode,
    encode,
    format_permutation,
    minimal_form,
    minimal_prefix_length,
)

print("The first 24 integers, written as permutations of {0, 1, 2, 3}:\n")
for n in range(24):
    marker = "  <- moves only the first two points" if n == 1 else ""
    print(f"  {n:2d}  ->  {format_permutation(encode(n, 4))}{marker}")

print("\nEach row decodes back to its index, e.g.")
print(f"  decode((2, 3, 0, 1)) = {decode((2, 3, 0, 1))}")
print(f"  decode((3, 2, 1, 0)) = {decode((3, 2, 1, 0))}")

print("\nWithout a width the shortest writing is produced:")
for n in (0, 1, 5, 16, 1_000_000):
    p = encode(n)
    print(f"  {n:>9,d}  ->  {format_permutation(p)}   ({len(p)} entries)")

print("\nTrailing fixed points never change the value:")
print(f"  decode((1, 0))       = {decode((1, 0))}")
print(f"  decode((1, 0, 2, 3)) = {decode((1, 0, 2, 3))}")
print(f"  minimal_form((1, 0, 2, 3)) = {minimal_form((1, 0, 2, 3))}")

print("\nThe order on permutations mirrors the order on integers:")
p, q = encode(2, 4), encode(3, 4)
words = {-1: "precedes", 0: "equals", 1: "follows"}
print(
    f"  {format_permutation(p)} {words[compare_factoradic(p, q)]} "
    f"{format_permutation(q)}   (2 < 3)"
)

print("\nLengths grow slowly: a googol needs only "
      f"{minimal_prefix_length(10**100)} entries.")
