"""Fenwick (binary indexed) tree over positions 0..n-1.

Used for two O(log n) primitives the codec needs: counting how many of the
previously inserted values are <= a given value, and selecting the k-th
smallest value still present in a pool.
"""

from __future__ import annotations


class FenwickTree:
    def __init__(self, n: int, ones: bool = False):
        self.n = n
        if ones:
            # closed form for an all-ones array: node i covers i & -i leaves
            self.tree = [0] + [i & -i for i in range(1, n + 1)]
        else:
            self.tree = [0] * (n + 1)
        self._top_bit = 1 << n.bit_length()

    def add(self, i: int, delta: int = 1) -> None:
        """Add delta at position i (0-indexed)."""
        i += 1
        tree = self.tree
        n = self.n
        while i <= n:
            tree[i] += delta
            i += i & -i

    def count_le(self, i: int) -> int:
        """Sum of positions 0..i."""
        total = 0
        tree = self.tree
        i += 1
        while i > 0:
            total += tree[i]
            i -= i & -i
        return total

    def select(self, k: int) -> int:
        """Position of the k-th present unit, 0-indexed.

        Assumes every stored value is 0 or 1 and 0 <= k < total count.
        """
        pos = 0
        tree = self.tree
        n = self.n
        bit = self._top_bit
        while bit:
            nxt = pos + bit
            if nxt <= n and tree[nxt] <= k:
                k -= tree[nxt]
                pos = nxt
            bit >>= 1
        return pos
