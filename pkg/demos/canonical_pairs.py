"""Permutation pairs and simultaneous conjugacy.

A pair of permutations (r, r_down) encodes how unit rectangles glue into a
translation surface: r walks right, r_down walks down.  Relabeling the
rectangles conjugates both permutations at once, so the surface only sees
the conjugacy class.  This demo shows the canonical form in action and
counts classes for small sizes.
"""

import random

from veechsieve import canonical_pair, cycle_decomposition, enumerate_pairs
from veechsieve.perms import PermutationPair, conjugate, is_transitive


def main():
    pair = PermutationPair((1, 2, 0, 4, 3), (3, 1, 2, 0, 4))
    print("pair:     r =", pair.r, " r_down =", pair.r_down)
    print("cycles:   ", cycle_decomposition(pair.r), cycle_decomposition(pair.r_down))
    print("canonical:", canonical_pair(pair))
    print()

    rng = random.Random(0)
    print("five random relabelings, all landing on the same canonical form:")
    for _ in range(5):
        sigma = rng.sample(range(5), 5)
        q = conjugate(pair, sigma)
        print(f"  sigma={sigma} -> {q.r}|{q.r_down} -> canonical {canonical_pair(q).r}")
    print()

    for n in range(1, 6):
        pairs = [p for p in enumerate_pairs(n) if p.size == n]
        assert all(is_transitive(p) for p in pairs)
        print(f"transitive pairs on {n} rectangles, up to conjugacy: {len(pairs)}")


if __name__ == "__main__":
    main()
