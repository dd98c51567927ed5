"""Sumsets of integer sets and when they are as small as possible.

The sumset A + B collects every a + b.  Its size is at least
|A| + |B| - 1 and at most |A| * |B|; the lower bound is reached exactly
when both sets are arithmetic progressions with one shared difference.
"""

from iasi import IntSet, ap_set, check_freiman_converse, detect_ap, sumset

a = IntSet((1, 3, 5))
b = IntSet((2, 4, 6))
print(f"A = {a}, B = {b}")
print(f"A + B = {sumset(a, b)}  (size {len(sumset(a, b))})")

# both are progressions with difference 2, so the sumset is minimal:
print(f"|A| + |B| - 1 = {len(a) + len(b) - 1}")
print(f"difference of A: {detect_ap(a)[1]}, of B: {detect_ap(b)[1]}")
print()

# change one difference and the sumset grows
c = ap_set(first=2, diff=3, length=3)
print(f"C = {c} has difference 3")
print(f"A + C = {sumset(a, c)}  (size {len(sumset(a, c))})")
print()

# the converse: a minimal sumset forces shared-difference progressions.
# check_freiman_converse returns True when that implication holds
# (vacuously when the sumset is not minimal).
print("converse check on (A, B):", check_freiman_converse(a, b))
print("converse check on (A, C):", check_freiman_converse(a, c))

# a non-progression can never take part in a minimal sumset
d = IntSet((0, 1, 5))
print(f"D = {d}: progression? {detect_ap(d) is not None}; "
      f"|A + D| = {len(sumset(a, d))} > {len(a) + len(d) - 1}")
