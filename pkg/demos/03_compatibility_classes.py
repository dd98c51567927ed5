"""Compatibility classes: grouping label pairs by their sum.

Fix an edge uv.  The ordered pairs in f(u) x f(v) split into one class
per distinct sum, so the class count is the edge label cardinality and
no class can hold more than min(|f(u)|, |f(v)|) pairs.  Classes at that
cap are saturated; the largest ones present are maximal.
"""

from iasi import ap_set, compat_partition, serialize_profile

a = ap_set(first=0, diff=1, length=5)
b = ap_set(first=0, diff=1, length=3)
print(f"shared difference: A = {a}, B = {b}")
print(serialize_profile(compat_partition(a, b)))

# with ratio 2 between the differences the histogram spreads out
a = ap_set(first=0, diff=1, length=7)
b = ap_set(first=0, diff=2, length=3)
print(f"ratio 2: A = {a}, B = {b}")
print(serialize_profile(compat_partition(a, b)))

# any pair of integer sets has a profile, progressions or not
print("irregular pair: A = {0,1,5}, B = {0,2,3}")
print(serialize_profile(compat_partition((0, 1, 5), (0, 2, 3))))
