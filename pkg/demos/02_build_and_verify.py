"""Construct labelings of each arithmetic class and verify them.

A set-indexer assigns a distinct integer set to each vertex so that
edge sums f(u) + f(v) are distinct too.  When every label is an
arithmetic progression and every edge ratio (larger difference over
smaller) is an integer within the smaller label's size, the indexer is
arithmetic; ratio 1 everywhere makes it isoarithmetic, ratios above 1
biarithmetic.
"""

from iasi import (
    classify,
    complete_bipartite,
    construct_biarithmetic,
    construct_identical_biarithmetic,
    construct_isoarithmetic,
    construct_strong_biarithmetic,
    cycle,
    serialize_labeling,
    serialize_report,
)

g = cycle(6)
print("== isoarithmetic labeling of the 6-cycle ==")
lab = construct_isoarithmetic(g, diff=2, sizes=3, seed=7)
print(serialize_labeling(lab))
print(serialize_report(classify(g, lab)))

print("== one edge ratio everywhere (needs a bipartite graph) ==")
lab = construct_identical_biarithmetic(g, ratio=3, sizes=(3, 4), diff=1)
print(serialize_labeling(lab))
print(serialize_report(classify(g, lab)))

print("== strong: every edge label has the full product size ==")
h = complete_bipartite(2, 3)
lab = construct_strong_biarithmetic(h, sizes=(3, 4))
print(serialize_labeling(lab))
print(serialize_report(classify(h, lab)))

print("== biarithmetic on an odd cycle (mixed ratios, never identical) ==")
odd = cycle(5)
lab = construct_biarithmetic(odd, ratio=2)
print(serialize_labeling(lab))
print(serialize_report(classify(odd, lab)))
