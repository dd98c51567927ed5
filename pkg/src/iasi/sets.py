"""Exact arithmetic on finite sets of non-negative integers.

Graph vertices are labeled with these sets and edges with pairwise
sumsets, so everything downstream leans on two operations: the sumset
itself and detection of arithmetic-progression structure.  Cardinality
is what the counting results are about, and for equal-difference
progressions it collapses to ``|A| + |B| - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

Ints = Iterable[int]


@dataclass(frozen=True)
class IntSet:
    """A non-empty finite set of non-negative integers, kept sorted.

    Any iterable of ints is accepted; duplicates are dropped and the
    elements stored in increasing order, so equal sets always compare
    and print identically.
    """

    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(self.elems)))
        if not elems:
            raise ValueError("set must be non-empty")
        for x in elems:
            if not isinstance(x, int):
                raise ValueError(f"elements must be integers, got {x!r}")
        if elems[0] < 0:
            raise ValueError(f"elements must be non-negative, got {elems[0]}")
        object.__setattr__(self, "elems", elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __contains__(self, x: object) -> bool:
        return x in self.elems

    def __getitem__(self, i: int) -> int:
        return self.elems[i]

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elems) + "}"

    def __add__(self, other: "IntSet | Ints | int") -> "IntSet":
        if isinstance(other, int):
            return self.translate(other)
        return sumset(self, other)

    __radd__ = __add__

    @property
    def min(self) -> int:
        return self.elems[0]

    @property
    def max(self) -> int:
        return self.elems[-1]

    def translate(self, offset: int) -> "IntSet":
        return IntSet(tuple(x + offset for x in self.elems))


def as_intset(values: IntSet | Ints) -> IntSet:
    if isinstance(values, IntSet):
        return values
    return IntSet(tuple(values))


@dataclass(frozen=True)
class APSet:
    """An arithmetic progression given by first term, difference, length."""

    first: int
    diff: int
    length: int

    def __post_init__(self) -> None:
        if self.first < 0:
            raise ValueError("first term must be non-negative")
        if self.diff < 1:
            raise ValueError("difference must be positive")
        if self.length < 1:
            raise ValueError("length must be positive")

    def to_intset(self) -> IntSet:
        return IntSet(tuple(self.first + i * self.diff for i in range(self.length)))


def ap_set(first: int, diff: int, length: int) -> IntSet:
    """The progression ``{first, first+diff, ..., first+(length-1)*diff}``."""
    return APSet(first, diff, length).to_intset()


def sumset(a: IntSet | Ints, b: IntSet | Ints) -> IntSet:
    """All pairwise sums ``x + y`` with ``x`` in ``a`` and ``y`` in ``b``."""
    sa, sb = as_intset(a), as_intset(b)
    return IntSet(tuple(x + y for x in sa.elems for y in sb.elems))


def detect_ap(s: IntSet | Ints) -> Optional[tuple[int, int]]:
    """Return ``(first, diff)`` if ``s`` is an arithmetic progression.

    A singleton reports diff 0.  Two-element sets always qualify.  Sets
    with irregular gaps return None.
    """
    sa = as_intset(s)
    e = sa.elems
    if len(e) == 1:
        return (e[0], 0)
    d = e[1] - e[0]
    for i in range(2, len(e)):
        if e[i] - e[i - 1] != d:
            return None
    return (e[0], d)


def ap_sumset_size(m: int, n: int) -> int:
    """Sumset cardinality for two progressions of sizes m, n sharing a diff."""
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    return m + n - 1


def check_freiman_converse(a: IntSet | Ints, b: IntSet | Ints) -> bool:
    """Check minimal sumset growth forces matching progressions.

    For ``|A|, |B| >= 2``: whenever ``|A+B| = |A| + |B| - 1``, both sets
    must be arithmetic progressions with the same difference.  Returns
    True when that holds for this pair (vacuously when the premise
    fails); sets smaller than 2 are rejected.
    """
    sa, sb = as_intset(a), as_intset(b)
    if len(sa) < 2 or len(sb) < 2:
        raise ValueError("both sets need at least two elements")
    if len(sumset(sa, sb)) != len(sa) + len(sb) - 1:
        return True
    pa, pb = detect_ap(sa), detect_ap(sb)
    return pa is not None and pb is not None and pa[1] == pb[1]
