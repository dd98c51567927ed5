"""Builders that realize each labeling class on a given graph.

First terms come from a deterministic seed-driven pool whose spacing
doubles at every step.  Pairwise sums of pool values are then all
distinct, so vertex labels and induced edge labels are injective by
construction; a repair pass still certifies every output and, on any
collision (possible only with a caller-supplied pool), bumps the
later-numbered vertex to the next pool value, up to a retry cap.

All constructors are pure functions of (graph, parameters, seed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .graphs import Bipartition, Graph, bipartition, components
from .labeling import Labeling, edge_label
from .sets import IntSet, ap_set
from .verify import verify_iasi

RETRY_CAP = 1000


class ConstructionError(Exception):
    """Base for everything a constructor can refuse to do."""


class NotBipartiteError(ConstructionError):
    """The requested class needs a bipartition the graph does not have."""


class RatioBoundError(ConstructionError):
    """The requested ratio exceeds what the label sizes allow."""


class InfeasibleError(ConstructionError):
    """No labeling with the requested parameters exists on this graph."""


class ConstructionFailedError(ConstructionError):
    """Collision repair hit the retry cap; carries the last violations."""


class SizeLimitError(ConstructionError):
    """The graph is too large for the exhaustive search."""


def default_first_terms(seed: int) -> Callable[[int], int]:
    """Pool of first terms with geometrically increasing spacing.

    Value i is ``(seed mod 1000) + 2**i - 1``; the gap between
    consecutive values doubles, so any two distinct pool indices give a
    distinct pairwise sum and label collisions cannot arise.
    """
    base = seed % 1000

    def pool(i: int) -> int:
        return base + (1 << i) - 1

    return pool


def _resolve_sizes(g: Graph, sizes: int | Sequence[int] | dict[int, int]) -> dict[int, int]:
    if isinstance(sizes, int):
        out = {v: sizes for v in g.vertices}
    elif isinstance(sizes, dict):
        out = dict(sizes)
    else:
        seq = list(sizes)
        if len(seq) != g.vertex_count:
            raise ValueError(
                f"got {len(seq)} sizes for {g.vertex_count} vertices"
            )
        out = {v: seq[v] for v in g.vertices}
    for v in g.vertices:
        if v not in out:
            raise ValueError(f"no size given for vertex {v}")
        if out[v] < 3:
            raise ValueError(f"label sizes must be at least 3, vertex {v} got {out[v]}")
    return out


def _find_collision(g: Graph, lab: Labeling) -> Optional[tuple[int, ...]]:
    """Vertex ids involved in the first label collision, or None."""
    seen_v: dict[tuple[int, ...], int] = {}
    for v in g.vertices:
        key = lab.label(v).elems
        if key in seen_v:
            return (seen_v[key], v)
        seen_v[key] = v
    seen_e: dict[tuple[int, ...], tuple[int, int]] = {}
    for u, v in g.edge_list():
        key = edge_label(lab, u, v).elems
        if key in seen_e:
            return seen_e[key] + (u, v)
        seen_e[key] = (u, v)
    return None


def _assign(
    g: Graph,
    diffs: dict[int, int],
    sizes: dict[int, int],
    seed: int,
    first_terms: Callable[[int], int] | None,
) -> Labeling:
    """Assign pool first terms in vertex order, then repair collisions.

    Each vertex starts at its own pool index; a collision bumps the
    later-numbered vertex involved to the first unused index.  With the
    default pool no collision can occur and the loop exits first pass.
    """
    pool = first_terms if first_terms is not None else default_first_terms(seed)
    index = {v: v for v in g.vertices}
    next_free = g.vertex_count
    for _ in range(RETRY_CAP + 1):
        lab = Labeling(
            {v: ap_set(pool(index[v]), diffs[v], sizes[v]) for v in g.vertices}
        )
        clash = _find_collision(g, lab)
        if clash is None:
            ok, violations = verify_iasi(g, lab)
            if not ok:  # pragma: no cover - _find_collision covers the same ground
                raise ConstructionFailedError(f"certification failed: {violations}")
            return lab
        index[max(clash)] = next_free
        next_free += 1
    raise ConstructionFailedError(
        f"could not make labels injective within {RETRY_CAP} retries; last collision {clash}"
    )


# --- shared-difference families ----------------------------------------


def construct_isoarithmetic(
    g: Graph,
    diff: int = 1,
    sizes: int | Sequence[int] | dict[int, int] = 3,
    seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """Every vertex gets the same difference; sizes may vary per vertex."""
    if diff < 1:
        raise ValueError("difference must be positive")
    size_map = _resolve_sizes(g, sizes)
    return _assign(g, {v: diff for v in g.vertices}, size_map, seed, first_terms)


def construct_uniform_isoarithmetic(
    g: Graph, length: int, diff: int = 1, seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """Shared difference and one label size everywhere."""
    return construct_isoarithmetic(g, diff=diff, sizes=length, seed=seed,
                                   first_terms=first_terms)


def construct_bipartite_uniform_isoarithmetic(
    g: Graph, m: int, n: int, diff: int = 1, seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """Size m on side x, size n on side y, one shared difference.

    Every edge then has cardinality m + n - 1.
    """
    bip = bipartition(g)
    if bip is None:
        raise NotBipartiteError("graph has an odd cycle")
    sizes = {v: (m if v in bip.side_x else n) for v in g.vertices}
    return construct_isoarithmetic(g, diff=diff, sizes=sizes, seed=seed,
                                   first_terms=first_terms)


# --- proper-ratio families ---------------------------------------------


def _split_sizes(
    g: Graph, bip: Bipartition, sizes: int | tuple[int, int] | Sequence[int] | dict[int, int]
) -> dict[int, int]:
    if isinstance(sizes, tuple) and len(sizes) == 2 and all(isinstance(s, int) for s in sizes):
        x_size, y_size = sizes
        return {v: (x_size if v in bip.side_x else y_size) for v in g.vertices}
    return _resolve_sizes(g, sizes)


def construct_identical_biarithmetic(
    g: Graph,
    ratio: int,
    diff: int = 1,
    sizes: int | tuple[int, int] | Sequence[int] | dict[int, int] = 3,
    seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """Difference diff on side x, ratio*diff on side y: one ratio everywhere.

    Needs a bipartite graph, ratio >= 2, and every x-side size >= ratio
    (the x side holds the smaller index on each edge).
    """
    if ratio < 2:
        raise ValueError("ratio must be at least 2")
    if diff < 1:
        raise ValueError("difference must be positive")
    bip = bipartition(g)
    if bip is None:
        raise NotBipartiteError("a single edge ratio forces a two-coloring; graph has an odd cycle")
    size_map = _split_sizes(g, bip, sizes)
    for v in g.vertices:
        if size_map[v] < 3:
            raise ValueError(f"label sizes must be at least 3, vertex {v} got {size_map[v]}")
    low = min((size_map[v] for v in bip.side_x), default=None)
    if low is not None and ratio > low:
        raise RatioBoundError(
            f"ratio {ratio} exceeds the smallest x-side label size {low}"
        )
    diffs = {v: (diff if v in bip.side_x else ratio * diff) for v in g.vertices}
    return _assign(g, diffs, size_map, seed, first_terms)


def construct_strong_biarithmetic(
    g: Graph,
    diff: int = 1,
    sizes: int | tuple[int, int] | Sequence[int] | dict[int, int] = 3,
    seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """Identical biarithmetic at the boundary ratio = x-side size.

    Side x must be uniformly sized; the y-side difference is that size
    times diff, so every edge label has the full product cardinality.
    """
    bip = bipartition(g)
    if bip is None:
        raise NotBipartiteError("graph has an odd cycle")
    size_map = _split_sizes(g, bip, sizes)
    x_sizes = {size_map[v] for v in bip.side_x}
    if len(x_sizes) > 1:
        raise ValueError(f"x-side sizes must all be equal, got {sorted(x_sizes)}")
    ratio = x_sizes.pop() if x_sizes else 3
    return construct_identical_biarithmetic(
        g, ratio=ratio, diff=diff, sizes=size_map, seed=seed, first_terms=first_terms
    )


def _greedy_levels(g: Graph) -> dict[int, int]:
    """Proper coloring by ascending vertex id; adjacent levels differ."""
    level: dict[int, int] = {}
    for v in g.vertices:
        used = {level[w] for w in g.neighbors(v) if w in level}
        c = 0
        while c in used:
            c += 1
        level[v] = c
    return level


def construct_biarithmetic(
    g: Graph,
    ratio: int = 2,
    diff: int = 1,
    sizes: int | Sequence[int] | dict[int, int] | None = None,
    seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """A proper integer ratio on every edge; works on any graph.

    Vertices take differences diff * ratio**level along a greedy proper
    coloring, so adjacent vertices always differ by a positive power of
    ratio.  When sizes is None each vertex gets the smallest size that
    keeps every incident edge ratio within bounds; explicit sizes that
    are too small raise RatioBoundError.
    """
    if ratio < 2:
        raise ValueError("ratio must be at least 2")
    if diff < 1:
        raise ValueError("difference must be positive")
    level = _greedy_levels(g)
    required = {v: 3 for v in g.vertices}
    for u, v in g.edges:
        lo, hi = (u, v) if level[u] < level[v] else (v, u)
        need = ratio ** (level[hi] - level[lo])
        required[lo] = max(required[lo], need)
    if sizes is None:
        size_map = required
    else:
        size_map = _resolve_sizes(g, sizes)
        for v in g.vertices:
            if size_map[v] < required[v]:
                raise RatioBoundError(
                    f"vertex {v} needs a label of at least {required[v]} elements "
                    f"to stay above the edge ratios, got {size_map[v]}"
                )
    diffs = {v: diff * ratio ** level[v] for v in g.vertices}
    return _assign(g, diffs, size_map, seed, first_terms)


# --- componentwise uniform edge size ------------------------------------


def construct_componentwise_uniform(
    g: Graph,
    edge_size: int,
    diff: int = 1,
    seed: int = 0,
    first_terms: Callable[[int], int] | None = None,
) -> Labeling:
    """One shared difference, every edge label of the given cardinality.

    Bipartite components split the size budget as evenly as the
    constraint m + n - 1 = edge_size allows; other components need
    edge_size odd so one size l = (edge_size + 1) / 2 can serve
    everywhere.  Sizes below 3 make the request infeasible.
    """
    r = edge_size
    if r < 5:
        raise InfeasibleError(f"edge size {r} needs label sizes below 3")
    sizes: dict[int, int] = {}
    for comp in components(g):
        sub_bip = bipartition(_component_subgraph(g, comp))
        if sub_bip is None:
            if r % 2 == 0:
                raise InfeasibleError(
                    f"component {comp} has an odd cycle, so edge size {r} must be odd"
                )
            l = (r + 1) // 2
            for v in comp:
                sizes[v] = l
        else:
            m = (r + 1) // 2  # ceil(r/2); the split as balanced as m+n-1=r allows
            n = r + 1 - m
            for i, v in enumerate(comp):
                sizes[v] = m if sub_bip.side_of(i) == "x" else n
    if diff < 1:
        raise ValueError("difference must be positive")
    return _assign(g, {v: diff for v in g.vertices}, sizes, seed, first_terms)


def _component_subgraph(g: Graph, comp: tuple[int, ...]) -> Graph:
    from .graphs import induced_subgraph

    return induced_subgraph(g, comp)


# --- one-call dispatcher -------------------------------------------------


@dataclass(frozen=True)
class ConstructSpec:
    """Parameters for the construct dispatcher, mirrored by the CLI."""

    kind: str
    diff: int = 1
    sizes: int | tuple[int, int] | Sequence[int] | dict[int, int] | None = None
    ratio: Optional[int] = None
    edge_size: Optional[int] = None
    seed: int = 0


def construct(g: Graph, spec: ConstructSpec) -> Labeling:
    kind = spec.kind
    if kind == "isoarithmetic":
        return construct_isoarithmetic(
            g, diff=spec.diff, sizes=spec.sizes if spec.sizes is not None else 3, seed=spec.seed
        )
    if kind == "uniform_isoarithmetic":
        if not isinstance(spec.sizes, int):
            raise ValueError("uniform_isoarithmetic takes one integer size")
        return construct_uniform_isoarithmetic(g, spec.sizes, diff=spec.diff, seed=spec.seed)
    if kind == "bipartite_uniform_isoarithmetic":
        if not (isinstance(spec.sizes, tuple) and len(spec.sizes) == 2):
            raise ValueError("bipartite_uniform_isoarithmetic takes sizes (m, n)")
        m, n = spec.sizes
        return construct_bipartite_uniform_isoarithmetic(
            g, m, n, diff=spec.diff, seed=spec.seed
        )
    if kind == "biarithmetic":
        return construct_biarithmetic(
            g, ratio=spec.ratio if spec.ratio is not None else 2,
            diff=spec.diff, sizes=spec.sizes, seed=spec.seed,
        )
    if kind == "identical_biarithmetic":
        if spec.ratio is None:
            raise ValueError("identical_biarithmetic needs a ratio")
        return construct_identical_biarithmetic(
            g, spec.ratio, diff=spec.diff,
            sizes=spec.sizes if spec.sizes is not None else 3, seed=spec.seed,
        )
    if kind == "strong_biarithmetic":
        return construct_strong_biarithmetic(
            g, diff=spec.diff,
            sizes=spec.sizes if spec.sizes is not None else 3, seed=spec.seed,
        )
    if kind == "componentwise_uniform":
        if spec.edge_size is None:
            raise ValueError("componentwise_uniform needs an edge size")
        return construct_componentwise_uniform(
            g, spec.edge_size, diff=spec.diff, seed=spec.seed
        )
    raise ValueError(f"unknown construction kind {spec.kind!r}")


# --- exhaustive search ----------------------------------------------------


@dataclass(frozen=True)
class SearchBound:
    """Finite window the exhaustive search sweeps."""

    max_element: int = 30
    sizes: tuple[int, ...] = (3, 4)
    ratios: tuple[int, ...] = (2, 3)
    max_vertices: int = 8


def search_identical_biarithmetic(g: Graph, bound: SearchBound = SearchBound()) -> Optional[Labeling]:
    """Exhaustively look for a single-ratio labeling inside the bound.

    Ratios are tried in ascending order.  For each ratio the search
    first enumerates the vertex differences (each edge must scale by
    exactly that ratio, which prunes odd cycles immediately) and then
    fills in sizes and first terms in ascending order, checking label
    injectivity as it goes.  Returns the first witness found, so equal
    inputs always give the same labeling, or None when the whole window
    is exhausted.
    """
    if g.vertex_count > bound.max_vertices:
        raise SizeLimitError(
            f"exhaustive search is limited to {bound.max_vertices} vertices, got {g.vertex_count}"
        )
    min_size = min(bound.sizes)
    max_diff = bound.max_element // (min_size - 1) if min_size > 1 else bound.max_element

    order: list[int] = [v for comp in components(g) for v in _bfs_order(g, comp)]

    for ratio in sorted(bound.ratios):
        if ratio < 2:
            raise ValueError("ratios must be at least 2")
        for diffs in _diff_assignments(g, order, ratio, max_diff):
            witness = _fill_labels(g, order, diffs, ratio, bound)
            if witness is not None:
                return witness
    return None


def _bfs_order(g: Graph, comp: tuple[int, ...]) -> list[int]:
    from collections import deque

    root = comp[0]
    seen = {root}
    out = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                out.append(w)
                queue.append(w)
    return out


def _diff_assignments(
    g: Graph, order: list[int], ratio: int, max_diff: int
) -> Iterable[dict[int, int]]:
    """All difference maps where every edge scales by exactly ratio."""

    def extend(i: int, diffs: dict[int, int]) -> Iterable[dict[int, int]]:
        if i == len(order):
            yield dict(diffs)
            return
        v = order[i]
        assigned = [w for w in g.neighbors(v) if w in diffs]
        if not assigned:
            candidates = range(1, max_diff + 1)
        else:
            opts: set[int] = set()
            first = diffs[assigned[0]]
            opts.add(first * ratio)
            if first % ratio == 0:
                opts.add(first // ratio)
            for w in assigned[1:]:
                keep = {d for d in opts if d == diffs[w] * ratio or d * ratio == diffs[w]}
                opts = keep
            candidates = sorted(d for d in opts if 1 <= d <= max_diff)
        for d in candidates:
            diffs[v] = d
            yield from extend(i + 1, diffs)
            del diffs[v]

    yield from extend(0, {})


def _fill_labels(
    g: Graph, order: list[int], diffs: dict[int, int], ratio: int, bound: SearchBound
) -> Optional[Labeling]:
    """Depth-first completion with sizes and first terms ascending."""
    labels: dict[int, IntSet] = {}
    label_keys: set[tuple[int, ...]] = set()
    edge_keys: set[tuple[int, ...]] = set()

    def candidates(v: int) -> Iterable[IntSet]:
        d = diffs[v]
        for size in sorted(bound.sizes):
            top = bound.max_element - (size - 1) * d
            for first in range(0, top + 1):
                yield ap_set(first, d, size)

    def bound_ok(cand: IntSet, v: int) -> bool:
        # the smaller-difference endpoint of each edge carries the size bound
        for w in g.neighbors(v):
            if w not in labels:
                continue
            lo_size = len(cand) if diffs[v] < diffs[w] else len(labels[w])
            if ratio > lo_size:
                return False
        return True

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for cand in candidates(v):
            key = cand.elems
            if key in label_keys or not bound_ok(cand, v):
                continue
            new_edges: list[tuple[int, ...]] = []
            ok = True
            for w in g.neighbors(v):
                if w not in labels:
                    continue
                ekey = (cand + labels[w]).elems
                if ekey in edge_keys or ekey in new_edges:
                    ok = False
                    break
                new_edges.append(ekey)
            if not ok:
                continue
            labels[v] = cand
            label_keys.add(key)
            edge_keys.update(new_edges)
            if place(i + 1):
                return True
            labels.pop(v)
            label_keys.discard(key)
            edge_keys.difference_update(new_edges)
        return False

    if place(0):
        return Labeling(dict(labels))
    return None
