"""Finite simple undirected graphs with deterministic vertex numbering.

Vertices are the integers ``0 .. vertex_count-1``.  Edges are unordered
pairs stored normalized as ``(min, max)``.  Traversals visit vertices
in ascending order so every derived structure (components, bipartition
sides, generated edge lists) is reproducible bit for bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise ValueError("vertex count must be a non-negative integer")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} out of range for {n} vertices")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range")
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def isolated_vertices(self) -> tuple[int, ...]:
        touched = {v for e in self.edges for v in e}
        return tuple(v for v in self.vertices if v not in touched)


def graph(vertex_count: int, edges: Iterable[Edge] = ()) -> Graph:
    """Build a Graph from any iterable of vertex pairs."""
    return Graph(vertex_count, frozenset(tuple(e) for e in edges))


# --- traversal ---------------------------------------------------------


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, lowest root first."""
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


@dataclass(frozen=True)
class Bipartition:
    side_x: frozenset[int]
    side_y: frozenset[int]

    def side_of(self, v: int) -> str:
        if v in self.side_x:
            return "x"
        if v in self.side_y:
            return "y"
        raise ValueError(f"vertex {v} not in bipartition")


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-color the graph by BFS, or None if some cycle has odd length.

    The lowest-numbered vertex of every component lands on side x.
    """
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_x = frozenset(v for v, c in color.items() if c == 0)
    side_y = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(side_x, side_y)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# --- generators --------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    return graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(leaves: int) -> Graph:
    """Vertex 0 joined to ``leaves`` outer vertices."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


_KINDS = {
    "path": lambda n=None, m=None: path(n),
    "cycle": lambda n=None, m=None: cycle(n),
    "complete": lambda n=None, m=None: complete(n),
    "complete_bipartite": lambda n=None, m=None: complete_bipartite(m, n),
    "star": lambda n=None, m=None: star(n),
}


def generate(kind: str, n: int | None = None, m: int | None = None) -> Graph:
    """Dispatch on a kind name; complete_bipartite takes sides m and n."""
    if kind not in _KINDS:
        raise ValueError(f"unknown graph kind {kind!r} (choose from {sorted(_KINDS)})")
    if n is None:
        raise ValueError(f"kind {kind!r} needs --n")
    if kind == "complete_bipartite" and m is None:
        raise ValueError("complete_bipartite needs --m and --n")
    return _KINDS[kind](n=n, m=m)


# --- combination and restriction ---------------------------------------


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Place b after a, shifting b's vertex ids by a.vertex_count."""
    shift = a.vertex_count
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    return graph(shift + b.vertex_count, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, renumbered 0.. in ascending order.

    The renumbering convention (sorted position) matches
    ``Labeling.restrict`` so a labeling restricted to the same vertex
    set stays aligned with the subgraph.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range")
    renum = {v: i for i, v in enumerate(keep)}
    edges = [(renum[u], renum[v]) for u, v in g.edges if u in renum and v in renum]
    return graph(len(keep), edges)
