"""Verifiers for every labeling class the library knows.

Each verifier re-derives its verdict from the raw labels; nothing is
trusted from construction time.  ``classify`` runs the whole battery
and returns one report whose flags respect the containment chain:
identical biarithmetic implies biarithmetic implies arithmetic, and
isoarithmetic implies arithmetic, with isoarithmetic and biarithmetic
mutually exclusive (a shared-difference edge has ratio 1, a
biarithmetic edge never does).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph
from .labeling import Labeling, NotArithmeticError, deterministic_ratio, edge_label
from .sets import detect_ap


@dataclass(frozen=True)
class Violation:
    element: str  # "v3" or "e1-2", or a pair like "e0-1,e1-2"
    rule: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    is_iasi: bool
    vertex_arithmetic: bool
    edge_arithmetic: bool
    arithmetic: bool
    isoarithmetic: bool
    biarithmetic: bool
    identical_biarithmetic: Optional[int]
    strong: bool
    edge_uniform: Optional[int]
    vertex_uniform: Optional[int]
    violations: tuple[Violation, ...] = ()
    warnings: tuple[str, ...] = ()


def _require_cover(g: Graph, lab: Labeling) -> None:
    for v in g.vertices:
        lab.label(v)  # raises MissingLabelError on a gap


def verify_iasi(g: Graph, lab: Labeling) -> tuple[bool, list[Violation]]:
    """Injectivity of the vertex labels and of the induced edge labels."""
    _require_cover(g, lab)
    violations: list[Violation] = []
    by_label: dict[tuple[int, ...], int] = {}
    for v in g.vertices:
        key = lab.label(v).elems
        if key in by_label:
            violations.append(
                Violation(
                    element=f"v{by_label[key]},v{v}",
                    rule="vertex-label-collision",
                    detail=f"vertices {by_label[key]} and {v} share label {lab.label(v)}",
                )
            )
        else:
            by_label[key] = v
    by_edge: dict[tuple[int, ...], tuple[int, int]] = {}
    for u, v in g.edge_list():
        key = edge_label(lab, u, v).elems
        if key in by_edge:
            pu, pv = by_edge[key]
            violations.append(
                Violation(
                    element=f"e{pu}-{pv},e{u}-{v}",
                    rule="edge-label-collision",
                    detail=f"edges {pu}-{pv} and {u}-{v} share label {edge_label(lab, u, v)}",
                )
            )
        else:
            by_edge[key] = (u, v)
    return (not violations, violations)


def _check_arith_labels(g: Graph, lab: Labeling) -> None:
    for v in g.vertices:
        s = lab.label(v)
        if len(s) < 3:
            raise NotArithmeticError(
                f"label of vertex {v} has {len(s)} elements; arithmetic labels need 3"
            )
        if detect_ap(s) is None:
            raise NotArithmeticError(f"label of vertex {v} is not an arithmetic progression")


def verify_arithmetic(g: Graph, lab: Labeling) -> tuple[bool, list[Violation]]:
    """Every edge ratio is an integer k with 1 <= k <= size of the
    smaller-index endpoint.

    Requires every vertex label to be a progression with at least 3
    elements; anything else raises NotArithmeticError.  A tie in the
    endpoint indices gives ratio 1, which always passes.
    """
    _require_cover(g, lab)
    _check_arith_labels(g, lab)
    violations: list[Violation] = []
    for u, v in g.edge_list():
        res = deterministic_ratio(lab, u, v)
        if res.ratio.denominator != 1:
            violations.append(
                Violation(
                    element=f"e{u}-{v}",
                    rule="ratio-not-integral",
                    detail=f"edge {u}-{v} has index ratio {res.ratio}",
                )
            )
            continue
        k = res.ratio.numerator
        bound = min(len(lab.label(w)) for w in res.smaller)
        if k > bound:
            violations.append(
                Violation(
                    element=f"e{u}-{v}",
                    rule="ratio-exceeds-size",
                    detail=f"edge {u}-{v} has ratio {k} above smaller-index label size {bound}",
                )
            )
    return (not violations, violations)


def verify_isoarithmetic(g: Graph, lab: Labeling) -> bool:
    """Arithmetic with every edge ratio equal to 1."""
    ok, _ = verify_arithmetic(g, lab)
    if not ok:
        return False
    return all(deterministic_ratio(lab, u, v).ratio == 1 for u, v in g.edges)


def verify_biarithmetic(g: Graph, lab: Labeling) -> bool:
    """Arithmetic with every edge ratio a proper integer, never 1."""
    ok, _ = verify_arithmetic(g, lab)
    if not ok:
        return False
    return all(deterministic_ratio(lab, u, v).ratio > 1 for u, v in g.edges)


def verify_identical_biarithmetic(g: Graph, lab: Labeling) -> Optional[int]:
    """The shared edge ratio k when one exists on every edge, else None."""
    if not verify_biarithmetic(g, lab):
        return None
    ratios = {deterministic_ratio(lab, u, v).ratio for u, v in g.edges}
    if len(ratios) != 1:
        return None
    [r] = ratios
    return r.numerator


def verify_strong(g: Graph, lab: Labeling) -> bool:
    """Every edge label is as large as it could be: |f(u)| * |f(v)|."""
    _require_cover(g, lab)
    return all(
        len(edge_label(lab, u, v)) == len(lab.label(u)) * len(lab.label(v))
        for u, v in g.edges
    )


def verify_uniform(g: Graph, lab: Labeling) -> tuple[Optional[int], Optional[int]]:
    """(edge_k, vertex_l): shared cardinalities where they exist.

    Either slot is None when the cardinalities disagree or there is
    nothing to measure on that side.
    """
    _require_cover(g, lab)
    edge_sizes = {len(edge_label(lab, u, v)) for u, v in g.edges}
    vertex_sizes = {len(lab.label(v)) for v in g.vertices}
    edge_k = edge_sizes.pop() if len(edge_sizes) == 1 else None
    vertex_l = vertex_sizes.pop() if len(vertex_sizes) == 1 else None
    return (edge_k, vertex_l)


def classify(g: Graph, lab: Labeling) -> VerificationReport:
    """Run every verifier and assemble one report.

    Flags implied by a failed prerequisite come back False rather than
    raising, so the report is total for any covering labeling.
    """
    is_iasi, violations = verify_iasi(g, lab)

    vertex_arithmetic = all(
        len(lab.label(v)) >= 3 and detect_ap(lab.label(v)) is not None for v in g.vertices
    )
    edge_arithmetic = all(detect_ap(edge_label(lab, u, v)) is not None for u, v in g.edges)

    arithmetic = False
    isoarithmetic = False
    biarithmetic = False
    identical: Optional[int] = None
    if is_iasi and vertex_arithmetic:
        arith_ok, arith_violations = verify_arithmetic(g, lab)
        violations = violations + arith_violations
        arithmetic = arith_ok
        if arith_ok:
            ratios = [deterministic_ratio(lab, u, v).ratio for u, v in g.edge_list()]
            isoarithmetic = all(r == 1 for r in ratios)
            # an edgeless graph counts as isoarithmetic only, keeping the
            # two classes mutually exclusive
            biarithmetic = bool(ratios) and all(r > 1 for r in ratios)
            if biarithmetic and len(set(ratios)) == 1:
                identical = ratios[0].numerator

    strong = verify_strong(g, lab) if is_iasi else False
    edge_uniform, vertex_uniform = verify_uniform(g, lab)

    warnings = tuple(
        f"vertex {v} is isolated" for v in g.isolated_vertices()
    )
    return VerificationReport(
        is_iasi=is_iasi,
        vertex_arithmetic=vertex_arithmetic,
        edge_arithmetic=edge_arithmetic,
        arithmetic=arithmetic,
        isoarithmetic=isoarithmetic,
        biarithmetic=biarithmetic,
        identical_biarithmetic=identical,
        strong=strong,
        edge_uniform=edge_uniform,
        vertex_uniform=vertex_uniform,
        violations=tuple(sorted(violations, key=lambda x: (x.element, x.rule))),
        warnings=warnings,
    )
