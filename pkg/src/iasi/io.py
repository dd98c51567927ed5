"""Text formats: edge lists, labelings, reports, audits, DOT export.

Serializers emit one canonical form (vertices ascending, edges sorted,
elements ascending) and the parsers accept exactly that shape, so
parse(serialize(x)) == x and any drift is a loud error with a line
number rather than a silent renumbering.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .compat import AuditRecord, ClassProfile
from .graphs import Graph, graph
from .labeling import Labeling
from .sets import IntSet
from .verify import VerificationReport


class ParseError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# --- graphs --------------------------------------------------------------


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("expected header 'n m'", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected header 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", 1) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", 1)
    edges = []
    count = 0
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError("expected edge 'u v'", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", i) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", i)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {u} {v} out of range for {n} vertices", i)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {u} {v}", i)
        edges.append(e)
        count += 1
    if count != m:
        raise ParseError(f"header promised {m} edges, found {count}", len(lines))
    return graph(n, edges)


# --- labelings -----------------------------------------------------------


def serialize_labeling(lab: Labeling) -> str:
    lines = [
        f"{v}: " + " ".join(str(x) for x in lab.label(v))
        for v in lab.vertices()
    ]
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    assignment: dict[int, IntSet] = {}
    last_vertex = -1
    for i, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if ":" not in raw:
            raise ParseError("expected 'v: e1 e2 ...'", i)
        head, _, tail = raw.partition(":")
        try:
            v = int(head.strip())
        except ValueError:
            raise ParseError(f"vertex id {head.strip()!r} is not an integer", i) from None
        if v in assignment:
            raise ParseError(f"vertex {v} labeled twice", i)
        if v <= last_vertex:
            raise ParseError(f"vertex {v} out of ascending order", i)
        last_vertex = v
        parts = tail.split()
        if not parts:
            raise ParseError(f"vertex {v} has an empty label", i)
        try:
            elems = [int(p) for p in parts]
        except ValueError:
            raise ParseError("label elements must be integers", i) from None
        for a, b in zip(elems, elems[1:]):
            if b <= a:
                raise ParseError(
                    f"label elements must be strictly increasing, saw {a} then {b}", i
                )
        if elems[0] < 0:
            raise ParseError("label elements must be non-negative", i)
        assignment[v] = IntSet(tuple(elems))
    return Labeling(assignment)


# --- value formatting -----------------------------------------------------


def format_intset(s: IntSet) -> str:
    return str(s)


def format_histogram(h: Mapping[int, int]) -> str:
    """Render ``{1:4, 2:5, 3:2}`` with keys ascending."""
    inner = ", ".join(f"{k}:{h[k]}" for k in sorted(h))
    return "{" + inner + "}"


def _compact_histogram(h: Mapping[int, int]) -> str:
    return ",".join(f"{k}:{h[k]}" for k in sorted(h))


def _fmt(value: object, compact: bool = False) -> str:
    if isinstance(value, Mapping):
        return _compact_histogram(value) if compact else format_histogram(value)
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# --- verification reports --------------------------------------------------


def serialize_report(rep: VerificationReport, fmt: str = "text") -> str:
    if fmt == "structured":
        lines = [
            f"is_iasi={_fmt(rep.is_iasi)}",
            f"vertex_arithmetic={_fmt(rep.vertex_arithmetic)}",
            f"edge_arithmetic={_fmt(rep.edge_arithmetic)}",
            f"arithmetic={_fmt(rep.arithmetic)}",
            f"isoarithmetic={_fmt(rep.isoarithmetic)}",
            f"biarithmetic={_fmt(rep.biarithmetic)}",
            f"identical_biarithmetic={_fmt(rep.identical_biarithmetic)}",
            f"strong={_fmt(rep.strong)}",
            f"edge_uniform={_fmt(rep.edge_uniform)}",
            f"vertex_uniform={_fmt(rep.vertex_uniform)}",
        ]
        lines += [f"violation={v.element}|{v.rule}|{v.detail}" for v in rep.violations]
        lines += [f"warning={w}" for w in rep.warnings]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    yn = lambda b: "yes" if b else "no"
    lines = [
        f"set-indexer (injective):    {yn(rep.is_iasi)}",
        f"arithmetic:                 {yn(rep.arithmetic)}"
        f" (vertex labels {yn(rep.vertex_arithmetic)}, edge labels {yn(rep.edge_arithmetic)})",
        f"isoarithmetic:              {yn(rep.isoarithmetic)}",
        f"biarithmetic:               {yn(rep.biarithmetic)}",
        f"identical edge ratio:       {rep.identical_biarithmetic if rep.identical_biarithmetic is not None else '-'}",
        f"strong:                     {yn(rep.strong)}",
        f"uniform edge cardinality:   {rep.edge_uniform if rep.edge_uniform is not None else '-'}",
        f"uniform vertex cardinality: {rep.vertex_uniform if rep.vertex_uniform is not None else '-'}",
    ]
    if rep.violations:
        lines.append("violations:")
        lines += [f"  {v.element}: {v.detail} [{v.rule}]" for v in rep.violations]
    else:
        lines.append("violations: none")
    lines += [f"warning: {w}" for w in rep.warnings]
    return "\n".join(lines) + "\n"


# --- class profiles ---------------------------------------------------------


def serialize_profile(p: ClassProfile, fmt: str = "text") -> str:
    if fmt == "structured":
        lines = [
            f"pairs={p.pair_count}",
            f"classes={p.class_count}",
            f"saturated_size={p.saturated_size}",
            f"saturated_count={p.saturated_count}",
            f"max_size={p.max_size}",
            f"max_count={p.max_count}",
            f"histogram={_compact_histogram(p.size_histogram)}",
        ]
        for s, pairs in p.classes.items():
            body = ";".join(f"{a},{b}" for a, b in pairs)
            lines.append(f"class.{s}={body}")
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown profile format {fmt!r}")
    lines = [
        f"pairs={p.pair_count} classes={p.class_count} "
        f"saturated_size={p.saturated_size} saturated_count={p.saturated_count} "
        f"max_size={p.max_size} max_count={p.max_count}",
        f"histogram={format_histogram(p.size_histogram)}",
    ]
    for s, pairs in p.classes.items():
        body = " ".join(f"({a},{b})" for a, b in pairs)
        lines.append(f"sum {s}: {body}")
    return "\n".join(lines) + "\n"


# --- audits ------------------------------------------------------------------


def _params_str(params: Mapping[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def serialize_audit(records: Iterable[AuditRecord], fmt: str = "text") -> str:
    records = list(records)
    if fmt == "structured":
        lines = []
        for rec in records:
            parts = [f"theorem={rec.prediction.theorem}", _params_str(rec.prediction.params),
                     f"verdict={rec.verdict}"]
            for key, want in rec.prediction.expected.items():
                parts.append(f"predicted.{key}={_fmt(want, compact=True)}")
                if rec.observed is not None:
                    parts.append(f"observed.{key}={_fmt(rec.observed[key], compact=True)}")
            if rec.observed is not None and "histogram_full" in rec.observed:
                parts.append(
                    f"observed.histogram={_fmt(rec.observed['histogram_full'], compact=True)}"
                )
            if rec.verdict == "skipped":
                parts.append(f'reason="{rec.detail[0]}"')
            lines.append(" ".join(x for x in parts if x))
        lines.append(_summary_line(records))
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown audit format {fmt!r}")
    lines = []
    for rec in records:
        head = f"{rec.prediction.theorem} {_params_str(rec.prediction.params)}"
        if rec.verdict == "skipped":
            lines.append(f"{head}: skipped ({rec.detail[0]})")
            continue
        fields = ", ".join(
            f"{key}={_fmt(rec.prediction.expected[key])}" for key in rec.prediction.expected
        )
        if rec.verdict == "match":
            lines.append(f"{head}: match ({fields})")
        else:
            observed = ", ".join(
                f"{key}={_fmt(rec.observed[key])}" for key in rec.prediction.expected
            )
            hist = ""
            if rec.observed is not None and "histogram_full" in rec.observed:
                hist = f"; observed histogram={format_histogram(rec.observed['histogram_full'])}"
            lines.append(
                f"{head}: MISMATCH predicted ({fields}); observed ({observed}){hist}"
            )
    lines.append(_summary_line(records))
    return "\n".join(lines) + "\n"


def _summary_line(records: list[AuditRecord]) -> str:
    total = len(records)
    match = sum(1 for r in records if r.verdict == "match")
    mismatch = sum(1 for r in records if r.verdict == "mismatch")
    skipped = sum(1 for r in records if r.verdict == "skipped")
    if match == total:
        return f"all {total} grid points match"
    return f"{total} grid points: {match} match, {mismatch} mismatch, {skipped} skipped"


# --- DOT export ---------------------------------------------------------------


def export_dot(g: Graph, lab: Optional[Labeling] = None) -> str:
    """Graphviz text; labeled exports annotate every edge with |f+|."""
    from .labeling import edge_label

    lines = ["graph G {"]
    for v in g.vertices:
        if lab is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{lab.label(v)}"];')
    for u, v in g.edge_list():
        if lab is None:
            lines.append(f"  {u} -- {v};")
        else:
            s = edge_label(lab, u, v)
            lines.append(f'  {u} -- {v} [label="{s} |f+|={len(s)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
