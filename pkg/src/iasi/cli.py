"""Command-line front end.

Verbs: gen, label, verify, classes, audit, search.  Exit status is 0
on success, 1 when a verification or search comes back negative, 2 on
usage or input errors, 3 when a requested construction is infeasible.
Ranges are written lo..hi (inclusive) and lists as comma-separated
values; --seed falls back to the IASI_SEED environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

# direct name imports: the package re-exports a construct() function,
# which shadows the construct submodule as a package attribute
from .compat import audit, compat_partition
from .construct import (
    ConstructSpec,
    ConstructionError,
    SearchBound,
    construct,
    search_identical_biarithmetic,
)
from .graphs import _KINDS, Graph, bipartition, generate
from .io import (
    ParseError,
    export_dot,
    parse_graph,
    parse_labeling,
    serialize_audit,
    serialize_graph,
    serialize_labeling,
    serialize_profile,
    serialize_report,
)
from .labeling import Labeling, MissingLabelError
from .sets import IntSet
from .verify import classify


def _parse_values(text: str) -> list[int]:
    """'3..12' (inclusive), '2,3', or '5' -> list of ints."""
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",") if p]


def _resolve_seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("IASI_SEED")
    return int(env) if env else 0


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _load_labeling(path: str) -> Labeling:
    return parse_labeling(Path(path).read_text())


# --- verb handlers ---------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.kind, n=args.n, m=args.m)
    if args.format == "dot":
        _emit(export_dot(g), args.out)
    else:
        _emit(serialize_graph(g), args.out)
    return 0


def _sizes_argument(g: Graph, text: Optional[str]):
    if text is None:
        return None
    values = [int(p) for p in text.split(",") if p]
    if len(values) == 1:
        return values[0]
    if len(values) == g.vertex_count:
        return values
    if len(values) == 2:
        return (values[0], values[1])  # per-side (x, y)
    raise ValueError(
        f"--sizes wants one value, two side values, or {g.vertex_count} per-vertex values"
    )


def _cmd_label(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    sizes = _sizes_argument(g, args.sizes)
    if args.m is not None and args.n is not None:
        sizes = (args.m, args.n)
    spec = ConstructSpec(
        kind=args.kind,
        diff=args.d,
        sizes=sizes,
        ratio=args.k,
        edge_size=args.r,
        seed=_resolve_seed(args.seed),
    )
    lab = construct(g, spec)
    if args.format == "dot":
        _emit(export_dot(g, lab), args.out)
    else:
        _emit(serialize_labeling(lab), args.out)
    return 0


_EXPECTATIONS = (
    "iasi",
    "arithmetic",
    "isoarithmetic",
    "biarithmetic",
    "identical-biarithmetic",
    "strong",
)


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    lab = _load_labeling(args.labeling)
    rep = classify(g, lab)
    _emit(serialize_report(rep, fmt=args.format), args.out)
    met = {
        "iasi": rep.is_iasi,
        "arithmetic": rep.arithmetic,
        "isoarithmetic": rep.isoarithmetic,
        "biarithmetic": rep.biarithmetic,
        "identical-biarithmetic": rep.identical_biarithmetic is not None,
        "strong": rep.strong and rep.is_iasi,
    }[args.expect]
    return 0 if met else 1


def _cmd_classes(args: argparse.Namespace) -> int:
    if args.set_a is not None or args.set_b is not None:
        if args.set_a is None or args.set_b is None:
            raise ValueError("--set-a and --set-b go together")
        a = IntSet(tuple(_parse_values(args.set_a)))
        b = IntSet(tuple(_parse_values(args.set_b)))
    elif args.labeling is not None and args.edge is not None:
        lab = _load_labeling(args.labeling)
        u, v = (int(p) for p in args.edge.split(","))
        a, b = lab.label(u), lab.label(v)
    else:
        raise ValueError("give either --set-a/--set-b or --labeling/--edge")
    profile = compat_partition(a, b)
    _emit(serialize_profile(profile, fmt=args.format), args.out)
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    theorem = args.theorem
    ms = _parse_values(args.m)
    ns = _parse_values(args.n)
    if theorem == "t-ncc":
        grid = [(m, n) for m in ms for n in ns]
    else:
        if args.k is None:
            raise ValueError(f"theorem {theorem} needs --k")
        ks = _parse_values(args.k)
        grid = [(m, n, k) for m in ms for n in ns for k in ks]
    records = audit(theorem, grid, diff=args.d)
    _emit(serialize_audit(records, fmt=args.format), args.out)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    bound = SearchBound(
        max_element=args.max_elem,
        sizes=tuple(_parse_values(args.sizes)),
        ratios=tuple(_parse_values(args.k)),
    )
    witness = search_identical_biarithmetic(g, bound)
    if witness is None:
        reason = (
            "graph not bipartite"
            if bipartition(g) is None
            else "search window exhausted"
        )
        _emit(f"no identical biarithmetic IASI found ({reason})\n", args.out)
        return 1
    _emit(serialize_labeling(witness), args.out)
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Construct, verify, and count arithmetic integer-additive set-indexers.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="generate a named graph as an edge list")
    p.add_argument("--kind", required=True, choices=sorted(_KINDS))
    p.add_argument("--n", type=int, help="order (or y side for complete_bipartite)")
    p.add_argument("--m", type=int, help="x side for complete_bipartite")
    p.add_argument("--format", default="edgelist", choices=["edgelist", "dot"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("label", help="construct a labeling of a given class")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", required=True, choices=[
        "isoarithmetic", "uniform_isoarithmetic", "bipartite_uniform_isoarithmetic",
        "biarithmetic", "identical_biarithmetic", "strong_biarithmetic",
        "componentwise_uniform",
    ])
    p.add_argument("--d", type=int, default=1, help="base common difference")
    p.add_argument("--k", type=int, help="edge ratio for biarithmetic kinds")
    p.add_argument("--sizes", help="label sizes: one value, 'x,y' sides, or per-vertex CSV")
    p.add_argument("--m", type=int, help="x-side label size")
    p.add_argument("--n", type=int, help="y-side label size")
    p.add_argument("--r", type=int, help="edge cardinality for componentwise_uniform")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", default="labeling", choices=["labeling", "dot"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("verify", help="classify a labeling against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--expect", default="iasi", choices=_EXPECTATIONS,
                   help="class whose failure sets exit status 1")
    p.add_argument("--format", default="text", choices=["text", "structured"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classes", help="compatibility classes of two labels")
    p.add_argument("--set-a", help="comma-separated elements")
    p.add_argument("--set-b", help="comma-separated elements")
    p.add_argument("--labeling", help="labeling file to pull an edge from")
    p.add_argument("--edge", help="edge as 'u,v' of --labeling")
    p.add_argument("--format", default="text", choices=["text", "structured"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("audit", help="sweep a closed-form count against enumeration")
    p.add_argument("--theorem", required=True, choices=[
        "t-ncc", "t-nsc-ii", "t-nmcc-ii", "t-nmcc-ii-q0", "t-nmcc-ii-qpos",
        "edge-sin", "edge-sin-iso", "edge-sin-bi",
    ])
    p.add_argument("--m", required=True, help="range lo..hi or CSV")
    p.add_argument("--n", required=True, help="range lo..hi or CSV")
    p.add_argument("--k", help="range lo..hi or CSV (ratio theorems)")
    p.add_argument("--d", type=int, default=1, help="difference for the witness labels")
    p.add_argument("--format", default="text", choices=["text", "structured"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("search", help="exhaustive identical-biarithmetic search")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-elem", type=int, default=30)
    p.add_argument("--sizes", default="3,4", help="label sizes to try, CSV or lo..hi")
    p.add_argument("--k", default="2,3", help="edge ratios to try, CSV or lo..hi")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, MissingLabelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
