"""Serialization round-trips and frozen renderings.

Parsers accept exactly what the serializers emit; every rejection case
asserts the reported line number.
"""

from __future__ import annotations

import random

import pytest

from iasi import (
    ParseError,
    ap_set,
    audit_point,
    classify,
    compat_partition,
    complete_bipartite,
    construct_isoarithmetic,
    cycle,
    export_dot,
    format_histogram,
    graph,
    make_labeling,
    parse_graph,
    parse_labeling,
    path,
    serialize_audit,
    serialize_graph,
    serialize_labeling,
    serialize_profile,
    serialize_report,
)
from conftest import random_arith_labeling, random_graph


# --- graphs -------------------------------------------------------------


def test_graph_round_trip_frozen():
    g = cycle(4)
    text = serialize_graph(g)
    assert text == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert parse_graph(text) == g


def test_graph_round_trip_random():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, max_n=12, p=0.4)
        assert parse_graph(serialize_graph(g)) == g


def test_graph_parse_accepts_blank_lines():
    assert parse_graph("2 1\n\n0 1\n\n") == path(2)


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("", 1),
        ("3\n", 1),
        ("a b\n", 1),
        ("-1 0\n", 1),
        ("3 1\n0\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 2\n0 1\n", 2),
    ],
)
def test_graph_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line_no == line_no
    assert f"line {line_no}:" in str(exc.value)


# --- labelings -----------------------------------------------------------


def test_labeling_round_trip_frozen():
    lab = make_labeling({0: (0, 1, 3), 2: (2, 4)})
    text = serialize_labeling(lab)
    assert text == "0: 0 1 3\n2: 2 4\n"
    assert parse_labeling(text) == lab


def test_labeling_round_trip_random():
    rng = random.Random(13)
    for _ in range(100):
        g = random_graph(rng, max_n=10)
        lab = random_arith_labeling(rng, g, mixed=True)
        assert parse_labeling(serialize_labeling(lab)) == lab


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("0 1 2\n", 1),
        ("x: 1 2\n", 1),
        ("0: 1 2\n0: 3 4\n", 2),
        ("1: 1 2\n0: 3 4\n", 2),
        ("0:\n", 1),
        ("0: 2 1\n", 1),
        ("0: 1 1\n", 1),
        ("0: 1 a\n", 1),
        ("0: -1 2\n", 1),
        ("0: 0 1\n\n2: zz\n", 3),
    ],
)
def test_labeling_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(ParseError) as exc:
        parse_labeling(text)
    assert exc.value.line_no == line_no


# --- value rendering ---------------------------------------------------------


def test_format_histogram_exact():
    assert format_histogram({2: 5, 1: 4, 3: 2}) == "{1:4, 2:5, 3:2}"
    assert format_histogram({}) == "{}"


# --- reports -------------------------------------------------------------------


def fixture_report():
    g = path(2)
    lab = make_labeling({0: ap_set(0, 2, 3), 1: ap_set(1, 2, 4)})
    return classify(g, lab)


def test_report_text_rendering():
    text = serialize_report(fixture_report())
    assert "set-indexer (injective):    yes" in text
    assert "isoarithmetic:              yes" in text
    assert "biarithmetic:               no" in text
    assert "identical edge ratio:       -" in text
    assert "violations: none" in text


def test_report_structured_rendering():
    text = serialize_report(fixture_report(), fmt="structured")
    lines = dict(l.split("=", 1) for l in text.splitlines())
    assert lines["is_iasi"] == "true"
    assert lines["isoarithmetic"] == "true"
    assert lines["identical_biarithmetic"] == "none"
    assert lines["edge_uniform"] == "6"  # one edge is trivially uniform
    assert lines["vertex_uniform"] == "none"


def test_report_lists_violations():
    g = path(3)
    lab = make_labeling({0: (0, 1, 3), 1: (0, 1, 2, 3), 2: (0, 2, 3)})
    rep = classify(g, lab)
    text = serialize_report(rep, fmt="structured")
    assert any(l.startswith("violation=e0-1,e1-2|edge-label-collision|") for l in text.splitlines())
    with pytest.raises(ValueError):
        serialize_report(rep, fmt="json")


# --- profiles ---------------------------------------------------------------------


def test_profile_text_rendering():
    prof = compat_partition((0, 1), (0, 2))
    text = serialize_profile(prof)
    assert text == (
        "pairs=4 classes=4 saturated_size=2 saturated_count=0 max_size=1 max_count=4\n"
        "histogram={1:4}\n"
        "sum 0: (0,0)\n"
        "sum 1: (1,0)\n"
        "sum 2: (0,2)\n"
        "sum 3: (1,2)\n"
    )


def test_profile_structured_rendering():
    prof = compat_partition((0, 1), (0, 1))
    text = serialize_profile(prof, fmt="structured")
    lines = text.splitlines()
    assert "histogram=1:2,2:1" in lines
    assert "class.1=0,1;1,0" in lines


# --- audits --------------------------------------------------------------------------


def test_audit_text_match_line():
    text = serialize_audit([audit_point("T-NCC", (5, 3))])
    assert text.splitlines()[0] == (
        "T-NCC m=5 n=3: match (saturated_size=3, saturated_count=3, "
        "histogram={1:2, 2:2, 3:3})"
    )
    assert text.splitlines()[-1] == "all 1 grid points match"


def test_audit_text_mismatch_line_shows_observed_histogram():
    text = serialize_audit([audit_point("T-NMCC-II", (5, 4, 2))])
    first = text.splitlines()[0]
    assert first.startswith("T-NMCC-II-qpos m=5 n=4 k=2 p=2 q=1: MISMATCH")
    assert "predicted (max_size=3, max_count=3)" in first
    assert "observed (max_size=3, max_count=2)" in first
    assert "observed histogram={1:4, 2:5, 3:2}" in first
    assert text.splitlines()[-1] == "1 grid points: 0 match, 1 mismatch, 0 skipped"


def test_audit_text_skipped_line():
    text = serialize_audit([audit_point("T-NSC-II", (4, 3, 3))])
    assert text.splitlines()[0].startswith("T-NSC-II m=4 n=3 k=3: skipped (")


def test_audit_structured_rendering():
    text = serialize_audit(
        [audit_point("T-NCC", (5, 3)), audit_point("T-NMCC-II", (5, 4, 2))],
        fmt="structured",
    )
    lines = text.splitlines()
    assert lines[0].startswith("theorem=T-NCC m=5 n=3 verdict=match")
    assert "predicted.histogram=1:2,2:2,3:3" in lines[0]
    assert "verdict=mismatch" in lines[1]
    assert "observed.max_count=2" in lines[1]
    assert "observed.histogram=1:4,2:5,3:2" in lines[1]
    assert lines[-1] == "2 grid points: 1 match, 1 mismatch, 0 skipped"


# --- DOT export -------------------------------------------------------------------------


def test_export_dot_bare():
    text = export_dot(path(2))
    assert text == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"


def test_export_dot_with_labels():
    g = complete_bipartite(1, 2)
    lab = construct_isoarithmetic(g, diff=1, sizes=3, seed=0)
    text = export_dot(g, lab)
    assert '0 [label="{0,1,2}"]' in text
    assert "|f+|=5" in text
    assert text.count(" -- ") == g.edge_count


def test_export_dot_isolated_vertices():
    text = export_dot(graph(2, []))
    assert "--" not in text and "  1;" in text
