"""Compatibility classes of a label pair and closed-form predictions.

Fix an edge uv.  Ordered pairs (a, b) in f(u) x f(v) fall into one
class per distinct sum a + b, so the class count equals the edge label
cardinality and no class can exceed min(|f(u)|, |f(v)|) members.  A
class hitting that cap is saturated; the largest classes present are
the maximal ones.

Closed-form counts for structured label pairs are exposed as
predictions and checked against the enumeration by ``audit``.  The
audit trusts the enumeration: a failed prediction is reported as a
mismatch, never raised, so a sweep always classifies its whole grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .sets import IntSet, Ints, ap_set, as_intset

THEOREMS = (
    "T-NCC",
    "T-NSC-II",
    "T-NMCC-II-q0",
    "T-NMCC-II-qpos",
    "EDGE-SIN-ISO",
    "EDGE-SIN-BI",
)


@dataclass(frozen=True)
class ClassProfile:
    """Full enumeration of the compatibility classes of one label pair."""

    classes: Mapping[int, tuple[tuple[int, int], ...]]  # sum -> ordered pairs
    pair_count: int
    class_count: int
    saturated_size: int  # the cap min(|A|, |B|)
    saturated_count: int
    max_size: int
    max_count: int
    size_histogram: Mapping[int, int]  # class size -> how many classes


def compat_partition(a: IntSet | Ints, b: IntSet | Ints) -> ClassProfile:
    """Group the ordered pairs of a x b by their sum."""
    sa, sb = as_intset(a), as_intset(b)
    classes: dict[int, list[tuple[int, int]]] = {}
    for x in sa:
        for y in sb:
            classes.setdefault(x + y, []).append((x, y))
    fixed = {s: tuple(sorted(classes[s])) for s in sorted(classes)}
    sizes = [len(v) for v in fixed.values()]
    histogram: dict[int, int] = {}
    for s in sizes:
        histogram[s] = histogram.get(s, 0) + 1
    cap = min(len(sa), len(sb))
    top = max(sizes)
    return ClassProfile(
        classes=fixed,
        pair_count=len(sa) * len(sb),
        class_count=len(fixed),
        saturated_size=cap,
        saturated_count=histogram.get(cap, 0),
        max_size=top,
        max_count=histogram[top],
        size_histogram=dict(sorted(histogram.items())),
    )


@dataclass(frozen=True)
class Prediction:
    """A closed-form claim about the profile of a structured label pair."""

    theorem: str
    params: Mapping[str, int]
    expected: Mapping[str, object]


@dataclass(frozen=True)
class AuditRecord:
    prediction: Prediction
    observed: Optional[Mapping[str, object]]
    verdict: str  # "match" | "mismatch" | "skipped"
    detail: tuple[str, ...]


def predict_iso(m: int, n: int) -> Prediction:
    """Class counts when both labels share one common difference.

    Arguments normalize to m >= n.  The claim: saturated classes number
    m - n + 1, every size below the cap occurs in exactly two classes.
    """
    if m < n:
        m, n = n, m
    if n < 3:
        raise ValueError("label sizes must be at least 3")
    histogram = {p: 2 for p in range(1, n)}
    histogram[n] = m - n + 1
    return Prediction(
        theorem="T-NCC",
        params={"m": m, "n": n},
        expected={
            "saturated_size": n,
            "saturated_count": m - n + 1,
            "histogram": dict(sorted(histogram.items())),
        },
    )


def predict_bi_saturated(m: int, n: int, k: int) -> Prediction:
    """Saturated class counts when the differences differ by factor k.

    m is the size at the smaller-index endpoint, n at the other, and
    the claim needs m >= (n-1)k: writing m = (n-1)k + r, exactly r
    classes saturate at n members and every smaller size occurs in
    exactly 2k classes.  r = 0 is allowed and predicts no saturated
    class.
    """
    if n < 3 or m < 3:
        raise ValueError("label sizes must be at least 3")
    if k < 2:
        raise ValueError("ratio must be at least 2")
    if k > m:
        raise ValueError("ratio cannot exceed the smaller-index label size")
    r = m - (n - 1) * k
    if r < 0:
        raise ValueError("saturated regime needs m >= (n-1)k")
    histogram = {p: 2 * k for p in range(1, n)}
    if r > 0:
        histogram[n] = r
    return Prediction(
        theorem="T-NSC-II",
        params={"m": m, "n": n, "k": k, "r": r},
        expected={
            "saturated_size": n,
            "saturated_count": r,
            "histogram": dict(sorted(histogram.items())),
        },
    )


def predict_bi_maximal(m: int, n: int, k: int) -> Prediction:
    """Maximal class counts in the short regime m = pk + q, p <= n - 1.

    q = 0 claims (n - p + 1)k maximal classes of p members; q > 0
    claims (n - p - 1)k + q maximal classes of p + 1 members.
    """
    if n < 3 or m < 3:
        raise ValueError("label sizes must be at least 3")
    if k < 2:
        raise ValueError("ratio must be at least 2")
    if k > m:
        raise ValueError("ratio cannot exceed the smaller-index label size")
    p, q = divmod(m, k)
    if p > n - 1:
        raise ValueError("short regime needs m/k at most n-1")
    if q == 0:
        return Prediction(
            theorem="T-NMCC-II-q0",
            params={"m": m, "n": n, "k": k, "p": p, "q": q},
            expected={"max_size": p, "max_count": (n - p + 1) * k},
        )
    return Prediction(
        theorem="T-NMCC-II-qpos",
        params={"m": m, "n": n, "k": k, "p": p, "q": q},
        expected={"max_size": p + 1, "max_count": (n - p - 1) * k + q},
    )


def predict_edge_sin(m: int, n: int, k: int) -> int:
    """Edge label cardinality m + k(n - 1) for ratio k with 1 <= k <= m."""
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    if not 1 <= k <= m:
        raise ValueError("ratio must satisfy 1 <= k <= m")
    return m + k * (n - 1)


def _edge_sin_prediction(m: int, n: int, k: int) -> Prediction:
    count = predict_edge_sin(m, n, k)
    if n < 3 or m < 3:
        raise ValueError("label sizes must be at least 3")
    return Prediction(
        theorem="EDGE-SIN-ISO" if k == 1 else "EDGE-SIN-BI",
        params={"m": m, "n": n, "k": k},
        expected={"class_count": count},
    )


def canonical_pair(m: int, n: int, k: int = 1, diff: int = 1) -> tuple[IntSet, IntSet]:
    """The witness labels every audit uses: differences diff and k*diff."""
    return ap_set(0, diff, m), ap_set(0, k * diff, n)


GridPoint = tuple[int, ...]


def _predict(theorem: str, point: GridPoint) -> Prediction:
    t = theorem.upper()
    if t == "T-NCC":
        (m, n) = point
        return predict_iso(m, n)
    if t == "T-NSC-II":
        (m, n, k) = point
        return predict_bi_saturated(m, n, k)
    if t in ("T-NMCC-II", "T-NMCC-II-Q0", "T-NMCC-II-QPOS"):
        (m, n, k) = point
        pred = predict_bi_maximal(m, n, k)
        if t == "T-NMCC-II-Q0" and pred.theorem != "T-NMCC-II-q0":
            raise ValueError("point falls in the q > 0 slice")
        if t == "T-NMCC-II-QPOS" and pred.theorem != "T-NMCC-II-qpos":
            raise ValueError("point falls in the q = 0 slice")
        return pred
    if t in ("EDGE-SIN", "EDGE-SIN-ISO", "EDGE-SIN-BI"):
        (m, n, k) = point
        pred = _edge_sin_prediction(m, n, k)
        if t == "EDGE-SIN-ISO" and k != 1:
            raise ValueError("iso slice needs k = 1")
        if t == "EDGE-SIN-BI" and k == 1:
            raise ValueError("bi slice needs k >= 2")
        return pred
    raise ValueError(f"unknown theorem id {theorem!r}")


def _observe(profile: ClassProfile, expected: Mapping[str, object]) -> dict[str, object]:
    view: dict[str, object] = {}
    for key in expected:
        if key == "histogram":
            view[key] = dict(profile.size_histogram)
        elif key == "saturated_size":
            view[key] = profile.saturated_size
        elif key == "saturated_count":
            view[key] = profile.saturated_count
        elif key == "max_size":
            view[key] = profile.max_size
        elif key == "max_count":
            view[key] = profile.max_count
        elif key == "class_count":
            view[key] = profile.class_count
        else:
            raise ValueError(f"no observation for field {key!r}")
    return view


def audit_point(theorem: str, point: GridPoint, diff: int = 1) -> AuditRecord:
    """Predict, enumerate, compare one grid point."""
    try:
        pred = _predict(theorem, point)
    except ValueError as exc:
        pseudo = Prediction(
            theorem=theorem.upper(),
            params=_point_params(point),
            expected={},
        )
        return AuditRecord(pseudo, None, "skipped", (str(exc),))
    m = pred.params["m"]
    n = pred.params["n"]
    k = pred.params.get("k", 1)
    a, b = canonical_pair(m, n, k, diff)
    profile = compat_partition(a, b)
    observed = _observe(profile, pred.expected)
    observed["histogram_full"] = dict(profile.size_histogram)
    detail: list[str] = []
    verdict = "match"
    for key, want in pred.expected.items():
        got = observed[key]
        if got == want:
            detail.append(f"{key}: predicted {want!r}, observed {got!r}")
        else:
            verdict = "mismatch"
            detail.append(f"{key}: predicted {want!r}, observed {got!r} <-- differs")
    return AuditRecord(pred, observed, verdict, tuple(detail))


def _point_params(point: GridPoint) -> dict[str, int]:
    names = ("m", "n", "k")
    return {names[i]: point[i] for i in range(len(point))}


def audit(theorem: str, grid: Iterable[GridPoint], diff: int = 1) -> list[AuditRecord]:
    """Sweep a parameter grid; every point gets exactly one record."""
    return [audit_point(theorem, tuple(p), diff) for p in grid]
