"""Theorem suites, the five-case h/g classifier, and corpus runs.

Each suite recomputes its theorem's claim from scratch on one graph:
``verify_separation`` checks g- < g+ and h- < h+ both by exhaustive
orientation enumeration and along the constructive route (tournament pair
for complete graphs, the D1/D2 pair otherwise, including the two interval
containment claims for hull-sets of D2), and ``verify_convexity`` checks
con+ = n-1 and the end-vertex criterion for con- = n-1.  Failures carry the
offending orientation and vertex set, so they can be replayed.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import geodesic
from .graphs import (
    DEFAULT_EDGE_BUDGET,
    Digraph,
    Graph,
    GraphFormatError,
    encode_graph6,
    end_vertices,
    is_complete,
    is_connected,
    min_degree,
    parse_graph6,
)
from .invariants import (
    OrientableNumbers,
    convexity_number,
    geodetic_number,
    hull_number,
    orientable_numbers,
)
from .orienters import (
    complete_graph_orientations,
    d1_from_d2,
    d2_construction,
    extreme_free_orientation,
)

SUITES = ("separation", "convexity", "classify")

HG_CASES = {
    "HG1": "h- = g- < h+ = g+",
    "HG3": "h- = g- < h+ < g+",
    "HG4": "h- < g- < h+ = g+",
    "HG5": "h- < g- = h+ < g+",
    "HG6": "h- < h+ < g- < g+",
}


@dataclass(frozen=True)
class Failure:
    check: str
    message: str
    orientation: tuple[tuple[int, int], ...] | None = None
    vertex_set: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"check": self.check, "message": self.message}
        if self.orientation is not None:
            out["orientation"] = [list(a) for a in self.orientation]
        if self.vertex_set is not None:
            out["vertex_set"] = list(self.vertex_set)
        return out


@dataclass
class SeparationReport:
    graph_id: str
    n: int
    m: int
    numbers: OrientableNumbers
    route: str  # "complete" or "induced-path"
    constructed: dict[str, int]
    hull_sets_checked: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "ok": self.ok,
            "numbers": self.numbers.values(),
            "route": self.route,
            "constructed": self.constructed,
            "hull_sets_checked": self.hull_sets_checked,
            "failures": [f.to_json_dict() for f in self.failures],
        }


@dataclass
class ConvexityReport:
    graph_id: str
    n: int
    m: int
    con_min: int
    con_max: int
    has_end_vertex: bool
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "ok": self.ok,
            "con_min": self.con_min,
            "con_max": self.con_max,
            "has_end_vertex": self.has_end_vertex,
            "failures": [f.to_json_dict() for f in self.failures],
        }


@dataclass(frozen=True)
class HgClassification:
    """The six orientable numbers and which published ordering they realize.

    The five published orderings miss h- < g- < h+ < g+, which none of the
    known theorems excludes; a graph realizing it gets the tag UNCLASSIFIED
    rather than a wrong case.
    """

    graph_id: str
    n: int
    m: int
    g_min: int
    g_max: int
    h_min: int
    h_max: int
    con_min: int
    con_max: int
    case: str

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "case": self.case,
            "g_min": self.g_min,
            "g_max": self.g_max,
            "h_min": self.h_min,
            "h_max": self.h_max,
            "con_min": self.con_min,
            "con_max": self.con_max,
        }


def classify_values(g_min: int, g_max: int, h_min: int, h_max: int) -> str:
    if h_min == g_min:
        return "HG1" if h_max == g_max else "HG3"
    if h_max == g_max:
        return "HG4"
    if g_min == h_max:
        return "HG5"
    if h_max < g_min:
        return "HG6"
    return "UNCLASSIFIED"


def _require_suite_input(g: Graph) -> None:
    if g.n < 3:
        raise ValueError("theorem suites need at least three vertices")
    if not is_connected(g):
        raise ValueError("theorem suites need a connected graph")


def _hull_sets(d2: Digraph, minimum_only: bool):
    """Hull-sets of d2 to run the claims on: all of them, or the minimum ones."""
    n = d2.n
    full = frozenset(range(n))
    found = []
    for r in range(1, n + 1):
        for s in itertools.combinations(range(n), r):
            if geodesic.convex_hull(d2, s) == full:
                found.append(s)
        if minimum_only and found:
            return found
    return found


def _check_claims(g: Graph, d2, sel, d1, minimum_only: bool, failures: list[Failure]) -> int:
    dist2 = geodesic.all_pairs_distances(d2)
    dist1 = geodesic.all_pairs_distances(d1)
    hull_sets = _hull_sets(d2, minimum_only)
    for s in hull_sets:
        a: frozenset[int] = frozenset(s)
        b = a - {sel.v1}
        level = 0
        while True:
            level += 1
            a2 = geodesic.interval_of_set(d2, dist2, a)
            b2 = geodesic.interval_of_set(d1, dist1, b)
            if not a2 <= b2:
                failures.append(
                    Failure(
                        "claim1" if level == 1 else "claim2",
                        f"I^{level}_D2(S) not within I^{level}_D1(S - v1) "
                        f"for hull-set S={sorted(s)}",
                        orientation=d2.arcs,
                        vertex_set=tuple(sorted(a2 - b2)),
                    )
                )
                break
            if a2 == a and b2 == b:
                break
            a, b = a2, b2
    return len(hull_sets)


def verify_separation(
    g: Graph,
    *,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    use_reversal_symmetry: bool = True,
    workers: int | None = None,
    numbers: OrientableNumbers | None = None,
) -> SeparationReport:
    """Check g- < g+ and h- < h+ by enumeration and by construction."""
    _require_suite_input(g)
    if numbers is None:
        numbers = orientable_numbers(
            g,
            use_reversal_symmetry=use_reversal_symmetry,
            edge_budget=edge_budget,
            workers=workers,
        )
    failures: list[Failure] = []
    if not numbers.g_min < numbers.g_max:
        failures.append(Failure("g-separation", f"g-={numbers.g_min} !< g+={numbers.g_max}"))
    if not numbers.h_min < numbers.h_max:
        failures.append(Failure("h-separation", f"h-={numbers.h_min} !< h+={numbers.h_max}"))

    constructed: dict[str, int] = {}
    if is_complete(g):
        route = "complete"
        d_max, d_min = complete_graph_orientations(g.n)
        for name, d, expect in (
            ("g_of_transitive", d_max, g.n),
            ("g_of_reversed_path", d_min, 2),
        ):
            val, _ = geodetic_number(d)
            constructed[name] = val
            if val != expect:
                failures.append(
                    Failure("complete-route", f"{name}={val}, expected {expect}", d.arcs)
                )
        for name, d, expect in (
            ("h_of_transitive", d_max, g.n),
            ("h_of_reversed_path", d_min, 2),
        ):
            val, _ = hull_number(d)
            constructed[name] = val
            if val != expect:
                failures.append(
                    Failure("complete-route", f"{name}={val}, expected {expect}", d.arcs)
                )
        hull_sets_checked = 0
    else:
        route = "induced-path"
        d2, sel = d2_construction(g)
        d1 = d1_from_d2(d2, sel)
        g1, _ = geodetic_number(d1)
        g2, _ = geodetic_number(d2)
        h1, _ = hull_number(d1)
        h2, _ = hull_number(d2)
        constructed = {"g_d1": g1, "g_d2": g2, "h_d1": h1, "h_d2": h2}
        if not g1 < g2:
            failures.append(Failure("construct-g", f"g(D1)={g1} !< g(D2)={g2}", d2.arcs))
        if not h1 < h2:
            failures.append(Failure("construct-h", f"h(D1)={h1} !< h(D2)={h2}", d2.arcs))
        hull_sets_checked = _check_claims(g, d2, sel, d1, g.n > 5, failures)

    return SeparationReport(
        graph_id=encode_graph6(g),
        n=g.n,
        m=g.m,
        numbers=numbers,
        route=route,
        constructed=constructed,
        hull_sets_checked=hull_sets_checked,
        failures=failures,
    )


def verify_convexity(
    g: Graph,
    *,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    use_reversal_symmetry: bool = True,
    workers: int | None = None,
    numbers: OrientableNumbers | None = None,
) -> ConvexityReport:
    """Check con+ = n-1 and [con- = n-1 iff an end-vertex exists]."""
    _require_suite_input(g)
    if numbers is None:
        numbers = orientable_numbers(
            g,
            use_reversal_symmetry=use_reversal_symmetry,
            edge_budget=edge_budget,
            workers=workers,
        )
    failures: list[Failure] = []
    n = g.n
    if numbers.con_max != n - 1:
        failures.append(Failure("con-max", f"con+={numbers.con_max}, expected {n - 1}"))

    # constructive con+ witness: all edges at vertex 0 point away from it
    arcs = [(0, v) if u == 0 else (u, v) for u, v in g.edges]
    d_out = Digraph.from_arcs(n, arcs)
    val, _ = convexity_number(d_out)
    if val != n - 1:
        failures.append(
            Failure("con-max-witness", f"all-out orientation has con={val}", d_out.arcs)
        )

    has_end = bool(end_vertices(g))
    if has_end:
        if numbers.con_min != n - 1:
            failures.append(
                Failure(
                    "con-min-endvertex",
                    f"end-vertex present but con-={numbers.con_min} != {n - 1}",
                )
            )
    else:
        if not numbers.con_min < n - 1:
            failures.append(
                Failure("con-min", f"no end-vertex but con-={numbers.con_min} = n-1")
            )
        if min_degree(g) >= 2:
            d = extreme_free_orientation(g)
            extremes = geodesic.extreme_vertices(d)
            if extremes:
                failures.append(
                    Failure(
                        "extreme-free",
                        f"constructed orientation has extreme vertices {sorted(extremes)}",
                        d.arcs,
                        tuple(sorted(extremes)),
                    )
                )
            val, wit = convexity_number(d)
            if val >= n - 1:
                failures.append(
                    Failure("extreme-free-con", f"constructed orientation has con={val}", d.arcs, wit)
                )

    return ConvexityReport(
        graph_id=encode_graph6(g),
        n=g.n,
        m=g.m,
        con_min=numbers.con_min,
        con_max=numbers.con_max,
        has_end_vertex=has_end,
        failures=failures,
    )


def classify_hg(
    g: Graph,
    *,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    use_reversal_symmetry: bool = True,
    workers: int | None = None,
    numbers: OrientableNumbers | None = None,
) -> HgClassification:
    _require_suite_input(g)
    if numbers is None:
        numbers = orientable_numbers(
            g,
            use_reversal_symmetry=use_reversal_symmetry,
            edge_budget=edge_budget,
            workers=workers,
        )
    return HgClassification(
        graph_id=encode_graph6(g),
        n=g.n,
        m=g.m,
        g_min=numbers.g_min,
        g_max=numbers.g_max,
        h_min=numbers.h_min,
        h_max=numbers.h_max,
        con_min=numbers.con_min,
        con_max=numbers.con_max,
        case=classify_values(numbers.g_min, numbers.g_max, numbers.h_min, numbers.h_max),
    )


# ---------------------------------------------------------------------------
# corpus runs


@dataclass
class LineRecord:
    line: int
    text: str
    status: str  # "ok", "parse-error", "skipped"
    reason: str = ""
    separation: SeparationReport | None = None
    convexity: ConvexityReport | None = None
    classification: HgClassification | None = None

    @property
    def ok(self) -> bool:
        if self.status != "ok":
            return self.status == "skipped"
        for rep in (self.separation, self.convexity):
            if rep is not None and not rep.ok:
                return False
        return True

    def to_json_dict(self) -> dict:
        out: dict = {"line": self.line, "graph": self.text, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.separation is not None:
            out["separation"] = self.separation.to_json_dict()
        if self.convexity is not None:
            out["convexity"] = self.convexity.to_json_dict()
        if self.classification is not None:
            out["classification"] = self.classification.to_json_dict()
        out["ok"] = self.ok
        return out


@dataclass
class CorpusReport:
    records: list[LineRecord]
    suites: tuple[str, ...]

    @property
    def graphs(self) -> int:
        return sum(1 for r in self.records if r.status == "ok")

    @property
    def parse_errors(self) -> int:
        return sum(1 for r in self.records if r.status == "parse-error")

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.records if r.status == "skipped")

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if r.status == "ok" and not r.ok)

    def case_histogram(self) -> dict[str, int]:
        hist: dict[str, int] = {}
        for r in self.records:
            if r.classification is not None:
                hist[r.classification.case] = hist.get(r.classification.case, 0) + 1
        return dict(sorted(hist.items()))

    def summary(self) -> dict:
        out = {
            "lines": len(self.records),
            "graphs": self.graphs,
            "parse_errors": self.parse_errors,
            "skipped": self.skipped,
            "violations": self.violations,
            "suites": list(self.suites),
        }
        if "classify" in self.suites:
            out["cases"] = self.case_histogram()
        return out

    def exit_status(self) -> int:
        """0 all pass, 1 theorem violation, 2 input trouble."""
        if self.parse_errors:
            return 2
        if self.violations:
            return 1
        return 0


def _normalize_suites(suite) -> tuple[str, ...]:
    if suite in (None, "all"):
        return SUITES
    if isinstance(suite, str):
        suite = (suite,)
    chosen = tuple(suite)
    for s in chosen:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}; pick from {SUITES + ('all',)}")
    return chosen


def _run_line(args) -> LineRecord:
    lineno, text, suites, edge_budget, use_reversal_symmetry = args
    try:
        g = parse_graph6(text)
    except GraphFormatError as exc:
        return LineRecord(lineno, text, "parse-error", str(exc))
    if g.n < 3 or not is_connected(g):
        return LineRecord(
            lineno, text, "skipped", "theorem suites need a connected graph on >= 3 vertices"
        )
    if g.m > edge_budget:
        return LineRecord(
            lineno, text, "skipped", f"{g.m} edges exceeds the budget of {edge_budget}"
        )
    record = LineRecord(lineno, text, "ok")
    numbers = orientable_numbers(
        g, use_reversal_symmetry=use_reversal_symmetry, edge_budget=edge_budget
    )
    if "separation" in suites:
        record.separation = verify_separation(g, numbers=numbers)
    if "convexity" in suites:
        record.convexity = verify_convexity(g, numbers=numbers)
    if "classify" in suites:
        record.classification = classify_hg(g, numbers=numbers)
    return record


def corpus_run(
    lines,
    suite="all",
    *,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    use_reversal_symmetry: bool = True,
    workers: int | None = None,
) -> CorpusReport:
    """Run the selected suites over graph6 lines (an iterable or a file path).

    One record per input line, in input order; parse failures are recorded
    and the run continues.
    """
    suites = _normalize_suites(suite)
    if isinstance(lines, (str, bytes)):
        with open(lines, "r", encoding="ascii") as fh:
            payload = [ln.strip() for ln in fh]
    else:
        payload = [str(ln).strip() for ln in lines]
    jobs = [
        (i, text, suites, edge_budget, use_reversal_symmetry)
        for i, text in enumerate(payload, start=1)
        if text
    ]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_line, jobs))
    else:
        records = [_run_line(j) for j in jobs]
    return CorpusReport(records=records, suites=suites)
