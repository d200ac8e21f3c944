"""Exhaustive small-graph corpora and family sweeps.

Graphs are generated by orderly extension: every canonical (n-1)-vertex
graph is extended by one vertex with each of the 2^(n-1) possible
neighborhoods, and a candidate is kept iff its labeling already is the
canonical one (minimum bitstring).  Because the bitstring uses graph6
column order, the first n-1 vertices of a canonical labeling always form
a canonical labeling themselves, so each isomorphism class is produced
exactly once and the kept graphs double as their own canonical codes.

Sweeps filter a corpus through a hereditary family, compute exact
invariant bundles for the members, flag any Reed-bound violation with a
full certificate, and optionally audit each member.  Work is partitioned
into contiguous chunks of the canonical stream and merged in chunk
order, so reports are byte-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from functools import lru_cache

from .audit import DEFAULT_COLORING_CAP, STATEMENTS, STATUSES, audit_graph
from .graphs import Graph, Graph6Error, graph_from_graph6, graph_to_graph6, is_min_labeled
from .invariants import invariant_bundle
from .patterns import FamilySpec, in_family

MAX_ENUMERATION_N = 9

_EXEMPLAR_CAP = 20
_AUDIT_CERT_CAP = 100


@lru_cache(maxsize=None)
def _canonical_level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    out = []
    for parent in _canonical_level(n - 1):
        adj = parent.adj
        for mask in range(1 << (n - 1)):
            rows = [adj[i] | (((mask >> i) & 1) << (n - 1)) for i in range(n - 1)]
            rows.append(mask)
            if is_min_labeled(rows, n):
                out.append(Graph(n, rows))
    out.sort(key=graph_to_graph6)
    return tuple(out)


def enumerate_graphs(n: int):
    """One canonical representative per isomorphism class on ``n`` vertices,
    in canonical-code order."""
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"internal enumeration supports n <= {MAX_ENUMERATION_N}; "
            "use an external graph6 stream for larger graphs"
        )
    yield from _canonical_level(n)


class Graph6Stream:
    """Iterator of (line_number, Graph) over one-graph-per-line text.

    Lines beginning with ``>>`` are headers and skipped.  In strict mode a
    malformed line aborts with the line number; in lenient mode it is
    skipped and recorded in :attr:`skipped`.
    """

    def __init__(self, lines, strict: bool = True):
        self._lines = lines
        self.strict = strict
        self.skipped: list[tuple[int, str]] = []

    def __iter__(self):
        for lineno, raw in enumerate(self._lines, start=1):
            line = raw.rstrip("\r\n")
            if line.startswith(">>"):
                continue
            try:
                yield lineno, graph_from_graph6(line)
            except Graph6Error as exc:
                if self.strict:
                    raise Graph6Error(f"line {lineno}: {exc}") from exc
                self.skipped.append((lineno, str(exc)))


def read_graph6_stream(lines, strict: bool = True) -> Graph6Stream:
    return Graph6Stream(lines, strict=strict)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass
class SweepReport:
    """Aggregate of one family sweep; violation lists carry full certificates."""

    family: str
    n_max: int | None
    examined: int
    members: int
    per_n: dict[int, dict[str, int]]
    violations: list[dict]
    tight_count: int
    tight_exemplars: list[str]
    audit: dict | None
    skipped_lines: int
    wall_time_s: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n_max": self.n_max,
            "examined": self.examined,
            "members": self.members,
            "violation_count": len(self.violations),
            "violations": self.violations,
            "tight_count": self.tight_count,
            "tight_exemplars": self.tight_exemplars,
            "per_n": {str(n): row for n, row in sorted(self.per_n.items())},
            "audit": self.audit,
            "skipped_lines": self.skipped_lines,
            "wall_time_s": self.wall_time_s,
        }


def _family_payload(family: FamilySpec) -> tuple:
    return (family.name, tuple((label, graph_to_graph6(p)) for label, p in family.forbidden))


@lru_cache(maxsize=None)
def _family_from_payload(payload: tuple) -> FamilySpec:
    name, forbidden = payload
    return FamilySpec(name, tuple((label, graph_from_graph6(g6)) for label, g6 in forbidden))


def _empty_audit_totals() -> dict:
    return {
        "instances": {s: {st: 0 for st in STATUSES} for s in STATEMENTS},
        "violated_certificates": [],
        "violated_total": 0,
        "gate_full_pass_members": [],
        "colorings_truncated": 0,
    }


def _sweep_chunk(args) -> dict:
    family_payload, g6_chunk, audit, coloring_cap = args
    family = _family_from_payload(family_payload)
    part = {
        "examined": 0,
        "members": 0,
        "per_n": {},
        "violations": [],
        "tight_count": 0,
        "tight": [],
        "audit": _empty_audit_totals() if audit else None,
    }
    for g6 in g6_chunk:
        g = graph_from_graph6(g6)
        row = part["per_n"].setdefault(g.n, {"examined": 0, "members": 0, "tight": 0})
        part["examined"] += 1
        row["examined"] += 1
        if not in_family(g, family).member:
            continue
        part["members"] += 1
        row["members"] += 1
        bundle = invariant_bundle(g)
        if bundle.slack < 0:
            part["violations"].append({"graph6": g6, **bundle.to_json()})
        if bundle.slack == 0:
            part["tight_count"] += 1
            row["tight"] += 1
            if len(part["tight"]) < _EXEMPLAR_CAP:
                part["tight"].append(g6)
        if audit:
            report = audit_graph(g, coloring_budget=coloring_cap)
            totals = part["audit"]
            for s in STATEMENTS:
                for st in STATUSES:
                    totals["instances"][s][st] += report.counters[s][st]
            totals["violated_total"] += len(report.violations)
            for f in report.violations:
                if len(totals["violated_certificates"]) < _AUDIT_CERT_CAP:
                    totals["violated_certificates"].append(f.to_json())
            if report.gate_full_pass_colorings > 0:
                totals["gate_full_pass_members"].append(g6)
            if report.truncated:
                totals["colorings_truncated"] += 1
    return part


def _merge_parts(parts: list[dict]) -> dict:
    total = {
        "examined": 0,
        "members": 0,
        "per_n": {},
        "violations": [],
        "tight_count": 0,
        "tight": [],
        "audit": None,
    }
    audits = [p["audit"] for p in parts if p["audit"] is not None]
    if audits:
        total["audit"] = _empty_audit_totals()
    for part in parts:
        total["examined"] += part["examined"]
        total["members"] += part["members"]
        total["violations"].extend(part["violations"])
        total["tight_count"] += part["tight_count"]
        for g6 in part["tight"]:
            if len(total["tight"]) < _EXEMPLAR_CAP:
                total["tight"].append(g6)
        for n, row in part["per_n"].items():
            dst = total["per_n"].setdefault(n, {"examined": 0, "members": 0, "tight": 0})
            for key in dst:
                dst[key] += row[key]
        if part["audit"] is not None:
            src, dst = part["audit"], total["audit"]
            for s in STATEMENTS:
                for st in STATUSES:
                    dst["instances"][s][st] += src["instances"][s][st]
            dst["violated_total"] += src["violated_total"]
            for cert in src["violated_certificates"]:
                if len(dst["violated_certificates"]) < _AUDIT_CERT_CAP:
                    dst["violated_certificates"].append(cert)
            dst["gate_full_pass_members"].extend(src["gate_full_pass_members"])
            dst["colorings_truncated"] += src["colorings_truncated"]
    return total


def _run_chunks(family: FamilySpec, g6_list: list[str], audit: bool,
                workers: int, coloring_cap: int) -> dict:
    payload = _family_payload(family)
    if workers <= 1 or len(g6_list) < 2 * workers:
        return _merge_parts([_sweep_chunk((payload, g6_list, audit, coloring_cap))])
    chunk_size = max(1, (len(g6_list) + workers * 4 - 1) // (workers * 4))
    chunks = [
        (payload, g6_list[i:i + chunk_size], audit, coloring_cap)
        for i in range(0, len(g6_list), chunk_size)
    ]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_sweep_chunk, chunks)
    return _merge_parts(parts)


def sweep(family: FamilySpec, n_max: int, *, audit: bool = False, workers: int = 1,
          coloring_cap: int = DEFAULT_COLORING_CAP) -> SweepReport:
    """Verify the Reed bound over every family member with at most ``n_max``
    vertices (internal enumeration; n_max <= 9)."""
    if not 0 <= n_max <= MAX_ENUMERATION_N:
        raise ValueError(f"n_max must be within 0..{MAX_ENUMERATION_N}")
    start = time.monotonic()
    g6_list = [graph_to_graph6(g) for n in range(n_max + 1) for g in enumerate_graphs(n)]
    total = _run_chunks(family, g6_list, audit, workers, coloring_cap)
    return _finish_report(family, n_max, total, skipped=0, start=start)


def sweep_stream(family: FamilySpec, lines, *, strict: bool = True, audit: bool = False,
                 workers: int = 1, coloring_cap: int = DEFAULT_COLORING_CAP) -> SweepReport:
    """Same verification over an external graph6 stream (one graph per line)."""
    start = time.monotonic()
    stream = read_graph6_stream(lines, strict=strict)
    g6_list = [graph_to_graph6(g) for _, g in stream]
    total = _run_chunks(family, g6_list, audit, workers, coloring_cap)
    return _finish_report(family, None, total, skipped=len(stream.skipped), start=start)


def _finish_report(family: FamilySpec, n_max: int | None, total: dict,
                   skipped: int, start: float) -> SweepReport:
    return SweepReport(
        family=family.name,
        n_max=n_max,
        examined=total["examined"],
        members=total["members"],
        per_n=total["per_n"],
        violations=total["violations"],
        tight_count=total["tight_count"],
        tight_exemplars=total["tight"],
        audit=total["audit"],
        skipped_lines=skipped,
        wall_time_s=time.monotonic() - start,
    )
