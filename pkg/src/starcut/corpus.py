"""Connected-graph corpora and the batch verification driver.

Enumeration produces exactly one representative per isomorphism class by
extending smaller representatives with one new vertex and deduplicating on
a canonical relabeling.  The canonical form minimizes the upper-triangle
adjacency bitstring (column order, as in graph6) over all vertex orders; the
search walks orders level by level, keeping only prefixes that achieve the
minimal next column, and collapsing prefixes that are interchangeable for
every future choice.

Verification runs are resumable: records append to a JSONL sink keyed by
graph6 id, and graphs already present are not recomputed.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from .families import build as build_family
from .formats import from_graph6, read_edge_list, to_graph6
from .graph import Graph, _bits
from .verify import CHECK_NAMES, FAIL, PASS, SKIP, VerificationRecord, verify_graph

ENUMERATION_LIMIT = 8

# connected simple graphs on 2..8 vertices, one per isomorphism class
CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def canonical_form(g: Graph) -> Graph:
    """The canonical relabeling of g.

    Isomorphic graphs map to equal Graph objects; the result's
    upper-triangle bitstring (column order) is minimal over all orderings.

    Each partial ordering carries a profile per unplaced vertex: its
    adjacency bits to the placed sequence, oldest bit highest.  The profile
    is exactly the column that vertex would contribute next, so extensions
    minimize it; prefixes with identical profile tables are interchangeable
    for every future choice and collapse to one representative.
    """
    n = g.n
    if n <= 1:
        return g
    masks = [g.adj_mask(v) for v in range(n)]
    # state: (seq, profiles); profiles[w] = -1 once w is placed
    states: dict = {}
    for v in range(n):
        profs = tuple(
            -1 if w == v else (masks[v] >> w) & 1 for w in range(n)
        )
        states.setdefault(profs, (v,))
    for _ in range(1, n):
        best: Optional[int] = None
        chosen: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
        for profs, seq in states.items():
            for v in range(n):
                col = profs[v]
                if col < 0:
                    continue
                if best is None or col < best:
                    best = col
                    chosen = [(seq, profs, v)]
                elif col == best:
                    chosen.append((seq, profs, v))
        states = {}
        for seq, profs, v in chosen:
            row = masks[v]
            nxt = tuple(
                -1 if w == v or p < 0 else (p << 1) | ((row >> w) & 1)
                for w, p in enumerate(profs)
            )
            states.setdefault(nxt, seq + (v,))
    order = next(iter(states.values()))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges()]
    return Graph(n, edges)


def _triangle_key(g: Graph) -> int:
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | ((g.adj_mask(i) >> j) & 1)
    return bits


@lru_cache(maxsize=None)
def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism, 2 <= n <= 8.

    Ordered by ascending canonical bitstring.  Beyond n=8 bring an external
    graph6 corpus instead.
    """
    if not 2 <= n <= ENUMERATION_LIMIT:
        raise ValueError(
            f"builtin enumeration covers 2 <= n <= {ENUMERATION_LIMIT}; "
            "supply an external graph6 corpus for larger orders"
        )
    if n == 2:
        return (Graph(2, [(0, 1)]),)
    seen: set[Graph] = set()
    for h in enumerate_connected(n - 1):
        base = h.edges()
        for nbrs in range(1, 1 << (n - 1)):
            edges = base + [(v, n - 1) for v in _bits(nbrs)]
            seen.add(canonical_form(Graph(n, edges)))
    return tuple(sorted(seen, key=_triangle_key))


# -- sources ------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSource:
    """Where verification graphs come from, plus optional filters."""

    kind: str  # enumeration | graph6 | edgelist | family
    n: int = 0
    path: str = ""
    family: str = ""
    param: Optional[str] = None
    connected_only: bool = False
    mod3: Optional[int] = None
    min_diameter: Optional[int] = None
    max_diameter: Optional[int] = None

    def __post_init__(self) -> None:
        kinds = ("enumeration", "graph6", "edgelist", "family")
        if self.kind not in kinds:
            raise ValueError(f"source kind must be one of {kinds}, got {self.kind!r}")


def _keep(source: CorpusSource, g: Graph) -> bool:
    if source.connected_only and not g.is_connected():
        return False
    if source.mod3 is not None and g.n % 3 != source.mod3:
        return False
    if source.min_diameter is not None or source.max_diameter is not None:
        d = g.diameter()
        if source.min_diameter is not None and d < source.min_diameter:
            return False
        if source.max_diameter is not None and d > source.max_diameter:
            return False
    return True


def iter_source(source: CorpusSource) -> Iterator[tuple[Optional[Graph], Optional[str]]]:
    """Yield (graph, None) per graph, or (None, message) for bad input lines."""
    if source.kind == "enumeration":
        for g in enumerate_connected(source.n):
            if _keep(source, g):
                yield g, None
    elif source.kind == "graph6":
        with open(source.path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    g = from_graph6(line)
                except ValueError as exc:
                    yield None, f"line {lineno}: {exc}"
                    continue
                if _keep(source, g):
                    yield g, None
    elif source.kind == "edgelist":
        with open(source.path, "r", encoding="ascii") as fh:
            g = read_edge_list(fh.read())
        if _keep(source, g):
            yield g, None
    else:
        g = build_family(source.family, source.param)
        if _keep(source, g):
            yield g, None


# -- verification driver ------------------------------------------------


def _verify_obj(args: tuple[str, Optional[tuple[str, ...]]]) -> dict:
    g6, checks = args
    try:
        g = from_graph6(g6)
        return verify_graph(g, checks=checks, graph_id=g6).to_obj()
    except Exception as exc:  # a record must come back for every graph
        return {"graph_id": g6, "error": f"{type(exc).__name__}: {exc}", "checks": {}}


def _load_sink(path: str) -> tuple[list[dict], set[str]]:
    records: list[dict] = []
    ids: set[str] = set()
    if not os.path.exists(path):
        return records, ids
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            records.append(obj)
            gid = obj.get("graph_id")
            if gid:
                ids.add(gid)
    return records, ids


def summarize(records: Iterable[dict]) -> dict:
    """Associative fold of record objects into per-check totals."""
    checks: dict[str, dict[str, int]] = {}
    failures: list[str] = []
    fallbacks = 0
    errors = 0
    total = 0
    for obj in records:
        total += 1
        if obj.get("error"):
            errors += 1
        if obj.get("refinement_fallback"):
            fallbacks += 1
        failed = False
        for name, entry in obj.get("checks", {}).items():
            slot = checks.setdefault(name, {PASS: 0, FAIL: 0, SKIP: 0})
            status = entry.get("status", FAIL)
            slot[status] = slot.get(status, 0) + 1
            if status == FAIL:
                failed = True
        if failed:
            failures.append(obj.get("graph_id", ""))
    return {
        "records": total,
        "checks": checks,
        "failures": sorted(failures),
        "refinement_fallbacks": fallbacks,
        "errors": errors,
    }


def run_verification(
    source: CorpusSource,
    checks: Optional[Iterable[str]] = None,
    jobs: int = 1,
    out: Optional[str] = None,
    emit=None,
) -> dict:
    """Verify every graph from the source, appending records to the sink.

    With `out` the sink is a JSONL file and the run is resumable: graphs
    whose id already appears there are skipped.  `emit`, when given, is
    called with every new record object.  Returns the summary over all
    records, old and new.
    """
    names = None if checks is None else tuple(checks)
    if names is not None:
        for name in names:
            if name not in CHECK_NAMES:
                raise ValueError(
                    f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}"
                )
    if jobs < 1:
        raise ValueError("jobs must be at least 1")

    existing, done = ([], set()) if out is None else _load_sink(out)

    errors: list[dict] = []
    tasks: list[tuple[str, Optional[tuple[str, ...]]]] = []
    for g, err in iter_source(source):
        if err is not None:
            errors.append({"graph_id": "", "error": err, "checks": {}})
            continue
        g6 = to_graph6(g)
        if g6 in done:
            continue
        done.add(g6)
        tasks.append((g6, names))

    def consume(produced) -> list[dict]:
        new: list[dict] = []
        fh = open(out, "a", encoding="utf-8") if out is not None else None
        try:
            for obj in errors:
                if fh is not None:
                    fh.write(json.dumps(obj, sort_keys=True) + "\n")
                new.append(obj)
                if emit is not None:
                    emit(obj)
            for obj in produced:
                if fh is not None:
                    fh.write(json.dumps(obj, sort_keys=True) + "\n")
                new.append(obj)
                if emit is not None:
                    emit(obj)
        finally:
            if fh is not None:
                fh.close()
        return new

    if jobs == 1:
        new_records = consume(map(_verify_obj, tasks))
    else:
        with Pool(processes=jobs) as pool:
            new_records = consume(pool.imap(_verify_obj, tasks, chunksize=16))

    summary = summarize(existing + new_records)
    summary["new"] = len(new_records)
    return summary
