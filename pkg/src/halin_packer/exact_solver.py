"""Exact S-packing colorability by backtracking, plus batch surveys.

The search colors vertices in a fixed fail-first order, checks a candidate
class only against already colored members of that class, and breaks the
label symmetry between classes with equal distance requirement. It runs in
bounded chunks so node and wall-clock limits can be enforced between
chunks; the outcome is ``Sat``, ``Unsat`` (search space exhausted) or
``Unknown`` (a limit was hit first).
"""

import csv
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InvalidSchedule, SearchLimitReached
from .graph_core import SPacking, all_pairs_distances, verify_packing

MAX_CLASSES = 16
SAT, UNSAT, UNKNOWN = "Sat", "Unsat", "Unknown"
CONSTRUCTIVE_VALID = "ConstructiveValid"


@dataclass(frozen=True)
class SearchConfig:
    node_limit: int = 10**8
    time_limit: float = 60.0
    symmetry_breaking: bool = True
    chunk_nodes: int = 1 << 20

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0 or self.chunk_nodes <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True, eq=False)
class SolveResult:
    status: str
    coloring: "np.ndarray | None"
    nodes_explored: int
    elapsed: float

    def to_json(self, names=None):
        out = {
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(1000 * self.elapsed, 3),
        }
        if self.coloring is not None:
            keys = names if names is not None else range(len(self.coloring))
            out["colors"] = {str(k): int(c) for k, c in zip(keys, self.coloring)}
        return out


def search_order(dist, radius):
    """Vertex order: most already-ordered vertices within ``radius`` first, ties by id."""
    n = dist.shape[0]
    close = (dist <= radius) & ~np.eye(n, dtype=bool)
    counts = np.zeros(n, dtype=np.int64)
    taken = np.zeros(n, dtype=bool)
    order = np.empty(n, dtype=np.int64)
    for t in range(n):
        v = int(np.argmax(np.where(taken, -1, counts)))
        order[t] = v
        taken[v] = True
        counts += close[v]
    return order


def _symmetry_links(s):
    prev = np.full(len(s), -1, dtype=np.int64)
    for c in range(1, len(s)):
        if s[c] == s[c - 1]:
            prev[c] = c - 1
    return prev


def decide(g, schedule, cfg=None, oracle=None):
    """Decide whether ``g`` has an S-packing coloring for ``schedule``."""
    cfg = cfg or SearchConfig()
    if schedule.k > MAX_CLASSES:
        raise InvalidSchedule(f"at most {MAX_CLASSES} classes are supported")
    if oracle is None:
        oracle = all_pairs_distances(g)
    start = time.perf_counter()
    n = g.order
    s = np.asarray(schedule.s, dtype=np.int64)
    dist = np.ascontiguousarray(oracle.dist)
    order = search_order(dist, int(s.max()))
    group_prev = _symmetry_links(s)
    assign = np.full(n, -1, dtype=np.int64)
    next_try = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(len(s), dtype=np.int64)
    state = np.zeros(2, dtype=np.int64)

    while True:
        budget = min(cfg.chunk_nodes, cfg.node_limit - int(state[1]))
        code = kernels.search(
            order, dist, s, group_prev, assign, next_try, used, state, budget,
            cfg.symmetry_breaking,
        )
        elapsed = time.perf_counter() - start
        nodes = int(state[1])
        if code == kernels.SAT:
            colors = assign + 1
            if not verify_packing(g, schedule, colors, oracle).valid:
                raise AssertionError("search produced an invalid coloring")
            return SolveResult(SAT, colors, nodes, elapsed)
        if code == kernels.UNSAT:
            return SolveResult(UNSAT, None, nodes, elapsed)
        if nodes >= cfg.node_limit or elapsed >= cfg.time_limit:
            return SolveResult(UNKNOWN, None, nodes, elapsed)


def naive_decide(g, schedule, oracle=None, max_assignments=1 << 24, chunk=1 << 16):
    """Reference oracle: scan all ``k**n`` class assignments.

    Returns ``(found, colors)``. Independent of :func:`decide` apart from the
    distance matrix.
    """
    if oracle is None:
        oracle = all_pairs_distances(g)
    n, k = g.order, schedule.k
    total = k**n
    if total > max_assignments:
        raise ValueError(f"{k}^{n} assignments exceed {max_assignments}")
    s = np.asarray(schedule.s)
    constraints = []
    for u in range(n):
        for v in range(u + 1, n):
            first = int(np.searchsorted(s, oracle.dist[u, v]))  # classes with s_c >= d
            if first < k:
                constraints.append((first, u, v))
    constraints.sort()  # strongest (adjacent) pairs first
    for lo in range(0, total, chunk):
        digits = _digit_table(n, k, lo, min(total, lo + chunk))
        ok = np.ones(digits.shape[1], dtype=bool)
        for first, u, v in constraints:
            if first:
                ok &= (digits[u] != digits[v]) | (digits[u] < first)
            else:
                ok &= digits[u] != digits[v]
        if ok.any():
            return True, digits[:, int(np.argmax(ok))].astype(np.int64) + 1
    return False, None


@lru_cache(maxsize=32)
def _digit_table(n, k, lo, hi):
    """Base-``k`` digits of ``lo..hi-1``, one contiguous row per vertex."""
    rest = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((n, hi - lo), dtype=np.uint8)
    for v in range(n):
        digits[v] = rest % k
        rest //= k
    digits.setflags(write=False)
    return digits


def packing_chromatic_number(g, k_max, cfg=None, oracle=None):
    """Least ``k <= k_max`` with a (1,2,...,k)-packing coloring, or ``None``."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if oracle is None:
        oracle = all_pairs_distances(g)
    for k in range(1, k_max + 1):
        result = decide(g, SPacking(tuple(range(1, k + 1))), cfg, oracle)
        if result.status == SAT:
            return k
        if result.status == UNKNOWN:
            raise SearchLimitReached(f"limits reached while testing k={k}")
    return None


@dataclass(frozen=True)
class SurveyRow:
    graph_id: str
    vertex_count: int
    schedule: SPacking
    status: str
    elapsed: float

    def csv_row(self, timing=True):
        elapsed = f"{1000 * self.elapsed:.3f}" if timing else ""
        return [self.graph_id, self.vertex_count, str(self.schedule), self.status, elapsed]


def default_ids(graphs):
    """Ids like ``n10-2``: vertex count and rank among graphs of that order."""
    seen = {}
    out = []
    for h in graphs:
        i = seen.get(h.order, 0)
        seen[h.order] = i + 1
        out.append(f"n{h.order}-{i}")
    return out


def _survey_cell(h, schedule, cfg, mode):
    from .constructive import SCHEDULE_1123, SCHEDULE_122222, color_1123, color_122222

    start = time.perf_counter()
    oracle = all_pairs_distances(h.graph)
    if mode == "crosscheck" and schedule in (SCHEDULE_1123, SCHEDULE_122222):
        build = color_1123 if schedule == SCHEDULE_1123 else color_122222
        colors, _ = build(h, cfg, oracle)
        ok = verify_packing(h.graph, schedule, colors, oracle).valid
        status = CONSTRUCTIVE_VALID if ok else "Invalid"
    else:
        status = decide(h.graph, schedule, cfg, oracle).status
    return status, time.perf_counter() - start


def survey(graphs, schedules, cfg=None, mode="exact", ids=None, threads=None):
    """Run every (graph, schedule) pair; rows follow input order.

    ``mode`` is ``"exact"`` or ``"crosscheck"``. In crosscheck mode the
    schedules (1,1,2,3) and (1,2,2,2,2,2) are answered by the constructive
    colorers and verified; other schedules fall back to :func:`decide`.
    """
    if mode not in ("exact", "crosscheck"):
        raise ValueError(f"unknown survey mode {mode!r}")
    cfg = cfg or SearchConfig()
    graphs = list(graphs)
    ids = list(ids) if ids is not None else default_ids(graphs)
    cells = [(gid, h, sched) for gid, h in zip(ids, graphs) for sched in schedules]
    if threads is None:
        threads = int(os.environ.get("HALIN_PACKER_THREADS", "1") or 1)

    def work(cell):
        gid, h, sched = cell
        status, elapsed = _survey_cell(h, sched, cfg, mode)
        return SurveyRow(gid, h.order, sched, status, elapsed)

    if threads > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, cells))
    return [work(cell) for cell in cells]


CSV_HEADER = ["graph_id", "n", "schedule", "status", "elapsed_ms"]


def write_survey_csv(rows, fh, timing=True):
    """Write survey rows as CSV. ``timing=False`` leaves ``elapsed_ms`` empty."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_row(timing))
