"""Graph types, Halin validation, distances, S-packing verification, subdivision.

Vertices are dense integers ``0..order-1``. A coloring is a 1-D integer array
indexed by vertex, holding class indices ``1..k`` (``0`` marks an unassigned
vertex during search). Classes are numbered in the order of the schedule.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import (
    BadDegree,
    ClassOutOfRange,
    CycleMismatch,
    Disconnected,
    InvalidColoring,
    InvalidGraph,
    InvalidSchedule,
    NonPlanarOrder,
    NotATree,
    NotOnCycle,
    OracleTooLarge,
    OrderTooSmall,
    PartialColoring,
)

MAX_ORACLE_VERTICES = 4096

SCHEDULE_SHORTHANDS = {
    "1123": (1, 1, 2, 3),
    "122222": (1, 2, 2, 2, 2, 2),
}


@dataclass(frozen=True)
class SPacking:
    """Non-decreasing distance schedule ``(s_1, ..., s_k)``."""

    s: tuple

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        if not s:
            raise InvalidSchedule("schedule must be nonempty")
        if any(x < 1 for x in s):
            raise InvalidSchedule(f"schedule entries must be positive: {s}")
        if any(a > b for a, b in zip(s, s[1:])):
            raise InvalidSchedule(f"schedule must be non-decreasing: {s}")
        object.__setattr__(self, "s", s)

    @classmethod
    def parse(cls, text):
        text = str(text).strip()
        if text in SCHEDULE_SHORTHANDS:
            return cls(SCHEDULE_SHORTHANDS[text])
        parts = text.replace(",", "-").split("-")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError:
            raise InvalidSchedule(f"cannot parse schedule {text!r}") from None

    @property
    def k(self):
        return len(self.s)

    def lifted(self):
        """Schedule satisfied on the subdivision: ``(1, 2s_1+1, ..., 2s_k+1)``."""
        return SPacking((1,) + tuple(2 * x + 1 for x in self.s))

    def __str__(self):
        return "-".join(map(str, self.s))


@dataclass(frozen=True)
class GenericGraph:
    adjacency: tuple

    def __post_init__(self):
        adj = tuple(tuple(int(w) for w in nbrs) for nbrs in self.adjacency)
        n = len(adj)
        for u, nbrs in enumerate(adj):
            if len(set(nbrs)) != len(nbrs):
                raise InvalidGraph(f"duplicate edge at vertex {u}")
            for w in nbrs:
                if not 0 <= w < n:
                    raise InvalidGraph(f"neighbor {w} of {u} out of range")
                if w == u:
                    raise InvalidGraph(f"self-loop at vertex {u}")
                if u not in adj[w]:
                    raise InvalidGraph(f"asymmetric adjacency {u}-{w}")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n, edges):
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(tuple(tuple(sorted(a)) for a in adj))

    @property
    def order(self):
        return len(self.adjacency)

    @cached_property
    def edges(self):
        return tuple((u, w) for u, nbrs in enumerate(self.adjacency) for w in sorted(nbrs) if u < w)

    def degrees(self):
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def csr(self):
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def is_connected(self):
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order


@dataclass(frozen=True)
class HalinGraph:
    """Cubic Halin graph ``T ∪ C``: a tree plus a cycle through its leaves.

    Build instances with :func:`build_halin`, which validates every invariant.
    ``names`` maps the dense vertex ids back to the caller's identifiers.
    """

    tree_adjacency: tuple
    cycle: tuple
    names: tuple

    @property
    def order(self):
        return len(self.tree_adjacency)

    @property
    def n(self):
        return len(self.cycle)

    @cached_property
    def position(self):
        return {v: i for i, v in enumerate(self.cycle)}

    @cached_property
    def internal(self):
        return tuple(v for v, nbrs in enumerate(self.tree_adjacency) if len(nbrs) == 3)

    def is_leaf(self, v):
        return len(self.tree_adjacency[v]) == 1

    def parent(self, leaf):
        """The unique tree neighbor of a leaf."""
        return self.tree_adjacency[leaf][0]

    def cycle_vertex(self, i):
        return self.cycle[i % self.n]

    def tree_edges(self):
        return tuple(
            (u, w) for u, nbrs in enumerate(self.tree_adjacency) for w in sorted(nbrs) if u < w
        )

    def side(self, u, w):
        """Vertices of the component of ``T - u`` that contains the neighbor ``w``."""
        seen = {u, w}
        stack = [w]
        out = [w]
        while stack:
            a = stack.pop()
            for b in self.tree_adjacency[a]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
                    out.append(b)
        return out

    def tree_graph(self):
        return GenericGraph(self.tree_adjacency)

    @cached_property
    def graph(self):
        return full_graph(self)

    def tree_edges_named(self):
        return [[self.names[u], self.names[w]] for u, w in self.tree_edges()]


def _dense_ids(tree_edges, cycle_order, vertices=None):
    flat = [x for e in tree_edges for x in e] + list(cycle_order)
    if vertices is not None:
        names = list(vertices)
        if len(set(names)) != len(names) or set(names) != set(flat):
            raise InvalidGraph("vertex list does not match the tree vertices")
    elif all(isinstance(x, (int, np.integer)) and not isinstance(x, bool) for x in flat):
        names = sorted({int(x) for x in flat})
    else:
        names = list(dict.fromkeys(flat))
    return names, {name: i for i, name in enumerate(names)}


def _is_arc(positions, n):
    """Whether a set of cycle positions is one contiguous circular arc."""
    m = len(positions)
    if m == 0 or m == n:
        return True
    ends = sum(1 for p in positions if (p + 1) % n not in positions)
    return ends == 1


def build_halin(tree_edges, cycle_order, vertices=None):
    """Validate a tree and a cyclic leaf order and return the cubic Halin graph.

    Dense ids follow ``vertices`` when given; otherwise integer ids are
    sorted and other ids keep their order of first appearance.
    """
    tree_edges = [tuple(e) for e in tree_edges]
    if not tree_edges:
        raise NotATree("tree has no edges")
    if any(len(e) != 2 for e in tree_edges):
        raise InvalidGraph("tree edges must be pairs")
    names, index = _dense_ids(tree_edges, cycle_order, vertices)
    tree_names = {x for e in tree_edges for x in e}
    unknown = [x for x in cycle_order if x not in tree_names]
    if unknown:
        raise CycleMismatch(f"cycle references vertices not in the tree: {unknown}")
    order = len(names)
    adj = [set() for _ in range(order)]
    for a, b in tree_edges:
        u, w = index[a], index[b]
        if u == w:
            raise NotATree(f"self-loop at {a!r}")
        if w in adj[u]:
            raise NotATree(f"duplicate edge {a!r}-{b!r}")
        adj[u].add(w)
        adj[w].add(u)
    if len(tree_edges) != order - 1 or not GenericGraph(tuple(tuple(a) for a in adj)).is_connected():
        raise NotATree("tree edges do not form a tree")
    if order < 4:
        raise OrderTooSmall(f"tree order {order} < 4")
    bad = [names[v] for v in range(order) if len(adj[v]) not in (1, 3)]
    if bad:
        raise BadDegree(f"tree vertices with degree not in {{1,3}}: {bad}")

    cycle = tuple(index[x] for x in cycle_order)
    leaves = {v for v in range(order) if len(adj[v]) == 1}
    if len(set(cycle)) != len(cycle) or set(cycle) != leaves:
        raise CycleMismatch("cycle order must list every leaf exactly once")

    tree_adjacency = tuple(tuple(sorted(a)) for a in adj)
    _check_contiguity(tree_adjacency, cycle)
    h = HalinGraph(tree_adjacency, cycle, tuple(names))
    degrees = h.graph.degrees()
    if not np.all(degrees == 3):
        raise InvalidGraph("closure is not 3-regular")
    return h


def _check_contiguity(tree_adjacency, cycle):
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    root = next(v for v, a in enumerate(tree_adjacency) if len(a) == 3)
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in tree_adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    below = {}
    for u in reversed(order):
        if u in pos:
            below[u] = {pos[u]}
        else:
            below[u] = set().union(*(below[w] for w in tree_adjacency[u] if w != parent[u]))
        if u != root and not _is_arc(below[u], n):
            raise NonPlanarOrder(
                f"leaves below tree edge ({parent[u]}, {u}) are not contiguous on the cycle"
            )


def full_graph(h):
    """The closure ``T ∪ C`` as a generic graph."""
    adj = [list(a) for a in h.tree_adjacency]
    n = h.n
    for i, v in enumerate(h.cycle):
        for w in (h.cycle[(i + 1) % n], h.cycle[(i - 1) % n]):
            if w not in adj[v]:
                adj[v].append(w)
    return GenericGraph(tuple(tuple(sorted(a)) for a in adj))


@dataclass(frozen=True, eq=False)
class DistanceOracle:
    dist: np.ndarray

    def __call__(self, u, v):
        return int(self.dist[u, v])

    @property
    def order(self):
        return self.dist.shape[0]


def all_pairs_distances(g, max_vertices=MAX_ORACLE_VERTICES):
    if g.order > max_vertices:
        raise OracleTooLarge(f"{g.order} vertices exceeds the oracle bound {max_vertices}")
    indptr, indices = g.csr()
    dist = kernels.bfs_distances(indptr, indices, g.order)
    if g.order and dist.min() < 0:
        raise Disconnected("graph is not connected")
    dist.setflags(write=False)
    return DistanceOracle(dist)


def cycle_distance(h, u, v):
    try:
        i, j = h.position[u], h.position[v]
    except KeyError as exc:
        raise NotOnCycle(f"vertex {exc.args[0]} is not on the cycle") from None
    d = abs(i - j)
    return min(d, h.n - d)


class Violation(NamedTuple):
    u: int
    v: int
    cls: int
    distance: int


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple

    def to_json(self):
        return {
            "valid": self.valid,
            "violations": [v._asdict() for v in self.violations],
        }


def check_coloring(colors, order, k):
    colors = np.asarray(colors)
    if colors.ndim != 1 or colors.shape[0] != order:
        raise InvalidColoring(f"coloring has shape {colors.shape}, expected ({order},)")
    if np.any(colors == 0):
        raise PartialColoring(f"vertices {np.flatnonzero(colors == 0).tolist()} are uncolored")
    if np.any((colors < 1) | (colors > k)):
        raise ClassOutOfRange(f"class indices must lie in 1..{k}")
    return colors.astype(np.int64)


def verify_packing(g, schedule, colors, oracle=None):
    """Check every same-class pair against its distance requirement."""
    colors = check_coloring(colors, g.order, schedule.k)
    if oracle is None:
        oracle = all_pairs_distances(g)
    violations = []
    for cls, s in enumerate(schedule.s, start=1):
        members = np.flatnonzero(colors == cls)
        if len(members) < 2:
            continue
        sub = oracle.dist[np.ix_(members, members)]
        iu, ju = np.triu_indices(len(members), k=1)
        bad = sub[iu, ju] <= s
        for a, b in zip(iu[bad], ju[bad]):
            violations.append(
                Violation(int(members[a]), int(members[b]), cls, int(sub[a, b]))
            )
    violations.sort()
    return VerificationReport(not violations, tuple(violations))


def subdivide(g):
    """Replace every edge ``uv`` by a path ``u m v``; ``m`` ids follow ``g.edges`` order."""
    n = g.order
    edges = []
    for e, (u, v) in enumerate(g.edges):
        m = n + e
        edges.append((u, m))
        edges.append((m, v))
    return GenericGraph.from_edges(n + len(g.edges), edges)


def lift_coloring(colors, schedule, g, oracle=None):
    """Transfer a valid coloring of ``g`` to ``subdivide(g)``.

    Subdivision vertices go to the new class 1; an original vertex of class
    ``i`` goes to class ``i + 1`` of the lifted schedule.
    """
    report = verify_packing(g, schedule, colors, oracle)
    if not report.valid:
        raise InvalidColoring("coloring is not valid for the schedule; cannot lift")
    colors = np.asarray(colors, dtype=np.int64)
    lifted = np.ones(g.order + len(g.edges), dtype=np.int64)
    lifted[: g.order] = colors + 1
    return lifted, schedule.lifted()


def as_coloring(mapping, order):
    """Dense coloring array from a ``{vertex: class}`` mapping."""
    colors = np.zeros(order, dtype=np.int64)
    for v, c in mapping.items():
        colors[v] = c
    return colors


def weaken_ok(strong, weak):
    """Whether ``weak`` is componentwise at most ``strong`` with equal length."""
    return len(strong.s) == len(weak.s) and all(w <= s for s, w in zip(strong.s, weak.s))


__all__ = [
    "SPacking",
    "GenericGraph",
    "HalinGraph",
    "DistanceOracle",
    "Violation",
    "VerificationReport",
    "build_halin",
    "full_graph",
    "all_pairs_distances",
    "cycle_distance",
    "verify_packing",
    "subdivide",
    "lift_coloring",
    "as_coloring",
    "check_coloring",
    "weaken_ok",
    "MAX_ORACLE_VERTICES",
]
