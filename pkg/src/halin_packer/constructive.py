"""Constructive colorings of cubic Halin graphs.

``color_1123`` colors with classes ``1, 1', 2, 3`` (indices 1..4) for the
schedule (1,1,2,3). ``color_122222`` colors with ``1, 2_a, ..., 2_e``
(indices 1..6) for (1,2,2,2,2,2), building on ``lemma1_tree_coloring``.

Both operations always verify their output. If the direct construction
leaves a violation, the exact solver supplies the coloring and the returned
diagnostics carry ``fallback_used=True``.
"""

from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import BadTree, FallbackExhausted
from .graph_core import (
    GenericGraph,
    HalinGraph,
    SPacking,
    all_pairs_distances,
    verify_packing,
)

ONE, ONE_P, TWO, THREE = 1, 2, 3, 4
SCHEDULE_1123 = SPacking((1, 1, 2, 3))
SCHEDULE_1222 = SPacking((1, 2, 2, 2))
SCHEDULE_122222 = SPacking((1, 2, 2, 2, 2, 2))
TWO_D, TWO_E = 5, 6

# Cycle pattern for the all-equal case; the leading 1 keeps the tree color.
_PATTERN_1213 = (ONE, TWO, ONE, THREE)


@dataclass
class ConflictRecord:
    kind: str
    x: int
    y: "int | None"
    a_i: int
    a_j: int
    resolution: tuple = ()
    orientation: str = ""


@dataclass
class ColoringDiagnostics:
    case_taken: str
    n_mod_4: int
    conflicts: list = field(default_factory=list)
    fallback_used: bool = False
    notes: list = field(default_factory=list)

    def to_json(self):
        out = asdict(self)
        out["conflicts"] = [
            dict(c, resolution=list(c["resolution"])) for c in out["conflicts"]
        ]
        return out


def two_color_tree(h):
    """Proper 2-coloring of the tree with classes 1 and 1' (indices 1, 2).

    The smallest internal vertex gets class 1; classes alternate with depth.
    """
    colors = np.zeros(h.order, dtype=np.int64)
    root = min(h.internal)
    colors[root] = ONE
    stack = [root]
    while stack:
        u = stack.pop()
        for w in h.tree_adjacency[u]:
            if colors[w] == 0:
                colors[w] = ONE_P if colors[u] == ONE else ONE
                stack.append(w)
    return colors


def _other_one(c):
    return ONE_P if c == ONE else ONE


def _flip_ones(colors, vertices):
    for v in vertices:
        if colors[v] == ONE:
            colors[v] = ONE_P
        elif colors[v] == ONE_P:
            colors[v] = ONE


class _Case1:
    """Cycle recoloring and Type-2 conflict resolution when the tree colors mix."""

    def __init__(self, h, phi, diag, literal=False):
        self.literal = literal
        self.h = h
        self.n = h.n
        self.a = h.cycle
        self.pos = h.position
        self.diag = diag
        self.colors = phi.copy()

    def at(self, i):
        return self.a[i % self.n]

    def base_pattern(self):
        phi = self.colors
        n, a = self.n, self.a
        i0 = next(i for i in range(n) if phi[a[i]] == ONE_P and phi[a[(i + 1) % n]] == ONE)
        self.i0 = i0
        colors = phi.copy()
        span = n - 2 if n % 4 == 2 else n
        for p in range(span):
            v = self.at(i0 + 1 + p)
            if p % 4 == 1:
                colors[v] = TWO
            elif p % 4 == 3:
                colors[v] = THREE
        if n % 4 == 2:
            v = self.at(i0 - 1)
            if phi[v] != ONE:
                colors[v] = TWO
        self.colors = colors

    def type1_conflicts(self):
        found = []
        for x in self.h.internal:
            leaves = [w for w in self.h.tree_adjacency[x] if self.h.is_leaf(w)]
            for i, p in enumerate(leaves):
                for q in leaves[i + 1:]:
                    if self.colors[p] == self.colors[q] and self.colors[p] in (TWO, THREE):
                        found.append(ConflictRecord("Type1", x, None, p, q))
        return found

    def type2_conflicts(self):
        h, colors = self.h, self.colors
        threes = [v for v in self.a if colors[v] == THREE]
        found = []
        for idx, p in enumerate(threes):
            u = h.parent(p)
            for q in threes[idx + 1:]:
                w = h.parent(q)
                if u != w and w in h.tree_adjacency[u]:
                    found.append((min(self.pos[p], self.pos[q]), p, q))
        found.sort()
        return [(p, q) for _, p, q in found]

    def _third(self, x, a_i, y):
        return next(z for z in self.h.tree_adjacency[x] if z not in (a_i, y))

    def _labelings(self, p, q):
        h = self.h
        u, w = h.parent(p), h.parent(q)
        out = []
        for x, a_i, y, a_j in ((u, p, w, q), (w, q, u, p)):
            xp = self._third(x, a_i, y)
            inside = {v for v in h.side(x, xp) if h.is_leaf(v)}
            dirn = 1 if self.at(self.pos[a_i] - 1) in inside else -1
            out.append((x, a_i, y, a_j, xp, dirn))
        return out

    def _triggers(self, x, a_i, y, a_j, xp, dirn):
        colors = self.colors
        i, j = self.pos[a_i], self.pos[a_j]
        inner, outer = self.at(i - dirn), self.at(i + dirn)
        near_j = self.at(j + dirn)
        sub_i = colors[near_j] == TWO and near_j in self.h.tree_adjacency[xp]
        sub_ii = colors[outer] == TWO
        sub_iii = colors[inner] == TWO
        return 4 * sub_iii + sub_i + sub_ii

    def options(self, p, q):
        options = self._labelings(p, q)
        if self.literal:
            # a_i is the endpoint with the larger cycle index
            options.sort(key=lambda o: -self.pos[o[1]])
        else:
            options.sort(key=lambda o: (self._triggers(*o), self.pos[o[1]]))
        return options

    def resolve(self, option):
        x, a_i, y, a_j, xp, dirn = option
        colors, h = self.colors, self.h
        i, j = self.pos[a_i], self.pos[a_j]
        inner, outer = self.at(i - dirn), self.at(i + dirn)
        steps = ["AssignedX2"]

        colors[x] = TWO
        if colors[outer] in (ONE, ONE_P):
            alpha = _other_one(colors[outer])
        else:
            alpha = ONE if colors[inner] != ONE else ONE_P
        colors[a_i] = alpha
        if colors[inner] == alpha:
            _flip_ones(colors, h.side(x, xp))
            steps.append("SwitchedOneClasses")

        near_j = self.at(j + dirn)
        if colors[near_j] == TWO and near_j in h.tree_adjacency[xp]:
            # Restore a tree color next to a_j, shift the 2 inward, swap 2/3 up to a_i.
            colors[near_j] = ONE_P if colors[h.parent(near_j)] == ONE else ONE
            colors[self.at(j + 2 * dirn)] = TWO
            t = j + 3 * dirn
            while self.at(t) != a_i:
                v = self.at(t)
                if colors[v] == TWO:
                    colors[v] = THREE
                elif colors[v] == THREE:
                    colors[v] = TWO
                t += dirn
            steps.append("SubcaseI")
        if colors[outer] == TWO:
            colors[outer] = THREE
            steps.append("SubcaseII")
        if colors[inner] == TWO:
            steps.append("SubcaseIII")
            self.diag.notes.append(f"subcase (iii) reached at cycle vertex {inner}")

        self.diag.conflicts.append(
            ConflictRecord(
                "Type2", x, y, a_i, a_j, tuple(steps),
                "clockwise" if dirn == 1 else "counterclockwise",
            )
        )
        return x

    def run(self, oracle=None):
        """Recolor the cycle and resolve Type-2 conflicts one at a time.

        With an ``oracle`` both labelings of each conflict are explored depth
        first until the result verifies; otherwise (and in literal mode) the
        first labeling is always taken.
        """
        self.base_pattern()
        for rec in self.type1_conflicts():
            rec.resolution = ("NoneNeeded",)
            self.diag.conflicts.append(rec)
            self.diag.notes.append(f"type-1 conflict at tree vertex {rec.x}")
        self.oracle = None if self.literal else oracle
        self.leaves_left = 64
        start = (self.colors.copy(), len(self.diag.conflicts), len(self.diag.notes))
        assigned = self._explore([], 2 * self.n)
        if assigned is None:
            self.colors = start[0]
            del self.diag.conflicts[start[1]:], self.diag.notes[start[2]:]
            self.oracle = None
            assigned = self._explore([], 2 * self.n)
        return self.colors, assigned

    def _explore(self, assigned, budget):
        pending = self.type2_conflicts()
        if not pending or not budget:
            if pending:
                self.diag.notes.append("type-2 resolution did not settle")
            if self.oracle is None:
                return assigned
            self.leaves_left -= 1
            ok = verify_packing(self.h.graph, SCHEDULE_1123, self.colors, self.oracle).valid
            return assigned if ok else None
        options = self.options(*pending[0])
        if self.oracle is None:
            options = options[:1]
        for option in options:
            if self.oracle is not None and self.leaves_left <= 0:
                return None
            saved = (self.colors.copy(), len(self.diag.conflicts), len(self.diag.notes))
            x = self.resolve(option)
            found = self._explore(assigned + [x], budget - 1)
            if found is not None:
                return found
            self.colors = saved[0]
            del self.diag.conflicts[saved[1]:], self.diag.notes[saved[2]:]
        return None


def _case2(h, phi, diag):
    n, a = h.n, h.cycle
    colors = phi.copy()
    if colors[a[0]] == ONE_P:
        colors = np.where(colors == ONE, ONE_P, ONE)

    def paint(start, count):
        for p in range(count):
            colors[a[(start + p) % n]] = _PATTERN_1213[p % 4]

    if n % 4 == 0:
        paint(0, n)
        return colors

    single = []
    for w in h.internal:
        on_cycle = [z for z in h.tree_adjacency[w] if h.is_leaf(z)]
        if len(on_cycle) == 1:
            single.append((w, on_cycle[0]))
    if single:
        w, a_k = single[0]
        k = h.position[a_k]
        colors[w] = TWO
        colors[a_k] = ONE_P
        if n % 4 in (1, 2):
            paint(k + 1, n - 1)
        else:
            paint(k + 1, n - 3)
            colors[a[(k - 2) % n]] = TWO
            colors[a[(k - 1) % n]] = ONE
        return colors

    if n % 4 != 2:
        diag.notes.append(f"no single-attachment vertex although n mod 4 = {n % 4}")
    w = next(v for v in h.internal if any(h.is_leaf(z) for z in h.tree_adjacency[v]))
    p, q = [z for z in h.tree_adjacency[w] if h.is_leaf(z)]
    if h.position[q] != (h.position[p] + 1) % n:
        p, q = q, p
    j = h.position[q]
    colors[w] = TWO
    colors[q] = ONE_P
    paint(j + 1, n - 1)
    return colors


def _fallback(h, schedule, diag, oracle, cfg):
    from .exact_solver import decide

    diag.fallback_used = True
    result = decide(h.graph, schedule, cfg, oracle=oracle)
    if result.status != "Sat":
        raise FallbackExhausted(
            f"exact solver returned {result.status} for schedule {schedule}", diag
        )
    return result.coloring


def color_1123(h, cfg=None, oracle=None):
    """Color a cubic Halin graph for the schedule (1,1,2,3).

    Returns ``(colors, diagnostics)``; classes 1, 2, 3, 4 stand for 1, 1', 2, 3.
    """
    if oracle is None:
        oracle = all_pairs_distances(h.graph)
    phi = two_color_tree(h)
    n = h.n
    if h.order == 4:
        diag = ColoringDiagnostics("SpecialK4", n % 4)
        colors = np.zeros(4, dtype=np.int64)
        colors[h.internal[0]] = ONE
        for cls, v in zip((ONE_P, TWO, THREE), h.cycle):
            colors[v] = cls
    elif len({int(phi[v]) for v in h.cycle}) == 1:
        diag = ColoringDiagnostics("Case2", n % 4)
        colors = _case2(h, phi, diag)
    else:
        diag = ColoringDiagnostics("Case1", n % 4)
        colors, assigned = _Case1(h, phi, diag).run(oracle)
        for idx, u in enumerate(assigned):
            for w in assigned[idx + 1:]:
                if oracle(u, w) <= 2:
                    diag.notes.append(f"tree vertices {u} and {w} both got 2 at distance {oracle(u, w)}")

    if not verify_packing(h.graph, SCHEDULE_1123, colors, oracle).valid:
        colors = _fallback(h, SCHEDULE_1123, diag, oracle, cfg)
    return colors, diag


def _tree_adjacency(t):
    if isinstance(t, HalinGraph):
        return t.tree_adjacency
    if isinstance(t, GenericGraph):
        return t.adjacency
    adjacency = getattr(t, "adjacency", t)
    return tuple(tuple(nbrs) for nbrs in adjacency)


def lemma1_tree_coloring(t):
    """(1,2,2,2)-packing coloring of a cubic tree with every leaf in class 1.

    Accepts a :class:`PlaneCubicTree`, a :class:`HalinGraph` (its tree is
    used), a tree :class:`GenericGraph` or plain neighbor lists. Classes 2, 3,
    4 stand for 2_a, 2_b, 2_c.
    """
    adj = _tree_adjacency(t)
    order = len(adj)
    if order < 4:
        raise BadTree(f"tree order {order} < 4")
    if any(len(a) not in (1, 3) for a in adj):
        raise BadTree("tree degrees must be 1 or 3")
    if sum(len(a) for a in adj) != 2 * (order - 1) or not GenericGraph(adj).is_connected():
        raise BadTree("not a tree")

    alive = [True] * order
    degree = [len(a) for a in adj]
    removed = []
    remaining = order
    while remaining > 4:
        for z in range(order):
            if not alive[z] or degree[z] != 3:
                continue
            leaves = [w for w in adj[z] if alive[w] and degree[w] == 1]
            if len(leaves) >= 2:
                break
        x, y = leaves[:2]
        for v in (x, y):
            alive[v] = False
        degree[z] = 1
        remaining -= 2
        removed.append((z, x, y))

    colors = np.zeros(order, dtype=np.int64)
    for v in range(order):
        if alive[v]:
            colors[v] = 2 if degree[v] == 3 else 1

    for z, x, y in reversed(removed):
        colors[x] = colors[y] = 1
        zp = next(w for w in adj[z] if w not in (x, y))
        near = {int(colors[zp])} | {int(colors[w]) for w in adj[zp] if w != z}
        free = [c for c in (2, 3, 4) if c not in near]
        if free:
            colors[z] = free[0]
        else:
            colors[z] = colors[zp]
            colors[zp] = 1
    return colors


def _block_sequence(n):
    for fours in range(3):
        rest = n - 4 * fours
        if rest >= 0 and rest % 3 == 0:
            return [ONE, TWO_D, ONE, TWO_E] * fours + [ONE, TWO_D, TWO_E] * (rest // 3)
    return None


def color_122222(h, cfg=None, oracle=None):
    """Color a cubic Halin graph for the schedule (1,2,2,2,2,2).

    The tree keeps its Lemma-1 coloring; the cycle is tiled by the blocks
    ``1 2_d 2_e`` and ``1 2_d 1 2_e``. A 5-cycle admits no such tiling and is
    completed greedily or by the exact solver.
    """
    if oracle is None:
        oracle = all_pairs_distances(h.graph)
    g = h.graph
    diag = ColoringDiagnostics("Blocks", h.n % 4)
    colors = lemma1_tree_coloring(h)
    seq = _block_sequence(h.n)
    if seq is not None:
        for v, c in zip(h.cycle, seq):
            colors[v] = c
        if not verify_packing(g, SCHEDULE_122222, colors, oracle).valid:
            diag.notes.append("block tiling failed verification")
            colors = _fallback(h, SCHEDULE_122222, diag, oracle, cfg)
        return colors, diag

    diag.notes.append(f"cycle length {h.n} has no block tiling")
    diag.fallback_used = True
    for shift in range(h.n):
        for extra in (2, 3, 4):
            trial = colors.copy()
            for p, c in enumerate((ONE, TWO_D, ONE, TWO_E, extra)):
                trial[h.cycle[(shift + p) % h.n]] = c
            if verify_packing(g, SCHEDULE_122222, trial, oracle).valid:
                diag.notes.append(f"greedy completion reused class {extra} at shift {shift}")
                return trial, diag
    diag.notes.append("greedy completion failed; using exact solver")
    return _fallback(h, SCHEDULE_122222, diag, oracle, cfg), diag
