"""Cubic Halin graph generation: enumeration, seeded random growth, named instances.

Enumeration walks every plane cubic tree (root of degree 3, ordered full
binary subtrees), closes it through its left-to-right leaf order and keeps
one representative per isomorphism class. Halin graphs are 3-connected and
planar, so their embedding is unique up to reflection; the canonical code is
the least breadth-first code over every starting dart and both orientations
of the rotation system.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import BoundTooLarge, InvalidSize, UnknownName
from .graph_core import build_halin

MAX_ENUMERATION_VERTICES = 24


@dataclass(frozen=True)
class PlaneCubicTree:
    """Rooted tree with ordered children, vertices numbered in preorder.

    ``children[v]`` lists the children of ``v`` from left to right. The root
    ``0`` has three children and every other internal vertex has two, so
    all degrees are 1 or 3.
    """

    children: tuple

    @property
    def order(self):
        return len(self.children)

    @cached_property
    def adjacency(self):
        adj = [[] for _ in self.children]
        for u, kids in enumerate(self.children):
            for w in kids:
                adj[u].append(w)
                adj[w].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def edges(self):
        return [(u, w) for u, kids in enumerate(self.children) for w in kids]

    def leaves(self):
        """Leaves in left-to-right traversal order."""
        out = []
        stack = [0]
        while stack:
            u = stack.pop()
            if not self.children[u]:
                out.append(u)
            stack.extend(reversed(self.children[u]))
        return out

    def to_halin(self):
        return build_halin(self.edges(), self.leaves())

    @classmethod
    def from_shape(cls, shape):
        """Build from a nested shape: ``None`` is a leaf, a tuple lists subtrees."""
        children = []

        def visit(node):
            v = len(children)
            children.append([])
            if node is not None:
                for sub in node:
                    children[v].append(visit(sub))
            return v

        visit(shape)
        return cls(tuple(tuple(c) for c in children))


@lru_cache(maxsize=None)
def _binary_shapes(internal):
    """All ordered full binary tree shapes with ``internal`` internal nodes."""
    if internal == 0:
        return (None,)
    out = []
    for left in range(internal):
        for a in _binary_shapes(left):
            for b in _binary_shapes(internal - 1 - left):
                out.append((a, b))
    return tuple(out)


def plane_cubic_trees(num_internal):
    """Every plane cubic tree with ``num_internal`` internal vertices."""
    if num_internal < 1:
        raise InvalidSize("a cubic tree needs at least one internal vertex")
    rest = num_internal - 1
    for a in range(rest + 1):
        for b in range(rest - a + 1):
            c = rest - a - b
            for sa in _binary_shapes(a):
                for sb in _binary_shapes(b):
                    for sc in _binary_shapes(c):
                        yield PlaneCubicTree.from_shape((sa, sb, sc))


def rotation_system(h):
    """Counter-clockwise neighbor order around each vertex of the plane closure.

    The cycle is drawn clockwise in its stored order with the tree inside.
    """
    n = h.n
    pos = h.position
    rot = [None] * h.order
    for i, v in enumerate(h.cycle):
        rot[v] = (h.parent(v), h.cycle[(i + 1) % n], h.cycle[(i - 1) % n])
    for v in h.internal:
        starts = []
        for w in h.tree_adjacency[v]:
            arc = {pos[x] for x in h.side(v, w) if x in pos}
            start = next(p for p in arc if (p - 1) % n not in arc)
            starts.append((start, w))
        starts.sort(reverse=True)
        rot[v] = tuple(w for _, w in starts)
    return rot


def _code_from(rot, u0, w0, flip):
    label = {u0: 0}
    ref = {u0: w0}
    queue = [u0]
    code = []
    for x in queue:
        nbrs = rot[x]
        d = len(nbrs)
        i = nbrs.index(ref[x])
        for t in range(d):
            y = nbrs[(i - t) % d] if flip else nbrs[(i + t) % d]
            if y not in label:
                label[y] = len(label)
                ref[y] = x
                queue.append(y)
            code.append(label[y])
    return tuple(code)


def canonical_code(h):
    """Isomorphism invariant that separates non-isomorphic cubic Halin graphs."""
    rot = rotation_system(h)
    best = None
    for u in range(h.order):
        for w in rot[u]:
            for flip in (False, True):
                code = _code_from(rot, u, w, flip)
                if best is None or code < best:
                    best = code
    return (h.order,) + best


def enumerate_cubic_halin(max_vertices, cap=MAX_ENUMERATION_VERTICES):
    """One representative per isomorphism class, ordered by (order, canonical code)."""
    if max_vertices < 4:
        raise InvalidSize("max_vertices must be at least 4")
    if max_vertices > cap:
        raise BoundTooLarge(f"max_vertices={max_vertices} exceeds the cap {cap}")
    found = {}
    for order in range(4, max_vertices + 1, 2):
        for tree in plane_cubic_trees(order // 2 - 1):
            h = tree.to_halin()
            code = canonical_code(h)
            if code not in found:
                found[code] = h
    return [found[code] for code in sorted(found)]


def random_cubic_halin(num_internal, seed):
    """Grow a plane cubic tree by expanding uniformly chosen leaves, then close it."""
    if num_internal < 1:
        raise InvalidSize("num_internal must be at least 1")
    rng = np.random.default_rng(seed)
    children = [[1, 2, 3], [], [], []]
    leaves = [1, 2, 3]
    for _ in range(num_internal - 1):
        leaf = leaves.pop(int(rng.integers(len(leaves))))
        a, b = len(children), len(children) + 1
        children[leaf] = [a, b]
        children.extend(([], []))
        leaves.extend((a, b))
    return _preorder(children).to_halin()


def _preorder(children):
    relabel = {}
    stack = [0]
    while stack:
        u = stack.pop()
        relabel[u] = len(relabel)
        stack.extend(reversed(children[u]))
    out = [None] * len(children)
    for u, kids in enumerate(children):
        out[relabel[u]] = tuple(relabel[w] for w in kids)
    return PlaneCubicTree(tuple(out))


_NAMED = {
    "K4": ([("r", "l1"), ("r", "l2"), ("r", "l3")], ["l1", "l2", "l3"]),
    "prism6": (
        [("v1", "v2"), ("v1", "l1"), ("v1", "l2"), ("v2", "l3"), ("v2", "l4")],
        ["l1", "l2", "l3", "l4"],
    ),
    # Root with three branches, each branch a vertex carrying two leaves.
    "G1": (
        [
            ("r", "c1"), ("r", "c2"), ("r", "c3"),
            ("c1", "l1"), ("c1", "l2"),
            ("c2", "l3"), ("c2", "l4"),
            ("c3", "l5"), ("c3", "l6"),
        ],
        ["l1", "l2", "l3", "l4", "l5", "l6"],
    ),
}

INSTANCE_NAMES = tuple(_NAMED)


def named_instance(name):
    try:
        edges, cycle = _NAMED[name]
    except KeyError:
        raise UnknownName(f"unknown instance {name!r}; choose from {', '.join(_NAMED)}") from None
    return build_halin(edges, cycle)
