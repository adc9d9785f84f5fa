import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halin_packer import (
    PlaneCubicTree,
    SPacking,
    build_halin,
    canonical_code,
    decide,
    enumerate_cubic_halin,
    named_instance,
    random_cubic_halin,
)
from halin_packer.errors import BoundTooLarge, InvalidSize, UnknownName
from halin_packer.generators import INSTANCE_NAMES, plane_cubic_trees

import oracles

# Counts per order, produced by oracles.halin_counts and re-derived below.
FROZEN_COUNTS = {4: 1, 6: 1, 8: 1, 10: 3, 12: 4, 14: 12}


def iso(a, b):
    return nx.is_isomorphic(oracles.to_networkx(a.graph), oracles.to_networkx(b.graph))


def by_order(graphs):
    counts = {}
    for h in graphs:
        counts[h.order] = counts.get(h.order, 0) + 1
    return counts


def test_smallest_enumerations():
    (only,) = enumerate_cubic_halin(4)
    assert iso(only, named_instance("K4"))
    k4, prism = enumerate_cubic_halin(6)
    assert iso(k4, named_instance("K4"))
    assert iso(prism, named_instance("prism6"))


def test_counts_match_brute_force():
    assert oracles.halin_counts(14) == FROZEN_COUNTS


def test_enumeration_counts(enumerated14):
    assert by_order(enumerated14) == FROZEN_COUNTS


def test_enumeration_has_no_isomorphic_pair(enumerated14):
    for a, b in itertools.combinations(enumerated14, 2):
        if a.order == b.order:
            assert not iso(a, b)


def test_enumeration_is_deterministic(enumerated14):
    again = enumerate_cubic_halin(14)
    assert [canonical_code(h) for h in again] == [canonical_code(h) for h in enumerated14]
    assert [h.tree_edges() for h in again] == [h.tree_edges() for h in enumerated14]


def test_enumeration_bounds():
    with pytest.raises(InvalidSize):
        enumerate_cubic_halin(3)
    with pytest.raises(BoundTooLarge):
        enumerate_cubic_halin(26)
    with pytest.raises(BoundTooLarge):
        enumerate_cubic_halin(12, cap=10)


def test_plane_trees_close_to_valid_halin_graphs():
    for m in range(1, 6):
        trees = list(plane_cubic_trees(m))
        assert len({t.children for t in trees}) == len(trees)
        for t in trees:
            h = t.to_halin()
            assert h.n == m + 2
            assert [h.names[v] for v in h.cycle] == t.leaves()


def test_from_shape():
    t = PlaneCubicTree.from_shape(((None, None), None, None))
    assert t.children == ((1, 4, 5), (2, 3), (), (), (), ())
    assert t.leaves() == [2, 3, 4, 5]


def test_random_small_shapes_are_forced():
    for seed in [0, 1, 2**63 - 1]:
        assert canonical_code(random_cubic_halin(1, seed)) == canonical_code(named_instance("K4"))
        assert canonical_code(random_cubic_halin(2, seed)) == canonical_code(named_instance("prism6"))


def test_random_is_deterministic():
    a, b = random_cubic_halin(5, 42), random_cubic_halin(5, 42)
    assert a.tree_edges() == b.tree_edges() and a.cycle == b.cycle
    shapes = {canonical_code(random_cubic_halin(8, seed)) for seed in range(30)}
    assert len(shapes) > 1


@pytest.mark.parametrize("m", [1, 3, 10, 19, 40])
def test_random_sizes(m):
    h = random_cubic_halin(m, m)
    assert len(h.internal) == m and h.n == m + 2
    assert set(h.graph.degrees()) == {3}


def test_random_rejects_empty():
    with pytest.raises(InvalidSize):
        random_cubic_halin(0, 1)


def test_named_instances():
    assert named_instance("K4").order == 4
    g1 = named_instance("G1")
    assert g1.order == 10 and len(g1.graph.edges) == 15
    assert set(g1.graph.degrees()) == {3}
    assert set(INSTANCE_NAMES) == {"K4", "prism6", "G1"}
    with pytest.raises(UnknownName):
        named_instance("nosuch")


def test_g1_reconstruction_is_pinned():
    g1 = named_instance("G1")
    assert decide(g1.graph, SPacking((1, 1, 3, 3))).status == "Unsat"


@st.composite
def relabeled(draw):
    h = random_cubic_halin(draw(st.integers(1, 9)), draw(st.integers(0, 2**32)))
    perm = draw(st.permutations(range(h.order)))
    shift = draw(st.integers(0, h.n - 1))
    reverse = draw(st.booleans())
    cycle = [perm[v] for v in h.cycle]
    cycle = cycle[shift:] + cycle[:shift]
    if reverse:
        cycle.reverse()
    edges = [(perm[u], perm[w]) for u, w in h.tree_edges()]
    return h, build_halin(edges, cycle)


@given(relabeled())
@settings(max_examples=60, deadline=None)
def test_canonical_code_ignores_labels_and_drawing(pair):
    h, g = pair
    assert canonical_code(h) == canonical_code(g)
