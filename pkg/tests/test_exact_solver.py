import io
import itertools

import numpy as np
import pytest

from halin_packer import (
    GenericGraph,
    SearchConfig,
    SPacking,
    all_pairs_distances,
    decide,
    enumerate_cubic_halin,
    named_instance,
    naive_decide,
    packing_chromatic_number,
    random_cubic_halin,
    survey,
    verify_packing,
    write_survey_csv,
)
from halin_packer.errors import InvalidSchedule, OracleTooLarge, SearchLimitReached
from halin_packer.exact_solver import CSV_HEADER, search_order

import oracles


def cycle_graph(n):
    return GenericGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return GenericGraph.from_edges(n, list(itertools.combinations(range(n), 2)))


@pytest.mark.parametrize(
    "name, schedule, status",
    [
        ("G1", (1, 1, 3, 3), "Unsat"),
        ("G1", (1, 2, 3, 4), "Unsat"),
        ("G1", (1, 1, 2, 3), "Sat"),
        ("prism6", (1, 2, 2, 2), "Unsat"),
        ("prism6", (1, 2, 2, 2, 2, 2), "Sat"),
        ("K4", (1, 1, 2, 3), "Sat"),
    ],
)
def test_decide_examples(name, schedule, status):
    g = named_instance(name).graph
    result = decide(g, SPacking(schedule))
    assert result.status == status
    if status == "Sat":
        assert verify_packing(g, SPacking(schedule), result.coloring).valid
    else:
        assert result.coloring is None


def test_packing_chromatic_numbers():
    assert packing_chromatic_number(cycle_graph(4), 6) == 3
    assert packing_chromatic_number(GenericGraph.from_edges(2, [(0, 1)]), 4) == 2
    assert packing_chromatic_number(named_instance("K4").graph, 6) == 4
    assert packing_chromatic_number(complete_graph(5), 4) is None
    with pytest.raises(ValueError):
        packing_chromatic_number(cycle_graph(4), 0)


def test_limits_give_unknown():
    g = random_cubic_halin(12, 1).graph
    result = decide(g, SPacking((1, 1, 3, 3)), SearchConfig(node_limit=5, chunk_nodes=2))
    assert result.status == "Unknown" and result.coloring is None
    assert result.nodes_explored == 5
    with pytest.raises(SearchLimitReached):
        packing_chromatic_number(g, 6, SearchConfig(node_limit=3))


def test_config_validation():
    for kwargs in [{"node_limit": 0}, {"time_limit": 0}, {"chunk_nodes": -1}]:
        with pytest.raises(ValueError):
            SearchConfig(**kwargs)


def test_schedule_and_size_caps():
    with pytest.raises(InvalidSchedule):
        decide(cycle_graph(4), SPacking(tuple(range(1, 18))))
    with pytest.raises(OracleTooLarge):
        decide(cycle_graph(4097), SPacking((1, 2, 3)))


def test_chunking_does_not_change_the_search():
    g = named_instance("G1").graph
    s = SPacking((1, 2, 3, 4))
    whole = decide(g, s)
    chunked = decide(g, s, SearchConfig(chunk_nodes=7))
    assert (whole.status, whole.nodes_explored) == (chunked.status, chunked.nodes_explored)


def test_search_is_deterministic():
    g = random_cubic_halin(10, 3).graph
    runs = [decide(g, SPacking((1, 1, 2, 4))) for _ in range(3)]
    assert len({(r.status, r.nodes_explored) for r in runs}) == 1
    assert all(np.array_equal(r.coloring, runs[0].coloring) for r in runs)


def test_search_order_prefers_constrained_vertices():
    dist = all_pairs_distances(cycle_graph(6)).dist
    order = search_order(dist, 1)
    assert order[0] == 0 and set(order.tolist()) == set(range(6))
    assert dist[order[0], order[1]] == 1


@pytest.mark.parametrize("schedule", [(1, 1, 2, 3), (1, 2, 2, 2), (1, 2, 3), (1, 1, 3, 3)])
def test_agrees_with_naive_oracle_on_small_graphs(connected_le8, schedule):
    s = SPacking(schedule)
    for n, edges in connected_le8:
        if n > 6:
            continue
        g = GenericGraph.from_edges(n, edges)
        found, colors = naive_decide(g, s)
        result = decide(g, s)
        assert (result.status == "Sat") == found
        if found:
            assert verify_packing(g, s, colors).valid


def test_symmetry_breaking_keeps_status():
    for h in enumerate_cubic_halin(10):
        for s in [SPacking((1, 2, 2, 2)), SPacking((1, 1, 3, 3)), SPacking((1, 2, 2, 2, 2))]:
            on = decide(h.graph, s)
            off = decide(h.graph, s, SearchConfig(symmetry_breaking=False))
            assert on.status == off.status
            assert on.nodes_explored <= off.nodes_explored


def test_monotone_in_schedule():
    for h in enumerate_cubic_halin(10):
        strong, weak = SPacking((1, 2, 2, 3)), SPacking((1, 1, 2, 2))
        if decide(h.graph, strong).status == "Sat":
            assert decide(h.graph, weak).status == "Sat"


def test_naive_refuses_large_spaces():
    with pytest.raises(ValueError):
        naive_decide(cycle_graph(20), SPacking((1, 2, 3)))


def test_survey_rows_and_csv():
    assert survey([], [SPacking((1, 1, 2, 3))]) == []
    graphs = enumerate_cubic_halin(10)
    rows = survey(graphs, [SPacking((1, 1, 2, 3))], mode="crosscheck")
    assert [r.graph_id for r in rows] == ["n4-0", "n6-0", "n8-0", "n10-0", "n10-1", "n10-2"]
    assert {r.status for r in rows} == {"ConstructiveValid"}
    exact = survey(graphs, [SPacking((1, 1, 2, 3))])
    assert {r.status for r in exact} == {"Sat"}
    threaded = survey(graphs, [SPacking((1, 1, 2, 3)), SPacking((1, 2, 2, 2))], threads=4)
    serial = survey(graphs, [SPacking((1, 1, 2, 3)), SPacking((1, 2, 2, 2))], threads=1)
    assert [(r.graph_id, r.status) for r in threaded] == [(r.graph_id, r.status) for r in serial]

    buf = io.StringIO()
    write_survey_csv(rows[:2], buf, timing=False)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "n4-0,4,1-1-2-3,ConstructiveValid,"
    with pytest.raises(ValueError):
        survey(graphs, [SPacking((1, 2))], mode="bogus")


def test_survey_rows_report_unknown():
    rows = survey(enumerate_cubic_halin(10)[-1:], [SPacking((1, 1, 3, 3))], SearchConfig(node_limit=2))
    assert rows[0].status == "Unknown"


def test_solver_distances_match_reference():
    g = random_cubic_halin(25, 8).graph
    assert np.array_equal(all_pairs_distances(g).dist, oracles.scipy_distances(g))
