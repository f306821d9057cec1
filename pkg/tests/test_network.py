from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from localizability import (
    NetworkError,
    barycentric_neighbors,
    build_network,
    generate_erdos_renyi,
    generate_unit_disk,
    generated_graph,
    GeneratorConfig,
)

from conftest import complete_network, networks


def brute_barycentric(net, i, d):
    """j qualifies if some d other neighbours of i form a clique with j."""
    nbrs = net.neighbors[i]
    out = set()
    for j in nbrs:
        others = [u for u in nbrs if u != j]
        for group in combinations(others, d):
            members = (j,) + group
            if all(net.has_edge(a, b) for a, b in combinations(members, 2)):
                out.add(j)
                break
    return out


def test_build_single_edge():
    net = build_network([(0, 1)], {0}, 2)
    assert net.edge_count == 1
    assert net.roles == ("anchor", "agent")


def test_build_deduplicates_reversed_edges():
    net = build_network([(0, 1), (1, 0)], set(), 2)
    assert net.edge_count == 1
    assert net.neighbors == ((1,), (0,))


def test_build_rejects_out_of_range():
    with pytest.raises(NetworkError, match="id out of range"):
        build_network([(0, 5)], set(), 3)


def test_build_rejects_self_loop():
    with pytest.raises(NetworkError, match=r"self-loop in edge \(2, 2\)"):
        build_network([(2, 2)], set(), 3)


def test_build_rejects_bad_anchor_and_positions():
    with pytest.raises(NetworkError):
        build_network([], {7}, 3)
    with pytest.raises(NetworkError):
        build_network([], set(), 3, positions=[[0, 0], [1, 1]])


def test_positions_are_read_only():
    net = build_network([], set(), 2, positions=[[0.0, 0.0], [1.0, 2.0]])
    with pytest.raises(ValueError):
        net.positions[0, 0] = 5.0


def test_k4_barycentric_neighbors():
    net = complete_network(4, set())
    assert barycentric_neighbors(net, 0, 2) == {1, 2, 3}


def test_star_has_no_barycentric_neighbors():
    net = build_network([(0, 1), (0, 2), (0, 3)], set(), 4)
    assert barycentric_neighbors(net, 0, 2) == frozenset()


def test_witnesses_need_not_be_barycentric_themselves():
    # 0 sees 1..4; triangle 1-2-3 plus the pendant 4 attached to 1 only
    net = build_network([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (1, 3), (1, 4)], set(), 5)
    assert barycentric_neighbors(net, 0, 2) == {1, 2, 3}


def test_dimension_must_be_at_least_two(k4):
    with pytest.raises(ValueError):
        barycentric_neighbors(k4, 0, 1)


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("d", [2, 3])
def test_barycentric_matches_enumeration_on_gnp(seed, d):
    net = generate_erdos_renyi(12, 3, 0.4, seed=seed)
    for i in range(net.node_count):
        assert barycentric_neighbors(net, i, d) == brute_barycentric(net, i, d)


@given(networks(max_nodes=9))
@settings(max_examples=150, deadline=None)
def test_barycentric_matches_enumeration(net):
    for d in (2, 3):
        for i in range(net.node_count):
            assert barycentric_neighbors(net, i, d) == brute_barycentric(net, i, d)


def test_generated_graph_of_k4_keeps_everything():
    net = complete_network(4, {0})
    ga = generated_graph(net, 2)
    assert ga.edges == net.edges
    assert ga.edge_count == 6


def test_generated_graph_of_path_is_empty():
    net = build_network([(0, 1), (1, 2), (2, 3)], set(), 4)
    assert generated_graph(net, 2).edges == frozenset()


def test_generated_graph_on_disk_network_matches_per_node_recomputation():
    net = generate_unit_disk(GeneratorConfig(20, 4, 0.4, seed=3))
    ga = generated_graph(net, 2)
    assert ga.edge_count > 0
    for i in range(net.node_count):
        assert set(ga.neighbors[i]) == barycentric_neighbors(net, i, 2)
    expected = {tuple(sorted((i, j))) for i in range(20) for j in barycentric_neighbors(net, i, 2)}
    assert ga.edges == expected


@given(networks())
@settings(max_examples=200, deadline=None)
def test_generated_graph_symmetric_subgraph(net):
    for d in (2, 3):
        ga = generated_graph(net, d)
        assert ga.is_symmetric()
        assert ga.edges <= net.edges
        for i in range(net.node_count):
            if ga.neighbors[i]:
                assert net.degree(i) >= d + 1


def test_induced_keeps_ids():
    net = complete_network(4, {0})
    sub = net.induced({0, 1, 2})
    assert sub.node_count == 4
    assert sub.neighbors[3] == ()
    assert sub.edge_count == 3


def test_equality_includes_positions():
    a = build_network([(0, 1)], {0}, 2, positions=[[0, 0], [1, 0]])
    b = build_network([(1, 0)], {0}, 2, positions=np.array([[0, 0], [1, 0]]))
    c = build_network([(1, 0)], {0}, 2)
    assert a == b
    assert a != c
