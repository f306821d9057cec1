import random

import pytest
from hypothesis import given, settings

from localizability import build_flow_network, build_network, generate_erdos_renyi, generated_graph

from conftest import networks


def names(fn, arcs=None):
    return {(fn.vertex_name(t), fn.vertex_name(h)) for t, h, _ in (arcs or fn.arcs())}


@pytest.fixture
def small():
    # nodes: 0 = agent a0, 1 = agent a1, 2 = anchor b0
    net = build_network([(0, 1), (0, 2)], {2}, 3)
    return build_flow_network(net.neighbors, net.anchors)


def test_small_construction(small):
    assert small.vertex_count == 6
    assert names(small) == {
        ("a0_in", "a0_out"),
        ("a1_in", "a1_out"),
        ("a0_out", "a1_in"),
        ("a1_out", "a0_in"),
        ("a0_out", "b0"),
        ("b0", "omega"),
    }
    assert small.arc_count == 6


def test_anchors_only():
    fn = build_flow_network([(), ()], {0, 1})
    assert fn.vertex_count == 3
    assert names(fn) == {("b0", "omega"), ("b1", "omega")}


def test_index_map_layout():
    net = build_network([], {1, 4}, 5)
    fn = build_flow_network(net.neighbors, net.anchors)
    assert fn.agents == (0, 2, 3)
    assert [fn.in_vertex(i) for i in fn.agents] == [0, 2, 4]
    assert [fn.out_vertex(i) for i in fn.agents] == [1, 3, 5]
    assert [fn.anchor_vertex(a) for a in (1, 4)] == [6, 7]
    assert fn.sink == 8
    assert [fn.node_of(v) for v in range(9)] == [0, 0, 2, 2, 3, 3, 1, 4, None]


def test_remove_agent(small):
    small.remove_agent(1)
    assert names(small) == {("a0_in", "a0_out"), ("a0_out", "b0"), ("b0", "omega")}
    before = small.arcs(include_zero=True)
    small.remove_agent(1)
    assert small.arcs(include_zero=True) == before


def test_remove_anchor_is_an_error(small):
    with pytest.raises(ValueError, match="anchor"):
        small.remove_agent(2)


def test_copy_is_independent(small):
    clone = small.copy()
    clone.remove_agent(0)
    assert small.arc_count == clone.arc_count
    assert len(small.arcs()) == 6
    assert len(clone.arcs()) < 6
    assert small.removed == set()


@pytest.mark.parametrize("seed", range(20))
def test_arc_count_formula(seed):
    net = generate_erdos_renyi(10, 3, 0.35, seed=seed)
    fn = build_flow_network(net.neighbors, net.anchors)
    agents = [i for i in range(10) if i not in net.anchors]
    agent_agent = sum(1 for u, v in net.edges if u not in net.anchors and v not in net.anchors)
    agent_anchor = sum(1 for u, v in net.edges if (u in net.anchors) != (v in net.anchors))
    assert fn.arc_count == len(agents) + 2 * agent_agent + agent_anchor + 3
    # independent re-enumeration from the node side
    recount = len(agents) + len(net.anchors)
    recount += sum(len(net.neighbors[i]) for i in agents)
    assert fn.arc_count == recount


def check_structure(fn):
    n = len(fn.agents)
    arcs = fn.arcs(include_zero=True)
    assert all(c == 1 for _, _, c in arcs)
    internal = [(t, h) for t, h, _ in arcs if h == t + 1 and t < 2 * n and t % 2 == 0]
    assert len(internal) == n
    for a in fn.anchors:
        out = [h for t, h, _ in arcs if t == fn.anchor_vertex(a)]
        assert out == [fn.sink]
    assert not [1 for t, _, _ in arcs if t == fn.sink]
    for i in fn.agents:
        into_out = [t for t, h, _ in arcs if h == fn.out_vertex(i)]
        assert into_out == [fn.in_vertex(i)]


@given(networks())
@settings(max_examples=150, deadline=None)
def test_structural_invariants(net):
    check_structure(build_flow_network(net.neighbors, net.anchors))
    check_structure(build_flow_network(generated_graph(net).neighbors, net.anchors))


def random_anchor_path(net, rng):
    agents = [i for i in range(net.node_count) if i not in net.anchors]
    start = rng.choice(agents)
    path = [start]
    while True:
        options = [u for u in net.neighbors[path[-1]] if u not in path]
        if not options:
            return None
        nxt = rng.choice(options)
        path.append(nxt)
        if nxt in net.anchors:
            return path


@pytest.mark.parametrize("seed", range(10))
def test_paths_map_to_arc_sequences(seed):
    net = generate_erdos_renyi(12, 3, 0.3, seed=seed)
    fn = build_flow_network(net.neighbors, net.anchors)
    arcs = {(t, h) for t, h, _ in fn.arcs()}
    rng = random.Random(seed)
    checked = 0
    for _ in range(200):
        path = random_anchor_path(net, rng)
        if path is None:
            continue
        checked += 1
        for u, v in zip(path, path[1:]):
            assert (fn.in_vertex(u), fn.out_vertex(u)) in arcs
            assert (fn.out_vertex(u), fn.entry_vertex(v)) in arcs
        assert (fn.anchor_vertex(path[-1]), fn.sink) in arcs
    assert checked > 0


def test_dot_export_names(small):
    dot = small.to_dot()
    assert dot.startswith("digraph Gprime {")
    for name in ("a0_in", "a0_out", "a1_in", "b0", "omega"):
        assert name in dot
    assert "a0_out -> b0;" in dot
    assert "b0 -> omega;" in dot
