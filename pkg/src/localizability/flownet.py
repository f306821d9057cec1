"""Split-node flow networks for counting vertex-disjoint paths to anchors.

Every agent ``i`` becomes an in/out pair joined by one unit arc, so at most
one unit of flow can pass through it. An agent's out-vertex feeds the
in-vertex of each neighbouring agent, or the neighbouring anchor itself.
Anchors drain into a single virtual sink through unit arcs. The maximum flow
from an agent's out-vertex to the sink is then the number of paths from that
agent to distinct anchors that share no other node.

Vertex layout, with agents and anchors each renumbered densely in id order
(``n`` agents, ``m`` anchors)::

    agent k   -> in = 2k, out = 2k + 1
    anchor t  -> 2n + t
    sink      -> 2n + m
"""

from __future__ import annotations

from typing import Collection, Optional, Sequence

from .maxflow import Digraph, FlowResult, _push_relabel, max_flow_push_relabel
from .network import GeneratedGraph, Network

__all__ = ["FlowNetwork", "build_flow_network", "flow_network_for"]


class FlowNetwork(Digraph):
    """Unit-capacity split-node network with a stable index map.

    Build with :func:`build_flow_network`. Removing an agent zeroes the
    capacities of its arcs and leaves every index in place.
    """

    def __init__(self, node_count: int, anchors: Collection[int]):
        anchors = frozenset(anchors)
        self.node_count = node_count
        self.agents = tuple(i for i in range(node_count) if i not in anchors)
        self.anchors = tuple(sorted(anchors))
        n, m = len(self.agents), len(self.anchors)
        super().__init__(2 * n + m + 1)
        self.sink = 2 * n + m
        self._agent_index = {v: k for k, v in enumerate(self.agents)}
        self._anchor_index = {v: t for t, v in enumerate(self.anchors)}
        self._internal: list[int] = []
        self.removed: set[int] = set()

    # -- index map -----------------------------------------------------------

    def in_vertex(self, i: int) -> int:
        return 2 * self._agent_index[i]

    def out_vertex(self, i: int) -> int:
        return 2 * self._agent_index[i] + 1

    def anchor_vertex(self, i: int) -> int:
        return 2 * len(self.agents) + self._anchor_index[i]

    def entry_vertex(self, i: int) -> int:
        """Vertex that a path enters when it steps onto node ``i``."""
        if i in self._anchor_index:
            return self.anchor_vertex(i)
        return self.in_vertex(i)

    def node_of(self, vertex: int) -> Optional[int]:
        """Original node id behind ``vertex``; ``None`` for the sink."""
        n = len(self.agents)
        if vertex < 2 * n:
            return self.agents[vertex // 2]
        if vertex < self.sink:
            return self.anchors[vertex - 2 * n]
        if vertex == self.sink:
            return None
        raise ValueError(f"vertex {vertex} outside 0..{self.sink}")

    def vertex_name(self, vertex: int) -> str:
        n = len(self.agents)
        if vertex < 2 * n:
            return f"a{vertex // 2}_{'out' if vertex & 1 else 'in'}"
        if vertex < self.sink:
            return f"b{vertex - 2 * n}"
        return "omega"

    def is_agent(self, i: int) -> bool:
        return i in self._agent_index

    # -- mutation ------------------------------------------------------------

    def remove_agent(self, i: int) -> None:
        """Zero every arc touching agent ``i``'s in- or out-vertex. Idempotent."""
        if i in self._anchor_index:
            raise ValueError(f"node {i} is an anchor; anchors are never removed")
        if i not in self._agent_index:
            raise ValueError(f"node {i} is not in this flow network")
        for v in (self.in_vertex(i), self.out_vertex(i)):
            for a in self._out[v]:
                self._cap[a & ~1] = 0
        self.removed.add(i)

    def copy(self) -> "FlowNetwork":
        g = super().copy()
        g.removed = set(self.removed)
        return g

    # -- queries -------------------------------------------------------------

    def max_flow(self, i: int, early_exit_at: Optional[int] = None) -> FlowResult:
        """Max flow from agent ``i``'s out-vertex to the sink."""
        return max_flow_push_relabel(self, self.out_vertex(i), self.sink, early_exit_at)

    def disjoint_paths(self, i: int) -> tuple[int, frozenset]:
        """Flow value from agent ``i`` plus the agents the flow passes through.

        As long as none of those agents is removed, the same flow stays
        feasible and the value is still a lower bound.
        """
        value, cap = _push_relabel(self, self.out_vertex(i), self.sink)
        used = frozenset(
            self.agents[k]
            for k, e in enumerate(self._internal)
            if self._cap[2 * e] > cap[2 * e]
        )
        return value, used

    def to_dot(self, name: str = "Gprime") -> str:
        """DOT digraph of the live arcs, vertices named ``a{k}_in``/``a{k}_out``/``b{t}``/``omega``."""
        lines = [f"digraph {name} {{"]
        for v in range(self.vertex_count):
            node = self.node_of(v)
            label = self.vertex_name(v) if node is None else f"{self.vertex_name(v)}\\nv{node}"
            shape = "box" if v >= 2 * len(self.agents) else "ellipse"
            if node in self.removed:
                shape += ", style=dashed"
            lines.append(f'  {self.vertex_name(v)} [label="{label}", shape={shape}];')
        for tail, head, _ in self.arcs():
            lines.append(f"  {self.vertex_name(tail)} -> {self.vertex_name(head)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_flow_network(
    neighbors: Sequence[Sequence[int]], anchors: Collection[int]
) -> FlowNetwork:
    """Split-node flow network for a symmetric adjacency.

    Parameters
    ----------
    neighbors : sequence of sequences of int
        ``neighbors[i]`` lists the neighbours of node ``i``; pass the raw
        adjacency for non-linear localizability or the generated graph's for
        barycentric localizability.
    anchors : collection of int
        Anchor node ids. All other nodes are agents.
    """
    fn = FlowNetwork(len(neighbors), anchors)
    for i in fn.agents:
        out = fn.out_vertex(i)
        fn._internal.append(fn.add_arc(fn.in_vertex(i), out))
        for j in neighbors[i]:
            fn.add_arc(out, fn.entry_vertex(j))
    for a in fn.anchors:
        fn.add_arc(fn.anchor_vertex(a), fn.sink)
    return fn


def flow_network_for(graph: Network | GeneratedGraph) -> FlowNetwork:
    return build_flow_network(graph.neighbors, graph.anchors)
