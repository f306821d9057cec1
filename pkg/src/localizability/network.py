"""Undirected anchored networks and their barycentric generated graphs.

A :class:`Network` is an immutable undirected simple graph on the dense node
ids ``0..node_count-1`` in which every node is either an *anchor* (known
position) or an *agent* (position to be determined).

The generated graph keeps edge ``(i, j)`` only when ``j`` sits in a triangle
with two further neighbours of ``i``. In dimension ``d`` the triangle becomes
a ``(d + 1)``-clique drawn from the neighbourhood of ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "NetworkError",
    "Network",
    "GeneratedGraph",
    "build_network",
    "barycentric_neighbors",
    "generated_graph",
]


class NetworkError(ValueError):
    """Raised when a network cannot be constructed from the given data."""


def _normalize_edges(edges: Iterable[tuple[int, int]], node_count: int) -> frozenset:
    out = set()
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise NetworkError(
                f"id out of range in edge ({u}, {v}); node_count is {node_count}"
            )
        if u == v:
            raise NetworkError(f"self-loop in edge ({u}, {v})")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True, eq=False)
class Network:
    """Anchored undirected network.

    Use :func:`build_network` rather than calling the constructor directly.

    Attributes
    ----------
    node_count : int
    anchors : frozenset of int
    edges : frozenset of (u, v) with u < v
    positions : ndarray of shape (node_count, d), optional
        Carried along for generation and export; detection never reads it.
    """

    node_count: int
    anchors: frozenset
    edges: frozenset
    positions: Optional[np.ndarray] = None
    neighbors: tuple = field(init=False, repr=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(a)) for a in adj))

    @property
    def agents(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.node_count) if i not in self.anchors)

    @property
    def is_anchor(self) -> tuple[bool, ...]:
        return tuple(i in self.anchors for i in range(self.node_count))

    @property
    def roles(self) -> tuple[str, ...]:
        return tuple("anchor" if i in self.anchors else "agent" for i in range(self.node_count))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, keep: Iterable[int]) -> "Network":
        """Subnetwork on ``keep`` with the original ids (dropped nodes become isolated)."""
        keep = set(keep)
        return Network(
            node_count=self.node_count,
            anchors=self.anchors,
            edges=frozenset((u, v) for u, v in self.edges if u in keep and v in keep),
            positions=self.positions,
        )

    def with_anchors(self, anchors: Iterable[int]) -> "Network":
        return build_network(self.edges, anchors, self.node_count, self.positions)

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        if (self.positions is None) != (other.positions is None):
            return False
        same_pos = self.positions is None or np.array_equal(self.positions, other.positions)
        return (
            self.node_count == other.node_count
            and self.anchors == other.anchors
            and self.edges == other.edges
            and same_pos
        )

    __hash__ = None


def build_network(
    edges: Iterable[tuple[int, int]],
    anchor_ids: Iterable[int],
    node_count: int,
    positions: Optional[Sequence[Sequence[float]]] = None,
) -> Network:
    """Validate and assemble a :class:`Network`.

    Duplicate and reversed edges collapse to one undirected edge.

    Raises
    ------
    NetworkError
        If an id is out of range, an edge is a self-loop, or ``positions``
        does not have one row of uniform dimension per node.
    """
    node_count = int(node_count)
    if node_count < 0:
        raise NetworkError(f"node_count must be non-negative, got {node_count}")
    anchors = frozenset(int(a) for a in anchor_ids)
    bad = [a for a in anchors if not 0 <= a < node_count]
    if bad:
        raise NetworkError(f"anchor id out of range: {min(bad)} (node_count is {node_count})")
    pos = None
    if positions is not None:
        pos = np.array(positions, dtype=float)
        if pos.ndim != 2 or pos.shape[0] != node_count:
            raise NetworkError(
                f"positions must have shape (node_count, d); got {pos.shape}"
            )
        pos.setflags(write=False)
    return Network(node_count, anchors, _normalize_edges(edges, node_count), pos)


def barycentric_neighbors(net: Network, i: int, d: int = 2) -> frozenset:
    """Neighbours of ``i`` that form a ``(d+1)``-clique with ``d`` other neighbours of ``i``.

    For ``d = 2`` a neighbour ``j`` qualifies when some two further neighbours
    ``u, w`` of ``i`` make ``{j, u, w}`` a triangle. Witnesses are drawn from
    the full neighbourhood, not recursively from the result set.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    nbrs = net.neighbors[i]
    if len(nbrs) < d + 1:
        return frozenset()
    nbr_set = set(nbrs)
    found = set()
    for j in nbrs:
        if j in found:
            continue
        common = sorted(nbr_set.intersection(net.neighbors[j]))
        witnesses = _find_clique(common, d, net)
        if witnesses is not None:
            # every member of the clique qualifies through the others
            found.add(j)
            found.update(witnesses)
    return frozenset(found)


def _find_clique(candidates: list[int], size: int, net: Network) -> Optional[list[int]]:
    if size == 0:
        return []
    if len(candidates) < size:
        return None
    for k, u in enumerate(candidates):
        rest = [w for w in candidates[k + 1:] if net.has_edge(u, w)]
        sub = _find_clique(rest, size - 1, net)
        if sub is not None:
            return [u] + sub
    return None


@dataclass(frozen=True)
class GeneratedGraph:
    """Barycentric adjacency of a network, same node set as its source."""

    node_count: int
    anchors: frozenset
    dimension: int
    edges: frozenset
    neighbors: tuple

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_symmetric(self) -> bool:
        return all(
            i in self.neighbors[j] for i in range(self.node_count) for j in self.neighbors[i]
        )

    def as_network(self) -> Network:
        return Network(self.node_count, self.anchors, self.edges)


def generated_graph(net: Network, d: int = 2) -> GeneratedGraph:
    """Build the generated graph ``G_A`` of ``net`` in dimension ``d``.

    The directed relation ``j in N*_i`` is computed per node; the undirected
    edge set collects every pair that appears in either direction, which for
    the clique rule is always both.
    """
    directed = [barycentric_neighbors(net, i, d) for i in range(net.node_count)]
    edges = frozenset(
        (i, j) if i < j else (j, i) for i in range(net.node_count) for j in directed[i]
    )
    neighbors = tuple(tuple(sorted(s)) for s in directed)
    return GeneratedGraph(net.node_count, net.anchors, d, edges, neighbors)
