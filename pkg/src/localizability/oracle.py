"""Brute-force ground truth for small networks.

Nothing here touches a flow network. Disjoint paths are counted through
Menger's theorem by trying every small vertex set as a separator, and a
second, slower routine enumerates explicit path families so the first can be
checked in turn.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Collection, Optional, Sequence

from .imf import DetectionConfig, adjacency_for
from .network import Network

__all__ = [
    "OracleLimits",
    "OracleRefusal",
    "count_disjoint_paths_bruteforce",
    "count_disjoint_paths_exhaustive",
    "oracle_fixpoint",
]


class OracleRefusal(ValueError):
    """The instance is too large for exhaustive checking."""


@dataclass(frozen=True)
class OracleLimits:
    max_nodes: int = 14
    max_cut_size: Optional[int] = None  # None: threshold - 1

    def cut_cap(self, threshold: int) -> int:
        return threshold - 1 if self.max_cut_size is None else self.max_cut_size


def _reaches_anchor(neighbors, is_anchor, i, blocked, alive) -> bool:
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for u in neighbors[v]:
            if u in seen or u in blocked or (alive is not None and u not in alive):
                continue
            if is_anchor[u]:
                return True
            seen.add(u)
            stack.append(u)
    return False


def count_disjoint_paths_bruteforce(
    neighbors: Sequence[Sequence[int]],
    anchors: Collection[int],
    i: int,
    upper: int,
    alive: Optional[Collection[int]] = None,
    limits: OracleLimits = OracleLimits(),
) -> int:
    """``min(upper, D)`` where ``D`` is the number of node-disjoint paths from ``i`` to anchors.

    ``D`` is the size of the smallest node set (anchors included, ``i``
    excluded) whose deletion leaves ``i`` unable to reach any anchor. Sets
    are tried by increasing size up to ``upper - 1``.

    ``alive`` restricts the graph to an induced subgraph; anchors are always
    kept.
    """
    n = len(neighbors)
    if n > limits.max_nodes:
        raise OracleRefusal(f"{n} nodes exceeds the oracle limit of {limits.max_nodes}")
    if upper - 1 > limits.cut_cap(upper):
        raise OracleRefusal(f"upper={upper} needs cuts larger than {limits.cut_cap(upper)}")
    if i in anchors:
        raise ValueError(f"node {i} is an anchor")
    is_anchor = [v in anchors for v in range(n)]
    if alive is not None:
        alive = set(alive) | set(anchors)
    others = [v for v in range(n) if v != i and (alive is None or v in alive)]
    for size in range(upper):
        for cut in combinations(others, size):
            if not _reaches_anchor(neighbors, is_anchor, i, set(cut), alive):
                return size
    return upper


def count_disjoint_paths_exhaustive(
    neighbors: Sequence[Sequence[int]], anchors: Collection[int], i: int, max_nodes: int = 8
) -> int:
    """Largest family of paths from ``i`` to anchors sharing no node besides ``i``.

    Enumerates every simple path that stops at its first anchor, then searches
    all families of them. Exponential; for validating the cut-based oracle on
    tiny graphs.
    """
    n = len(neighbors)
    if n > max_nodes:
        raise OracleRefusal(f"{n} nodes exceeds the exhaustive limit of {max_nodes}")
    paths: list[frozenset] = []

    def extend(v, visited):
        for u in neighbors[v]:
            if u in visited:
                continue
            if u in anchors:
                paths.append(frozenset(visited - {i} | {u}))
            else:
                extend(u, visited | {u})

    extend(i, frozenset({i}))
    paths = sorted(set(paths), key=len)

    best = 0

    def search(start, used, count):
        nonlocal best
        best = max(best, count)
        for k in range(start, len(paths)):
            if not paths[k] & used:
                search(k + 1, used | paths[k], count + 1)

    search(0, frozenset(), 0)
    return best


def oracle_fixpoint(
    net: Network,
    cfg: Optional[DetectionConfig] = None,
    limits: OracleLimits = OracleLimits(),
    order: Optional[Sequence[int]] = None,
) -> frozenset:
    """Survivors of repeatedly deleting agents with fewer than ``d + 1`` disjoint anchor paths.

    The adjacency (raw or generated graph, per ``cfg.mode``) is fixed once
    from the full network; deletions only shrink the induced node set.
    Returns the surviving agents together with all anchors.
    """
    cfg = cfg or DetectionConfig()
    if net.node_count > limits.max_nodes:
        raise OracleRefusal(
            f"{net.node_count} nodes exceeds the oracle limit of {limits.max_nodes}"
        )
    t = cfg.threshold
    neighbors = adjacency_for(net, cfg)
    alive = set(net.agents)
    order = list(order) if order is not None else list(net.agents)
    changed = True
    while changed:
        changed = False
        for i in order:
            if i in alive and count_disjoint_paths_bruteforce(
                neighbors, net.anchors, i, t, alive, limits
            ) < t:
                alive.discard(i)
                changed = True
    return frozenset(alive) | net.anchors
