"""Iterative max-flow localizability detection.

Agents that cannot reach ``d + 1`` distinct anchors along node-disjoint paths
are removed, their arcs zeroed in the flow network, and the sweep repeats
until nothing changes. Every removal is forced (a node failing in a graph
fails in all of its subgraphs), so the survivors form the largest node set
in which every agent passes the test, whatever order the agents are visited
in.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .flownet import FlowNetwork, build_flow_network
from .network import Network, generated_graph

__all__ = [
    "Mode",
    "Schedule",
    "DetectionConfig",
    "LocalizabilityReport",
    "detect",
    "detect_single",
    "adjacency_for",
]


class Mode(str, enum.Enum):
    BLL = "BLL"  # paths through generated-graph edges only
    NLL = "NLL"  # paths through any network edge
    TP = "TP"  # trilateration baseline; report tag only


class Schedule(str, enum.Enum):
    IMMEDIATE = "immediate"
    END_OF_PASS = "end-of-pass"


@dataclass(frozen=True)
class DetectionConfig:
    mode: Mode = Mode.BLL
    dimension: int = 2
    schedule: Schedule = Schedule.IMMEDIATE

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "schedule", Schedule(self.schedule))
        if self.mode is Mode.TP:
            raise ValueError("TP is a separate detector; use trilateration.tp_detect")
        if int(self.dimension) < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dimension}")

    @property
    def threshold(self) -> int:
        return self.dimension + 1


@dataclass(frozen=True)
class LocalizabilityReport:
    """Result of a detection run.

    Attributes
    ----------
    iota : tuple of bool
        Per-node localizability flag; anchors are always ``True``.
    localizable : tuple of int
        Sorted anchors plus localizable agents.
    removal_order : tuple of int
        Agents in the order they were ruled out.
    passes : int
        Number of full sweeps, including the final one that changed nothing.
    """

    mode: str
    dimension: int
    iota: tuple
    removal_order: tuple
    passes: int
    localizable: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "localizable", tuple(i for i, ok in enumerate(self.iota) if ok)
        )

    @property
    def localizable_set(self) -> frozenset:
        return frozenset(self.localizable)

    def localizable_agents(self, net: Network) -> tuple[int, ...]:
        return tuple(i for i in self.localizable if i not in net.anchors)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "dimension": self.dimension,
            "localizable": list(self.localizable),
            "removed_order": list(self.removal_order),
            "passes": self.passes,
        }


def adjacency_for(net: Network, cfg: DetectionConfig):
    """Neighbour lists the flow network is built on for ``cfg.mode``."""
    if cfg.mode is Mode.NLL:
        return net.neighbors
    return generated_graph(net, cfg.dimension).neighbors


def detect(
    net: Network,
    cfg: Optional[DetectionConfig] = None,
    order: Optional[Iterable[int]] = None,
    reuse_flows: bool = True,
) -> LocalizabilityReport:
    """Find the localizable nodes of ``net``.

    Parameters
    ----------
    net : Network
    cfg : DetectionConfig, optional
        Defaults to barycentric mode in two dimensions.
    order : iterable of int, optional
        Agent visiting order within each sweep; defaults to ascending id.
        Must be a permutation of the agents.
    reuse_flows : bool
        Skip the flow computation for an agent whose last passing flow avoids
        every agent removed since. The outcome is identical either way.
    """
    cfg = cfg or DetectionConfig()
    t = cfg.threshold
    fn = build_flow_network(adjacency_for(net, cfg), net.anchors)
    if order is None:
        order = fn.agents
    else:
        order = tuple(order)
        if sorted(order) != list(fn.agents):
            raise ValueError("order must be a permutation of the agent ids")

    alive = set(order)
    witness: dict[int, frozenset] = {}
    removal_order: list[int] = []
    passes = 0

    def passes_test(i: int) -> bool:
        w = witness.get(i)
        if w is not None and alive.issuperset(w):
            return True
        value, used = fn.disjoint_paths(i)
        if value >= t:
            if reuse_flows:
                witness[i] = used
            return True
        return False

    while True:
        passes += 1
        failed = []
        for i in order:
            if i not in alive:
                continue
            if not passes_test(i):
                failed.append(i)
                if cfg.schedule is Schedule.IMMEDIATE:
                    alive.discard(i)
                    fn.remove_agent(i)
        if cfg.schedule is Schedule.END_OF_PASS:
            for i in failed:
                alive.discard(i)
                fn.remove_agent(i)
        removal_order.extend(failed)
        if not failed:
            break

    iota = tuple(i in net.anchors or i in alive for i in range(net.node_count))
    return LocalizabilityReport(cfg.mode.value, cfg.dimension, iota, tuple(removal_order), passes)


def detect_single(net: Network, cfg: Optional[DetectionConfig], i: int) -> int:
    """Disjoint-path count (max flow) for agent ``i`` in the unpruned network.

    Passing this test is necessary but not sufficient for ending up
    localizable; neighbours that are later removed may carry the paths.
    """
    cfg = cfg or DetectionConfig()
    if i in net.anchors:
        raise ValueError(f"node {i} is an anchor")
    fn = build_flow_network(adjacency_for(net, cfg), net.anchors)
    return fn.max_flow(i).value
