"""Trilateration protocol baseline.

An agent is marked localizable once ``d + 1`` of its neighbours are. Starting
from the anchors this grows to a fixpoint. The condition is sufficient but
misses nodes whose paths to anchors run through not-yet-localized neighbours,
e.g. when no two anchors share a neighbour.
"""

from __future__ import annotations

from .imf import LocalizabilityReport, Mode
from .network import Network

__all__ = ["tp_detect"]


def tp_detect(net: Network, dimension: int = 2) -> LocalizabilityReport:
    """Run the trilateration fixpoint on ``net``.

    ``removal_order`` in the report lists the agents left unlocalized, in id
    order, and ``passes`` counts the rounds including the last, idle one.
    """
    if dimension < 2:
        raise ValueError(f"dimension must be >= 2, got {dimension}")
    need = dimension + 1
    known = [i in net.anchors for i in range(net.node_count)]
    hits = [0] * net.node_count
    for a in net.anchors:
        for j in net.neighbors[a]:
            hits[j] += 1

    passes = 0
    while True:
        passes += 1
        fresh = [i for i in range(net.node_count) if not known[i] and hits[i] >= need]
        if not fresh:
            break
        for i in fresh:
            known[i] = True
            for j in net.neighbors[i]:
                hits[j] += 1

    missed = tuple(i for i in range(net.node_count) if not known[i])
    return LocalizabilityReport(Mode.TP.value, dimension, tuple(known), missed, passes)
