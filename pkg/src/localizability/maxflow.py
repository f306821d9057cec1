"""Integral maximum flow on small directed graphs.

Two solvers share the :class:`Digraph` arc store but nothing else:

* :func:`max_flow_push_relabel` -- Goldberg's push-relabel with FIFO
  selection, the gap heuristic and periodic global relabeling. This is the
  solver the detector uses.
* :func:`max_flow_reference` -- Edmonds-Karp shortest augmenting paths on its
  own dict-based residual graph, kept deliberately simple so it can serve as
  an oracle for the first.

Arcs live in paired slots: forward arc ``e`` occupies slot ``2e`` and its
residual twin slot ``2e + 1``, so the reverse of slot ``a`` is ``a ^ 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "Digraph",
    "FlowResult",
    "max_flow_push_relabel",
    "max_flow_reference",
]


class Digraph:
    """Directed graph with integer arc capacities.

    Parallel arcs are allowed. Capacities can be zeroed in place (see
    :meth:`zero_arc`), which is how vertices are removed without disturbing
    indices.
    """

    def __init__(self, vertex_count: int, arcs: Iterable[tuple] = ()):
        self.vertex_count = int(vertex_count)
        self._head: list[int] = []
        self._cap: list[int] = []
        self._out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for arc in arcs:
            self.add_arc(*arc)

    def add_arc(self, tail: int, head: int, capacity: int = 1) -> int:
        """Append an arc and return its index."""
        n = self.vertex_count
        if not (0 <= tail < n and 0 <= head < n):
            raise ValueError(f"arc ({tail}, {head}) has an endpoint outside 0..{n - 1}")
        if capacity < 0:
            raise ValueError("capacities must be non-negative")
        slot = len(self._head)
        self._head += [head, tail]
        self._cap += [int(capacity), 0]
        self._out[tail].append(slot)
        self._out[head].append(slot + 1)
        return slot >> 1

    @property
    def arc_count(self) -> int:
        return len(self._head) >> 1

    def tail(self, e: int) -> int:
        return self._head[2 * e + 1]

    def head(self, e: int) -> int:
        return self._head[2 * e]

    def capacity(self, e: int) -> int:
        return self._cap[2 * e]

    def zero_arc(self, e: int) -> None:
        self._cap[2 * e] = 0

    def arcs(self, include_zero: bool = False) -> list[tuple[int, int, int]]:
        """``(tail, head, capacity)`` for every arc, in insertion order."""
        h, c = self._head, self._cap
        return [
            (h[a + 1], h[a], c[a])
            for a in range(0, len(h), 2)
            if include_zero or c[a] > 0
        ]

    def out_arcs(self, v: int) -> list[int]:
        return [a >> 1 for a in self._out[v] if not a & 1]

    def in_arcs(self, v: int) -> list[int]:
        return [a >> 1 for a in self._out[v] if a & 1]

    def copy(self) -> "Digraph":
        g = Digraph.__new__(type(self))
        g.__dict__.update(self.__dict__)
        g._head = list(self._head)
        g._cap = list(self._cap)
        g._out = [list(x) for x in self._out]
        return g

    def _check_terminals(self, source: int, sink: int) -> None:
        n = self.vertex_count
        for name, v in (("source", source), ("sink", sink)):
            if not 0 <= v < n:
                raise ValueError(f"{name} index {v} outside 0..{n - 1}")
        if source == sink:
            raise ValueError("source and sink must differ")


@dataclass(frozen=True)
class FlowResult:
    """Outcome of one max-flow query.

    ``flow`` holds the integral flow on every arc (indexed like the graph's
    arcs) and ``cut`` the arcs leaving the source side of a minimum cut; both
    are filled only when requested.
    """

    value: int
    flow: Optional[tuple[int, ...]] = None
    cut: Optional[frozenset] = None
    source_side: Optional[frozenset] = None


# -- push-relabel ------------------------------------------------------------


def _global_labels(g: Digraph, cap: list[int], source: int, sink: int) -> list[int]:
    """Exact residual distances: to the sink, else ``n`` + distance to the source."""
    n = g.vertex_count
    head, out = g._head, g._out
    label = [2 * n] * n
    label[sink] = 0
    queue = deque([sink])
    while queue:
        v = queue.popleft()
        nxt = label[v] + 1
        for a in out[v]:
            u = head[a]
            if label[u] == 2 * n and cap[a ^ 1] > 0 and u != source:
                label[u] = nxt
                queue.append(u)
    label[source] = n
    queue.append(source)
    while queue:
        v = queue.popleft()
        nxt = label[v] + 1
        for a in out[v]:
            u = head[a]
            if label[u] == 2 * n and cap[a ^ 1] > 0:
                label[u] = nxt
                queue.append(u)
    return label


def _push_relabel(g: Digraph, source: int, sink: int) -> tuple[int, list[int]]:
    """Run push-relabel to completion; return the flow value and residual capacities."""
    n = g.vertex_count
    head, out = g._head, g._out
    cap = list(g._cap)
    excess = [0] * n

    for a in out[source]:
        c = cap[a]
        if c > 0:
            cap[a] = 0
            cap[a ^ 1] += c
            excess[head[a]] += c
    label = _global_labels(g, cap, source, sink)
    count = [0] * (2 * n + 1)
    for v in range(n):
        count[label[v]] += 1

    active = deque(v for v in range(n) if excess[v] > 0 and v != sink and v != source)
    queued = [False] * n
    for v in active:
        queued[v] = True
    current = [0] * n
    work = 0

    while active:
        u = active.popleft()
        queued[u] = False
        work += 1
        arcs_u = out[u]
        degree = len(arcs_u)
        while excess[u] > 0:
            i = current[u]
            if i == degree:
                # relabel
                old = label[u]
                best = 2 * n
                for a in arcs_u:
                    if cap[a] > 0 and label[head[a]] < best:
                        best = label[head[a]]
                new = min(best + 1, 2 * n)
                count[old] -= 1
                label[u] = new
                count[new] += 1
                current[u] = 0
                if count[old] == 0 and old < n:
                    # gap: nothing above `old` (below n) can still reach the sink
                    for v in range(n):
                        if old < label[v] < n:
                            count[label[v]] -= 1
                            label[v] = n + 1
                            count[n + 1] += 1
                            current[v] = 0
                if new >= 2 * n:
                    break
                continue
            a = arcs_u[i]
            v = head[a]
            if cap[a] > 0 and label[u] == label[v] + 1:
                delta = excess[u] if excess[u] < cap[a] else cap[a]
                cap[a] -= delta
                cap[a ^ 1] += delta
                excess[u] -= delta
                excess[v] += delta
                if v != source and v != sink and not queued[v]:
                    active.append(v)
                    queued[v] = True
            else:
                current[u] = i + 1
        if work >= n:
            work = 0
            label = _global_labels(g, cap, source, sink)
            count = [0] * (2 * n + 1)
            for v in range(n):
                count[label[v]] += 1
            current = [0] * n
    return excess[sink], cap


def _certificate(g: Digraph, cap: list[int], source: int) -> tuple[tuple, frozenset, frozenset]:
    base = g._cap
    flow = tuple(base[a] - cap[a] for a in range(0, len(base), 2))
    seen = [False] * g.vertex_count
    seen[source] = True
    stack = [source]
    while stack:
        v = stack.pop()
        for a in g._out[v]:
            u = g._head[a]
            if cap[a] > 0 and not seen[u]:
                seen[u] = True
                stack.append(u)
    side = frozenset(v for v in range(g.vertex_count) if seen[v])
    cut = frozenset(
        a >> 1
        for a in range(0, len(base), 2)
        if base[a] > 0 and seen[g._head[a + 1]] and not seen[g._head[a]]
    )
    return flow, cut, side


def max_flow_push_relabel(
    g: Digraph,
    source: int,
    sink: int,
    early_exit_at: Optional[int] = None,
    certificate: bool = False,
) -> FlowResult:
    """Maximum ``source``-``sink`` flow by FIFO push-relabel.

    Parameters
    ----------
    g : Digraph
    source, sink : int
        Vertex indices; must differ.
    early_exit_at : int, optional
        Saturate the reported value at this threshold. The solve itself is
        always exact; the cap only keeps the contract aligned with the
        reference solver's early exit.
    certificate : bool
        Attach the per-arc flow and a minimum cut to the result.
    """
    g._check_terminals(source, sink)
    value, cap = _push_relabel(g, source, sink)
    if early_exit_at is not None:
        value = min(value, early_exit_at)
    if not certificate:
        return FlowResult(value)
    flow, cut, side = _certificate(g, cap, source)
    return FlowResult(value, flow, cut, side)


# -- Edmonds-Karp ------------------------------------------------------------


def max_flow_reference(
    g: Digraph,
    source: int,
    sink: int,
    early_exit_at: Optional[int] = None,
    certificate: bool = False,
) -> FlowResult:
    """Maximum flow by breadth-first augmenting paths (Edmonds-Karp).

    Stops after the flow reaches ``early_exit_at`` when that is given.
    """
    g._check_terminals(source, sink)
    residual: dict[int, dict[int, int]] = {v: {} for v in range(g.vertex_count)}
    for tail, head, c in g.arcs(include_zero=True):
        residual[tail][head] = residual[tail].get(head, 0) + c
        residual[head].setdefault(tail, 0)

    value = 0
    while early_exit_at is None or value < early_exit_at:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            v = queue.popleft()
            for u, c in residual[v].items():
                if c > 0 and u not in parent:
                    parent[u] = v
                    queue.append(u)
        if sink not in parent:
            break
        bottleneck = None
        v = sink
        while parent[v] is not None:
            c = residual[parent[v]][v]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = parent[v]
        if early_exit_at is not None:
            bottleneck = min(bottleneck, early_exit_at - value)
        v = sink
        while parent[v] is not None:
            p = parent[v]
            residual[p][v] -= bottleneck
            residual[v][p] += bottleneck
            v = p
        value += bottleneck

    if not certificate:
        return FlowResult(value)

    # net flow per ordered pair (antiparallel flow cancels), spread over parallel arcs
    arcs = g.arcs(include_zero=True)
    forward: dict[tuple[int, int], int] = {}
    for tail, head, c in arcs:
        forward[(tail, head)] = forward.get((tail, head), 0) + c
    remaining = {
        (tail, head): max(0, total - residual[tail][head])
        for (tail, head), total in forward.items()
    }
    flow = []
    for tail, head, c in arcs:
        f = min(c, remaining[(tail, head)])
        remaining[(tail, head)] -= f
        flow.append(f)

    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for u, c in residual[v].items():
            if c > 0 and u not in seen:
                seen.add(u)
                stack.append(u)
    cut = frozenset(
        e
        for e, (tail, head, c) in enumerate(arcs)
        if c > 0 and tail in seen and head not in seen
    )
    return FlowResult(value, tuple(flow), cut, frozenset(seen))

