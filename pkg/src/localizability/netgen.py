"""Seeded random networks.

All generators draw from a single ``numpy.random.Generator(PCG64(seed))``
stream in a fixed order: first the geometry (or edge coin flips), then one
permutation whose leading ``anchor_count`` entries become the anchors. The
same seed therefore gives the same network on every platform numpy supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from .network import Network, build_network

__all__ = [
    "GeneratorConfig",
    "generate_unit_disk",
    "generate_unit_disk_for_degree",
    "generate_erdos_renyi",
    "random_small_instance",
]


@dataclass(frozen=True)
class GeneratorConfig:
    node_count: int
    anchor_count: int
    radius: float
    side: float = 1.0
    dimension: int = 2
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.anchor_count <= self.node_count:
            raise ValueError("need 0 <= anchor_count <= node_count")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.side <= 0 or self.dimension < 1:
            raise ValueError("side must be positive and dimension at least 1")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _pick_anchors(rng: np.random.Generator, n: int, m: int) -> list[int]:
    return sorted(int(v) for v in rng.permutation(n)[:m])


def _disk_edges(positions: np.ndarray, radius: float) -> list[tuple[int, int]]:
    pairs = cKDTree(positions).query_pairs(radius, output_type="ndarray")
    return [(int(u), int(v)) for u, v in pairs]


def generate_unit_disk(cfg: GeneratorConfig) -> Network:
    """Uniform points in ``[0, side]^d``, joined when at most ``radius`` apart."""
    rng = _rng(cfg.seed)
    positions = rng.uniform(0.0, cfg.side, size=(cfg.node_count, cfg.dimension))
    anchors = _pick_anchors(rng, cfg.node_count, cfg.anchor_count)
    return build_network(_disk_edges(positions, cfg.radius), anchors, cfg.node_count, positions)


def generate_unit_disk_for_degree(
    node_count: int,
    anchor_count: int,
    mean_degree: float,
    dimension: int = 2,
    side: float = 1.0,
    seed: int = 0,
) -> tuple[Network, float]:
    """Unit-disk network whose radius is chosen to hit ``mean_degree`` exactly.

    The radius is the ``k``-th smallest pairwise distance with
    ``k = round(node_count * mean_degree / 2)``. Returns the network and the
    radius used.
    """
    rng = _rng(seed)
    positions = rng.uniform(0.0, side, size=(node_count, dimension))
    anchors = _pick_anchors(rng, node_count, anchor_count)
    dists = pdist(positions)
    k = int(round(node_count * mean_degree / 2))
    k = min(max(k, 1), dists.size)
    radius = float(np.partition(dists, k - 1)[k - 1])
    net = build_network(_disk_edges(positions, radius), anchors, node_count, positions)
    return net, radius


def generate_erdos_renyi(
    node_count: int, anchor_count: int, edge_probability: float, seed: int = 0
) -> Network:
    """G(n, p): each pair ``(u, v)``, ``u < v`` in lexicographic order, flips one coin."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    if not 0 <= anchor_count <= node_count:
        raise ValueError("need 0 <= anchor_count <= node_count")
    rng = _rng(seed)
    iu, ju = np.triu_indices(node_count, k=1)
    keep = rng.random(iu.size) < edge_probability
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    anchors = _pick_anchors(rng, node_count, anchor_count)
    return build_network(edges, anchors, node_count)


def random_small_instance(seed: int, max_n: int = 12, min_n: int = 4) -> Network:
    """Small mixed-model instance for oracle cross-checks.

    The seed picks the node count, an anchor count in {2, 3, 4}, the model
    (unit disk or G(n, p)) and its density, then seeds the generator itself.
    """
    rng = _rng(seed)
    n = int(rng.integers(min_n, max_n + 1))
    m = min(int(rng.choice([2, 3, 4])), n)
    sub_seed = int(rng.integers(2**63))
    if rng.random() < 0.5:
        radius = float(rng.uniform(0.35, 0.8))
        return generate_unit_disk(GeneratorConfig(n, m, radius, seed=sub_seed))
    p = float(rng.uniform(0.25, 0.7))
    return generate_erdos_renyi(n, m, p, seed=sub_seed)
