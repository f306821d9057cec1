"""Localizability detection for anchored networks by iterative max-flow."""

from .flownet import FlowNetwork, build_flow_network, flow_network_for
from .imf import (
    DetectionConfig,
    LocalizabilityReport,
    Mode,
    Schedule,
    detect,
    detect_single,
)
from .maxflow import Digraph, FlowResult, max_flow_push_relabel, max_flow_reference
from .netgen import (
    GeneratorConfig,
    generate_erdos_renyi,
    generate_unit_disk,
    generate_unit_disk_for_degree,
    random_small_instance,
)
from .network import (
    GeneratedGraph,
    Network,
    NetworkError,
    barycentric_neighbors,
    build_network,
    generated_graph,
)
from .oracle import (
    OracleLimits,
    OracleRefusal,
    count_disjoint_paths_bruteforce,
    count_disjoint_paths_exhaustive,
    oracle_fixpoint,
)
from .trilateration import tp_detect

__version__ = "0.1.0"
