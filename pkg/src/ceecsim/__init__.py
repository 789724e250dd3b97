"""Round-based simulator for three-tier heterogeneous sensor networks.

Provides the centralized region-aware clustering protocol (CEEC) together
with LEACH, SEP, E-SEP and DEEC baselines, a first-order radio energy model,
and a CSV/plot experiment harness.
"""

from .energy import RadioParams, aggregation_energy, rx_energy, tx_energy
from .topology import (
    NetworkConfig,
    NodeState,
    Region,
    Role,
    Tier,
    deploy,
    distance_to_bs,
    region_bounds,
    tier_initial_energy,
    total_energy,
)
from .ceec import ClusterAssignment, ceec_select
from .baselines import ProtocolKind, baseline_select
from .engine import RoundMetrics, SimulationResult, run_round, run_simulation, stability_period

__all__ = [
    "ClusterAssignment",
    "NetworkConfig",
    "NodeState",
    "ProtocolKind",
    "RadioParams",
    "Region",
    "Role",
    "RoundMetrics",
    "SimulationResult",
    "Tier",
    "aggregation_energy",
    "baseline_select",
    "ceec_select",
    "deploy",
    "distance_to_bs",
    "region_bounds",
    "run_round",
    "run_simulation",
    "rx_energy",
    "stability_period",
    "tier_initial_energy",
    "total_energy",
    "tx_energy",
]
