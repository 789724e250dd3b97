"""Centralized cluster-head election run by the base station.

Every round, per region:

1. average the residual energy of the region's alive nodes;
2. keep nodes at or above that average as expected cluster heads (ECHs);
3. if there are more ECHs than ``ceil(p * alive_in_region)``, keep the ones
   with the most residual energy, breaking ties by smaller distance to the
   BS and then by smaller id.

Non-head nodes then join the nearest head of their own region. Distance
stands in for RSSI: the nearest head has the strongest signal under any
monotone path-loss law.

The node-list functions are thin wrappers over array kernels that the
round engine calls directly.
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import NetworkDead, OrphanedRegion, RegionExtinct
from .state import REGIONS, NetworkArrays
from .topology import NetworkConfig, NodeState, Region


@dataclass
class ClusterAssignment:
    round: int
    heads: list[int]
    membership: dict[int, int] = field(default_factory=dict)

    def members_of(self, head_id: int) -> list[int]:
        return [node_id for node_id, ch in self.membership.items() if ch == head_id]

    @classmethod
    def from_arrays(cls, state: NetworkArrays, round: int, heads, head_of) -> "ClusterAssignment":
        ids = state.ids.tolist()
        membership = {ids[i]: ids[h] for i, h in enumerate(head_of.tolist()) if h >= 0}
        return cls(round, [ids[h] for h in heads.tolist()], membership)


def target_head_count(p: float, alive: int) -> int:
    """``ceil(p * alive)`` with a floor of one head per populated region."""
    if alive <= 0:
        return 0
    # 0.1 * 30 evaluates to 3.0000000000000004; do not round that up to 4
    return max(1, math.ceil(p * alive - 1e-9))


def mean_energy(energies) -> float:
    energies = list(energies)
    # keep the rounded mean inside [min, max] so equal energies are all >= it
    return min(max(math.fsum(energies) / len(energies), min(energies)), max(energies))


def rank_and_cut(candidates: np.ndarray, state: NetworkArrays, k: int) -> np.ndarray:
    """Keep the ``k`` best candidate indices: energy desc, BS distance asc, id asc."""
    if len(candidates) <= k:
        return candidates
    order = np.lexsort(
        (state.ids[candidates], state.to_bs[candidates], -state.residual[candidates])
    )
    return candidates[order[:k]]


def select_heads(state: NetworkArrays, p: float) -> np.ndarray:
    """Sorted array indices of this round's heads."""
    chosen = []
    for code, index in enumerate(state.region_index):
        population = index[state.alive[index]]
        if len(population) == 0:
            continue
        energies = state.residual[population]
        echs = population[energies >= mean_energy(energies.tolist())]
        if len(echs) == 0:
            raise AssertionError(f"{REGIONS[code].value} has alive nodes but no ECH")
        chosen.append(rank_and_cut(echs, state, target_head_count(p, len(population))))
    if not chosen:
        raise NetworkDead("all nodes are dead")
    return np.sort(np.concatenate(chosen))


def associate(state: NetworkArrays, heads: np.ndarray) -> np.ndarray:
    """Index of each node's own-region head; -1 for heads and dead nodes."""
    head_of = np.full(len(state.ids), -1, dtype=np.int64)
    in_play = state.alive.copy()
    in_play[heads] = False
    members = in_play.nonzero()[0]
    if len(members) == 0:
        return head_of
    if len(heads) == 0:
        raise OrphanedRegion(f"{len(members)} alive node(s) have no cluster head")
    d2 = state.d2[members][:, heads]
    d2[state.region[members][:, None] != state.region[heads]] = np.inf
    nearest = d2.argmin(axis=1)
    orphaned = np.isinf(d2[np.arange(len(members)), nearest])
    if orphaned.any():
        region = REGIONS[state.region[members[orphaned][0]]]
        raise OrphanedRegion(f"alive node(s) in {region.value} have no cluster head")
    head_of[members] = heads[nearest]
    return head_of


def _alive_in(nodes: Sequence[NodeState], region: Region) -> list[NodeState]:
    return [node for node in nodes if node.alive and node.region is region]


def region_average_energy(nodes: Sequence[NodeState], region: Region) -> float:
    alive = _alive_in(nodes, region)
    if not alive:
        raise RegionExtinct(f"no alive node in {region.value}")
    return mean_energy(node.residual_energy for node in alive)


def expected_cluster_heads(nodes: Sequence[NodeState], region: Region, avg: float) -> list[int]:
    return [node.id for node in _alive_in(nodes, region) if node.residual_energy >= avg]


def finalize_cluster_heads(
    echs: Sequence[int],
    nodes: Sequence[NodeState],
    config: NetworkConfig,
    region: Region,
) -> list[int]:
    """Cut the ECH set down to the region's target head count."""
    k = target_head_count(config.p, len(_alive_in(nodes, region)))
    if k and not echs:
        raise AssertionError(f"{region.value} has alive nodes but no ECH")
    state = NetworkArrays.from_nodes(nodes, config)
    index = {node_id: i for i, node_id in enumerate(state.ids.tolist())}
    candidates = np.array([index[i] for i in echs], dtype=np.int64)
    return state.ids[rank_and_cut(candidates, state, k)].tolist()


def associate_members(
    nodes: Sequence[NodeState],
    heads: Sequence[int],
    config: NetworkConfig,
    round: int = 0,
) -> ClusterAssignment:
    """Attach each alive non-head node to the nearest head in its region.

    Equidistant heads resolve to the lower id.
    """
    state = NetworkArrays.from_nodes(nodes, config)
    index = {node_id: i for i, node_id in enumerate(state.ids.tolist())}
    head_index = np.array(sorted(index[h] for h in set(heads)), dtype=np.int64)
    return ClusterAssignment.from_arrays(state, round, head_index, associate(state, head_index))


def ceec_select(nodes: Sequence[NodeState], config: NetworkConfig, round: int) -> ClusterAssignment:
    if not any(node.alive for node in nodes):
        raise NetworkDead("all nodes are dead")
    state = NetworkArrays.from_nodes(nodes, config)
    heads = select_heads(state, config.p)
    return ClusterAssignment.from_arrays(state, round, heads, associate(state, heads))
