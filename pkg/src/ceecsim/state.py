"""Struct-of-arrays view of a network used by the round kernels."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .topology import NetworkConfig, NodeState, Region, Role, Tier

TIERS = list(Tier)
REGIONS = list(Region)


@dataclass
class NetworkArrays:
    ids: np.ndarray
    x: np.ndarray
    y: np.ndarray
    tier: np.ndarray  # index into TIERS
    region: np.ndarray  # index into REGIONS
    residual: np.ndarray
    alive: np.ndarray
    last_ch: np.ndarray  # last round served as head, 0 if never
    to_bs: np.ndarray
    d2: np.ndarray  # pairwise squared distances

    def __post_init__(self):
        # regions never change, so their index sets are fixed
        self.region_index = [(self.region == code).nonzero()[0] for code in range(len(REGIONS))]

    @classmethod
    def from_nodes(cls, nodes: Sequence[NodeState], config: NetworkConfig) -> "NetworkArrays":
        nodes = sorted(nodes, key=lambda n: n.id)
        x = np.array([n.x for n in nodes], dtype=float)
        y = np.array([n.y for n in nodes], dtype=float)
        return cls(
            ids=np.array([n.id for n in nodes], dtype=np.int64),
            x=x,
            y=y,
            tier=np.array([TIERS.index(n.tier) for n in nodes], dtype=np.int64),
            region=np.array([REGIONS.index(n.region) for n in nodes], dtype=np.int64),
            residual=np.array([n.residual_energy for n in nodes], dtype=float),
            alive=np.array([n.alive for n in nodes], dtype=bool),
            last_ch=np.array([n.last_ch_round or 0 for n in nodes], dtype=np.int64),
            to_bs=np.hypot(x - config.bs_x, y - config.bs_y),
            d2=(x[:, None] - x) ** 2 + (y[:, None] - y) ** 2,
        )

    def write_back(self, nodes: Sequence[NodeState], heads: np.ndarray, head_of: np.ndarray):
        """Copy energies, liveness and this round's roles onto ``nodes``.

        ``head_of[i]`` is the array index of node i's head, or -1.
        """
        by_id = {node.id: node for node in nodes}
        is_head = np.zeros(len(self.ids), dtype=bool)
        is_head[heads] = True
        for i, node_id in enumerate(self.ids.tolist()):
            node = by_id[node_id]
            node.residual_energy = float(self.residual[i])
            node.alive = bool(self.alive[i])
            node.last_ch_round = int(self.last_ch[i]) or None
            if is_head[i]:
                node.role, node.ch_id = Role.CLUSTER_HEAD, None
            elif head_of[i] >= 0:
                node.role, node.ch_id = Role.MEMBER, int(self.ids[head_of[i]])
            else:
                node.role, node.ch_id = Role.UNASSIGNED, None


def nearest_heads(d2: np.ndarray, members: np.ndarray, heads: np.ndarray) -> np.ndarray:
    """Array index of the closest head for each member index.

    ``heads`` must be in ascending id order; equidistant heads then resolve to
    the lower id because argmin keeps the first minimum.
    """
    if len(members) == 0:
        return np.empty(0, dtype=np.int64)
    return heads[d2[members][:, heads].argmin(axis=1)]
