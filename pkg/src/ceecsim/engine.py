"""Round loop with per-node energy accounting.

A round is a setup phase (cluster-head election and association, charged
no energy) followed by a transfer phase:

* each member sends one packet to its head;
* each head receives its members' packets, aggregates members + 1 signals
  and sends one packet to the BS;
* if no head was elected, every alive node sends its packet to the BS.

Nodes finish the round they run out of energy in; the battery is drained to
zero (never below) and the node is dead from the next round on.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .baselines import ProtocolKind, associate_anywhere, elect_heads
from .ceec import associate, select_heads
from .energy import _aggregate, _rx, _tx
from .errors import NetworkDead
from .state import NetworkArrays
from .topology import NetworkConfig, NodeState, deploy


@dataclass(frozen=True)
class RoundMetrics:
    round: int
    alive_total: int
    alive_normal: int
    alive_advance: int
    alive_super: int
    dead_total: int
    ch_count: int
    packets_to_bs: int
    total_residual: float
    # Energy actually drawn from batteries this round (not written to CSV).
    energy_spent: float = 0.0


@dataclass
class SimulationResult:
    per_round: list[RoundMetrics]
    first_death_round: Optional[int]
    last_death_round: Optional[int]
    protocol: ProtocolKind
    config_echo: NetworkConfig
    # False when the landmark was not reached before max_rounds.
    first_death_observed: bool = False
    last_death_observed: bool = False

    @property
    def total_packets_to_bs(self) -> int:
        return self.per_round[-1].packets_to_bs if self.per_round else 0


class StabilityPeriod(int):
    """Round count of the stability period.

    ``censored`` is set when no node died within ``max_rounds`` and the value
    is only a lower bound.
    """

    censored: bool

    def __new__(cls, rounds: int, censored: bool = False):
        value = super().__new__(cls, rounds)
        value.censored = censored
        return value


def _play_round(state: NetworkArrays, config, protocol, round, rng, packets_so_far):
    """Advance ``state`` by one round; returns (metrics, heads, head_of)."""
    if not state.alive.any():
        raise NetworkDead("all nodes are dead")
    if protocol is ProtocolKind.CEEC:
        heads = select_heads(state, config.p)
        head_of = associate(state, heads)
    else:
        heads = elect_heads(protocol, state, config, round, rng)
        head_of = associate_anywhere(state, heads)
    state.last_ch[heads] = round

    radio = config.radio
    bits = radio.packet_bits
    cost = np.zeros(len(state.ids))
    if len(heads) == 0:
        senders = state.alive.nonzero()[0]
        cost[senders] = _tx(radio, bits, state.to_bs[senders])
        delivered = len(senders)
    else:
        members = (head_of >= 0).nonzero()[0]
        their_heads = head_of[members]
        cost[members] = _tx(radio, bits, np.sqrt(state.d2[members, their_heads]))
        counts = np.bincount(their_heads, minlength=len(state.ids))[heads]
        cost[heads] = (
            counts * _rx(radio, bits)
            + _aggregate(radio, bits, counts + 1)
            + _tx(radio, bits, state.to_bs[heads])
        )
        delivered = len(heads)

    residual = state.residual
    drawn = np.minimum(cost, residual)
    exhausted = (cost > 0) & (cost >= residual)
    state.residual = np.where(exhausted, 0.0, residual - drawn)
    state.alive &= ~exhausted

    alive_by_tier = np.bincount(state.tier[state.alive], minlength=3).tolist()
    alive_total = sum(alive_by_tier)
    metrics = RoundMetrics(
        round=round,
        alive_total=alive_total,
        alive_normal=alive_by_tier[0],
        alive_advance=alive_by_tier[1],
        alive_super=alive_by_tier[2],
        dead_total=len(state.ids) - alive_total,
        ch_count=len(heads),
        packets_to_bs=packets_so_far + delivered,
        total_residual=float(state.residual.sum()),
        energy_spent=float(drawn.sum()),
    )
    return metrics, heads, head_of


def run_round(
    nodes: Sequence[NodeState],
    config: NetworkConfig,
    protocol: ProtocolKind,
    round: int,
    rng: np.random.Generator,
    packets_so_far: int = 0,
) -> RoundMetrics:
    """Play one round in place on ``nodes`` and return its end-of-round metrics.

    ``packets_so_far`` is the cumulative BS packet count before this round.
    """
    state = NetworkArrays.from_nodes(nodes, config)
    metrics, heads, head_of = _play_round(
        state, config, ProtocolKind(protocol), round, rng, packets_so_far
    )
    state.write_back(nodes, heads, head_of)
    return metrics


def run_simulation(config: NetworkConfig, protocol: ProtocolKind) -> SimulationResult:
    """Deploy from ``config.seed`` and play rounds until extinction or the cap.

    Deployment and baseline elections share one seeded stream, so every
    protocol sees the same layout for a given seed.
    """
    protocol = ProtocolKind(protocol)
    rng = np.random.default_rng(config.seed)
    state = NetworkArrays.from_nodes(deploy(config, rng), config)
    n = len(state.ids)
    per_round = []
    first_death = last_death = None
    packets = 0
    for round in range(1, config.max_rounds + 1):
        metrics, _, _ = _play_round(state, config, protocol, round, rng, packets)
        per_round.append(metrics)
        packets = metrics.packets_to_bs
        if first_death is None and metrics.alive_total < n:
            first_death = round
        if metrics.alive_total == 0:
            last_death = round
            break

    result = SimulationResult(per_round, first_death, last_death, protocol, config)
    result.first_death_observed = first_death is not None
    result.last_death_observed = last_death is not None
    if config.max_rounds > 0:
        if first_death is None:
            result.first_death_round = config.max_rounds
        if last_death is None:
            result.last_death_round = config.max_rounds
    return result


def stability_period(result: SimulationResult) -> StabilityPeriod:
    """Rounds until the first node death (censored at ``max_rounds``)."""
    if result.first_death_round is None:
        raise ValueError("simulation ran zero rounds; no stability period")
    return StabilityPeriod(result.first_death_round, censored=not result.first_death_observed)
