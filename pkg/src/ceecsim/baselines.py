"""Distributed, probabilistic cluster-head election baselines.

All four protocols use the LEACH rotation threshold

    T(n) = p_i / (1 - p_i * (r mod ceil(1/p_i)))

for nodes that have not served as head in their current epoch, and 0
otherwise. They differ only in the per-node election probability ``p_i``:

* LEACH (Heinzelman et al., 2000): ``p_i = p`` for every node.
* SEP (Smaragdakis et al., 2004): two classes. Normal nodes use
  ``p / (1 + alpha*m)`` and advanced nodes ``p * (1 + alpha) / (1 + alpha*m)``
  where ``m`` is the advanced fraction. Advance and super tiers together form
  the advanced class; ``alpha`` is that class's mean extra-energy factor.
* E-SEP (Aderohunmu et al., 2011): three classes, each weighted by
  ``1 + a_i`` where ``a_i`` is its extra-energy factor (0, alpha, 2*alpha),
  normalised so the population-weighted mean stays ``p``.
* DEEC (Qing et al., 2006): ``p_i = p * E_i(r) / mean(E(r))`` using the true
  mean residual energy of alive nodes. The epoch length ``ceil(1/p_i)`` is
  re-evaluated every round.

Elected heads are joined by the nearest alive node anywhere in the field;
there is no region restriction. Random draws are consumed one per alive node
in ascending id order from a numpy ``Generator``.
"""

import functools
import math
from enum import Enum
from typing import Sequence

import numpy as np

from .ceec import ClusterAssignment
from .errors import NetworkDead
from .state import TIERS, NetworkArrays, nearest_heads
from .topology import TIER_ALPHA_WEIGHT, NetworkConfig, NodeState, Tier


class ProtocolKind(str, Enum):
    CEEC = "ceec"
    LEACH = "leach"
    SEP = "sep"
    ESEP = "esep"
    DEEC = "deec"


def epoch_length(p: float) -> int:
    # 1/p is not always exact in binary; 10.000000000000002 must stay 10
    return max(1, math.ceil(1 / p - 1e-9))


def leach_threshold(p: float, round: int, node_eligible: bool) -> float:
    """Rotation threshold for a zero-based round index."""
    if not node_eligible or p <= 0:
        return 0.0
    denominator = 1 - p * (round % epoch_length(p))
    if denominator <= 0:
        return 1.0
    return min(1.0, p / denominator)


def sep_thresholds(p: float, alpha: float, m: float) -> tuple[float, float]:
    scale = 1 + alpha * m
    return p / scale, p * (1 + alpha) / scale


def esep_thresholds(p: float, alpha: float, fractions: Sequence[float]) -> tuple[float, float, float]:
    """Election probabilities for (normal, intermediate, advanced) tiers.

    ``fractions`` are the population shares of the three tiers.
    """
    if len(fractions) != 3 or any(f < 0 for f in fractions):
        raise ValueError("fractions must be three non-negative shares")
    if abs(math.fsum(fractions) - 1) > 1e-9:
        raise ValueError(f"tier fractions must sum to 1, got {math.fsum(fractions)!r}")
    extras = (0.0, alpha, 2 * alpha)
    scale = 1 + math.fsum(f * a for f, a in zip(fractions, extras))
    return tuple(p * (1 + a) / scale for a in extras)


def deec_probability(p: float, node_residual: float, network_average: float) -> float:
    if not network_average > 0:
        raise ValueError("network_average must be > 0")
    if node_residual <= 0:
        return 0.0
    return min(1.0, p * node_residual / network_average)


def _tier_probabilities(kind: ProtocolKind, config: NetworkConfig) -> dict[Tier, float]:
    p = config.p
    if kind is ProtocolKind.LEACH:
        return dict.fromkeys(Tier, p)
    n = config.n
    if kind is ProtocolKind.SEP:
        advanced = config.n2 + config.n3
        m = advanced / n
        if advanced:
            alpha = config.alpha * (config.n2 * TIER_ALPHA_WEIGHT[Tier.ADVANCE]
                                    + config.n3 * TIER_ALPHA_WEIGHT[Tier.SUPER]) / advanced
        else:
            alpha = 0.0
        p_nrm, p_adv = sep_thresholds(p, alpha, m)
        return {Tier.NORMAL: p_nrm, Tier.ADVANCE: p_adv, Tier.SUPER: p_adv}
    if kind is ProtocolKind.ESEP:
        fractions = (config.n1 / n, config.n2 / n, config.n3 / n)
        return dict(zip(Tier, esep_thresholds(p, config.alpha, fractions)))
    raise ValueError(f"no fixed tier probabilities for {kind.value}")


@functools.lru_cache(maxsize=64)
def _tier_probability_table(kind: ProtocolKind, config: NetworkConfig) -> np.ndarray:
    probabilities = _tier_probabilities(kind, config)
    return np.array([probabilities[tier] for tier in TIERS])


def _epoch_lengths(p: np.ndarray) -> np.ndarray:
    safe_p = np.where(p > 0, p, 1.0)
    # float epochs: exact for realistic lengths and no int64 overflow
    return np.maximum(1.0, np.ceil(1 / safe_p - 1e-9))


def rotation_thresholds(p: np.ndarray, round: int, eligible: np.ndarray, epoch=None) -> np.ndarray:
    """Vectorised :func:`leach_threshold` over per-node probabilities."""
    p = np.asarray(p, dtype=float)
    positive = p > 0
    safe_p = np.where(positive, p, 1.0)
    if epoch is None:
        epoch = _epoch_lengths(p)
    denominator = 1 - safe_p * (round % epoch)
    with np.errstate(divide="ignore"):
        t = np.where(denominator <= 0, 1.0, np.minimum(1.0, safe_p / denominator))
    return np.where(positive & eligible, t, 0.0)


def elect_heads(
    kind: ProtocolKind,
    state: NetworkArrays,
    config: NetworkConfig,
    round: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Sorted array indices of the nodes that elect themselves this round."""
    alive = state.alive.nonzero()[0]
    if len(alive) == 0:
        raise NetworkDead("all nodes are dead")
    draws = rng.random(len(alive))

    if kind is ProtocolKind.DEEC:
        residual = state.residual[alive]
        average = math.fsum(residual.tolist()) / len(residual)
        # deec_probability, vectorised; alive nodes have positive residual
        p = np.minimum(1.0, config.p * residual / average)
    else:
        p = _tier_probability_table(kind, config)[state.tier[alive]]

    # A node is eligible unless it already served inside its current epoch.
    # Epochs start at rounds 1, 1 + epoch, ...; last_ch is 0 if never served.
    epoch = _epoch_lengths(p)
    eligible = (state.last_ch[alive] - 1) // epoch != (round - 1) // epoch
    return alive[draws < rotation_thresholds(p, round - 1, eligible, epoch)]


def associate_anywhere(state: NetworkArrays, heads: np.ndarray) -> np.ndarray:
    """Index of the nearest head for every alive non-head node, else -1."""
    head_of = np.full(len(state.ids), -1, dtype=np.int64)
    if len(heads) == 0:
        return head_of
    members = state.alive.copy()
    members[heads] = False
    members = members.nonzero()[0]
    head_of[members] = nearest_heads(state.d2, members, heads)
    return head_of


def baseline_select(
    kind: ProtocolKind,
    nodes: Sequence[NodeState],
    config: NetworkConfig,
    round: int,
    rng: np.random.Generator,
) -> ClusterAssignment:
    """Elect heads stochastically and attach members to the nearest head.

    An empty ``heads`` list means nobody was elected; every alive node then
    reports straight to the BS.
    """
    kind = ProtocolKind(kind)
    if kind is ProtocolKind.CEEC:
        raise ValueError("CEEC is not a baseline; use ceec_select")
    state = NetworkArrays.from_nodes(nodes, config)
    heads = elect_heads(kind, state, config, round, rng)
    return ClusterAssignment.from_arrays(state, round, heads, associate_anywhere(state, heads))
