"""Three-region heterogeneous deployment.

The M x M field is cut into three equal horizontal strips stacked away from
the base station on the top edge: normal nodes nearest the BS (LER), advance
nodes in the middle (MER) and super nodes furthest away (HER). Initial energy
rises with distance from the BS: ``e0``, ``e0*(1+alpha)``, ``e0*(1+2*alpha)``.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .energy import RadioParams
from .errors import InvalidConfig


class Tier(str, Enum):
    NORMAL = "normal"
    ADVANCE = "advance"
    SUPER = "super"


class Region(str, Enum):
    LER = "LER"
    MER = "MER"
    HER = "HER"


class Role(str, Enum):
    CLUSTER_HEAD = "cluster_head"
    MEMBER = "member"
    UNASSIGNED = "unassigned"


HOME_REGION = {Tier.NORMAL: Region.LER, Tier.ADVANCE: Region.MER, Tier.SUPER: Region.HER}
TIER_OF_REGION = {region: tier for tier, region in HOME_REGION.items()}

# Extra-energy multiple of alpha carried by each tier.
TIER_ALPHA_WEIGHT = {Tier.NORMAL: 0, Tier.ADVANCE: 1, Tier.SUPER: 2}


@dataclass(slots=True)
class NodeState:
    id: int
    x: float
    y: float
    tier: Tier
    region: Region
    initial_energy: float
    residual_energy: float
    alive: bool = True
    role: Role = Role.UNASSIGNED
    ch_id: Optional[int] = None
    # Round in which the node last served as cluster head (baseline epochs).
    last_ch_round: Optional[int] = None


@dataclass(frozen=True)
class NetworkConfig:
    field_side: float = 100.0
    n1: int = 34
    n2: int = 33
    n3: int = 33
    e0: float = 0.5
    alpha: float = 1.0
    p: float = 0.1
    bs_x: Optional[float] = None
    bs_y: Optional[float] = None
    radio: RadioParams = field(default_factory=RadioParams)
    seed: int = 0
    max_rounds: int = 10000

    def __post_init__(self):
        # BS defaults to the centre of the top edge.
        if self.bs_x is None:
            object.__setattr__(self, "bs_x", self.field_side / 2)
        if self.bs_y is None:
            object.__setattr__(self, "bs_y", float(self.field_side))
        problems = []
        if not self.field_side > 0:
            problems.append(("field_side", "must be > 0"))
        for name in ("n1", "n2", "n3"):
            if getattr(self, name) < 0:
                problems.append((name, "must be >= 0"))
        if not 0 < self.p < 1:
            problems.append(("p", "must satisfy 0 < p < 1"))
        if not self.e0 > 0:
            problems.append(("e0", "must be > 0"))
        if not self.alpha >= 0:
            problems.append(("alpha", "must be >= 0"))
        if self.seed < 0:
            problems.append(("seed", "must be a non-negative integer"))
        if self.max_rounds < 0:
            problems.append(("max_rounds", "must be >= 0"))
        if problems:
            key, message = problems[0]
            raise InvalidConfig(key, message)

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + self.n3

    def tier_count(self, tier: Tier) -> int:
        return {Tier.NORMAL: self.n1, Tier.ADVANCE: self.n2, Tier.SUPER: self.n3}[tier]



def region_bounds(region: Region, field_side: float) -> tuple[float, float]:
    """(y_low, y_high) of a region's strip; LER touches the top edge."""
    if not field_side > 0:
        raise ValueError("field_side must be > 0")
    third = field_side / 3
    if region is Region.LER:
        return 2 * third, float(field_side)
    if region is Region.MER:
        return third, 2 * third
    return 0.0, third


def region_of(y: float, field_side: float) -> Region:
    third = field_side / 3
    if y >= 2 * third:
        return Region.LER
    if y >= third:
        return Region.MER
    return Region.HER


def tier_initial_energy(tier: Tier, e0: float, alpha: float) -> float:
    return e0 * (1 + TIER_ALPHA_WEIGHT[tier] * alpha)


def deploy(config: NetworkConfig, rng: np.random.Generator) -> list[NodeState]:
    """Place every tier uniformly at random inside its home strip.

    Ids run normal nodes first, then advance, then super. Coordinates are
    drawn x then y per node, so the layout depends only on the rng state.
    """
    if config.n == 0:
        raise ValueError("cannot deploy a network with zero nodes")
    side = config.field_side
    nodes = []
    for tier in Tier:
        region = HOME_REGION[tier]
        low, high = region_bounds(region, side)
        energy = tier_initial_energy(tier, config.e0, config.alpha)
        for u, v in rng.random((config.tier_count(tier), 2)).tolist():
            x = side * u
            y = low + (high - low) * v
            if region_of(y, side) is not region:
                # rounding pushed y onto the next strip's boundary
                y = low
            nodes.append(NodeState(len(nodes), x, y, tier, region, energy, energy))
    return nodes


def total_energy(nodes: Iterable[NodeState]) -> float:
    """Sum of initial energies."""
    return math.fsum(node.initial_energy for node in nodes)


def total_residual(nodes: Iterable[NodeState]) -> float:
    return math.fsum(node.residual_energy for node in nodes)


def distance_to_bs(node: NodeState, config: NetworkConfig) -> float:
    return math.hypot(node.x - config.bs_x, node.y - config.bs_y)

