class InvalidConfig(ValueError):
    """A configuration value violates its range; ``key`` names the field."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message


class NetworkDead(RuntimeError):
    """No node is alive; the simulation cannot continue."""


class RegionExtinct(ValueError):
    """A region has no alive node, so it has no average energy."""


class OrphanedRegion(RuntimeError):
    """A region has alive non-head nodes but no cluster head to join."""
