"""Flat ``key = value`` experiment configuration.

One assignment per line, ``#`` starts a comment, blank lines are ignored.
Every omitted key falls back to the reference simulation parameters
(100 m field, 100 nodes split 34/33/33, 0.5 J, p = 0.1, 200-bit packets).

Recognised keys::

    field_side n n1 n2 n3 e0 alpha p bs_x bs_y
    packet_bits e_elec_tx e_elec_rx e_amp e_da
    seed max_rounds protocols seeds output_dir emit_plots
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .baselines import ProtocolKind
from .energy import RadioParams
from .errors import InvalidConfig
from .topology import NetworkConfig


class ConfigError(Exception):
    """Base class for configuration problems (CLI exit code 2)."""


class ConfigFileNotFound(ConfigError):
    pass


class ConfigSyntaxError(ConfigError):
    def __init__(self, path, line_no: int, line: str):
        super().__init__(f"{path}:{line_no}: expected 'key = value', got {line!r}")
        self.line_no = line_no


class ConfigValueError(ConfigError):
    """A key is unknown, has the wrong type, or is out of range."""

    def __init__(self, key: str, message: str):
        super().__init__(f"invalid value for '{key}': {message}")
        self.key = key


INT_KEYS = {"n", "n1", "n2", "n3", "packet_bits", "seed", "max_rounds"}
FLOAT_KEYS = {"field_side", "e0", "alpha", "p", "bs_x", "bs_y", "e_elec_tx", "e_elec_rx", "e_amp", "e_da"}
RADIO_KEYS = {"packet_bits", "e_elec_tx", "e_elec_rx", "e_amp", "e_da"}
EXPERIMENT_KEYS = {"protocols", "seeds", "output_dir", "emit_plots"}
KNOWN_KEYS = INT_KEYS | FLOAT_KEYS | EXPERIMENT_KEYS

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


@dataclass
class ExperimentSpec:
    base: NetworkConfig = field(default_factory=NetworkConfig)
    protocols: list[ProtocolKind] = field(default_factory=lambda: list(ProtocolKind))
    seeds: list[int] = field(default_factory=lambda: [0])
    output_dir: Path = Path("results")
    emit_plots: bool = False

    def __post_init__(self):
        if not self.protocols:
            raise ConfigValueError("protocols", "at least one protocol is required")
        if not self.seeds:
            raise ConfigValueError("seeds", "at least one seed is required")
        self.output_dir = Path(self.output_dir)

    def config_for(self, seed: int) -> NetworkConfig:
        return replace(self.base, seed=seed)


def read_pairs(path) -> dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise ConfigFileNotFound(f"config file not found: {path}") from None
    except OSError as exc:
        raise ConfigFileNotFound(f"cannot read config file {path}: {exc.strerror}") from None
    pairs = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigSyntaxError(path, line_no, raw)
        if key not in KNOWN_KEYS:
            raise ConfigValueError(key, "unknown key")
        if key in pairs:
            raise ConfigValueError(key, f"duplicate key (line {line_no})")
        pairs[key] = value
    return pairs


def parse_protocols(value: str, key: str = "protocols") -> list[ProtocolKind]:
    names = [item.strip().lower() for item in value.split(",") if item.strip()]
    try:
        return [ProtocolKind(name) for name in names]
    except ValueError as exc:
        choices = ", ".join(kind.value for kind in ProtocolKind)
        raise ConfigValueError(key, f"{exc}; choose from {choices}") from None


def parse_seeds(value: str, key: str = "seeds") -> list[int]:
    try:
        seeds = [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise ConfigValueError(key, f"expected comma-separated integers, got {value!r}") from None
    if any(seed < 0 for seed in seeds):
        raise ConfigValueError(key, "seeds must be non-negative")
    return seeds


def _typed(key: str, value: str):
    try:
        if key in INT_KEYS:
            return int(value)
        return float(value)
    except ValueError:
        kind = "an integer" if key in INT_KEYS else "a number"
        raise ConfigValueError(key, f"expected {kind}, got {value!r}") from None


def _node_counts(values: dict) -> dict:
    explicit = {k: values[k] for k in ("n1", "n2", "n3") if k in values}
    if "n" not in values:
        return explicit
    n = values["n"]
    if n < 0:
        raise ConfigValueError("n", "must be >= 0")
    if len(explicit) == 3:
        if sum(explicit.values()) != n:
            raise ConfigValueError("n", f"n1 + n2 + n3 = {sum(explicit.values())} but n = {n}")
        return explicit
    if explicit:
        raise ConfigValueError("n", "give either n alone or all of n1, n2, n3")
    # remainder goes to the normal tier: 100 -> 34/33/33
    third = n // 3
    return {"n1": n - 2 * third, "n2": third, "n3": third}


def build_spec(pairs: dict[str, str]) -> ExperimentSpec:
    values = {k: _typed(k, v) for k, v in pairs.items() if k in INT_KEYS | FLOAT_KEYS}
    radio_values = {k: values.pop(k) for k in list(values) if k in RADIO_KEYS}
    counts = _node_counts(values)
    values.pop("n", None)
    values.update(counts)
    try:
        base = NetworkConfig(radio=RadioParams(**radio_values), **values)
    except InvalidConfig as exc:
        raise ConfigValueError(exc.key, exc.message) from None

    spec = ExperimentSpec(base=base)
    if "protocols" in pairs:
        spec.protocols = parse_protocols(pairs["protocols"])
    if "seeds" in pairs:
        spec.seeds = parse_seeds(pairs["seeds"])
    elif "seed" in pairs:
        spec.seeds = [base.seed]
    if "output_dir" in pairs:
        spec.output_dir = Path(pairs["output_dir"])
    if "emit_plots" in pairs:
        flag = pairs["emit_plots"].lower()
        if flag not in _TRUE | _FALSE:
            raise ConfigValueError("emit_plots", f"expected true/false, got {pairs['emit_plots']!r}")
        spec.emit_plots = flag in _TRUE
    spec.__post_init__()
    return spec


def parse_config(path) -> ExperimentSpec:
    """Read ``path`` into an :class:`ExperimentSpec` with defaults filled in."""
    return build_spec(read_pairs(path))


def override(
    spec: ExperimentSpec,
    output_dir: Optional[Path] = None,
    emit_plots: Optional[bool] = None,
    protocols: Optional[list[ProtocolKind]] = None,
    seeds: Optional[list[int]] = None,
) -> ExperimentSpec:
    """Apply command-line flags on top of file values."""
    return ExperimentSpec(
        base=spec.base,
        protocols=protocols if protocols is not None else spec.protocols,
        seeds=seeds if seeds is not None else spec.seeds,
        output_dir=output_dir if output_dir is not None else spec.output_dir,
        emit_plots=spec.emit_plots if emit_plots is None else emit_plots,
    )
