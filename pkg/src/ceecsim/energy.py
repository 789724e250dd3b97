"""First-order radio energy model.

Transmission costs ``k * e_elec_tx + k * e_amp * d**2`` joules for ``k`` bits
over ``d`` metres (free-space exponent only; there is no multipath regime).
Reception costs ``k * e_elec_rx`` and aggregation ``signals * k * e_da``.
The functions broadcast over numpy arrays as well as scalars.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidConfig


@dataclass(frozen=True)
class RadioParams:
    e_elec_tx: float = 50e-9
    e_elec_rx: float = 50e-9
    e_amp: float = 100e-12
    e_da: float = 50e-12
    packet_bits: int = 200

    def __post_init__(self):
        for name in ("e_elec_tx", "e_elec_rx", "e_amp", "e_da", "packet_bits"):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidConfig(name, f"must be strictly positive, got {value!r}")
        if int(self.packet_bits) != self.packet_bits:
            raise InvalidConfig("packet_bits", f"must be an integer, got {self.packet_bits!r}")


def _check_non_negative(**values):
    for name, value in values.items():
        if isinstance(value, np.ndarray):
            negative = value.size > 0 and value.min() < 0
        else:
            negative = value < 0
        if negative:
            raise ValueError(f"{name} must be non-negative, got {value!r}")


# Unchecked forms for the round loop, whose inputs are non-negative by
# construction.
def _tx(params, bits, distance):
    return bits * params.e_elec_tx + bits * params.e_amp * distance * distance


def _rx(params, bits):
    return bits * params.e_elec_rx


def _aggregate(params, bits, signals):
    return signals * bits * params.e_da


def tx_energy(params: RadioParams, bits: int, distance: float) -> float:
    """Energy (J) to send ``bits`` over ``distance`` metres."""
    _check_non_negative(bits=bits, distance=distance)
    return _tx(params, bits, distance)


def rx_energy(params: RadioParams, bits: int) -> float:
    _check_non_negative(bits=bits)
    return _rx(params, bits)


def aggregation_energy(params: RadioParams, bits: int, signals: int) -> float:
    """Cost of fusing ``signals`` packets of ``bits`` each.

    A cluster head aggregates one signal per member plus its own reading.
    """
    _check_non_negative(bits=bits, signals=signals)
    return _aggregate(params, bits, signals)
