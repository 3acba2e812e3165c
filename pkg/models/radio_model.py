"""
Radio energy module for the sensor network simulator.

This module contains the RadioParams class holding the first-order radio
model coefficients, and the pure functions that price transmission,
reception and aggregation in joules. Transmission uses the free-space
amplifier below the crossover distance d0 and the multipath amplifier from
d0 upwards.
"""

import math

from .exceptions import InvalidArgumentError, InvalidConfigurationError


class RadioParams:
    """
    Energy coefficients of the first-order radio model.

    The crossover distance is either derived as sqrt(e_fs / e_mp), which keeps
    the transmit cost continuous at d0, or fixed to a literal value.
    """

    D0_MODES = ("derived", "fixed")

    def __init__(self, e_elec: float = 50e-9, e_fs: float = 10e-12, e_mp: float = 0.0013e-12,
                 e_da: float = 5e-9, packet_bits: int = 4000, d0_mode: str = "derived",
                 d0: float = 87.0) -> None:
        """
        Initialize the radio parameters.

        Args:
            e_elec (float): Electronics energy, J/bit
            e_fs (float): Free-space amplifier coefficient, J/bit/m^2
            e_mp (float): Multipath amplifier coefficient, J/bit/m^4
            e_da (float): Aggregation energy, J/bit
            packet_bits (int): Data packet length in bits
            d0_mode (str): 'derived' or 'fixed'
            d0 (float): Crossover distance in meters, used in 'fixed' mode

        Raises:
            InvalidConfigurationError: If any coefficient is invalid
        """
        self.__e_elec = self._validate_coefficient("e_elec", e_elec)
        self.__e_fs = self._validate_coefficient("e_fs", e_fs)
        self.__e_mp = self._validate_coefficient("e_mp", e_mp)
        self.__e_da = self._validate_coefficient("e_da", e_da)
        self.__packet_bits = self._validate_packet_bits(packet_bits)
        self.__d0_mode = self._validate_d0_mode(d0_mode)
        if self.__d0_mode == "derived":
            self.__d0 = math.sqrt(self.__e_fs / self.__e_mp)
        else:
            self.__d0 = self._validate_coefficient("d0", d0)

    def _validate_coefficient(self, field: str, value: float) -> float:
        """Validate a strictly positive, finite coefficient."""
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidConfigurationError(field, value, "must be a number")
        value = float(value)
        if not math.isfinite(value) or value <= 0:
            raise InvalidConfigurationError(field, value, "must be a positive finite number")
        return value

    def _validate_packet_bits(self, packet_bits: int) -> int:
        """Validate the packet length."""
        if isinstance(packet_bits, bool) or not isinstance(packet_bits, int):
            raise InvalidConfigurationError("packet_bits", packet_bits, "must be an integer")
        if packet_bits < 0:
            raise InvalidConfigurationError("packet_bits", packet_bits, "cannot be negative")
        return packet_bits

    def _validate_d0_mode(self, d0_mode: str) -> str:
        """Validate the crossover mode."""
        if d0_mode not in self.D0_MODES:
            raise InvalidConfigurationError("d0_mode", d0_mode, f"must be one of {', '.join(self.D0_MODES)}")
        return d0_mode

    # Getter methods
    def get_e_elec(self) -> float:
        """Get the electronics energy per bit."""
        return self.__e_elec

    def get_e_fs(self) -> float:
        """Get the free-space amplifier coefficient."""
        return self.__e_fs

    def get_e_mp(self) -> float:
        """Get the multipath amplifier coefficient."""
        return self.__e_mp

    def get_e_da(self) -> float:
        """Get the aggregation energy per bit."""
        return self.__e_da

    def get_packet_bits(self) -> int:
        """Get the data packet length in bits."""
        return self.__packet_bits

    def get_d0_mode(self) -> str:
        """Get the crossover mode."""
        return self.__d0_mode

    def get_d0(self) -> float:
        """Get the crossover distance in meters."""
        return self.__d0

    def to_dict(self) -> dict:
        """Return the resolved parameters as a flat dictionary."""
        return {
            "e_elec": self.__e_elec,
            "e_fs": self.__e_fs,
            "e_mp": self.__e_mp,
            "e_da": self.__e_da,
            "packet_bits": self.__packet_bits,
            "d0_mode": self.__d0_mode,
            "d0": self.__d0,
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadioParams):
            return False
        return self.to_dict() == other.to_dict()

    def __str__(self) -> str:
        return (f"RadioParams(e_elec={self.__e_elec:g}, e_fs={self.__e_fs:g}, e_mp={self.__e_mp:g}, "
                f"e_da={self.__e_da:g}, D={self.__packet_bits}, d0={self.__d0:.3f} [{self.__d0_mode}])")


def _require_non_negative(argument: str, value: float) -> None:
    if value < 0:
        raise InvalidArgumentError(argument, value, "cannot be negative")


def tx_energy(params: RadioParams, bits: int, d: float) -> float:
    """
    Energy to transmit `bits` over distance `d`.

    Args:
        params (RadioParams): Radio coefficients
        bits (int): Number of bits sent
        d (float): Distance in meters

    Returns:
        float: Joules; bits*e_elec plus bits*e_fs*d^2 below d0, bits*e_mp*d^4 from d0 on

    Raises:
        InvalidArgumentError: If bits or d is negative
    """
    _require_non_negative("bits", bits)
    _require_non_negative("d", d)
    if d < params.get_d0():
        amplifier = params.get_e_fs() * d * d
    else:
        amplifier = params.get_e_mp() * d ** 4
    return bits * params.get_e_elec() + bits * amplifier


def rx_energy(params: RadioParams, bits: int) -> float:
    """Energy to receive `bits`."""
    _require_non_negative("bits", bits)
    return bits * params.get_e_elec()


def aggregation_energy(params: RadioParams, bits: int) -> float:
    """Energy to aggregate `bits`."""
    _require_non_negative("bits", bits)
    return bits * params.get_e_da()


def ch_round_energy(params: RadioParams, member_count: int, d_to_sink: float, own_packet: bool = True) -> float:
    """
    Round energy of a cluster head.

    The head receives one packet per member, aggregates the members' packets
    together with its own reading, when it has one, and sends one aggregated
    packet to the sink.

    Args:
        params (RadioParams): Radio coefficients
        member_count (int): Number of member packets received
        d_to_sink (float): Head-to-sink distance in meters
        own_packet (bool): Whether the head adds a reading of its own to the aggregate

    Returns:
        float: Joules
    """
    _require_non_negative("member_count", member_count)
    bits = params.get_packet_bits()
    return (rx_energy(params, member_count * bits)
            + aggregation_energy(params, (member_count + int(own_packet)) * bits)
            + tx_energy(params, bits, d_to_sink))
