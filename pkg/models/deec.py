"""
DEEC module for the sensor network simulator.

This module contains the DeecProtocol class: election probability scaled by
each node's residual energy relative to the mean residual energy of the
alive population, T_i = p_opt * E_i / mean(E), capped to [0, 1].
"""

from typing import Sequence

from .cluster_protocol import ClusterProtocol, ProtocolConfig
from .sensor_node import NodeState


class DeecProtocol(ClusterProtocol):
    """Residual-energy-weighted election."""

    def __init__(self, config: ProtocolConfig) -> None:
        super().__init__(config)
        self.__mean_energy = 0.0

    def prepare_round(self, population: Sequence[NodeState]) -> None:
        """Refresh the mean residual energy of the alive population."""
        alive = [node.get_residual_energy() for node in population if node.is_alive()]
        self.__mean_energy = sum(alive) / len(alive) if alive else 0.0

    def get_mean_energy(self) -> float:
        """Get the mean residual energy used this round."""
        return self.__mean_energy

    def threshold(self, node: NodeState, round_index: int) -> float:
        if self.__mean_energy <= 0:
            return 0.0
        value = self.get_config().get_deec_p_opt() * node.get_residual_energy() / self.__mean_energy
        return min(1.0, max(0.0, value))

    def get_protocol_kind(self) -> str:
        return "DEEC"
