"""
SEP module for the sensor network simulator.

This module contains the SepProtocol class: two-class heterogeneous election
where advanced nodes, holding (1 + alpha) times the normal energy, are
elected proportionally more often, each class on its own epoch length.
"""

from .cluster_protocol import ClusterProtocol, ProtocolConfig
from .exceptions import InvalidConfigurationError
from .sensor_node import NodeState


class SepProtocol(ClusterProtocol):
    """
    Weighted election probabilities for normal and advanced nodes.

    p_nrm = p / (1 + alpha*m) and p_adv = p * (1 + alpha) / (1 + alpha*m).
    With alpha = 0 or m = 0 this is LEACH.
    """

    def __init__(self, config: ProtocolConfig, hetero_fraction: float, hetero_alpha: float) -> None:
        """
        Initialize a SepProtocol object.

        Args:
            config (ProtocolConfig): Election parameters
            hetero_fraction (float): Fraction m of advanced nodes
            hetero_alpha (float): Extra-energy factor alpha

        Raises:
            InvalidConfigurationError: If the weighted probability of advanced nodes reaches 1
        """
        super().__init__(config)
        p = config.get_p()
        weight = 1.0 + hetero_alpha * hetero_fraction
        self.__p_normal = p / weight
        self.__p_advanced = p * (1.0 + hetero_alpha) / weight
        if self.__p_advanced >= 1.0:
            raise InvalidConfigurationError("hetero_alpha", hetero_alpha,
                                            f"advanced election probability {self.__p_advanced:.3f} must stay below 1")

    def get_p_normal(self) -> float:
        """Get the normal-node election probability."""
        return self.__p_normal

    def get_p_advanced(self) -> float:
        """Get the advanced-node election probability."""
        return self.__p_advanced

    def threshold(self, node: NodeState, round_index: int) -> float:
        p = self.__p_advanced if node.is_advanced() else self.__p_normal
        return self.rotating_threshold(node, p, round_index)

    def get_protocol_kind(self) -> str:
        return "SEP"
