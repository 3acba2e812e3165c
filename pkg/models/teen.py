"""
TEEN module for the sensor network simulator.

This module contains the TeenProtocol class. Election is LEACH's rotating
threshold; what differs is the reactive data path: a node only transmits a
reading above the hard threshold, and only when it moved by at least the
soft threshold since the last value it delivered.
"""

from typing import Optional

from .cluster_protocol import ClusterProtocol, ProtocolConfig
from .sensor_node import NodeState


def teen_should_report(sensed: float, last_reported: Optional[float], config: ProtocolConfig) -> bool:
    """
    Decide whether a TEEN node transmits its reading.

    Args:
        sensed (float): Current reading
        last_reported (float, optional): Last value delivered, None if never
        config (ProtocolConfig): Holds the hard and soft thresholds

    Returns:
        bool: True iff sensed > hard and (no prior report or |sensed - last| >= soft)
    """
    if sensed <= config.get_teen_hard_threshold():
        return False
    if last_reported is None:
        return True
    return abs(sensed - last_reported) >= config.get_teen_soft_threshold()


class TeenProtocol(ClusterProtocol):
    """Threshold-sensitive reactive protocol on top of rotating-threshold election."""

    def threshold(self, node: NodeState, round_index: int) -> float:
        return self.rotating_threshold(node, self.get_config().get_p(), round_index)

    def uses_sensing(self) -> bool:
        return True

    def should_report(self, node: NodeState, sensed: float) -> bool:
        return teen_should_report(sensed, node.get_last_reported_value(), self.get_config())

    def get_protocol_kind(self) -> str:
        return "TEEN"
