"""
LEACH module for the sensor network simulator.

This module contains the LeachProtocol class: homogeneous election with the
epoch-based rotating threshold, every node head at most once per epoch.
"""

from .cluster_protocol import ClusterProtocol
from .sensor_node import NodeState


class LeachProtocol(ClusterProtocol):
    """Rotating-threshold election with a single probability p for all nodes."""

    def threshold(self, node: NodeState, round_index: int) -> float:
        return self.rotating_threshold(node, self.get_config().get_p(), round_index)

    def get_protocol_kind(self) -> str:
        return "LEACH"
