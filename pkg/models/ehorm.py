"""
E-HORM sleep/awake module for the sensor network simulator.

Every round the sink finds the alive node farthest from it and prices one
packet from that node as the threshold energy E_th. Nodes whose residual
energy is below E_th sleep for the round; the rest stay awake. Sleeping is
re-decided from scratch every round. The savings ledger books the energy
sleeping nodes would have spent had they stayed awake.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import InvalidArgumentError
from .network_model import DistanceTable, Position, max_distance_alive_node
from .radio_model import RadioParams, ch_round_energy, tx_energy
from .sensor_node import ROLE_CLUSTER_HEAD, NodeState

logger = logging.getLogger(__name__)


class ThresholdState:
    """Threshold energy of one round and the node it was derived from."""

    def __init__(self, e_th: float, max_node_id: int, max_distance: float) -> None:
        """
        Initialize a ThresholdState object.

        Args:
            e_th (float): Threshold energy in joules
            max_node_id (int): Id of the farthest alive node
            max_distance (float): Its distance to the sink in meters
        """
        self.__e_th = e_th
        self.__max_node_id = max_node_id
        self.__max_distance = max_distance

    def get_e_th(self) -> float:
        """Get the threshold energy in joules."""
        return self.__e_th

    def get_max_node_id(self) -> int:
        """Get the id of the farthest alive node."""
        return self.__max_node_id

    def get_max_distance(self) -> float:
        """Get the farthest node's distance to the sink."""
        return self.__max_distance

    def __str__(self) -> str:
        return f"E_th={self.__e_th:.6g} J (node {self.__max_node_id} at {self.__max_distance:.2f} m)"


class SavingsLedger:
    """
    Energy avoided by sleeping nodes.

    Per-round figures are split into normal (member-role) and head-equivalent
    savings; the cumulative total is their running sum over all rounds.
    """

    def __init__(self) -> None:
        self.__per_round_normal = 0.0
        self.__per_round_ch_equivalent = 0.0
        self.__cumulative_total = 0.0

    def begin_round(self) -> None:
        """Reset the per-round figures; the cumulative total carries over."""
        self.__per_round_normal = 0.0
        self.__per_round_ch_equivalent = 0.0

    def add_normal(self, joules: float) -> None:
        self.__per_round_normal += joules
        self.__cumulative_total += joules

    def add_ch_equivalent(self, joules: float) -> None:
        self.__per_round_ch_equivalent += joules
        self.__cumulative_total += joules

    def get_per_round_normal(self) -> float:
        """Get this round's member-role savings."""
        return self.__per_round_normal

    def get_per_round_ch_equivalent(self) -> float:
        """Get this round's head-equivalent savings."""
        return self.__per_round_ch_equivalent

    def get_per_round_total(self) -> float:
        """Get this round's savings."""
        return self.__per_round_normal + self.__per_round_ch_equivalent

    def get_cumulative_total(self) -> float:
        """Get the savings summed over all rounds."""
        return self.__cumulative_total


def compute_threshold(radio: RadioParams, max_distance: float) -> float:
    """
    Threshold energy for the farthest node to reach the sink.

    E_th = (e_elec + e_da) * D + e_mp * D * d^4, with d the distance of the
    farthest alive node. The multipath term is used whatever d is.

    Args:
        radio (RadioParams): Radio coefficients
        max_distance (float): Distance in meters, >= 0

    Returns:
        float: Joules

    Raises:
        InvalidArgumentError: If the distance is negative
    """
    if max_distance < 0:
        raise InvalidArgumentError("max_distance", max_distance, "cannot be negative")
    bits = radio.get_packet_bits()
    return (radio.get_e_elec() + radio.get_e_da()) * bits + radio.get_e_mp() * bits * max_distance ** 4


def scan_threshold(nodes: Sequence[NodeState], sink: Position, radio: RadioParams,
                   distances: Optional[DistanceTable] = None) -> ThresholdState:
    """Run the sink's max-distance scan and price the threshold."""
    node_id, max_distance = max_distance_alive_node(nodes, sink, distances)
    return ThresholdState(compute_threshold(radio, max_distance), node_id, max_distance)


def classify_sleep(nodes: Sequence[NodeState], e_th: float) -> Tuple[List[NodeState], List[NodeState]]:
    """
    Split the alive nodes into awake and asleep for this round.

    A node with residual energy >= e_th is awake; below e_th it sleeps.
    Dead nodes are in neither list.

    Args:
        nodes (sequence): Population
        e_th (float): This round's threshold energy

    Returns:
        tuple: (awake nodes, asleep nodes), each in input order
    """
    awake, asleep = [], []
    for node in nodes:
        if not node.is_alive():
            continue
        if node.get_residual_energy() >= e_th:
            awake.append(node)
        else:
            asleep.append(node)
    return awake, asleep


def record_savings(asleep: Sequence[NodeState], roles: Dict[int, str], radio: RadioParams, ledger: SavingsLedger,
                   heads: Sequence[NodeState] = (), sink: Position = (0.0, 0.0),
                   mean_members: int = 0, distances: Optional[DistanceTable] = None) -> SavingsLedger:
    """
    Book what the sleeping nodes avoided spending this round.

    A node in member role would have sent one packet to its nearest head, or
    to the sink when no head exists. A node in head role would have paid a
    full cluster-head round with `mean_members` members.

    Args:
        asleep (sequence): Sleeping nodes
        roles (dict): Node id -> counterfactual role
        radio (RadioParams): Radio coefficients
        ledger (SavingsLedger): Ledger to update
        heads (sequence): This round's elected heads
        sink (tuple): Sink position
        mean_members (int): Member count for head-equivalent savings
        distances (DistanceTable, optional): Precomputed table for the sleepers, heads and sink

    Returns:
        SavingsLedger: The updated ledger
    """
    if not asleep:
        return ledger
    if distances is None:
        distances = DistanceTable(list(asleep) + list(heads), sink)
    bits = radio.get_packet_bits()
    sleeper_ids = [node.get_node_id() for node in asleep]
    head_ids = sorted(head.get_node_id() for head in heads)
    if head_ids:
        _, to_head = distances.nearest(sleeper_ids, head_ids)
    else:
        to_head = [distances.to_sink(node_id) for node_id in sleeper_ids]
    for node_id, target in zip(sleeper_ids, to_head):
        if roles.get(node_id) == ROLE_CLUSTER_HEAD:
            ledger.add_ch_equivalent(ch_round_energy(radio, mean_members, distances.to_sink(node_id)))
        else:
            ledger.add_normal(tx_energy(radio, bits, target))
    return ledger
