"""
Protocol operations for the sensor network simulator.

This module ties the concrete election rules to the round: it builds the
protocol object for a configuration, elects heads among awake nodes, forms
clusters by nearest head, and charges every transmission, reception and
aggregation of the round to the nodes' batteries.
"""

import logging
from typing import Dict, Iterable, Optional, Sequence, Set

from .cluster_protocol import ClusterAssignment, ClusterProtocol, ProtocolConfig
from .deec import DeecProtocol
from .leach import LeachProtocol
from .network_model import DistanceTable, Position
from .radio_model import RadioParams, ch_round_energy, tx_energy
from .sep import SepProtocol
from .sensor_node import NodeState
from .teen import TeenProtocol, teen_should_report

logger = logging.getLogger(__name__)

__all__ = [
    "RoundLedger", "make_protocol", "elect_heads", "form_clusters", "account_round", "teen_should_report",
]


def make_protocol(config: ProtocolConfig, hetero_fraction: float = 0.0, hetero_alpha: float = 0.0) -> ClusterProtocol:
    """
    Build the protocol object for a configuration.

    Args:
        config (ProtocolConfig): Election parameters
        hetero_fraction (float): Advanced-node fraction m (SEP only)
        hetero_alpha (float): Extra-energy factor alpha (SEP only)

    Returns:
        ClusterProtocol: The concrete protocol
    """
    kind = config.get_kind()
    if kind == "LEACH":
        return LeachProtocol(config)
    if kind == "TEEN":
        return TeenProtocol(config)
    if kind == "SEP":
        return SepProtocol(config, hetero_fraction, hetero_alpha)
    return DeecProtocol(config)


def elect_heads(nodes: Sequence[NodeState], protocol: ClusterProtocol, round_index: int, rng=None,
                draws=None, population: Optional[Sequence[NodeState]] = None) -> Set[int]:
    """
    Elect this round's cluster heads.

    Each candidate becomes head when its uniform draw falls below its
    threshold. The engine passes one draw per node id so that every arm of a
    paired comparison consumes the same stream; standalone callers may pass a
    generator instead and get one draw per candidate, in order.

    Args:
        nodes (sequence): Awake, alive candidates
        protocol (ClusterProtocol): Election rule
        round_index (int): Current round, >= 0
        rng (numpy.random.Generator, optional): Source of draws when `draws` is omitted
        draws (indexable, optional): Uniform draws by node id
        population (sequence, optional): Alive population for energy-relative rules; defaults to `nodes`

    Returns:
        set: Elected head ids (empty for an empty population)
    """
    if round_index < 0:
        raise ValueError(f"Invalid round index: {round_index}")
    if not nodes:
        return set()
    protocol.prepare_round(population if population is not None else nodes)
    if draws is None:
        if rng is None:
            raise ValueError("Either rng or draws must be given")
        values = rng.random(len(nodes))
        draws = {node.get_node_id(): float(value) for node, value in zip(nodes, values)}
    return protocol.elect(nodes, round_index, draws)


def form_clusters(nodes: Sequence[NodeState], heads: Iterable[int],
                  distances: Optional[DistanceTable] = None) -> ClusterAssignment:
    """
    Attach every awake non-head to its nearest head.

    Ties go to the smaller head id. Without heads every node sends directly.

    Args:
        nodes (sequence): Awake, alive nodes
        heads (iterable): Head ids, a subset of `nodes`
        distances (DistanceTable, optional): Precomputed table covering `nodes`

    Returns:
        ClusterAssignment: The round's partition
    """
    head_ids = sorted(heads)
    head_set = set(head_ids)
    others = [node.get_node_id() for node in nodes if node.get_node_id() not in head_set]
    if not head_ids:
        return ClusterAssignment(head_ids, {}, others)
    if distances is None:
        distances = DistanceTable(nodes)
    nearest, _ = distances.nearest(others, head_ids)
    return ClusterAssignment(head_ids, dict(zip(others, nearest)), [])


class RoundLedger:
    """
    Energy and delivery outcome of one round.

    Holds what each node actually drew from its battery, the packets that
    reached the sink, and the energy spent per cluster.
    """

    def __init__(self) -> None:
        self.__per_node: Dict[int, float] = {}
        self.__packets_delivered = 0
        self.__cluster_totals: Dict[int, float] = {}

    def charge(self, node_id: int, joules: float) -> None:
        """Add a deduction for one node."""
        self.__per_node[node_id] = self.__per_node.get(node_id, 0.0) + joules

    def charge_cluster(self, head_id: int, joules: float) -> None:
        """Add energy to one cluster's total."""
        self.__cluster_totals[head_id] = self.__cluster_totals.get(head_id, 0.0) + joules

    def add_delivered_packet(self) -> None:
        """Count one packet that reached the sink."""
        self.__packets_delivered += 1

    def get_per_node(self) -> Dict[int, float]:
        """Get the deductions by node id."""
        return dict(self.__per_node)

    def get_total(self) -> float:
        """Sum of all per-node deductions."""
        return sum(self.__per_node.values())

    def get_packets_delivered(self) -> int:
        """Packets that reached the sink this round."""
        return self.__packets_delivered

    def get_cluster_energy_total(self) -> float:
        """Cluster energy summed over all clusters of the round."""
        return sum(self.__cluster_totals.values())

    def get_head_count(self) -> int:
        """Get the number of clusters charged this round."""
        return len(self.__cluster_totals)

    def get_cluster_energy_average(self) -> float:
        """Total cluster energy per head; 0 without heads."""
        heads = self.get_head_count()
        if heads == 0:
            return 0.0
        return self.get_cluster_energy_total() / heads


def account_round(nodes: Sequence[NodeState], assignment: ClusterAssignment, radio: RadioParams, sink: Position,
                  round_index: int = 0, readings: Optional[Dict[int, float]] = None,
                  freeze_energy: bool = False, distances: Optional[DistanceTable] = None) -> RoundLedger:
    """
    Charge the round's radio activity to the nodes.

    Members transmit to their head, heads receive, aggregate and send one
    packet to the sink, direct transmitters send to the sink. A node that
    cannot afford a send spends what it has, dies, and the packet is lost.
    Deductions happen members first, then heads, then direct transmitters,
    each group in id order.

    Args:
        nodes (sequence): Awake, alive nodes covered by `assignment`
        assignment (ClusterAssignment): The round's clusters
        radio (RadioParams): Radio coefficients
        sink (tuple): Sink position
        round_index (int): Current round, recorded on deaths
        readings (dict, optional): Reporting node id -> sensed value; None means every node reports
        freeze_energy (bool): Price the round without touching batteries
        distances (DistanceTable, optional): Precomputed table for `nodes` and `sink`

    Returns:
        RoundLedger: Deductions, delivered packets and cluster totals
    """
    by_id = {node.get_node_id(): node for node in nodes}
    bits = radio.get_packet_bits()
    if distances is None:
        distances = DistanceTable(nodes, sink)
    ledger = RoundLedger()

    def reports(node_id: int) -> bool:
        return readings is None or node_id in readings

    def pay(node: NodeState, cost: float):
        if freeze_energy:
            return cost, True
        return node.spend(cost, round_index)

    def delivered(node: NodeState) -> None:
        if readings is not None and node.get_node_id() in readings:
            node.set_last_reported_value(readings[node.get_node_id()])

    received: Dict[int, int] = {head_id: 0 for head_id in assignment.get_heads()}
    for member_id, head_id in assignment.get_membership().items():
        if not reports(member_id):
            continue
        member = by_id[member_id]
        cost = tx_energy(radio, bits, distances.between(member_id, head_id))
        drawn, completed = pay(member, cost)
        ledger.charge(member_id, drawn)
        ledger.charge_cluster(head_id, drawn)
        if completed:
            received[head_id] += 1
            delivered(member)

    for head_id in assignment.get_heads():
        ledger.charge_cluster(head_id, 0.0)
        own_packet = reports(head_id)
        if not own_packet and received[head_id] == 0:
            continue
        head = by_id[head_id]
        cost = ch_round_energy(radio, received[head_id], distances.to_sink(head_id), own_packet)
        drawn, completed = pay(head, cost)
        ledger.charge(head_id, drawn)
        ledger.charge_cluster(head_id, drawn)
        if completed:
            ledger.add_delivered_packet()
            delivered(head)

    for node_id in assignment.get_direct_transmitters():
        if not reports(node_id):
            continue
        node = by_id[node_id]
        drawn, completed = pay(node, tx_energy(radio, bits, distances.to_sink(node_id)))
        ledger.charge(node_id, drawn)
        if completed:
            ledger.add_delivered_packet()
            delivered(node)

    logger.debug("Round %d: %d packets to sink, %.6g J spent", round_index,
                 ledger.get_packets_delivered(), ledger.get_total())
    return ledger
