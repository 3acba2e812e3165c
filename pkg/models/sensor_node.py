"""
Sensor node module for the sensor network simulator.

This module contains the NodeState class: one deployed sensor with its fixed
position, battery, heterogeneity class and the per-round flags (alive,
asleep, role) the engine updates.
"""

import math
from typing import Optional, Tuple

from .exceptions import InvalidArgumentError, InvalidConfigurationError

ROLE_MEMBER = "member"
ROLE_CLUSTER_HEAD = "cluster_head"
ROLE_DIRECT = "direct"

# Relative slack under which a cost counts as equal to the residual energy
EXHAUSTION_TOLERANCE = 1e-9


class NodeState:
    """
    Represents one sensor node in the field.

    Position and heterogeneity class are fixed at deployment. Residual energy
    only ever decreases and is clamped at zero. A node that cannot pay for an
    operation dies on the spot; a node whose battery is drained exactly by a
    completed operation is depleted and is retired at the start of the next
    round.
    """

    VALID_ROLES = (ROLE_MEMBER, ROLE_CLUSTER_HEAD, ROLE_DIRECT)

    def __init__(self, node_id: int, position: Tuple[float, float], initial_energy: float,
                 is_advanced: bool = False) -> None:
        """
        Initialize a NodeState object.

        Args:
            node_id (int): Node identifier, unique within a run
            position (tuple): (x, y) in meters
            initial_energy (float): Starting battery in joules
            is_advanced (bool): True for the high-energy heterogeneity class

        Raises:
            InvalidConfigurationError: If the energy is not positive
        """
        if initial_energy <= 0:
            raise InvalidConfigurationError("initial_energy", initial_energy, "must be positive")
        self.__node_id = node_id
        self.__position = (float(position[0]), float(position[1]))
        self.__initial_energy = float(initial_energy)
        self.__residual_energy = float(initial_energy)
        self.__is_advanced = bool(is_advanced)
        self.__alive = True
        self.__asleep = False
        self.__role = ROLE_MEMBER
        self.__last_active_role = ROLE_MEMBER
        self.__last_head_round: Optional[int] = None
        self.__last_reported_value: Optional[float] = None
        self.__death_round: Optional[int] = None

    # Getter methods
    def get_node_id(self) -> int:
        """Get the node identifier."""
        return self.__node_id

    def get_position(self) -> Tuple[float, float]:
        """Get the (x, y) position in meters."""
        return self.__position

    def get_initial_energy(self) -> float:
        """Get the energy the node was deployed with."""
        return self.__initial_energy

    def get_residual_energy(self) -> float:
        """Get the remaining energy in joules."""
        return self.__residual_energy

    def is_advanced(self) -> bool:
        """Check whether the node belongs to the advanced class."""
        return self.__is_advanced

    def is_alive(self) -> bool:
        """Check whether the node is still in service."""
        return self.__alive

    def is_depleted(self) -> bool:
        """Check whether an alive node has drained its battery to zero."""
        return self.__alive and self.__residual_energy <= 0.0

    def is_asleep(self) -> bool:
        """Check whether the node sleeps this round."""
        return self.__asleep

    def get_role(self) -> str:
        """Get this round's role."""
        return self.__role

    def get_last_active_role(self) -> str:
        """Get the role held in the last round the node was awake."""
        return self.__last_active_role

    def get_last_head_round(self) -> Optional[int]:
        """Get the last round the node served as cluster head."""
        return self.__last_head_round

    def get_last_reported_value(self) -> Optional[float]:
        """Get the last sensed value this node delivered (TEEN)."""
        return self.__last_reported_value

    def get_death_round(self) -> Optional[int]:
        """Get the round the node died in, or None while alive."""
        return self.__death_round

    # Setter methods
    def set_asleep(self, asleep: bool) -> None:
        """Set the sleep flag; a sleeping node is a silent member."""
        self.__asleep = bool(asleep)
        if self.__asleep:
            self.__role = ROLE_MEMBER

    def set_role(self, role: str) -> None:
        """Set this round's role."""
        if role not in self.VALID_ROLES:
            raise ValueError(f"Invalid role: {role}. Must be one of {', '.join(self.VALID_ROLES)}")
        self.__role = role
        if not self.__asleep:
            self.__last_active_role = role

    def set_last_reported_value(self, value: float) -> None:
        """Record the last sensed value that reached its destination."""
        self.__last_reported_value = value

    def mark_head(self, round_index: int) -> None:
        """Record a headship in the given round."""
        self.__role = ROLE_CLUSTER_HEAD
        self.__last_active_role = ROLE_CLUSTER_HEAD
        self.__last_head_round = round_index

    def was_head_in_epoch(self, round_index: int, epoch_length: int) -> bool:
        """Check whether the node already served as head in the epoch containing `round_index`."""
        if self.__last_head_round is None:
            return False
        return self.__last_head_round // epoch_length == round_index // epoch_length

    def spend(self, cost: float, round_index: int) -> Tuple[float, bool]:
        """
        Draw `cost` joules from the battery.

        A cost within EXHAUSTION_TOLERANCE of the residual energy is
        affordable: the operation completes and the battery is left at
        exactly zero. A node that cannot afford the cost spends what it has
        and dies; the operation it was paying for does not complete.

        Args:
            cost (float): Joules requested
            round_index (int): Current round, recorded on death

        Returns:
            tuple: (joules actually drawn, whether the operation completed)
        """
        if cost < 0:
            raise InvalidArgumentError("cost", cost, "cannot be negative")
        if not self.__alive:
            return 0.0, False
        residual = self.__residual_energy
        if math.isclose(cost, residual, rel_tol=EXHAUSTION_TOLERANCE):
            self.__residual_energy = 0.0
            return residual, True
        if cost > residual:
            self.retire(round_index)
            return residual, False
        self.__residual_energy = residual - cost
        return cost, True

    def retire(self, round_index: int) -> None:
        """Take the node out of service in the given round."""
        self.__residual_energy = 0.0
        self.__alive = False
        self.__asleep = False
        self.__role = ROLE_MEMBER
        self.__death_round = round_index

    def snapshot(self) -> tuple:
        """Return a hashable tuple of the full node state."""
        return (self.__node_id, self.__position, self.__initial_energy, self.__residual_energy,
                self.__is_advanced, self.__alive, self.__asleep, self.__role,
                self.__last_head_round, self.__last_reported_value, self.__death_round)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeState):
            return False
        return self.snapshot() == other.snapshot()

    def __hash__(self) -> int:
        return hash(self.__node_id)

    def __str__(self) -> str:
        status = "dead" if not self.__alive else ("asleep" if self.__asleep else self.__role)
        kind = "advanced" if self.__is_advanced else "normal"
        return (f"Node {self.__node_id} ({kind}) at ({self.__position[0]:.2f}, {self.__position[1]:.2f}), "
                f"E={self.__residual_energy:.6f} J, {status}")
