"""
Network model module for the sensor network simulator.

This module contains the FieldConfig class describing the sensing field and
its population, the random deployment of nodes, and the distance helpers the
protocols and the threshold scan rely on.
"""

import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import InvalidConfigurationError, NetworkDeadError
from .rng_streams import RandomStreams
from .sensor_node import NodeState

logger = logging.getLogger(__name__)

Position = Tuple[float, float]

MAX_SEED = 2 ** 64 - 1


class FieldConfig:
    """
    Describes the square (or rectangular) field and the nodes deployed on it.

    The sink sits at the field center unless a position is given. A fraction
    `hetero_fraction` of the nodes is advanced and starts with
    `initial_energy * (1 + hetero_alpha)`.
    """

    def __init__(self, width: float = 100.0, height: float = 100.0, node_count: int = 100,
                 sink_position: Optional[Position] = None, initial_energy: float = 0.5,
                 hetero_fraction: float = 0.0, hetero_alpha: float = 0.0, rng_seed: int = 0) -> None:
        """
        Initialize a FieldConfig object.

        Args:
            width (float): Field extent along x, meters
            height (float): Field extent along y, meters
            node_count (int): Number of sensor nodes
            sink_position (tuple, optional): Sink (x, y); defaults to the field center
            initial_energy (float): Joules per normal node
            hetero_fraction (float): Fraction of advanced nodes, in [0, 1]
            hetero_alpha (float): Extra-energy factor of advanced nodes, >= 0
            rng_seed (int): 64-bit run seed

        Raises:
            InvalidConfigurationError: If any value is out of range
        """
        self.__width = self._validate_extent("width", width)
        self.__height = self._validate_extent("height", height)
        self.__node_count = self._validate_node_count(node_count)
        if sink_position is None:
            sink_position = (self.__width / 2.0, self.__height / 2.0)
        self.__sink_position = self._validate_sink_position(sink_position)
        self.__initial_energy = self._validate_initial_energy(initial_energy)
        self.__hetero_fraction = self._validate_hetero_fraction(hetero_fraction)
        self.__hetero_alpha = self._validate_hetero_alpha(hetero_alpha)
        self.__rng_seed = self._validate_rng_seed(rng_seed)

    def _validate_extent(self, field: str, value: float) -> float:
        """Validate a field dimension."""
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidConfigurationError(field, value, "must be a number")
        if not math.isfinite(value) or value <= 0:
            raise InvalidConfigurationError(field, value, "must be positive")
        return float(value)

    def _validate_node_count(self, node_count: int) -> int:
        """Validate the population size."""
        if isinstance(node_count, bool) or not isinstance(node_count, int):
            raise InvalidConfigurationError("nodes", node_count, "must be an integer")
        if node_count < 1:
            raise InvalidConfigurationError("nodes", node_count, "must be at least 1")
        return node_count

    def _validate_sink_position(self, sink_position: Position) -> Position:
        """Validate the sink coordinates."""
        try:
            x, y = float(sink_position[0]), float(sink_position[1])
        except (TypeError, ValueError, IndexError):
            raise InvalidConfigurationError("sink_position", sink_position, "must be an (x, y) pair")
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidConfigurationError("sink_position", sink_position, "must be finite")
        return (x, y)

    def _validate_initial_energy(self, initial_energy: float) -> float:
        """Validate the normal-node battery."""
        if isinstance(initial_energy, bool) or not isinstance(initial_energy, (int, float)):
            raise InvalidConfigurationError("initial_energy", initial_energy, "must be a number")
        if not math.isfinite(initial_energy) or initial_energy <= 0:
            raise InvalidConfigurationError("initial_energy", initial_energy, "must be positive")
        return float(initial_energy)

    def _validate_hetero_fraction(self, hetero_fraction: float) -> float:
        """Validate the advanced-node fraction m."""
        if isinstance(hetero_fraction, bool) or not isinstance(hetero_fraction, (int, float)):
            raise InvalidConfigurationError("hetero_fraction", hetero_fraction, "must be a number")
        if not 0.0 <= hetero_fraction <= 1.0:
            raise InvalidConfigurationError("hetero_fraction", hetero_fraction, "must be between 0 and 1")
        return float(hetero_fraction)

    def _validate_hetero_alpha(self, hetero_alpha: float) -> float:
        """Validate the extra-energy factor alpha."""
        if isinstance(hetero_alpha, bool) or not isinstance(hetero_alpha, (int, float)):
            raise InvalidConfigurationError("hetero_alpha", hetero_alpha, "must be a number")
        if not math.isfinite(hetero_alpha) or hetero_alpha < 0:
            raise InvalidConfigurationError("hetero_alpha", hetero_alpha, "cannot be negative")
        return float(hetero_alpha)

    def _validate_rng_seed(self, rng_seed: int) -> int:
        """Validate the 64-bit seed."""
        if isinstance(rng_seed, bool) or not isinstance(rng_seed, int):
            raise InvalidConfigurationError("seed", rng_seed, "must be an integer")
        if not 0 <= rng_seed <= MAX_SEED:
            raise InvalidConfigurationError("seed", rng_seed, "must fit in 64 unsigned bits")
        return rng_seed

    # Getter methods
    def get_width(self) -> float:
        """Get the field extent along x in meters."""
        return self.__width

    def get_height(self) -> float:
        """Get the field extent along y in meters."""
        return self.__height

    def get_node_count(self) -> int:
        """Get the number of sensor nodes."""
        return self.__node_count

    def get_sink_position(self) -> Position:
        """Get the sink (x, y) position."""
        return self.__sink_position

    def get_initial_energy(self) -> float:
        """Get the battery of a normal node in joules."""
        return self.__initial_energy

    def get_hetero_fraction(self) -> float:
        """Get the advanced-node fraction m."""
        return self.__hetero_fraction

    def get_hetero_alpha(self) -> float:
        """Get the extra-energy factor alpha."""
        return self.__hetero_alpha

    def get_rng_seed(self) -> int:
        """Get the run seed."""
        return self.__rng_seed

    def advanced_count(self) -> int:
        """Number of advanced nodes, m*n rounded half up."""
        return int(math.floor(self.__hetero_fraction * self.__node_count + 0.5))

    def total_initial_energy(self) -> float:
        """Total battery of the deployed population."""
        advanced = self.advanced_count()
        normal = self.__node_count - advanced
        return normal * self.__initial_energy + advanced * self.__initial_energy * (1.0 + self.__hetero_alpha)

    def with_seed(self, rng_seed: int) -> "FieldConfig":
        """Return a copy of this configuration with another seed."""
        return FieldConfig(self.__width, self.__height, self.__node_count, self.__sink_position,
                           self.__initial_energy, self.__hetero_fraction, self.__hetero_alpha, rng_seed)

    def to_dict(self) -> dict:
        """Return the resolved configuration as a flat dictionary."""
        return {
            "width": self.__width,
            "height": self.__height,
            "nodes": self.__node_count,
            "sink_x": self.__sink_position[0],
            "sink_y": self.__sink_position[1],
            "initial_energy": self.__initial_energy,
            "hetero_fraction": self.__hetero_fraction,
            "hetero_alpha": self.__hetero_alpha,
            "seed": self.__rng_seed,
        }


def deploy(config: FieldConfig, streams: Optional[RandomStreams] = None) -> List[NodeState]:
    """
    Deploy the population uniformly at random over the field.

    Positions and the choice of advanced nodes both come from the run's
    deployment stream, so a fixed seed always yields the same node list.

    Args:
        config (FieldConfig): Field and population description
        streams (RandomStreams, optional): Run streams; built from the config seed if omitted

    Returns:
        list: NodeState objects with ids 0..n-1
    """
    if streams is None:
        streams = RandomStreams(config.get_rng_seed())
    rng = streams.deployment()
    n = config.get_node_count()
    xs = rng.uniform(0.0, config.get_width(), n)
    ys = rng.uniform(0.0, config.get_height(), n)
    advanced_ids = set(int(i) for i in rng.choice(n, size=config.advanced_count(), replace=False))

    advanced_energy = config.get_initial_energy() * (1.0 + config.get_hetero_alpha())
    nodes = []
    for node_id in range(n):
        is_advanced = node_id in advanced_ids
        energy = advanced_energy if is_advanced else config.get_initial_energy()
        nodes.append(NodeState(node_id, (float(xs[node_id]), float(ys[node_id])), energy, is_advanced))

    logger.debug("Deployed %d nodes (%d advanced) on a %gx%g field, seed %d",
                 n, len(advanced_ids), config.get_width(), config.get_height(), config.get_rng_seed())
    return nodes


def distance(a: Position, b: Position) -> float:
    """Euclidean distance between two positions, in meters."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


class DistanceTable:
    """
    Distances of one deployment, computed once.

    Nodes never move, so the node-to-sink distances are tabulated when the
    table is built and nearest-neighbour queries run as numpy blocks over the
    stored coordinates.
    """

    def __init__(self, nodes: Iterable[NodeState], sink: Optional[Position] = None) -> None:
        """
        Initialize a DistanceTable object.

        Args:
            nodes (iterable): Nodes to tabulate, any ids
            sink (tuple, optional): Sink position; required for sink distances
        """
        nodes = list(nodes)
        self.__rows = {node.get_node_id(): row for row, node in enumerate(nodes)}
        self.__positions = [node.get_position() for node in nodes]
        self.__coords = np.array(self.__positions, dtype=float).reshape(len(nodes), 2)
        self.__sink = sink
        self.__to_sink: Optional[np.ndarray] = None
        self.__to_sink_list: List[float] = []
        if sink is not None:
            self.__to_sink_list = [distance(position, sink) for position in self.__positions]
            self.__to_sink = np.array(self.__to_sink_list, dtype=float)

    def get_sink(self) -> Optional[Position]:
        """Get the sink the table was built for."""
        return self.__sink

    def to_sink(self, node_id: int) -> float:
        """Distance of one node to the sink."""
        if self.__to_sink is None:
            raise ValueError("Distance table was built without a sink")
        return self.__to_sink_list[self.__rows[node_id]]

    def between(self, first_id: int, second_id: int) -> float:
        """Distance between two tabulated nodes."""
        return distance(self.__positions[self.__rows[first_id]], self.__positions[self.__rows[second_id]])

    def nearest(self, source_ids: Sequence[int], target_ids: Sequence[int]) -> Tuple[List[int], List[float]]:
        """
        Closest target for every source.

        Ties go to the target listed first, so sorted targets resolve to the
        smaller id.

        Args:
            source_ids (sequence): Nodes looking for a target
            target_ids (sequence): Candidate targets, non-empty

        Returns:
            tuple: (nearest target id per source, its distance per source)
        """
        if not target_ids:
            raise ValueError("Nearest-target query needs at least one target")
        if not source_ids:
            return [], []
        sources = self.__coords[[self.__rows[node_id] for node_id in source_ids]]
        targets = self.__coords[[self.__rows[node_id] for node_id in target_ids]]
        gap = sources[:, np.newaxis, :] - targets[np.newaxis, :, :]
        block = np.hypot(gap[..., 0], gap[..., 1])
        best = np.argmin(block, axis=1)
        gaps = block[np.arange(len(source_ids)), best]
        return [target_ids[column] for column in best.tolist()], gaps.tolist()

    def farthest_from_sink(self, node_ids: Sequence[int]) -> Tuple[int, float]:
        """Node of `node_ids` farthest from the sink; ties go to the smaller id."""
        if self.__to_sink is None:
            raise ValueError("Distance table was built without a sink")
        ordered = sorted(node_ids)
        gaps = self.__to_sink[[self.__rows[node_id] for node_id in ordered]]
        best = int(np.argmax(gaps))
        return ordered[best], float(gaps[best])


def max_distance_alive_node(nodes: Iterable[NodeState], sink: Position,
                            distances: Optional[DistanceTable] = None) -> Tuple[int, float]:
    """
    Find the alive node farthest from the sink.

    Sleeping nodes count, they are alive. Ties go to the smallest id.

    Args:
        nodes (iterable): Population to scan
        sink (tuple): Sink position
        distances (DistanceTable, optional): Precomputed table for the same sink

    Returns:
        tuple: (node id, distance in meters)

    Raises:
        NetworkDeadError: If no node is alive
    """
    alive = [node for node in nodes if node.is_alive()]
    if not alive:
        raise NetworkDeadError()
    if distances is None:
        distances = DistanceTable(alive, sink)
    return distances.farthest_from_sink([node.get_node_id() for node in alive])
