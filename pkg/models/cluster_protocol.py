"""
Abstract cluster protocol module for the sensor network simulator.

This module contains the ProtocolConfig class with the election parameters
of every supported protocol, the ClusterAssignment produced by cluster
formation, and the abstract ClusterProtocol class that every concrete
election rule (LEACH, TEEN, SEP, DEEC) extends.
"""

import math
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .exceptions import InvalidConfigurationError
from .sensor_node import NodeState

PROTOCOL_KINDS = ("LEACH", "TEEN", "SEP", "DEEC")


class ProtocolConfig:
    """
    Election parameters for one protocol.

    Only the fields of the selected protocol are used; the rest keep their
    defaults so the same configuration can be re-targeted.
    """

    def __init__(self, kind: str = "LEACH", p: float = 0.1, teen_hard_threshold: float = 100.0,
                 teen_soft_threshold: float = 2.0, teen_sense_range: Tuple[float, float] = (0.0, 200.0),
                 deec_p_opt: Optional[float] = None) -> None:
        """
        Initialize a ProtocolConfig object.

        Args:
            kind (str): LEACH, TEEN, SEP or DEEC (case-insensitive)
            p (float): Desired cluster-head probability per round, 0 < p < 1
            teen_hard_threshold (float): TEEN hard threshold on the sensed attribute
            teen_soft_threshold (float): TEEN soft threshold, >= 0
            teen_sense_range (tuple): Uniform range of synthetic TEEN readings
            deec_p_opt (float, optional): DEEC reference probability, defaults to p

        Raises:
            InvalidConfigurationError: If any parameter is invalid
        """
        self.__kind = self._validate_kind(kind)
        self.__p = self._validate_probability("p", p)
        self.__teen_hard_threshold = self._validate_finite("teen_hard_threshold", teen_hard_threshold)
        self.__teen_soft_threshold = self._validate_finite("teen_soft_threshold", teen_soft_threshold)
        if self.__teen_soft_threshold < 0:
            raise InvalidConfigurationError("teen_soft_threshold", teen_soft_threshold, "cannot be negative")
        self.__teen_sense_range = self._validate_sense_range(teen_sense_range)
        if deec_p_opt is None:
            deec_p_opt = self.__p
        self.__deec_p_opt = self._validate_probability("deec_p_opt", deec_p_opt)

    def _validate_kind(self, kind: str) -> str:
        """Validate the protocol name."""
        if not isinstance(kind, str):
            raise InvalidConfigurationError("protocol", kind, "must be a string")
        kind = kind.strip().upper()
        if kind not in PROTOCOL_KINDS:
            raise InvalidConfigurationError("protocol", kind, f"must be one of {', '.join(PROTOCOL_KINDS)}")
        return kind

    def _validate_probability(self, field: str, value: float) -> float:
        """Validate an open-interval probability."""
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidConfigurationError(field, value, "must be a number")
        if not 0.0 < value < 1.0:
            raise InvalidConfigurationError(field, value, "must be strictly between 0 and 1")
        return float(value)

    def _validate_finite(self, field: str, value: float) -> float:
        """Validate a finite number."""
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise InvalidConfigurationError(field, value, "must be a finite number")
        return float(value)

    def _validate_sense_range(self, sense_range: Tuple[float, float]) -> Tuple[float, float]:
        """Validate the synthetic reading range."""
        low = self._validate_finite("teen_sense_min", sense_range[0])
        high = self._validate_finite("teen_sense_max", sense_range[1])
        if low >= high:
            raise InvalidConfigurationError("teen_sense_max", high, "must exceed teen_sense_min")
        return (low, high)

    # Getter methods
    def get_kind(self) -> str:
        """Get the protocol name."""
        return self.__kind

    def get_p(self) -> float:
        """Get the desired head fraction p."""
        return self.__p

    def get_teen_hard_threshold(self) -> float:
        """Get the TEEN hard threshold."""
        return self.__teen_hard_threshold

    def get_teen_soft_threshold(self) -> float:
        """Get the TEEN soft threshold."""
        return self.__teen_soft_threshold

    def get_teen_sense_range(self) -> Tuple[float, float]:
        """Get the (low, high) range of sensed values."""
        return self.__teen_sense_range

    def get_deec_p_opt(self) -> float:
        """Get the DEEC reference head fraction."""
        return self.__deec_p_opt

    def with_kind(self, kind: str) -> "ProtocolConfig":
        """Return a copy of this configuration for another protocol."""
        return ProtocolConfig(kind, self.__p, self.__teen_hard_threshold, self.__teen_soft_threshold,
                              self.__teen_sense_range, self.__deec_p_opt)

    def to_dict(self) -> dict:
        """Return the resolved parameters as a flat dictionary."""
        return {
            "protocol": self.__kind,
            "p": self.__p,
            "teen_hard_threshold": self.__teen_hard_threshold,
            "teen_soft_threshold": self.__teen_soft_threshold,
            "teen_sense_min": self.__teen_sense_range[0],
            "teen_sense_max": self.__teen_sense_range[1],
            "deec_p_opt": self.__deec_p_opt,
        }


class ClusterAssignment:
    """
    Result of cluster formation for one round.

    Heads, members and direct transmitters are disjoint and together cover
    every awake alive node.
    """

    def __init__(self, heads: Iterable[int], membership: Dict[int, int], direct_transmitters: Iterable[int]) -> None:
        """
        Initialize a ClusterAssignment object.

        Args:
            heads (iterable): Cluster-head ids
            membership (dict): Member id -> head id
            direct_transmitters (iterable): Ids sending straight to the sink
        """
        self.__heads = sorted(heads)
        self.__membership = dict(sorted(membership.items()))
        self.__direct_transmitters = sorted(direct_transmitters)

    def get_heads(self) -> List[int]:
        """Get the head ids in ascending order."""
        return list(self.__heads)

    def get_membership(self) -> Dict[int, int]:
        """Get the member -> head map."""
        return dict(self.__membership)

    def get_direct_transmitters(self) -> List[int]:
        """Get the direct transmitter ids in ascending order."""
        return list(self.__direct_transmitters)

    def participants(self) -> Set[int]:
        """All node ids covered by the assignment."""
        return set(self.__heads) | set(self.__membership) | set(self.__direct_transmitters)

    def mean_members_per_head(self) -> int:
        """Members per head, rounded down; 0 without heads."""
        if not self.__heads:
            return 0
        return len(self.__membership) // len(self.__heads)

    def is_partition_of(self, node_ids: Iterable[int]) -> bool:
        """
        Check the partition invariant against a set of awake node ids.

        Returns:
            bool: True if the three groups are disjoint, cover exactly `node_ids`,
                  and every member points at an actual head
        """
        heads = set(self.__heads)
        members = set(self.__membership)
        direct = set(self.__direct_transmitters)
        total = len(self.__heads) + len(self.__membership) + len(self.__direct_transmitters)
        if len(heads | members | direct) != total:
            return False
        if heads | members | direct != set(node_ids):
            return False
        return all(head in heads for head in self.__membership.values())

    def __str__(self) -> str:
        return (f"ClusterAssignment: {len(self.__heads)} heads, {len(self.__membership)} members, "
                f"{len(self.__direct_transmitters)} direct")


class ClusterProtocol(ABC):
    """
    Abstract base class for probabilistic cluster-head election.

    Subclasses provide the per-node election threshold T(n); the shared
    election loop, draw handling and labels live here.
    """

    def __init__(self, config: ProtocolConfig) -> None:
        """
        Initialize the protocol with its parameters.

        Args:
            config (ProtocolConfig): Election parameters
        """
        self.__config = config

    def get_config(self) -> ProtocolConfig:
        """Get the election parameters."""
        return self.__config

    @staticmethod
    def epoch_length(p: float) -> int:
        """Rounds per epoch, ceil(1/p)."""
        return int(math.ceil(round(1.0 / p, 9)))

    @staticmethod
    def rotating_threshold(node: NodeState, p: float, round_index: int) -> float:
        """
        Epoch-based rotating threshold p / (1 - p * (r mod ceil(1/p))).

        Nodes that already served as head in the current epoch get 0.
        """
        epoch = ClusterProtocol.epoch_length(p)
        if node.was_head_in_epoch(round_index, epoch):
            return 0.0
        denominator = 1.0 - p * (round_index % epoch)
        return min(1.0, max(0.0, p / denominator))

    def prepare_round(self, population: Sequence[NodeState]) -> None:
        """Hook called once per round with the alive population before thresholds are read."""
        pass

    @abstractmethod
    def threshold(self, node: NodeState, round_index: int) -> float:
        """Election threshold T(n) of one node in the given round, in [0, 1]."""
        pass

    def elect(self, candidates: Sequence[NodeState], round_index: int, draws) -> Set[int]:
        """
        Elect heads among the candidates.

        Args:
            candidates (sequence): Awake alive nodes
            round_index (int): Current round
            draws: Indexable of uniform draws by node id

        Returns:
            set: Ids of elected heads
        """
        heads = set()
        for node in candidates:
            node_id = node.get_node_id()
            if draws[node_id] < self.threshold(node, round_index):
                heads.add(node_id)
        return heads

    def uses_sensing(self) -> bool:
        """Whether the protocol gates transmissions on sensed readings."""
        return False

    def should_report(self, node: NodeState, sensed: float) -> bool:
        """Whether a node transmits its reading this round."""
        return True

    def get_label(self, ehorm: bool = False) -> str:
        """Name used in result files, prefixed with 'i' for the E-HORM variant."""
        kind = self.get_protocol_kind()
        return f"i{kind}" if ehorm else kind

    @abstractmethod
    def get_protocol_kind(self) -> str:
        """Get the protocol name."""
        pass

    def __str__(self) -> str:
        return f"{self.get_protocol_kind()} (p={self.__config.get_p()})"
