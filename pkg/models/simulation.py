"""
Simulation engine module for the sensor network simulator.

This module contains the SimulationConfig bundling every parameter block of
a run, the Simulation class that deploys a network and steps it round by
round, the SimulationResult it produces, and the batch helpers that run many
seeds and summarize them.

A round runs in fixed order: threshold scan, sleep classification, head
election and cluster formation over awake nodes, TEEN report gating, energy
accounting, savings booking, metrics snapshot. With E-HORM disabled the
threshold, sleep and savings steps are skipped and every alive node is awake.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Set

import numpy as np

from .cluster_protocol import ProtocolConfig
from .ehorm import SavingsLedger, classify_sleep, record_savings, scan_threshold
from .exceptions import (
    InvalidArgumentError, InvalidConfigurationError, InvariantViolationError, NetworkDeadError
)
from .network_model import DistanceTable, FieldConfig, deploy
from .protocols import account_round, elect_heads, form_clusters, make_protocol
from .radio_model import RadioParams
from .rng_streams import RandomStreams
from .round_metrics import RoundMetrics
from .sensor_node import ROLE_DIRECT, ROLE_MEMBER, NodeState

logger = logging.getLogger(__name__)

CONSERVATION_TOLERANCE = 1e-9
CLUSTER_AVERAGE_TOLERANCE = 1e-12


class SimulationConfig:
    """
    Full configuration of one run.

    Bundles the field, radio and protocol blocks with the run switches.
    `check_invariants` turns on per-round self-checks; `freeze_energy` prices
    rounds without draining batteries.
    """

    def __init__(self, field: FieldConfig, radio: Optional[RadioParams] = None,
                 protocol: Optional[ProtocolConfig] = None, ehorm: bool = False, max_rounds: int = 10000,
                 check_invariants: bool = False, freeze_energy: bool = False) -> None:
        """
        Initialize a SimulationConfig object.

        Args:
            field (FieldConfig): Field, population and seed
            radio (RadioParams, optional): Radio coefficients, defaults apply if omitted
            protocol (ProtocolConfig, optional): Election parameters, LEACH defaults if omitted
            ehorm (bool): Enable the sleep/awake overlay
            max_rounds (int): Round cap, >= 0
            check_invariants (bool): Verify per-round invariants
            freeze_energy (bool): Do not deduct energy

        Raises:
            InvalidConfigurationError: If a value is invalid
        """
        if not isinstance(field, FieldConfig):
            raise InvalidConfigurationError("field", field, "must be a FieldConfig")
        self.__field = field
        self.__radio = radio if radio is not None else RadioParams()
        self.__protocol = protocol if protocol is not None else ProtocolConfig()
        self.__ehorm = bool(ehorm)
        self.__max_rounds = self._validate_max_rounds(max_rounds)
        self.__check_invariants = bool(check_invariants)
        self.__freeze_energy = bool(freeze_energy)

    def _validate_max_rounds(self, max_rounds: int) -> int:
        """Validate the round cap."""
        if isinstance(max_rounds, bool) or not isinstance(max_rounds, int):
            raise InvalidConfigurationError("rounds", max_rounds, "must be an integer")
        if max_rounds < 0:
            raise InvalidConfigurationError("rounds", max_rounds, "cannot be negative")
        return max_rounds

    # Getter methods
    def get_field(self) -> FieldConfig:
        """Get the field block."""
        return self.__field

    def get_radio(self) -> RadioParams:
        """Get the radio block."""
        return self.__radio

    def get_protocol(self) -> ProtocolConfig:
        return self.__protocol

    def is_ehorm(self) -> bool:
        return self.__ehorm

    def get_max_rounds(self) -> int:
        return self.__max_rounds

    def is_check_invariants(self) -> bool:
        return self.__check_invariants

    def is_freeze_energy(self) -> bool:
        return self.__freeze_energy

    def get_seed(self) -> int:
        return self.__field.get_rng_seed()

    def with_seed(self, seed: int) -> "SimulationConfig":
        """Copy with another seed."""
        return SimulationConfig(self.__field.with_seed(seed), self.__radio, self.__protocol, self.__ehorm,
                                self.__max_rounds, self.__check_invariants, self.__freeze_energy)

    def with_ehorm(self, ehorm: bool) -> "SimulationConfig":
        """Copy with the overlay switched on or off."""
        return SimulationConfig(self.__field, self.__radio, self.__protocol, ehorm,
                                self.__max_rounds, self.__check_invariants, self.__freeze_energy)

    def get_label(self) -> str:
        """Protocol name, 'i'-prefixed with E-HORM on."""
        kind = self.__protocol.get_kind()
        return f"i{kind}" if self.__ehorm else kind

    def to_dict(self) -> dict:
        """Flat echo of every resolved parameter."""
        echo = {}
        echo.update(self.__field.to_dict())
        echo.update(self.__radio.to_dict())
        echo.update(self.__protocol.to_dict())
        echo["ehorm"] = self.__ehorm
        echo["rounds"] = self.__max_rounds
        echo["freeze_energy"] = self.__freeze_energy
        return echo


class SimulationResult:
    """
    Outcome of one run: the per-round series and its lifetime milestones.

    Milestones that were not reached within max_rounds are None.
    """

    def __init__(self, config: SimulationConfig, per_round: List[RoundMetrics], stability_period: Optional[int],
                 network_lifetime: Optional[int], half_nodes_dead: Optional[int], dormant_round: Optional[int],
                 death_rounds: Dict[int, Optional[int]], advanced_ids: Set[int]) -> None:
        """
        Initialize a SimulationResult object.

        Args:
            config (SimulationConfig): Resolved configuration of the run
            per_round (list): RoundMetrics per round
            stability_period (int, optional): Round of the first death
            network_lifetime (int, optional): Round of the last death
            half_nodes_dead (int, optional): Round at which half the nodes were dead
            dormant_round (int, optional): First round with every alive node asleep
            death_rounds (dict): Node id -> death round or None
            advanced_ids (set): Ids of advanced nodes
        """
        self.__config = config
        self.__per_round = list(per_round)
        self.__stability_period = stability_period
        self.__network_lifetime = network_lifetime
        self.__half_nodes_dead = half_nodes_dead
        self.__dormant_round = dormant_round
        self.__death_rounds = dict(death_rounds)
        self.__advanced_ids = set(advanced_ids)

    # Getter methods
    def get_config(self) -> SimulationConfig:
        return self.__config

    def get_per_round(self) -> List[RoundMetrics]:
        """Get the per-round snapshots."""
        return list(self.__per_round)

    def get_stability_period(self) -> Optional[int]:
        """Get the round of the first death."""
        return self.__stability_period

    def get_network_lifetime(self) -> Optional[int]:
        """Get the round of the last death."""
        return self.__network_lifetime

    def get_half_nodes_dead(self) -> Optional[int]:
        """Get the round half the nodes were dead by."""
        return self.__half_nodes_dead

    def get_dormant_round(self) -> Optional[int]:
        """Get the round the network fell dormant."""
        return self.__dormant_round

    def get_death_rounds(self) -> Dict[int, Optional[int]]:
        """Get the death round of every node."""
        return dict(self.__death_rounds)

    def get_advanced_ids(self) -> Set[int]:
        """Get the ids of the advanced nodes."""
        return set(self.__advanced_ids)

    def get_total_packets(self) -> int:
        """Packets delivered to the sink over the whole run."""
        if not self.__per_round:
            return 0
        return self.__per_round[-1].get_packets_to_sink()

    def get_seed(self) -> int:
        return self.__config.get_seed()

    def get_label(self) -> str:
        return self.__config.get_label()

    def censored(self, value: Optional[int]) -> int:
        """A milestone, or max_rounds when it was not reached."""
        return self.__config.get_max_rounds() if value is None else value

    def mean_death_round(self, advanced: bool) -> Optional[float]:
        """
        Mean death round of one heterogeneity class, censored at max_rounds.

        Returns:
            float: The mean, or None if the class is empty
        """
        rounds = [self.censored(death) for node_id, death in self.__death_rounds.items()
                  if (node_id in self.__advanced_ids) == advanced]
        if not rounds:
            return None
        return float(np.mean(rounds))

    def __str__(self) -> str:
        return (f"{self.get_label()} seed {self.get_seed()}: stability={self.__stability_period}, "
                f"lifetime={self.__network_lifetime}, packets={self.get_total_packets()}")


class Simulation:
    """
    One network run.

    Owns the deployed nodes, the protocol, the random streams and the
    cumulative counters; nothing is shared with other runs.
    """

    def __init__(self, config: SimulationConfig) -> None:
        """
        Deploy the network for a configuration.

        Args:
            config (SimulationConfig): Full run configuration
        """
        self.__config = config
        field = config.get_field()
        self.__streams = RandomStreams(field.get_rng_seed())
        self.__nodes = deploy(field, self.__streams)
        self.__by_id = {node.get_node_id(): node for node in self.__nodes}
        self.__protocol = make_protocol(config.get_protocol(), field.get_hetero_fraction(),
                                        field.get_hetero_alpha())
        self.__sink = field.get_sink_position()
        self.__distances = DistanceTable(self.__nodes, self.__sink)
        self.__savings = SavingsLedger()
        self.__initial_total = sum(node.get_initial_energy() for node in self.__nodes)
        self.__consumed_total = 0.0
        self.__packets_total = 0
        self.__last_alive = len(self.__nodes)
        self.__dead_advanced = 0
        self.__dead_normal = 0
        self.__awake_count = len(self.__nodes)

    # Getter methods
    def get_config(self) -> SimulationConfig:
        return self.__config

    def get_nodes(self) -> List[NodeState]:
        """Get the deployed nodes."""
        return list(self.__nodes)

    def get_protocol(self):
        return self.__protocol

    def get_savings(self) -> SavingsLedger:
        """Get the sleep savings ledger."""
        return self.__savings

    def get_consumed_total(self) -> float:
        """Get the energy drawn so far."""
        return self.__consumed_total

    def get_awake_count(self) -> int:
        """Awake nodes in the last stepped round."""
        return self.__awake_count

    def step_round(self, round_index: int) -> RoundMetrics:
        """
        Execute one round.

        Args:
            round_index (int): Round to execute

        Returns:
            RoundMetrics: End-of-round snapshot

        Raises:
            NetworkDeadError: If no node is alive
            InvariantViolationError: In checking mode, if a round invariant breaks
        """
        config = self.__config
        radio = config.get_radio()
        entering = [node for node in self.__nodes if node.is_alive()]
        if not entering:
            raise NetworkDeadError(round_index)
        # Nodes drained exactly by last round's sends leave service now
        for node in entering:
            if node.is_depleted():
                node.retire(round_index)
        alive = [node for node in entering if node.is_alive()]

        population = len(self.__nodes)
        draws = self.__streams.election().random(population)
        sensed = None
        if self.__protocol.uses_sensing():
            low, high = config.get_protocol().get_teen_sense_range()
            sensed = self.__streams.sensing().uniform(low, high, population)

        # Threshold scan and sleep classification
        e_th = 0.0
        if config.is_ehorm() and alive:
            e_th = scan_threshold(alive, self.__sink, radio, self.__distances).get_e_th()
            awake, asleep = classify_sleep(alive, e_th)
        else:
            awake, asleep = alive, []
        for node in awake:
            node.set_asleep(False)
            node.set_role(ROLE_MEMBER)
        for node in asleep:
            node.set_asleep(True)

        # Election and cluster formation over awake nodes
        heads = elect_heads(awake, self.__protocol, round_index, draws=draws, population=alive)
        for head_id in heads:
            self.__by_id[head_id].mark_head(round_index)
        assignment = form_clusters(awake, heads, self.__distances)
        for node_id in assignment.get_direct_transmitters():
            self.__by_id[node_id].set_role(ROLE_DIRECT)

        # TEEN report gating
        readings = None
        if sensed is not None:
            readings = {}
            for node in awake:
                value = float(sensed[node.get_node_id()])
                if self.__protocol.should_report(node, value):
                    readings[node.get_node_id()] = value

        ledger = account_round(awake, assignment, radio, self.__sink, round_index, readings,
                               config.is_freeze_energy(), self.__distances)

        self.__savings.begin_round()
        if config.is_ehorm() and asleep:
            roles = {node.get_node_id(): node.get_last_active_role() for node in asleep}
            record_savings(asleep, roles, radio, self.__savings,
                           heads=[self.__by_id[head_id] for head_id in assignment.get_heads()],
                           sink=self.__sink, mean_members=assignment.mean_members_per_head(),
                           distances=self.__distances)

        round_energy = ledger.get_total()
        if not config.is_freeze_energy():
            self.__consumed_total += round_energy
        self.__packets_total += ledger.get_packets_delivered()
        for node in entering:
            if node.get_death_round() == round_index:
                if node.is_advanced():
                    self.__dead_advanced += 1
                else:
                    self.__dead_normal += 1
        self.__awake_count = len(awake)

        alive_count = population - self.__dead_advanced - self.__dead_normal
        residual_total = sum(node.get_residual_energy() for node in self.__nodes)
        metrics = RoundMetrics(
            round_index, alive_count, len(asleep), len(assignment.get_heads()), self.__packets_total,
            residual_total, e_th, self.__savings.get_cumulative_total(),
            round_packets=ledger.get_packets_delivered(), round_energy=round_energy,
            consumed_total=self.__consumed_total, cluster_energy_total=ledger.get_cluster_energy_total(),
            cluster_energy_average=ledger.get_cluster_energy_average(), savings_normal=self.__savings.get_per_round_normal(),
            savings_ch=self.__savings.get_per_round_ch_equivalent(),
            dead_advanced=self.__dead_advanced, dead_normal=self.__dead_normal,
        )

        if config.is_check_invariants():
            self._check_round(round_index, awake, asleep, assignment, ledger, metrics)
        self.__last_alive = alive_count
        logger.debug("%s", metrics)
        return metrics

    def _check_round(self, round_index: int, awake: Sequence[NodeState], asleep: Sequence[NodeState],
                     assignment, ledger, metrics: RoundMetrics) -> None:
        """Verify the per-round invariants, raising on the first violation."""
        awake_ids = {node.get_node_id() for node in awake}
        if not assignment.is_partition_of(awake_ids):
            raise InvariantViolationError("partition", round_index, str(assignment))

        asleep_ids = {node.get_node_id() for node in asleep}
        intruders = asleep_ids & (assignment.participants() | set(ledger.get_per_node()))
        if intruders:
            raise InvariantViolationError("sleep exclusion", round_index,
                                          f"sleeping nodes {sorted(intruders)} took part in the round")

        if metrics.get_alive() > self.__last_alive:
            raise InvariantViolationError("alive non-increasing", round_index,
                                          f"{metrics.get_alive()} > {self.__last_alive}")

        if not self.__config.is_freeze_energy():
            accounted = metrics.get_residual_total() + self.__consumed_total
            if abs(self.__initial_total - accounted) > CONSERVATION_TOLERANCE * self.__initial_total:
                raise InvariantViolationError("energy conservation", round_index,
                                              f"initial {self.__initial_total!r} != accounted {accounted!r}")

        heads = ledger.get_head_count()
        if heads:
            e_total = ledger.get_cluster_energy_total()
            if abs(ledger.get_cluster_energy_average() * heads - e_total) > CLUSTER_AVERAGE_TOLERANCE * e_total:
                raise InvariantViolationError("average CH energy", round_index,
                                              f"{ledger.get_cluster_energy_average()!r} * {heads} != {e_total!r}")

    def run(self) -> SimulationResult:
        """
        Step the network until every node is dead or max_rounds is reached.

        A dormant network (every alive node asleep) cannot change any more:
        nobody transmits, nobody dies and the threshold stays put. Its
        remaining rounds are filled in by repeating the last snapshot while
        the savings keep accruing.

        Returns:
            SimulationResult: Series and milestones of the run
        """
        config = self.__config
        max_rounds = config.get_max_rounds()
        population = len(self.__nodes)
        logger.info("Starting %s run, seed %d, %d nodes, up to %d rounds", config.get_label(),
                    config.get_seed(), population, max_rounds)

        per_round: List[RoundMetrics] = []
        stability_period = None
        network_lifetime = None
        half_nodes_dead = None
        dormant_round = None

        round_index = 0
        while round_index < max_rounds:
            try:
                metrics = self.step_round(round_index)
            except NetworkDeadError:
                break
            per_round.append(metrics)
            dead = population - metrics.get_alive()
            if stability_period is None and dead > 0:
                stability_period = round_index
                logger.info("First node died in round %d", round_index)
            if half_nodes_dead is None and 2 * dead >= population:
                half_nodes_dead = round_index
            if metrics.get_alive() == 0:
                network_lifetime = round_index
                break
            if config.is_ehorm() and self.__awake_count == 0:
                dormant_round = round_index
                logger.info("Network dormant from round %d: all %d alive nodes asleep",
                            round_index, metrics.get_alive())
                per_round.extend(self._replay_dormant(metrics, round_index + 1, max_rounds))
                break
            round_index += 1

        death_rounds = {node.get_node_id(): node.get_death_round() for node in self.__nodes}
        advanced_ids = {node.get_node_id() for node in self.__nodes if node.is_advanced()}
        result = SimulationResult(config, per_round, stability_period, network_lifetime, half_nodes_dead,
                                  dormant_round, death_rounds, advanced_ids)
        logger.info("Finished %s", result)
        return result

    def _replay_dormant(self, last: RoundMetrics, start: int, stop: int) -> List[RoundMetrics]:
        """Snapshots for rounds [start, stop) of a dormant network."""
        radio = self.__config.get_radio()
        asleep = [node for node in self.__nodes if node.is_alive()]
        roles = {node.get_node_id(): node.get_last_active_role() for node in asleep}
        replayed = []
        for round_index in range(start, stop):
            self.__savings.begin_round()
            record_savings(asleep, roles, radio, self.__savings, sink=self.__sink, distances=self.__distances)
            replayed.append(last.repeated(round_index, self.__savings.get_cumulative_total()))
        return replayed


def run(config: SimulationConfig) -> SimulationResult:
    """Deploy and run one simulation."""
    return Simulation(config).run()


def run_batch(configs: Sequence[SimulationConfig], workers: int = 1) -> List[SimulationResult]:
    """
    Run independent simulations, optionally in parallel processes.

    Results come back in the order of `configs` regardless of completion order.

    Args:
        configs (sequence): One configuration per run
        workers (int): Process count; 1 runs in-process

    Returns:
        list: SimulationResult per configuration
    """
    if workers <= 1 or len(configs) <= 1:
        return [run(config) for config in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, configs))


def _statistics(values: Sequence[float]) -> Dict[str, float]:
    array = np.asarray(values, dtype=float)
    return {
        "mean": float(np.mean(array)),
        "median": float(np.median(array)),
        "min": float(np.min(array)),
        "max": float(np.max(array)),
    }


def _comparable(config: SimulationConfig) -> dict:
    echo = config.to_dict()
    echo.pop("seed")
    return echo


class PairedComparison:
    """Seed-by-seed comparison of a variant against a baseline."""

    def __init__(self, variant: Sequence[SimulationResult], baseline: Sequence[SimulationResult]) -> None:
        """
        Initialize from two result lists paired by position.

        Raises:
            InvalidArgumentError: If the lists differ in length or seeds
        """
        if len(variant) != len(baseline):
            raise InvalidArgumentError("baseline", len(baseline), f"must pair with {len(variant)} results")
        for ours, theirs in zip(variant, baseline):
            if ours.get_seed() != theirs.get_seed():
                raise InvalidArgumentError("baseline", theirs.get_seed(), f"seed does not pair with {ours.get_seed()}")
        self.__variant_label = variant[0].get_label() if variant else ""
        self.__baseline_label = baseline[0].get_label() if baseline else ""
        self.__seeds = [result.get_seed() for result in variant]
        self.__stability_deltas = [ours.censored(ours.get_stability_period())
                                   - theirs.censored(theirs.get_stability_period())
                                   for ours, theirs in zip(variant, baseline)]
        self.__lifetime_deltas = [ours.censored(ours.get_network_lifetime())
                                  - theirs.censored(theirs.get_network_lifetime())
                                  for ours, theirs in zip(variant, baseline)]
        self.__packet_deltas = [ours.get_total_packets() - theirs.get_total_packets()
                                for ours, theirs in zip(variant, baseline)]

    def get_seeds(self) -> List[int]:
        return list(self.__seeds)

    def get_stability_deltas(self) -> List[int]:
        return list(self.__stability_deltas)

    def get_lifetime_deltas(self) -> List[int]:
        return list(self.__lifetime_deltas)

    def get_packet_deltas(self) -> List[int]:
        return list(self.__packet_deltas)

    @staticmethod
    def _tally(deltas: Sequence[int]) -> Dict[str, float]:
        wins = sum(1 for delta in deltas if delta > 0)
        ties = sum(1 for delta in deltas if delta == 0)
        losses = len(deltas) - wins - ties
        pairs = len(deltas)
        return {
            "wins": wins,
            "ties": ties,
            "losses": losses,
            "win_rate": wins / pairs if pairs else 0.0,
            "not_worse_rate": (wins + ties) / pairs if pairs else 0.0,
        }

    def stability_tally(self) -> Dict[str, float]:
        return self._tally(self.__stability_deltas)

    def lifetime_tally(self) -> Dict[str, float]:
        return self._tally(self.__lifetime_deltas)

    def packets_tally(self) -> Dict[str, float]:
        return self._tally(self.__packet_deltas)

    def to_dict(self) -> dict:
        summary = {
            "variant": self.__variant_label,
            "baseline": self.__baseline_label,
            "pairs": len(self.__seeds),
        }
        for metric, tally in (("stability", self.stability_tally()), ("lifetime", self.lifetime_tally()),
                              ("packets", self.packets_tally())):
            for key, value in tally.items():
                summary[f"{metric}_{key}"] = value
        for seed, stability, lifetime in zip(self.__seeds, self.__stability_deltas, self.__lifetime_deltas):
            summary[f"seed_{seed}_stability_delta"] = stability
            summary[f"seed_{seed}_lifetime_delta"] = lifetime
        return summary


class BatchSummary:
    """Aggregate statistics of runs that share a configuration apart from the seed."""

    def __init__(self, results: Sequence[SimulationResult], comparison: Optional[PairedComparison] = None) -> None:
        self.__label = results[0].get_label()
        self.__seeds = [result.get_seed() for result in results]
        self.__max_rounds = results[0].get_config().get_max_rounds()
        self.__stability = _statistics([result.censored(result.get_stability_period()) for result in results])
        self.__lifetime = _statistics([result.censored(result.get_network_lifetime()) for result in results])
        self.__packets = _statistics([result.get_total_packets() for result in results])
        self.__stability_not_reached = sum(1 for result in results if result.get_stability_period() is None)
        self.__lifetime_not_reached = sum(1 for result in results if result.get_network_lifetime() is None)
        self.__advanced_death = self._class_mean(results, True)
        self.__normal_death = self._class_mean(results, False)
        self.__comparison = comparison

    @staticmethod
    def _class_mean(results: Sequence[SimulationResult], advanced: bool) -> Optional[float]:
        means = [result.mean_death_round(advanced) for result in results]
        means = [mean for mean in means if mean is not None]
        return float(np.mean(means)) if means else None

    def get_label(self) -> str:
        return self.__label

    def get_runs(self) -> int:
        return len(self.__seeds)

    def get_stability(self) -> Dict[str, float]:
        """mean/median/min/max of the stability period, censored at max_rounds."""
        return dict(self.__stability)

    def get_lifetime(self) -> Dict[str, float]:
        """mean/median/min/max of the network lifetime, censored at max_rounds."""
        return dict(self.__lifetime)

    def get_packets(self) -> Dict[str, float]:
        return dict(self.__packets)

    def get_advanced_death_mean(self) -> Optional[float]:
        return self.__advanced_death

    def get_normal_death_mean(self) -> Optional[float]:
        return self.__normal_death

    def get_comparison(self) -> Optional[PairedComparison]:
        return self.__comparison

    def to_dict(self) -> dict:
        summary = {
            "label": self.__label,
            "runs": len(self.__seeds),
            "seeds": ",".join(str(seed) for seed in self.__seeds),
            "max_rounds": self.__max_rounds,
        }
        for key, value in self.__stability.items():
            summary[f"stability_period_censored_{key}"] = value
        summary["stability_period_not_reached"] = self.__stability_not_reached
        for key, value in self.__lifetime.items():
            summary[f"network_lifetime_censored_{key}"] = value
        summary["network_lifetime_not_reached"] = self.__lifetime_not_reached
        for key, value in self.__packets.items():
            summary[f"total_packets_{key}"] = value
        if self.__advanced_death is not None:
            summary["advanced_death_round_censored_mean"] = self.__advanced_death
        if self.__normal_death is not None:
            summary["normal_death_round_censored_mean"] = self.__normal_death
        return summary


def summarize_batch(results: Sequence[SimulationResult],
                    baseline: Optional[Sequence[SimulationResult]] = None) -> BatchSummary:
    """
    Summarize runs of one configuration across seeds.

    Args:
        results (sequence): At least one result, configurations equal except for the seed
        baseline (sequence, optional): Results of the compared arm, paired by position

    Returns:
        BatchSummary: Statistics, plus the paired comparison when a baseline is given

    Raises:
        InvalidArgumentError: If the batch is empty, mixes configurations, or does not pair
    """
    if not results:
        raise InvalidArgumentError("results", 0, "at least one result is required")
    for group_name, group in (("results", results), ("baseline", baseline or [])):
        if not group:
            continue
        reference = _comparable(group[0].get_config())
        for result in group[1:]:
            if _comparable(result.get_config()) != reference:
                raise InvalidArgumentError(group_name, result.get_seed(),
                                           "configuration differs from the rest of the batch")
    comparison = PairedComparison(results, baseline) if baseline is not None else None
    return BatchSummary(results, comparison)
