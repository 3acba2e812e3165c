"""
Round metrics module for the sensor network simulator.

This module contains the RoundMetrics class, the snapshot the engine takes
at the end of every round. The first eight fields form the per-round CSV;
the remaining ones feed summaries and checks.
"""

from typing import List

CSV_HEADER = ["round", "alive", "asleep", "heads", "packets_to_sink",
              "residual_total_j", "e_th_j", "savings_total_j"]


def format_float(value: float) -> str:
    """Render a float with 9 significant digits."""
    return format(value, ".9g")


class RoundMetrics:
    """
    End-of-round snapshot of the network.

    Packets and savings are cumulative; energy figures are in joules.
    """

    def __init__(self, round_index: int, alive: int, asleep: int, heads: int, packets_to_sink: int,
                 residual_total: float, e_th: float, savings_total: float, round_packets: int = 0,
                 round_energy: float = 0.0, consumed_total: float = 0.0, cluster_energy_total: float = 0.0,
                 cluster_energy_average: float = 0.0, savings_normal: float = 0.0, savings_ch: float = 0.0,
                 dead_advanced: int = 0, dead_normal: int = 0) -> None:
        """
        Initialize a RoundMetrics object.

        Args:
            round_index (int): Round index, from 0
            alive (int): Alive nodes after the round
            asleep (int): Nodes that slept this round
            heads (int): Heads elected this round
            packets_to_sink (int): Packets delivered to the sink so far
            residual_total (float): Remaining energy of the network
            e_th (float): This round's threshold energy (0 with E-HORM off)
            savings_total (float): Cumulative sleep savings
            round_packets (int): Packets delivered this round
            round_energy (float): Energy drawn this round
            consumed_total (float): Energy drawn so far
            cluster_energy_total (float): Summed cluster energy (head plus members) this round
            cluster_energy_average (float): cluster_energy_total per head
            savings_normal (float): This round's member-role savings
            savings_ch (float): This round's head-equivalent savings
            dead_advanced (int): Dead advanced nodes so far
            dead_normal (int): Dead normal nodes so far
        """
        self.__round_index = round_index
        self.__alive = alive
        self.__asleep = asleep
        self.__heads = heads
        self.__packets_to_sink = packets_to_sink
        self.__residual_total = residual_total
        self.__e_th = e_th
        self.__savings_total = savings_total
        self.__round_packets = round_packets
        self.__round_energy = round_energy
        self.__consumed_total = consumed_total
        self.__cluster_energy_total = cluster_energy_total
        self.__cluster_energy_average = cluster_energy_average
        self.__savings_normal = savings_normal
        self.__savings_ch = savings_ch
        self.__dead_advanced = dead_advanced
        self.__dead_normal = dead_normal

    # Getter methods
    def get_round(self) -> int:
        """Get the round index."""
        return self.__round_index

    def get_alive(self) -> int:
        """Get the alive node count."""
        return self.__alive

    def get_asleep(self) -> int:
        """Get the sleeping node count."""
        return self.__asleep

    def get_heads(self) -> int:
        """Get the number of elected heads."""
        return self.__heads

    def get_packets_to_sink(self) -> int:
        """Get the packets delivered since round 0."""
        return self.__packets_to_sink

    def get_residual_total(self) -> float:
        """Get the summed residual energy in joules."""
        return self.__residual_total

    def get_e_th(self) -> float:
        """Get the round's threshold energy, 0 without E-HORM."""
        return self.__e_th

    def get_savings_total(self) -> float:
        """Get the cumulative sleep savings in joules."""
        return self.__savings_total

    def get_round_packets(self) -> int:
        """Get the packets delivered this round."""
        return self.__round_packets

    def get_round_energy(self) -> float:
        """Get the energy drawn this round."""
        return self.__round_energy

    def get_consumed_total(self) -> float:
        """Get the energy drawn since round 0."""
        return self.__consumed_total

    def get_cluster_energy_total(self) -> float:
        """Get the summed cluster energy of the round."""
        return self.__cluster_energy_total

    def get_cluster_energy_average(self) -> float:
        """Get the cluster energy per head."""
        return self.__cluster_energy_average

    def get_savings_normal(self) -> float:
        """Get this round's member-role savings."""
        return self.__savings_normal

    def get_savings_ch(self) -> float:
        """Get this round's head-equivalent savings."""
        return self.__savings_ch

    def get_dead_advanced(self) -> int:
        """Get the dead advanced node count."""
        return self.__dead_advanced

    def get_dead_normal(self) -> int:
        """Get the dead normal node count."""
        return self.__dead_normal

    def repeated(self, round_index: int, savings_total: float) -> "RoundMetrics":
        """
        Copy of this snapshot for a later round of a frozen network.

        Nothing is sent in such a round, only the savings keep accruing.
        """
        return RoundMetrics(round_index, self.__alive, self.__asleep, self.__heads, self.__packets_to_sink,
                            self.__residual_total, self.__e_th, savings_total, 0, 0.0, self.__consumed_total,
                            0.0, 0.0, self.__savings_normal, self.__savings_ch,
                            self.__dead_advanced, self.__dead_normal)

    def to_csv_row(self) -> List[str]:
        """The eight CSV fields, floats with 9 significant digits."""
        return [
            str(self.__round_index),
            str(self.__alive),
            str(self.__asleep),
            str(self.__heads),
            str(self.__packets_to_sink),
            format_float(self.__residual_total),
            format_float(self.__e_th),
            format_float(self.__savings_total),
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RoundMetrics):
            return False
        return vars(self) == vars(other)

    def __str__(self) -> str:
        return (f"Round {self.__round_index}: alive={self.__alive}, asleep={self.__asleep}, heads={self.__heads}, "
                f"packets={self.__packets_to_sink}, residual={self.__residual_total:.6f} J")
