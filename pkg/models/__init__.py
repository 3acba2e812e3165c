"""
Models package for the sensor network simulator.

This package contains the radio and network models, the cluster-head
election protocols, the E-HORM sleep/awake overlay and the round-based
simulation engine.
"""

from .radio_model import RadioParams, tx_energy, rx_energy, aggregation_energy, ch_round_energy
from .sensor_node import NodeState, ROLE_MEMBER, ROLE_CLUSTER_HEAD, ROLE_DIRECT
from .rng_streams import RandomStreams
from .network_model import FieldConfig, DistanceTable, deploy, distance, max_distance_alive_node
from .cluster_protocol import ProtocolConfig, ClusterAssignment, ClusterProtocol, PROTOCOL_KINDS
from .leach import LeachProtocol
from .teen import TeenProtocol, teen_should_report
from .sep import SepProtocol
from .deec import DeecProtocol
from .protocols import RoundLedger, make_protocol, elect_heads, form_clusters, account_round
from .ehorm import ThresholdState, SavingsLedger, compute_threshold, scan_threshold, classify_sleep, record_savings
from .round_metrics import RoundMetrics, CSV_HEADER
from .simulation import (
    SimulationConfig, SimulationResult, Simulation, BatchSummary, PairedComparison,
    run, run_batch, summarize_batch,
)
from .exceptions import *

__all__ = [
    'RadioParams', 'tx_energy', 'rx_energy', 'aggregation_energy', 'ch_round_energy',
    'NodeState', 'ROLE_MEMBER', 'ROLE_CLUSTER_HEAD', 'ROLE_DIRECT',
    'RandomStreams', 'FieldConfig', 'DistanceTable', 'deploy', 'distance', 'max_distance_alive_node',
    'ProtocolConfig', 'ClusterAssignment', 'ClusterProtocol', 'PROTOCOL_KINDS',
    'LeachProtocol', 'TeenProtocol', 'teen_should_report', 'SepProtocol', 'DeecProtocol',
    'RoundLedger', 'make_protocol', 'elect_heads', 'form_clusters', 'account_round',
    'ThresholdState', 'SavingsLedger', 'compute_threshold', 'scan_threshold', 'classify_sleep', 'record_savings',
    'RoundMetrics', 'CSV_HEADER',
    'SimulationConfig', 'SimulationResult', 'Simulation', 'BatchSummary', 'PairedComparison',
    'run', 'run_batch', 'summarize_batch',
]
