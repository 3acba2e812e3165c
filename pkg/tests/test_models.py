"""
Unit Tests
Tests: Radio model, Nodes and deployment, Election protocols, Clustering and accounting, E-HORM
"""

import math
import os
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add project root to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)

if project_root not in sys.path:
    sys.path.insert(0, project_root)

from models.cluster_protocol import ClusterProtocol, ProtocolConfig
from models.deec import DeecProtocol
from models.ehorm import SavingsLedger, classify_sleep, compute_threshold, record_savings, scan_threshold
from models.exceptions import InvalidArgumentError, InvalidConfigurationError, NetworkDeadError
from models.leach import LeachProtocol
from models.network_model import DistanceTable, FieldConfig, deploy, distance, max_distance_alive_node
from models.protocols import account_round, elect_heads, form_clusters, make_protocol
from models.radio_model import RadioParams, aggregation_energy, ch_round_energy, rx_energy, tx_energy
from models.rng_streams import RandomStreams
from models.sensor_node import ROLE_CLUSTER_HEAD, ROLE_MEMBER, NodeState
from models.sep import SepProtocol
from models.teen import TeenProtocol, teen_should_report

BITS = 4000


@pytest.fixture
def radio():
    """Default radio coefficients."""
    return RadioParams()


@pytest.fixture
def cluster():
    """One head at (10, 0) with four members around it, sink at the origin."""
    head = NodeState(0, (10.0, 0.0), 0.5)
    members = [
        NodeState(1, (10.0, 5.0), 0.5),
        NodeState(2, (10.0, -5.0), 0.5),
        NodeState(3, (15.0, 0.0), 0.5),
        NodeState(4, (5.0, 0.0), 0.5),
    ]
    return head, members


def dead_node(node_id, position):
    node = NodeState(node_id, position, 0.1)
    node.spend(1.0, 0)
    return node


# ===== RADIO MODEL TESTS =====
def test_tx_zero_bits_costs_nothing(radio):
    """Test zero bits cost no energy."""
    assert tx_energy(radio, 0, 50.0) == 0.0


def test_derived_d0(radio):
    """Test the default crossover distance is sqrt(e_fs / e_mp)."""
    assert radio.get_d0_mode() == "derived"
    assert radio.get_d0() == pytest.approx(math.sqrt(10e-12 / 0.0013e-12))
    assert 87.0 < radio.get_d0() < 88.0


def test_branches_agree_at_d0(radio):
    """Test both amplifier formulas give the same value at the derived d0."""
    d0 = radio.get_d0()
    free_space = BITS * radio.get_e_elec() + BITS * radio.get_e_fs() * d0 ** 2
    multipath = BITS * radio.get_e_elec() + BITS * radio.get_e_mp() * d0 ** 4
    assert free_space == pytest.approx(multipath, rel=1e-12)
    assert tx_energy(radio, BITS, d0) == pytest.approx(multipath, rel=1e-12)


def test_tx_continuous_at_d0(radio):
    """Test tx energy does not jump across the crossover."""
    d0 = radio.get_d0()
    reference = tx_energy(radio, BITS, d0)
    gaps = []
    for epsilon in (1e-9, 1e-10):
        below = tx_energy(radio, BITS, d0 * (1 - epsilon))
        above = tx_energy(radio, BITS, d0 * (1 + epsilon))
        gaps.append(abs(above - below) / reference)
    # The gap at 1e-9*d0 is about 3.6e-9, the slope of the curve itself
    assert gaps[0] < 1e-8
    assert gaps[1] < 1e-9
    assert gaps[1] < gaps[0] / 5


def test_fixed_d0_mode():
    """Test a fixed crossover distance is used literally."""
    radio = RadioParams(d0_mode="fixed", d0=87.0)
    assert radio.get_d0() == 87.0
    expected = BITS * 50e-9 + BITS * 0.0013e-12 * 87.0 ** 4
    assert tx_energy(radio, BITS, 87.0) == pytest.approx(expected)


def test_invalid_radio_parameters():
    """Test radio constructor validation names the field."""
    with pytest.raises(InvalidConfigurationError) as error:
        RadioParams(e_elec=-1.0)
    assert error.value.get_field() == "e_elec"
    with pytest.raises(InvalidConfigurationError):
        RadioParams(d0_mode="guess")


def test_negative_inputs_rejected(radio):
    """Test negative distances and bit counts raise."""
    with pytest.raises(InvalidArgumentError):
        tx_energy(radio, BITS, -1.0)
    with pytest.raises(InvalidArgumentError):
        rx_energy(radio, -1)
    with pytest.raises(InvalidArgumentError):
        ch_round_energy(radio, -1, 10.0)


def test_ch_round_energy_alone_at_sink(radio):
    """Test a head without members at the sink pays aggregation and electronics only."""
    assert ch_round_energy(radio, 0, 0.0) == pytest.approx(5e-9 * BITS + 50e-9 * BITS)


def test_ch_round_energy_composition(radio):
    """Test head cost is rx of members plus aggregation of all plus one tx."""
    expected = rx_energy(radio, 5 * BITS) + aggregation_energy(radio, 6 * BITS) + tx_energy(radio, BITS, 30.0)
    assert ch_round_energy(radio, 5, 30.0) == pytest.approx(expected, rel=1e-12)


def test_ch_round_energy_without_own_reading(radio):
    """Test a head with no reading of its own aggregates only its members' packets."""
    with_own = ch_round_energy(radio, 2, 10.0)
    forward_only = ch_round_energy(radio, 2, 10.0, own_packet=False)
    assert with_own - forward_only == pytest.approx(aggregation_energy(radio, BITS), rel=1e-12)


def test_ch_round_energy_multipath_branch(radio):
    """Test a head 100 m from the sink uses the d^4 amplifier."""
    expected = (BITS * 50e-9) + (2 * BITS * 5e-9) + (BITS * 50e-9 + BITS * 0.0013e-12 * 100.0 ** 4)
    assert ch_round_energy(radio, 1, 100.0) == pytest.approx(expected, rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.0, max_value=300.0), st.floats(min_value=0.0, max_value=300.0))
def test_tx_monotone_in_distance(d1, d2):
    """Test tx energy never decreases with distance."""
    radio = RadioParams()
    near, far = min(d1, d2), max(d1, d2)
    assert tx_energy(radio, BITS, near) <= tx_energy(radio, BITS, far) * (1 + 1e-12)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=100000), st.floats(min_value=0.0, max_value=300.0))
def test_tx_linear_in_bits(bits, d):
    """Test doubling the bits doubles tx and rx energy."""
    radio = RadioParams()
    assert tx_energy(radio, 2 * bits, d) == pytest.approx(2 * tx_energy(radio, bits, d), rel=1e-12)
    assert rx_energy(radio, 2 * bits) == pytest.approx(2 * rx_energy(radio, bits), rel=1e-12)


# ===== THRESHOLD ENERGY TESTS =====
def test_threshold_for_corner_node(radio):
    """Test E_th of a corner node 70.71 m from a centered sink."""
    assert compute_threshold(radio, 70.710678) == pytest.approx(3.5e-4, rel=1e-6)


def test_threshold_at_zero_distance(radio):
    """Test E_th without distance is electronics plus aggregation."""
    assert compute_threshold(radio, 0.0) == pytest.approx(2.2e-4)


def test_threshold_negative_distance(radio):
    """Test a negative distance raises."""
    with pytest.raises(InvalidArgumentError):
        compute_threshold(radio, -0.5)


def test_threshold_matches_independent_evaluator():
    """Test E_th against a separately written evaluator on 1000 random inputs."""
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        e_elec = rng.uniform(1e-9, 1e-7)
        e_fs = rng.uniform(1e-12, 1e-10)
        e_mp = rng.uniform(1e-16, 1e-14)
        e_da = rng.uniform(1e-9, 1e-8)
        bits = int(rng.integers(1, 10000))
        d = rng.uniform(0.0, 250.0)
        radio = RadioParams(e_elec, e_fs, e_mp, e_da, bits)
        expected = bits * (e_elec + e_da + e_mp * d * d * d * d)
        assert compute_threshold(radio, d) == pytest.approx(expected, rel=1e-12)


# ===== NODE TESTS =====
def test_spend_deducts():
    """Test an affordable cost is deducted in full."""
    node = NodeState(0, (0.0, 0.0), 0.5)
    drawn, completed = node.spend(0.2, 0)
    assert completed is True
    assert drawn == 0.2
    assert node.get_residual_energy() == pytest.approx(0.3)
    assert node.is_alive()


def test_spend_insufficient_energy_kills():
    """Test a node that cannot afford a cost spends what it has and dies."""
    node = NodeState(0, (0.0, 0.0), 0.1)
    drawn, completed = node.spend(0.25, 7)
    assert completed is False
    assert drawn == pytest.approx(0.1)
    assert node.get_residual_energy() == 0.0
    assert not node.is_alive()
    assert node.get_death_round() == 7
    assert node.spend(0.1, 8) == (0.0, False)


def test_spend_exact_energy_completes_and_depletes():
    """Test spending exactly the residual completes and leaves a depleted node for retirement."""
    node = NodeState(0, (0.0, 0.0), 0.25)
    drawn, completed = node.spend(0.25, 3)
    assert completed is True
    assert drawn == 0.25
    assert node.get_residual_energy() == 0.0
    assert node.is_alive()
    assert node.is_depleted()
    assert node.get_death_round() is None
    assert node.spend(0.1, 4) == (0.0, False)
    assert not node.is_alive()
    assert node.get_death_round() == 4


def test_spend_tolerates_rounding_on_last_send():
    """Test a battery funded for three sends pays all three despite float rounding."""
    node = NodeState(0, (0.0, 0.0), 0.3)
    results = [node.spend(0.1, round_index) for round_index in range(3)]
    assert [completed for _, completed in results] == [True, True, True]
    assert sum(drawn for drawn, _ in results) == pytest.approx(0.3, rel=1e-15)
    assert node.get_residual_energy() == 0.0
    assert node.is_depleted()


def test_spend_clearly_unaffordable_still_fails():
    """Test the rounding slack does not cover a genuinely larger cost."""
    node = NodeState(0, (0.0, 0.0), 0.1)
    drawn, completed = node.spend(0.1 * (1 + 1e-6), 2)
    assert completed is False
    assert drawn == 0.1
    assert not node.is_alive()


def test_retire_takes_node_out_of_service():
    """Test retiring a depleted node records the round."""
    node = NodeState(0, (0.0, 0.0), 0.25)
    node.spend(0.25, 0)
    node.retire(1)
    assert not node.is_alive()
    assert not node.is_depleted()
    assert node.get_death_round() == 1


def test_sleep_keeps_last_active_role():
    """Test sleeping does not overwrite the role of the last awake round."""
    node = NodeState(0, (0.0, 0.0), 0.5)
    node.mark_head(4)
    node.set_asleep(True)
    assert node.get_role() == ROLE_MEMBER
    assert node.get_last_active_role() == ROLE_CLUSTER_HEAD
    node.set_asleep(False)
    node.set_role(ROLE_MEMBER)
    assert node.get_last_active_role() == ROLE_MEMBER


def test_invalid_node_energy():
    """Test a node needs positive energy."""
    with pytest.raises(InvalidConfigurationError):
        NodeState(0, (0.0, 0.0), 0.0)


def test_random_streams_are_independent():
    """Test draws on one stream do not shift another."""
    first = RandomStreams(11)
    second = RandomStreams(11)
    first.election().random(500)
    assert np.array_equal(first.deployment().random(5), second.deployment().random(5))


# ===== NETWORK MODEL TESTS =====
def test_field_defaults():
    """Test the default field is 100x100 with a centered sink."""
    config = FieldConfig()
    assert config.get_node_count() == 100
    assert config.get_sink_position() == (50.0, 50.0)
    assert config.get_initial_energy() == 0.5


def test_invalid_field_values():
    """Test field validation names the offending field."""
    with pytest.raises(InvalidConfigurationError) as error:
        FieldConfig(node_count=0)
    assert error.value.get_field() == "nodes"
    with pytest.raises(InvalidConfigurationError) as error:
        FieldConfig(hetero_fraction=1.5)
    assert error.value.get_field() == "hetero_fraction"


def test_deploy_is_deterministic():
    """Test one seed always yields the same nodes."""
    config = FieldConfig(rng_seed=42)
    assert deploy(config) == deploy(config)


def test_deploy_inside_field():
    """Test every node lies within the field."""
    config = FieldConfig(width=200.0, height=50.0, rng_seed=3)
    for node in deploy(config):
        x, y = node.get_position()
        assert 0.0 <= x <= 200.0
        assert 0.0 <= y <= 50.0


def test_deploy_homogeneous_energy():
    """Test no advanced nodes without heterogeneity."""
    nodes = deploy(FieldConfig(rng_seed=1))
    assert not any(node.is_advanced() for node in nodes)
    assert sum(node.get_initial_energy() for node in nodes) == pytest.approx(50.0)


def test_deploy_heterogeneous_energy():
    """Test 10 advanced nodes at 1 J bring the total to 55 J."""
    config = FieldConfig(hetero_fraction=0.1, hetero_alpha=1.0, rng_seed=1)
    nodes = deploy(config)
    advanced = [node for node in nodes if node.is_advanced()]
    assert len(advanced) == 10
    assert all(node.get_initial_energy() == pytest.approx(1.0) for node in advanced)
    assert sum(node.get_initial_energy() for node in nodes) == pytest.approx(55.0)
    assert config.total_initial_energy() == pytest.approx(55.0)


def test_distance():
    """Test Euclidean distance."""
    assert distance((0.0, 0.0), (0.0, 0.0)) == 0.0
    assert distance((0.0, 0.0), (3.0, 4.0)) == 5.0
    assert distance((0.0, 0.0), (50.0, 50.0)) == pytest.approx(70.710678, rel=1e-8)


def test_max_distance_single_node():
    """Test the farthest node of a single-node network."""
    node_id, d = max_distance_alive_node([NodeState(5, (0.0, 0.0), 0.5)], (50.0, 50.0))
    assert node_id == 5
    assert d == pytest.approx(70.710678, rel=1e-8)


def test_max_distance_tie_breaks_on_id():
    """Test equidistant nodes resolve to the smaller id."""
    nodes = [NodeState(4, (60.0, 50.0), 0.5), NodeState(2, (40.0, 50.0), 0.5)]
    assert max_distance_alive_node(nodes, (50.0, 50.0))[0] == 2


def test_max_distance_skips_dead_nodes():
    """Test dead nodes are ignored and an all-dead network raises."""
    far = dead_node(0, (0.0, 0.0))
    near = NodeState(1, (45.0, 45.0), 0.5)
    assert max_distance_alive_node([far, near], (50.0, 50.0))[0] == 1
    with pytest.raises(NetworkDeadError):
        max_distance_alive_node([far], (50.0, 50.0))


def test_distance_table_matches_distance():
    """Test tabulated distances equal the pairwise helper."""
    nodes = deploy(FieldConfig(node_count=20, rng_seed=2))
    sink = (50.0, 50.0)
    table = DistanceTable(nodes, sink)
    for node in nodes:
        assert table.to_sink(node.get_node_id()) == distance(node.get_position(), sink)
    assert table.between(3, 11) == distance(nodes[3].get_position(), nodes[11].get_position())


def test_distance_table_nearest_matches_brute_force():
    """Test vectorised nearest-head queries agree with a pairwise scan."""
    nodes = deploy(FieldConfig(node_count=60, rng_seed=8))
    table = DistanceTable(nodes)
    heads = [4, 17, 23, 41, 55]
    sources = [node.get_node_id() for node in nodes if node.get_node_id() not in heads]
    nearest, gaps = table.nearest(sources, heads)
    for source, head, gap in zip(sources, nearest, gaps):
        scan = {candidate: distance(nodes[source].get_position(), nodes[candidate].get_position())
                for candidate in heads}
        assert scan[head] == pytest.approx(min(scan.values()), rel=1e-12)
        assert gap == pytest.approx(scan[head], rel=1e-12)


def test_distance_table_nearest_tie_goes_to_first_target():
    """Test equidistant targets resolve to the one listed first."""
    nodes = [NodeState(0, (50.0, 50.0), 0.5), NodeState(3, (40.0, 50.0), 0.5), NodeState(7, (60.0, 50.0), 0.5)]
    table = DistanceTable(nodes)
    assert table.nearest([0], [3, 7]) == ([3], [10.0])
    assert table.nearest([], [3, 7]) == ([], [])
    with pytest.raises(ValueError):
        table.nearest([0], [])


def test_distance_table_without_sink():
    """Test sink queries need a sink."""
    table = DistanceTable([NodeState(0, (1.0, 1.0), 0.5)])
    assert table.get_sink() is None
    with pytest.raises(ValueError):
        table.to_sink(0)


def test_threshold_follows_farthest_alive_node(radio):
    """Test E_th never rises while deaths only shrink the farthest distance."""
    config = FieldConfig(rng_seed=14)
    nodes = deploy(config)
    sink = config.get_sink_position()
    table = DistanceTable(nodes, sink)
    previous = scan_threshold(nodes, sink, radio, table)
    for _ in range(10):
        nodes[previous.get_max_node_id()].spend(1.0, 0)
        current = scan_threshold(nodes, sink, radio, table)
        assert current.get_max_distance() <= previous.get_max_distance()
        assert current.get_e_th() <= previous.get_e_th()
        previous = current


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.0, max_value=300.0), st.floats(min_value=0.0, max_value=300.0))
def test_threshold_monotone_in_distance(d1, d2):
    """Test E_th never decreases as the farthest distance grows."""
    radio = RadioParams()
    near, far = min(d1, d2), max(d1, d2)
    assert compute_threshold(radio, near) <= compute_threshold(radio, far)


# ===== ELECTION TESTS =====
def test_rotating_threshold_first_round():
    """Test the threshold starts at p."""
    node = NodeState(0, (0.0, 0.0), 0.5)
    assert ClusterProtocol.rotating_threshold(node, 0.1, 0) == pytest.approx(0.1)


def test_rotating_threshold_last_round_of_epoch():
    """Test every eligible node is certain to be elected in the epoch's last round."""
    node = NodeState(0, (0.0, 0.0), 0.5)
    assert ClusterProtocol.rotating_threshold(node, 0.1, 9) == 1.0


def test_rotating_threshold_epoch_eligibility():
    """Test a head is ineligible for the rest of its epoch only."""
    node = NodeState(0, (0.0, 0.0), 0.5)
    node.mark_head(3)
    assert ClusterProtocol.rotating_threshold(node, 0.1, 9) == 0.0
    assert ClusterProtocol.rotating_threshold(node, 0.1, 10) == pytest.approx(0.1)


def test_elect_heads_empty_population():
    """Test no candidates means no heads."""
    protocol = LeachProtocol(ProtocolConfig())
    assert elect_heads([], protocol, 0, rng=np.random.default_rng(0)) == set()


def test_elect_heads_uses_draws_by_id():
    """Test a node is elected iff its own draw is below its threshold."""
    nodes = [NodeState(i, (float(i), 0.0), 0.5) for i in range(4)]
    protocol = LeachProtocol(ProtocolConfig(p=0.1))
    draws = [0.05, 0.5, 0.0999, 0.1]
    assert elect_heads(nodes, protocol, 0, draws=draws) == {0, 2}


def test_leach_long_run_head_count():
    """Test LEACH elects about n*p heads per round over many rounds."""
    nodes = [NodeState(i, (float(i), 0.0), 0.5) for i in range(100)]
    protocol = LeachProtocol(ProtocolConfig(p=0.1))
    rng = np.random.default_rng(7)
    total = 0
    for round_index in range(1000):
        heads = elect_heads(nodes, protocol, round_index, rng=rng)
        for head_id in heads:
            nodes[head_id].mark_head(round_index)
        total += len(heads)
    assert total / 1000 == pytest.approx(10.0, rel=0.2)


def test_deec_equal_energies_threshold_is_p_opt():
    """Test DEEC with equal energies uses p_opt for everyone."""
    nodes = [NodeState(i, (float(i), 0.0), 0.5) for i in range(10)]
    protocol = DeecProtocol(ProtocolConfig("DEEC", p=0.1))
    protocol.prepare_round(nodes)
    assert protocol.get_mean_energy() == pytest.approx(0.5)
    for node in nodes:
        assert protocol.threshold(node, 0) == pytest.approx(0.1)


def test_deec_scales_with_residual_energy():
    """Test DEEC favours nodes above the mean energy."""
    rich = NodeState(0, (0.0, 0.0), 0.9)
    poor = NodeState(1, (1.0, 0.0), 0.3)
    protocol = DeecProtocol(ProtocolConfig("DEEC", p=0.1))
    protocol.prepare_round([rich, poor])
    assert protocol.threshold(rich, 0) == pytest.approx(0.15)
    assert protocol.threshold(poor, 0) == pytest.approx(0.05)


def test_deec_threshold_capped_at_one():
    """Test a node far above the mean energy gets a threshold of exactly 1 and is always elected."""
    rich = NodeState(0, (0.0, 0.0), 10.0)
    poor = [NodeState(i, (float(i), 0.0), 0.01) for i in range(1, 10)]
    protocol = DeecProtocol(ProtocolConfig("DEEC", p=0.1, deec_p_opt=0.5))
    population = [rich] + poor
    protocol.prepare_round(population)
    assert 0.5 * 10.0 / protocol.get_mean_energy() > 1.0
    assert protocol.threshold(rich, 0) == 1.0
    for node in poor:
        assert 0.0 <= protocol.threshold(node, 0) <= 1.0
    draws = {node.get_node_id(): 0.999999 for node in population}
    assert elect_heads(population, protocol, 0, draws=draws) == {0}


def test_sep_without_alpha_is_leach():
    """Test SEP with alpha=0 collapses to LEACH."""
    config = ProtocolConfig("SEP", p=0.1)
    sep = SepProtocol(config, 0.1, 0.0)
    leach = LeachProtocol(config)
    assert sep.get_p_normal() == pytest.approx(0.1)
    assert sep.get_p_advanced() == pytest.approx(0.1)
    node = NodeState(0, (0.0, 0.0), 0.5, is_advanced=True)
    for round_index in range(10):
        assert sep.threshold(node, round_index) == pytest.approx(leach.threshold(node, round_index))


def test_sep_weighted_probabilities():
    """Test SEP probabilities with m=0.1 and alpha=1."""
    sep = SepProtocol(ProtocolConfig("SEP", p=0.1), 0.1, 1.0)
    assert sep.get_p_normal() == pytest.approx(0.1 / 1.1)
    assert sep.get_p_advanced() == pytest.approx(0.2 / 1.1)


def test_sep_rejects_certain_advanced_election():
    """Test SEP refuses an advanced probability of 1 or more."""
    with pytest.raises(InvalidConfigurationError):
        SepProtocol(ProtocolConfig("SEP", p=0.5), 0.1, 10.0)


def test_make_protocol_kinds():
    """Test the factory builds each protocol and labels the E-HORM variant."""
    for kind, expected in (("LEACH", LeachProtocol), ("TEEN", TeenProtocol),
                           ("SEP", SepProtocol), ("DEEC", DeecProtocol)):
        protocol = make_protocol(ProtocolConfig(kind), 0.1, 1.0)
        assert isinstance(protocol, expected)
        assert protocol.get_label(ehorm=True) == f"i{kind}"


def test_invalid_protocol_config():
    """Test protocol validation names the field."""
    with pytest.raises(InvalidConfigurationError) as error:
        ProtocolConfig("HEED")
    assert error.value.get_field() == "protocol"
    with pytest.raises(InvalidConfigurationError) as error:
        ProtocolConfig(p=1.0)
    assert error.value.get_field() == "p"


# ===== TEEN TESTS =====
def test_teen_below_hard_threshold():
    """Test readings at or below the hard threshold are not sent."""
    config = ProtocolConfig("TEEN")
    assert teen_should_report(50.0, None, config) is False
    assert teen_should_report(100.0, None, config) is False


def test_teen_first_report():
    """Test the first reading above the hard threshold is sent."""
    assert teen_should_report(150.0, None, ProtocolConfig("TEEN")) is True


def test_teen_soft_threshold():
    """Test small changes are suppressed and large ones sent."""
    config = ProtocolConfig("TEEN")
    assert teen_should_report(150.0, 149.0, config) is False
    assert teen_should_report(150.0, 148.0, config) is True
    assert teen_should_report(150.0, 140.0, config) is True


# ===== CLUSTERING AND ACCOUNTING TESTS =====
def test_form_clusters_without_heads():
    """Test every node sends directly when no head exists."""
    nodes = [NodeState(i, (float(i), 0.0), 0.5) for i in range(3)]
    assignment = form_clusters(nodes, set())
    assert assignment.get_direct_transmitters() == [0, 1, 2]
    assert assignment.get_membership() == {}


def test_form_clusters_single_head():
    """Test one head collects every other node."""
    nodes = [NodeState(i, (float(i), 0.0), 0.5) for i in range(4)]
    assignment = form_clusters(nodes, {2})
    assert assignment.get_membership() == {0: 2, 1: 2, 3: 2}
    assert assignment.is_partition_of({0, 1, 2, 3})


def test_form_clusters_tie_goes_to_smaller_head():
    """Test a node equidistant to heads 3 and 7 joins head 3."""
    nodes = [NodeState(0, (50.0, 50.0), 0.5), NodeState(3, (40.0, 50.0), 0.5), NodeState(7, (60.0, 50.0), 0.5)]
    assignment = form_clusters(nodes, {7, 3})
    assert assignment.get_membership() == {0: 3}


def test_account_round_no_nodes(radio):
    """Test an empty round spends nothing."""
    ledger = account_round([], form_clusters([], set()), radio, (0.0, 0.0))
    assert ledger.get_total() == 0.0
    assert ledger.get_packets_delivered() == 0


def test_account_round_one_cluster(radio, cluster):
    """Test four member sends plus one head round are charged."""
    head, members = cluster
    nodes = [head] + members
    assignment = form_clusters(nodes, {0})
    ledger = account_round(nodes, assignment, radio, (0.0, 0.0))
    expected = sum(tx_energy(radio, BITS, distance(m.get_position(), head.get_position())) for m in members)
    expected += ch_round_energy(radio, 4, 10.0)
    assert ledger.get_total() == pytest.approx(expected, rel=1e-12)
    assert ledger.get_packets_delivered() == 1
    assert ledger.get_cluster_energy_total() == pytest.approx(expected, rel=1e-12)
    assert ledger.get_cluster_energy_average() * ledger.get_head_count() == pytest.approx(ledger.get_cluster_energy_total(), rel=1e-12)


def test_account_round_starved_head(radio):
    """Test a head holding half its round cost dies and its packet is lost."""
    cost = ch_round_energy(radio, 4, 10.0)
    head = NodeState(0, (10.0, 0.0), cost / 2)
    members = [NodeState(i, (10.0, float(i)), 0.5) for i in range(1, 5)]
    nodes = [head] + members
    ledger = account_round(nodes, form_clusters(nodes, {0}), radio, (0.0, 0.0), round_index=12)
    assert not head.is_alive()
    assert head.get_death_round() == 12
    assert ledger.get_packets_delivered() == 0
    assert ledger.get_per_node()[0] == pytest.approx(cost / 2)


def test_account_round_frozen_energy(radio, cluster):
    """Test frozen accounting prices the round without draining batteries."""
    head, members = cluster
    nodes = [head] + members
    ledger = account_round(nodes, form_clusters(nodes, {0}), radio, (0.0, 0.0), freeze_energy=True)
    assert ledger.get_total() > 0
    assert all(node.get_residual_energy() == 0.5 for node in nodes)


def test_account_round_teen_silent_cluster(radio, cluster):
    """Test a cluster where nobody reports spends nothing."""
    head, members = cluster
    nodes = [head] + members
    ledger = account_round(nodes, form_clusters(nodes, {0}), radio, (0.0, 0.0), readings={})
    assert ledger.get_total() == 0.0
    assert ledger.get_packets_delivered() == 0
    assert ledger.get_head_count() == 1


def test_account_round_teen_partial_reports(radio, cluster):
    """Test only reporting members send and the head forwards their packets."""
    head, members = cluster
    nodes = [head] + members
    readings = {1: 150.0, 3: 180.0}
    ledger = account_round(nodes, form_clusters(nodes, {0}), radio, (0.0, 0.0), readings=readings)
    expected = (tx_energy(radio, BITS, 5.0) + tx_energy(radio, BITS, 5.0)
                + ch_round_energy(radio, 2, 10.0, own_packet=False))
    assert ledger.get_total() == pytest.approx(expected, rel=1e-12)
    assert ledger.get_per_node()[0] == pytest.approx(ch_round_energy(radio, 2, 10.0, own_packet=False), rel=1e-12)
    assert ledger.get_packets_delivered() == 1
    assert members[0].get_last_reported_value() == 150.0
    assert members[1].get_last_reported_value() is None
    assert head.get_last_reported_value() is None


def test_account_round_teen_reporting_head(radio, cluster):
    """Test a reporting head aggregates its own reading with the delivered member packets."""
    head, members = cluster
    nodes = [head] + members
    readings = {0: 120.0, 2: 160.0}
    ledger = account_round(nodes, form_clusters(nodes, {0}), radio, (0.0, 0.0), readings=readings)
    assert ledger.get_per_node()[0] == pytest.approx(ch_round_energy(radio, 1, 10.0), rel=1e-12)
    assert ledger.get_packets_delivered() == 1
    assert head.get_last_reported_value() == 120.0


# ===== E-HORM TESTS =====
def test_classify_sleep_boundary():
    """Test a node exactly at E_th stays awake, below sleeps, dead in neither."""
    at = NodeState(0, (0.0, 0.0), 3.5e-4)
    below = NodeState(1, (1.0, 0.0), 3.4e-4)
    gone = dead_node(2, (2.0, 0.0))
    awake, asleep = classify_sleep([at, below, gone], 3.5e-4)
    assert awake == [at]
    assert asleep == [below]


def test_fresh_network_nobody_sleeps(radio):
    """Test 0.5 J nodes are far above E_th."""
    config = FieldConfig(rng_seed=9)
    nodes = deploy(config)
    threshold = scan_threshold(nodes, config.get_sink_position(), radio)
    assert threshold.get_e_th() <= compute_threshold(radio, math.sqrt(5000.0))
    awake, asleep = classify_sleep(nodes, threshold.get_e_th())
    assert len(awake) == 100
    assert asleep == []


def test_record_savings_nobody_asleep(radio):
    """Test no sleepers leaves the ledger unchanged."""
    ledger = SavingsLedger()
    record_savings([], {}, radio, ledger)
    assert ledger.get_cumulative_total() == 0.0


def test_record_savings_sleeper_without_heads(radio):
    """Test a sleeper with no heads saves one direct send to the sink."""
    node = NodeState(0, (20.0, 50.0), 1e-4)
    ledger = SavingsLedger()
    record_savings([node], {0: ROLE_MEMBER}, radio, ledger, sink=(50.0, 50.0))
    assert ledger.get_per_round_normal() == pytest.approx(tx_energy(radio, BITS, 30.0))
    assert ledger.get_cumulative_total() == pytest.approx(tx_energy(radio, BITS, 30.0))


def test_record_savings_head_equivalent(radio):
    """Test a sleeper whose last role was head saves a head round."""
    node = NodeState(0, (20.0, 50.0), 1e-4)
    ledger = SavingsLedger()
    record_savings([node], {0: ROLE_CLUSTER_HEAD}, radio, ledger, sink=(50.0, 50.0), mean_members=3)
    assert ledger.get_per_round_ch_equivalent() == pytest.approx(ch_round_energy(radio, 3, 30.0))
    assert ledger.get_per_round_normal() == 0.0


def test_savings_accumulate_across_rounds(radio):
    """Test per-round figures reset while the total keeps growing."""
    node = NodeState(0, (20.0, 50.0), 1e-4)
    head = NodeState(1, (25.0, 50.0), 0.5)
    ledger = SavingsLedger()
    record_savings([node], {0: ROLE_MEMBER}, radio, ledger, heads=[head], sink=(50.0, 50.0))
    ledger.begin_round()
    record_savings([node], {0: ROLE_MEMBER}, radio, ledger, heads=[head], sink=(50.0, 50.0))
    assert ledger.get_per_round_total() == pytest.approx(tx_energy(radio, BITS, 5.0))
    assert ledger.get_cumulative_total() == pytest.approx(2 * tx_energy(radio, BITS, 5.0))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
