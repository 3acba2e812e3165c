"""
Experiment configuration controller for the sensor network simulator.

Reads the flat key=value config format, layers CLI overrides on top of the
file and the file on top of built-in defaults, and resolves everything into
an ExperimentSpec holding one validated SimulationConfig template.
"""

import logging
from typing import Callable, Dict, List, Mapping, Optional

from models.cluster_protocol import ProtocolConfig
from models.exceptions import InvalidConfigurationError
from models.network_model import MAX_SEED, FieldConfig
from models.protocols import make_protocol
from models.radio_model import RadioParams
from models.simulation import SimulationConfig

logger = logging.getLogger(__name__)

TRUE_WORDS = ("true", "yes", "on", "1")
FALSE_WORDS = ("false", "no", "off", "0")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
HETEROGENEOUS_PROTOCOLS = ("SEP", "DEEC")
KEY_ALIASES = {"max_rounds": "rounds"}


def parse_bool(text: str) -> bool:
    word = text.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"expected one of {', '.join(TRUE_WORDS + FALSE_WORDS)}")


def parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError("expected an integer")


def parse_float(text: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise ValueError("expected a number")


def parse_seeds(text: str) -> List[int]:
    """
    Parse a seed list such as '1,2,7' or '1-30' or a mix of both.

    Returns:
        list: Seeds in the order given, ranges inclusive

    Raises:
        ValueError: If a token is malformed or out of the 64-bit range
    """
    seeds = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token:
            low_text, high_text = token.split("-", 1)
            low, high = parse_int(low_text), parse_int(high_text)
            if low > high:
                raise ValueError(f"range '{token}' is reversed")
            seeds.extend(range(low, high + 1))
        else:
            seeds.append(parse_int(token))
    if not seeds:
        raise ValueError("at least one seed is required")
    for seed in seeds:
        if not 0 <= seed <= MAX_SEED:
            raise ValueError(f"seed {seed} does not fit in 64 unsigned bits")
    return seeds


def parse_field(text: str) -> Dict[str, float]:
    """Parse 'WIDTHxHEIGHT' into width and height entries."""
    parts = text.strip().lower().split("x")
    if len(parts) != 2:
        raise ValueError("expected WIDTHxHEIGHT, for example 100x100")
    return {"width": parse_float(parts[0]), "height": parse_float(parts[1])}


def parse_log_level(text: str) -> str:
    level = text.strip().upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"expected one of {', '.join(LOG_LEVELS)}")
    return level


def parse_text(text: str) -> str:
    value = text.strip()
    if not value:
        raise ValueError("cannot be empty")
    return value


KEY_PARSERS: Dict[str, Callable[[str], object]] = {
    "protocol": parse_text,
    "ehorm": parse_bool,
    "compare": parse_bool,
    "seeds": parse_seeds,
    "rounds": parse_int,
    "nodes": parse_int,
    "width": parse_float,
    "height": parse_float,
    "field": parse_field,
    "sink_x": parse_float,
    "sink_y": parse_float,
    "initial_energy": parse_float,
    "hetero_fraction": parse_float,
    "hetero_alpha": parse_float,
    "e_elec": parse_float,
    "e_fs": parse_float,
    "e_mp": parse_float,
    "e_da": parse_float,
    "d0_mode": parse_text,
    "d0": parse_float,
    "packet_bits": parse_int,
    "p": parse_float,
    "teen_hard_threshold": parse_float,
    "teen_soft_threshold": parse_float,
    "teen_sense_min": parse_float,
    "teen_sense_max": parse_float,
    "deec_p_opt": parse_float,
    "out": parse_text,
    "workers": parse_int,
    "check_invariants": parse_bool,
    "freeze_energy": parse_bool,
    "log_level": parse_log_level,
}

DEFAULTS: Dict[str, object] = {
    "protocol": "LEACH",
    "ehorm": False,
    "compare": False,
    "seeds": [1],
    "rounds": 10000,
    "nodes": 100,
    "width": 100.0,
    "height": 100.0,
    "initial_energy": 0.5,
    "e_elec": 50e-9,
    "e_fs": 10e-12,
    "e_mp": 0.0013e-12,
    "e_da": 5e-9,
    "d0_mode": "derived",
    "d0": 87.0,
    "packet_bits": 4000,
    "p": 0.1,
    "teen_hard_threshold": 100.0,
    "teen_soft_threshold": 2.0,
    "teen_sense_min": 0.0,
    "teen_sense_max": 200.0,
    "out": "results",
    "workers": 1,
    "check_invariants": False,
    "freeze_energy": False,
    "log_level": "INFO",
}


class ExperimentSpec:
    """
    A fully resolved experiment: what to run, over which seeds, and where to write.

    In compare mode both arms (E-HORM off and on) run on every seed;
    otherwise only the arm selected by the template's ehorm flag runs.
    """

    def __init__(self, simulation: SimulationConfig, seeds: List[int], output_dir: str = "results",
                 compare: bool = False, workers: int = 1, log_level: str = "INFO") -> None:
        """
        Initialize an ExperimentSpec object.

        Args:
            simulation (SimulationConfig): Template configuration; its seed is replaced per run
            seeds (list): Run seeds, at least one
            output_dir (str): Directory for CSV and summary files
            compare (bool): Run both arms on every seed
            workers (int): Worker processes for the batch
            log_level (str): Logging level name

        Raises:
            InvalidConfigurationError: If there are no seeds or workers < 1
        """
        if not seeds:
            raise InvalidConfigurationError("seeds", seeds, "at least one seed is required")
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise InvalidConfigurationError("workers", workers, "must be a positive integer")
        self.__simulation = simulation
        self.__seeds = list(seeds)
        self.__output_dir = output_dir
        self.__compare = bool(compare)
        self.__workers = workers
        self.__log_level = log_level

    # Getter methods
    def get_simulation_config(self) -> SimulationConfig:
        return self.__simulation

    def get_protocol(self) -> str:
        return self.__simulation.get_protocol().get_kind()

    def is_ehorm(self) -> bool:
        return self.__simulation.is_ehorm()

    def get_max_rounds(self) -> int:
        return self.__simulation.get_max_rounds()

    def get_seeds(self) -> List[int]:
        return list(self.__seeds)

    def get_output_dir(self) -> str:
        return self.__output_dir

    def is_compare(self) -> bool:
        return self.__compare

    def get_workers(self) -> int:
        return self.__workers

    def get_log_level(self) -> str:
        return self.__log_level

    def arms(self) -> List[bool]:
        """E-HORM settings to run, base arm first."""
        if self.__compare:
            return [False, True]
        return [self.__simulation.is_ehorm()]

    def configs_for(self, ehorm: bool) -> List[SimulationConfig]:
        """One configuration per seed for one arm, in seed order."""
        template = self.__simulation.with_ehorm(ehorm)
        return [template.with_seed(seed) for seed in self.__seeds]

    def to_dict(self) -> dict:
        """Echo of the resolved experiment, used as the summary header."""
        echo = self.__simulation.to_dict()
        echo.pop("seed")
        echo["seeds"] = ",".join(str(seed) for seed in self.__seeds)
        echo["compare"] = self.__compare
        echo["check_invariants"] = self.__simulation.is_check_invariants()
        return echo


def _read_lines(text: str) -> Dict[str, tuple]:
    """Parse config text into key -> (value, line number)."""
    entries: Dict[str, tuple] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfigurationError(line, raw_line.strip(), "expected key=value", line_number)
        key, value = (part.strip() for part in line.split("=", 1))
        _store(entries, key, value, line_number)
    return entries


def _store(entries: Dict[str, tuple], key: str, value: object, line_number: Optional[int]) -> None:
    """Parse one value and record it, expanding composite keys."""
    key = KEY_ALIASES.get(key.lower(), key.lower())
    if key not in KEY_PARSERS:
        raise InvalidConfigurationError(key, value, "unknown key", line_number)
    if isinstance(value, str):
        try:
            value = KEY_PARSERS[key](value)
        except ValueError as error:
            raise InvalidConfigurationError(key, value, str(error), line_number)
    if key == "field":
        for part, extent in value.items():
            entries[part] = (extent, line_number)
        return
    entries[key] = (value, line_number)


def _resolve(entries: Dict[str, tuple]) -> ExperimentSpec:
    """Build the parameter blocks from merged entries."""
    values = {key: value for key, (value, _) in entries.items()}

    def setting(key: str):
        return values.get(key, DEFAULTS.get(key))

    kind = str(setting("protocol")).upper()
    heterogeneous = kind in HETEROGENEOUS_PROTOCOLS
    hetero_fraction = values.get("hetero_fraction", 0.1 if heterogeneous else 0.0)
    hetero_alpha = values.get("hetero_alpha", 1.0 if heterogeneous else 0.0)

    width, height = setting("width"), setting("height")
    sink = None
    if "sink_x" in values or "sink_y" in values:
        sink = (values.get("sink_x", width / 2.0), values.get("sink_y", height / 2.0))

    seeds = setting("seeds")
    field = FieldConfig(width, height, setting("nodes"), sink, setting("initial_energy"),
                        hetero_fraction, hetero_alpha, seeds[0])
    radio = RadioParams(setting("e_elec"), setting("e_fs"), setting("e_mp"), setting("e_da"),
                        setting("packet_bits"), setting("d0_mode"), setting("d0"))
    protocol = ProtocolConfig(kind, setting("p"), setting("teen_hard_threshold"), setting("teen_soft_threshold"),
                              (setting("teen_sense_min"), setting("teen_sense_max")), values.get("deec_p_opt"))
    make_protocol(protocol, hetero_fraction, hetero_alpha)
    simulation = SimulationConfig(field, radio, protocol, setting("ehorm"), setting("rounds"),
                                  setting("check_invariants"), setting("freeze_energy"))
    return ExperimentSpec(simulation, seeds, setting("out"), setting("compare"), setting("workers"),
                          setting("log_level"))


def parse_config(text: str, overrides: Optional[Mapping[str, object]] = None) -> ExperimentSpec:
    """
    Resolve config-file text and CLI overrides into an ExperimentSpec.

    Flags override file values, which override built-in defaults. Override
    values may be raw strings (parsed like file values) or already typed.

    Args:
        text (str): Config file contents, flat key=value lines with '#' comments
        overrides (mapping, optional): Key -> value from the command line; None values are ignored

    Returns:
        ExperimentSpec: Fully resolved and validated

    Raises:
        InvalidConfigurationError: Naming the key (and its file line) of an unknown key,
                                   an unparsable value or a constraint violation
    """
    entries = _read_lines(text or "")
    for key, value in (overrides or {}).items():
        if value is not None:
            _store(entries, key, value, None)

    try:
        spec = _resolve(entries)
    except InvalidConfigurationError as error:
        field = error.get_field()
        if field == "sink_position":
            field = "sink_x" if "sink_x" in entries else "sink_y"
        line = entries.get(field, (None, None))[1]
        if line is None or error.get_line() is not None:
            raise
        raise InvalidConfigurationError(field, error.get_value(), error.get_reason(), line)

    logger.debug("Resolved experiment: %s", spec.to_dict())
    return spec
