"""
Custom exceptions for the sensor network simulator.

This module defines the exception classes raised by the radio model, the
network and protocol layers, the simulation engine and the experiment
harness, so that callers can tell configuration mistakes apart from I/O
failures and from the engine's own run-complete signal.
"""

from typing import Optional


class SensorNetworkException(Exception):
    """
    Base exception class for all simulator errors.

    This serves as the parent class for all custom exceptions in the
    simulator, allowing for hierarchical exception handling.
    """

    def __init__(self, message: str) -> None:
        """
        Initialize the base exception with a message.

        Args:
            message (str): Error message describing the exception
        """
        super().__init__(message)
        self.__message = message

    def get_message(self) -> str:
        """Get the error message."""
        return self.__message


class InvalidArgumentError(SensorNetworkException):
    """
    Exception raised when an operation receives an argument outside its domain.

    Thrown for negative distances or bit counts handed to the radio model,
    and for batches that cannot be summarized together.
    """

    def __init__(self, argument: str, value: object, reason: str) -> None:
        """
        Initialize with the offending argument.

        Args:
            argument (str): Name of the argument
            value (object): The rejected value
            reason (str): Why the value is rejected
        """
        super().__init__(f"Invalid argument - {argument}: '{value}' - {reason}")
        self.__argument = argument
        self.__value = value
        self.__reason = reason

    def get_argument(self) -> str:
        """Get the argument name."""
        return self.__argument

    def get_value(self) -> object:
        """Get the rejected value."""
        return self.__value

    def get_reason(self) -> str:
        """Get the reason for rejection."""
        return self.__reason


class InvalidConfigurationError(SensorNetworkException):
    """
    Exception raised when a configuration value fails validation.

    This exception is thrown by the parameter objects' constructors and by
    the config-file parser. The message always names the offending key and,
    when the value came from a config file, the line it was read from.
    """

    def __init__(self, field: str, value: object, reason: str, line: Optional[int] = None) -> None:
        """
        Initialize with invalid field details.

        Args:
            field (str): The configuration key that has invalid data
            value (object): The invalid value
            reason (str): Why the value is invalid
            line (int, optional): Config-file line number the value came from
        """
        location = f" (line {line})" if line is not None else ""
        super().__init__(f"Invalid configuration - {field}{location}: '{value}' - {reason}")
        self.__field = field
        self.__value = value
        self.__reason = reason
        self.__line = line

    def get_field(self) -> str:
        """Get the key that has invalid data."""
        return self.__field

    def get_value(self) -> object:
        """Get the invalid value."""
        return self.__value

    def get_reason(self) -> str:
        """Get the reason for invalidity."""
        return self.__reason

    def get_line(self) -> Optional[int]:
        """Get the config-file line number, if known."""
        return self.__line


class NetworkDeadError(SensorNetworkException):
    """
    Exception raised when an operation needs at least one alive node and none is left.

    The simulation engine uses it as its run-complete signal.
    """

    def __init__(self, round_index: Optional[int] = None) -> None:
        """
        Initialize with the round at which the network was found dead.

        Args:
            round_index (int, optional): Round index, when known
        """
        where = f" at round {round_index}" if round_index is not None else ""
        super().__init__(f"No alive nodes left in the network{where}")
        self.__round_index = round_index

    def get_round_index(self) -> Optional[int]:
        """Get the round index at which the network was found dead."""
        return self.__round_index


class InvariantViolationError(SensorNetworkException):
    """
    Exception raised by the engine's checking mode when a per-round invariant breaks.
    """

    def __init__(self, invariant: str, round_index: int, detail: str) -> None:
        """
        Initialize with the violated invariant.

        Args:
            invariant (str): Short name of the invariant
            round_index (int): Round in which it was violated
            detail (str): What was observed
        """
        super().__init__(f"Invariant '{invariant}' violated in round {round_index}: {detail}")
        self.__invariant = invariant
        self.__round_index = round_index

    def get_invariant(self) -> str:
        """Get the invariant name."""
        return self.__invariant

    def get_round_index(self) -> int:
        """Get the round of the violation."""
        return self.__round_index


class OutputWriteError(SensorNetworkException):
    """
    Exception raised when a result file cannot be written.

    This exception is thrown when CSV or summary persistence encounters
    file I/O errors; the message carries the path.
    """

    def __init__(self, path: str, reason: str) -> None:
        """
        Initialize with the path and failure reason.

        Args:
            path (str): The file that could not be written
            reason (str): The reason for the failure
        """
        super().__init__(f"Could not write '{path}': {reason}")
        self.__path = path
        self.__reason = reason

    def get_path(self) -> str:
        """Get the path that failed."""
        return self.__path

    def get_reason(self) -> str:
        """Get the reason for failure."""
        return self.__reason
