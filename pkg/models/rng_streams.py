"""
Seeded random streams for reproducible runs.

One seed per run is split into independent named streams, so consuming more
or fewer draws from one stream never shifts the draws of another.
"""

import numpy as np

STREAM_NAMES = ("deployment", "election", "sensing")


class RandomStreams:
    """Named numpy generators derived from one 64-bit run seed."""

    def __init__(self, seed: int) -> None:
        """
        Initialize the streams.

        Args:
            seed (int): Non-negative run seed
        """
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
            raise ValueError(f"Invalid seed: {seed}. Must be a non-negative integer")
        self.__seed = int(seed)
        children = np.random.SeedSequence(self.__seed).spawn(len(STREAM_NAMES))
        self.__streams = {name: np.random.default_rng(child) for name, child in zip(STREAM_NAMES, children)}

    def get_seed(self) -> int:
        """Get the run seed."""
        return self.__seed

    def deployment(self) -> np.random.Generator:
        """Get the stream that places nodes and picks the advanced class."""
        return self.__streams["deployment"]

    def election(self) -> np.random.Generator:
        """Get the stream of per-node election draws."""
        return self.__streams["election"]

    def sensing(self) -> np.random.Generator:
        """Get the stream of TEEN sensed values."""
        return self.__streams["sensing"]
