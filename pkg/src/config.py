"""Library configuration, desk-scale guards, and logging setup."""

import logging
from typing import Final

LOGGER_NAME: Final[str] = "parking_poset"

# Ground-set guards. Every exhaustive computation stays desk-scale.
MAX_NC_N: Final[int] = 12
MAX_NC_POSET_N: Final[int] = 7
MAX_PARKING_ENUM_N: Final[int] = 6
MAX_PP_POSET_N: Final[int] = 5
MAX_K_HOMOLOGY_N: Final[int] = 3
MAX_SERIES_ORDER: Final[int] = 8
MAX_ORDER_COMPLEX_SIZE: Final[int] = 1500
MAX_FOREST_N: Final[int] = 7
MAX_CLUSTER_N: Final[int] = 4
MAX_K_POSET_N: Final[int] = 4
MAX_K_POSET_K: Final[int] = 3
MAX_EDELMAN_NC_SIZE: Final[int] = 8
MAX_EDELMAN_PP_SIZE: Final[int] = 6
MAX_SHELLING_N: Final[int] = 4
MAX_LONG_SHELLING_N: Final[int] = 5
MAX_WHITNEY_MODULE_N: Final[int] = 5

# Output formats accepted by the command line
OUTPUT_FORMATS: Final[tuple[str, ...]] = ("csv", "json", "dot")

# Representations understood by convert()
REPRESENTATIONS: Final[tuple[str, ...]] = ("triple", "pair", "word", "tree")


class GuardExceededError(ValueError):
    """Raised when a size parameter exceeds its desk-scale guard."""

    pass


def check_guard(name: str, value: int, limit: int) -> None:
    """Reject a size parameter above its guard.

    Args:
        name: Parameter name used in the error message
        value: Requested size
        limit: Largest accepted size

    Raises:
        GuardExceededError: If value > limit
    """
    if value > limit:
        raise GuardExceededError(f"{name}={value} exceeds the guard {name} <= {limit}")


def setup_logging(level: int = logging.INFO) -> logging.Logger:
    """Configure and return the library logger.

    Args:
        level: Logging level (default: INFO)

    Returns:
        Configured logger instance
    """
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    return logger
