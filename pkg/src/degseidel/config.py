"""
Runtime configuration read from the environment.

Values come from os.getenv (the nearest .env is loaded at process start by
cli.run through python-dotenv). Every field has a default, so an empty
environment is valid.
"""

import logging
import os
from dataclasses import dataclass

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "latex", "markdown", "csv")


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} is below {minimum}, using {default}")
        return default
    return value


@dataclass(frozen=True)
class SuiteConfig:
    """Settings for randomized Seidel checks and default CLI output"""
    random_seed: int = 20250101
    random_sequences: int = 50
    max_numerator: int = 9
    max_denominator: int = 7
    default_format: str = "json"

    @classmethod
    def from_env(cls) -> "SuiteConfig":
        """
        Build a config from DEGSEIDEL_* environment variables.

        Invalid values are logged and replaced by the defaults.
        """
        default_format = os.getenv("DEGSEIDEL_DEFAULT_FORMAT", cls.default_format).strip().lower()
        if default_format not in OUTPUT_FORMATS:
            logger.warning(f"DEGSEIDEL_DEFAULT_FORMAT={default_format!r} is not one of {OUTPUT_FORMATS}, using json")
            default_format = cls.default_format

        return cls(
            random_seed=_int_env("DEGSEIDEL_RANDOM_SEED", cls.random_seed, 0),
            random_sequences=_int_env("DEGSEIDEL_RANDOM_SEQUENCES", cls.random_sequences, 0),
            max_numerator=_int_env("DEGSEIDEL_RANDOM_MAX_NUMERATOR", cls.max_numerator, 0),
            max_denominator=_int_env("DEGSEIDEL_RANDOM_MAX_DENOMINATOR", cls.max_denominator, 1),
            default_format=default_format,
        )
