"""
Config - Environment Driven Settings
====================================

Settings come from the process environment, optionally seeded from a
``.env`` file found by walking up from the working directory.
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import find_dotenv, load_dotenv

from .errors import WorkbenchError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240
DEFAULT_DEGREE = 5
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class WorkbenchConfig:
    """Runtime settings for the verification report and sampling."""

    seed: int = DEFAULT_SEED
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    degree: int = DEFAULT_DEGREE
    sample_count: int = DEFAULT_SAMPLES


def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise WorkbenchError(f"{name} must be an integer, got {raw!r}")


def load_config(use_dotenv: bool = True) -> WorkbenchConfig:
    """
    Build the configuration from the environment.

    Args:
        use_dotenv: Load a ``.env`` file first, if one can be found.

    Returns:
        The resolved WorkbenchConfig.
    """
    if use_dotenv:
        load_dotenv(find_dotenv(usecwd=True))

    config = WorkbenchConfig(
        seed=_int_setting("WORKBENCH_SEED", DEFAULT_SEED),
        log_level=os.environ.get("LOG_LEVEL", "WARNING").upper(),
        log_file=os.environ.get("LOG_FILE") or None,
        degree=_int_setting("WORKBENCH_DEGREE", DEFAULT_DEGREE),
        sample_count=_int_setting("WORKBENCH_SAMPLES", DEFAULT_SAMPLES),
    )
    logger.debug(f"Loaded configuration: {config}")
    return config
