"""Defaults from the environment: .env, else .env.default, in the repository root."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Optional

import dotenv

from .errors import InputError

logger = logging.getLogger(__name__)

SCRIPT_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

FORMATS = ("json", "csv")


@dataclass(frozen=True)
class Settings:
    hbar: float = 1.0
    seed: int = 0
    output_format: str = "json"
    log_level: Optional[str] = None


def load_env(root: str = SCRIPT_DIR) -> Optional[str]:
    """Load .env (or .env.default) without overriding variables already set."""
    path = os.path.join(root, ".env")
    if not os.path.exists(path):
        path = os.path.join(root, ".env.default")
    if not os.path.exists(path):
        return None
    dotenv.load_dotenv(path, override=False)
    logger.debug(f"loaded settings from {path}")
    return path


def load_settings(root: str = SCRIPT_DIR) -> Settings:
    load_env(root)
    try:
        hbar = float(os.environ.get("QANGLE_HBAR", "1.0"))
        seed = int(os.environ.get("QANGLE_SEED", "0"))
    except ValueError as e:
        raise InputError(f"bad QANGLE_HBAR / QANGLE_SEED: {e}") from e
    if not hbar > 0:
        raise InputError(f"QANGLE_HBAR must be positive, got {hbar}")
    fmt = os.environ.get("QANGLE_FORMAT", "json").strip().lower()
    if fmt not in FORMATS:
        raise InputError(f"QANGLE_FORMAT must be one of {', '.join(FORMATS)}, got {fmt!r}")
    level = os.environ.get("QANGLE_LOG_LEVEL") or None
    return Settings(hbar=hbar, seed=seed, output_format=fmt, log_level=level.upper() if level else None)
