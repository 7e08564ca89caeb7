"""Run-time configuration shared by enumeration-heavy operations."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_CAP = 2_000_000
CAP_ENV_VAR = "TAMARI_B_CAP"

# When set, construction-time cross-checks recompute key objects a second,
# independent way (inversion order by word conjugation, iota by the algebraic
# product) and assert agreement.
debug_crosschecks = False


def set_debug_crosschecks(value: bool):
    global debug_crosschecks
    debug_crosschecks = bool(value)


@dataclass
class Config:
    enumeration_cap: int = DEFAULT_CAP
    threads: int = 1
    output_format: str = "text"
    debug_crosschecks: bool = False

    def __post_init__(self):
        if self.enumeration_cap < 1:
            raise ValueError("enumeration cap must be at least 1")
        if self.threads < 1:
            raise ValueError("thread count must be at least 1")


def resolve_cap(cap: int | None = None) -> int:
    """Explicit cap if given, else the environment override, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_CAP


def resolve_threads(threads: int | str | None) -> int:
    if threads in (None, "auto"):
        return os.cpu_count() or 1
    value = int(threads)
    if value < 1:
        raise ValueError("thread count must be at least 1")
    return value
