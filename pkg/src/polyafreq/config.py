"""Run-time configuration dataclasses."""

from __future__ import annotations

import dataclasses
import os

#: Environment variable overriding both enumeration guards at once.
MAX_ENUM_ENV = "POLYAFREQ_MAX_ENUM"


@dataclasses.dataclass(frozen=True)
class EnumGuards:
    """Size limits for brute-force enumeration oracles.

    sn_max bounds symmetric-group enumerations (n! cases), bn_max signed
    ones (2^n n! cases).  The MAX_ENUM_ENV variable overrides both.
    """

    sn_max: int = 9
    bn_max: int = 8

    @classmethod
    def from_env(cls) -> "EnumGuards":
        raw = os.environ.get(MAX_ENUM_ENV)
        if raw is None:
            return cls()
        bound = int(raw)
        return cls(sn_max=bound, bn_max=bound)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Common knobs for verification suite runs."""

    max_n: int | None = None
    seed: int = 0
    jobs: int = 1
