"""Runtime size caps, overridable per call site, CLI flag, or environment.

Defaults keep everything at desk scale.  Environment variables use the
REPSTAB_ prefix (REPSTAB_MAX_N, REPSTAB_MAX_DEGREE, REPSTAB_WINDOW,
REPSTAB_THREADS, REPSTAB_PLETHYSM_CAP).
"""

import os
from dataclasses import dataclass


def _env_int(name, default):
    raw = os.environ.get("REPSTAB_" + name)
    if raw is None:
        return default
    return int(raw)


@dataclass
class Limits:
    # character tables for S_n and W_n are cached whole; this bounds n
    max_char_n: int = 12
    # plethysm refuses degrees |lambda|*|mu| above this
    plethysm_degree_cap: int = 12
    # Orlik-Solomon slices
    braid_max_n: int = 9
    braid_max_degree: int = 4
    # graded Lie algebra homology
    lie_max_n: int = 5
    lie_max_step: int = 3
    lie_max_grading: int = 9
    lie_max_homdegree: int = 5
    # stability detector
    window: int = 3
    threads: int = 1

    @classmethod
    def from_env(cls):
        base = cls()
        return cls(
            max_char_n=_env_int("MAX_N", base.max_char_n),
            plethysm_degree_cap=_env_int("PLETHYSM_CAP", base.plethysm_degree_cap),
            braid_max_n=_env_int("MAX_N", base.braid_max_n),
            braid_max_degree=_env_int("MAX_DEGREE", base.braid_max_degree),
            lie_max_n=base.lie_max_n,
            lie_max_step=base.lie_max_step,
            lie_max_grading=_env_int("MAX_GRADING", base.lie_max_grading),
            lie_max_homdegree=base.lie_max_homdegree,
            window=_env_int("WINDOW", base.window),
            threads=_env_int("THREADS", base.threads),
        )


# Mutable module-level limits; the CLI swaps in its own instance.
LIMITS = Limits.from_env()
