"""Run configuration shared by the library and the CLI."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, asdict


DEFAULT_SEED = 20240901


def _env_seed() -> int:
    raw = os.environ.get("REJECTIA_SEED", "")
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SEED


@dataclass(frozen=True)
class JobConfig:
    """Caps, seed and output options for a computation run.

    The seed is recorded in every emitted report so identical inputs
    reproduce byte-identical output.
    """

    field_char: int = 101
    cap_resolution: int = 64
    cap_resdim: int = 32
    cap_paths: int = 10_000
    qh_bound: int = 8
    seed: int = field(default_factory=_env_seed)
    output_format: str = "json"  # json | text

    def __post_init__(self):
        for name in ("cap_resolution", "cap_resdim", "cap_paths", "qh_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("json", "text"):
            raise ValueError("output_format must be 'json' or 'text'")

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT_CONFIG = JobConfig()
