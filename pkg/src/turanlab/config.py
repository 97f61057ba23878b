"""Run configuration: budgets, workers, output format, seed."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from typing import Literal, Mapping

ENV_PREFIX = "TURANLAB_BUDGET_"


@dataclass
class Budgets:
    """Largest input each exact operation will accept."""

    chromatic_n: int = 32
    turan_n: int = 0  # 0: pick 10 for patterns on <= 3 vertices, else 9
    enumeration_n: int = 10
    partition_n: int = 20  # exact find_k_good and r_partite_distance
    excess_n: int = 20
    scan_vertices: int = 12
    gadget_k: int = 8
    family_k: int = 4
    oracle: int = 3

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 0 or (value == 0 and f.name != "turan_n"):
                raise ValueError(f"budget {f.name} must be positive, got {value}")

    def override(self, items: Mapping[str, str]) -> None:
        names = {f.name for f in fields(self)}
        for key, raw in items.items():
            if key not in names:
                raise ValueError(f"unknown budget {key!r}; known: {sorted(names)}")
            setattr(self, key, int(raw))
        self.validate()


@dataclass
class RunConfig:
    budgets: Budgets = field(default_factory=Budgets)
    workers: int = 1
    output_format: Literal["json", "csv", "text"] = "json"
    seed: int = 0
    checkpoint: str | None = None
    resume: str | None = None
    deterministic: bool = False

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> RunConfig:
        env = os.environ if environ is None else environ
        cfg = cls()
        overrides = {k[len(ENV_PREFIX):].lower(): v for k, v in env.items() if k.startswith(ENV_PREFIX)}
        cfg.budgets.override(overrides)
        if "TURANLAB_WORKERS" in env:
            cfg.workers = int(env["TURANLAB_WORKERS"])
        if "TURANLAB_SEED" in env:
            cfg.seed = int(env["TURANLAB_SEED"])
        return cfg

    def as_dict(self) -> dict:
        return {"budgets": dict(self.budgets.__dict__), "workers": self.workers, "seed": self.seed,
                "format": self.output_format}
