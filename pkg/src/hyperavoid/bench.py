"""Random instance generation and the solver-vs-sampler benchmark harness.

Each (n, m) cell draws a configurable number of homogeneous random
instances, runs the deterministic solver and the best-of-N uniform
sampling baseline on every one, and aggregates norms, failures, and wall
times.  Per-instance seeds are derived by hashing (master seed, n, m,
index), so results do not depend on the order in which cells run.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from statistics import fmean
from typing import Optional

from .core import AvoidanceInstance, Constraint
from .sampler import SamplerConfig, sample_baseline
from .solver import solve


def _derive_seed(master: int, *parts: object) -> int:
    tag = ":".join(str(p) for p in parts)
    digest = hashlib.sha256(f"{master}:{tag}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_instance(n: int, m: int, entry_bound: int, seed: int) -> AvoidanceInstance:
    """Homogeneous instance with m rows of entries uniform in [-bound..bound].

    All-zero rows are resampled, so every constraint is a genuine
    hyperplane.  Deterministic for a given seed.
    """
    if n < 1 or m < 1 or entry_bound < 1:
        raise ValueError("need n, m, entry_bound >= 1")
    rng = random.Random(seed)
    values = range(-entry_bound, entry_bound + 1)
    constraints = []
    for _ in range(m):
        row = rng.choices(values, k=n)
        while not any(row):
            row = rng.choices(values, k=n)
        constraints.append(Constraint(tuple(row), 0))
    return AvoidanceInstance(n, tuple(constraints))


@dataclass(frozen=True)
class BenchConfig:
    n_values: tuple[int, ...]
    m_values: tuple[int, ...]
    entry_bound: int = 10
    instances_per_cell: int = 5
    sampler: SamplerConfig = field(default_factory=SamplerConfig)
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.n_values or not self.m_values:
            raise ValueError("n_values and m_values must be nonempty")
        if self.entry_bound < 1 or self.instances_per_cell < 1:
            raise ValueError("entry_bound and instances_per_cell must be >= 1")


@dataclass(frozen=True)
class CellReport:
    n: int
    m: int
    instances: int
    solver_avg_norm: float
    solver_max_norm: int
    bound: float
    sampler_avg_norm: Optional[float]
    sampler_failures: int
    solver_ms_avg: float
    sampler_ms_avg: float


def run_bench(cfg: BenchConfig) -> list[CellReport]:
    """One CellReport per (n, m), ordered by cell then instance index."""
    rows = []
    for n in cfg.n_values:
        for m in cfg.m_values:
            solver_norms: list[int] = []
            sampler_norms: list[int] = []
            failures = 0
            solver_ms: list[float] = []
            sampler_ms: list[float] = []
            for index in range(cfg.instances_per_cell):
                inst = random_instance(
                    n, m, cfg.entry_bound, _derive_seed(cfg.seed, "inst", n, m, index)
                )
                t0 = time.perf_counter()
                solver_norms.append(solve(inst).norm1)
                solver_ms.append((time.perf_counter() - t0) * 1000.0)

                sampler_cfg = SamplerConfig(
                    num_samples=cfg.sampler.num_samples,
                    seed=_derive_seed(cfg.seed, "sample", n, m, index),
                    radius_override=cfg.sampler.radius_override,
                )
                t0 = time.perf_counter()
                best = sample_baseline(inst, sampler_cfg)
                sampler_ms.append((time.perf_counter() - t0) * 1000.0)
                if best is None:
                    failures += 1
                else:
                    sampler_norms.append(best.norm1)
            rows.append(
                CellReport(
                    n=n,
                    m=m,
                    instances=cfg.instances_per_cell,
                    solver_avg_norm=fmean(solver_norms),
                    solver_max_norm=max(solver_norms),
                    bound=(m + n) / 2,
                    sampler_avg_norm=fmean(sampler_norms) if sampler_norms else None,
                    sampler_failures=failures,
                    solver_ms_avg=fmean(solver_ms),
                    sampler_ms_avg=fmean(sampler_ms),
                )
            )
    return rows
