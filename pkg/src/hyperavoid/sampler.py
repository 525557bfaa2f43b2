"""Exact uniform sampling of integer points in the cross-polytope r*B1.

A point is drawn coordinate by coordinate: with d coordinates left and a
remaining radius budget s, the current coordinate takes value t with
probability count_l1_ball(d-1, s-|t|) / count_l1_ball(d, s), both signs of
t != 0 equally likely.  The draw is realized exactly by picking a uniform
integer below the big-integer ball count and walking the buckets in the
fixed order 0, +1, -1, +2, -2, ..., so the distribution is uniform with no
floating point involved.

Each sample index gets its own generator, seeded by hashing (master seed,
index); samples are therefore reproducible and independent of the order
in which indices are drawn.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .core import AvoidanceInstance, SolutionVector, check_feasible
from .oracle import count_l1_ball


@dataclass(frozen=True)
class SamplerConfig:
    """Best-of-N baseline settings; radius defaults to ceil((m+n)/2)."""

    num_samples: int = 100
    seed: int = 0
    radius_override: Optional[int] = None

    def __post_init__(self) -> None:
        if self.num_samples < 1:
            raise ValueError("num_samples must be >= 1")


def split_stream(seed: int, index: int) -> random.Random:
    """Deterministic per-index generator derived from the master seed."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def sample_l1_ball(n: int, r: int, rng: random.Random | int) -> tuple[int, ...]:
    """One point distributed exactly uniformly over {x in Z^n : norm1(x) <= r}."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if isinstance(rng, int):
        rng = random.Random(rng)
    out = [0] * n
    s = r
    total = count_l1_ball(n, s)
    for i in range(n):
        if s == 0:
            break
        d = n - i  # coordinates still to draw, including this one
        u = rng.randrange(total)
        w = count_l1_ball(d - 1, s)
        if u < w:
            t = 0
        else:
            u -= w
            v = 1
            while True:
                w = count_l1_ball(d - 1, s - v)
                if u < w:
                    t = v
                    break
                u -= w
                if u < w:
                    t = -v
                    break
                u -= w
                v += 1
        out[i] = t
        s -= abs(t)
        total = w  # count for the remaining (d-1)-dimensional ball
    return tuple(out)


def _feasibility_checker(
    inst: AvoidanceInstance, radius: int
) -> Callable[[Sequence[int]], bool]:
    """Exact feasibility test, vectorized with int64 when provably safe.

    Safe means max_row_l1 * radius and every |a0| stay below 2^62, so no
    intermediate in the integer matmul can overflow; otherwise fall back
    to the arbitrary-precision path.
    """
    if inst.m == 0:
        return lambda x: True
    max_row_l1 = max(sum(abs(v) for v in c.a) for c in inst.constraints)
    max_const = max(abs(c.a0) for c in inst.constraints)
    if max_row_l1 * max(radius, 1) < 2**62 and max_const < 2**62:
        matrix = np.array([c.a for c in inst.constraints], dtype=np.int64)
        consts = np.array([c.a0 for c in inst.constraints], dtype=np.int64)

        def fast(x: Sequence[int]) -> bool:
            xv = np.asarray(x, dtype=np.int64)
            return bool((matrix @ xv != consts).all())

        return fast
    return lambda x: check_feasible(inst, x)


def sample_baseline(
    inst: AvoidanceInstance, cfg: SamplerConfig
) -> Optional[SolutionVector]:
    """Best feasible point among cfg.num_samples uniform draws, or None.

    Radius is ceil((m+n)/2) unless overridden.  Ties in the l1 norm keep
    the earliest sample index, so the result is a pure function of
    (instance, config).
    """
    if cfg.radius_override is not None:
        radius = cfg.radius_override
    else:
        radius = (inst.m + inst.n + 1) // 2
    feasible = _feasibility_checker(inst, radius)
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for index in range(cfg.num_samples):
        x = sample_l1_ball(inst.n, radius, split_stream(cfg.seed, index))
        if feasible(x):
            norm = sum(abs(v) for v in x)
            if best is None or norm < best[0]:
                best = (norm, x)
    if best is None:
        return None
    return SolutionVector(best[1], best[0])
