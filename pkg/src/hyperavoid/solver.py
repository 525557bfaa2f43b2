"""Deterministic coordinate-elimination solver for hyperplane avoidance.

The solver fixes y_1, then y_2, and so on.  Each live constraint keeps the
not-yet-substituted part of its support as a list of (index, coefficient)
pairs in ascending index order, plus the constant that remains after the
substitutions so far.  At step k the only constraints that can forbid a
value of x_k are those whose support has shrunk to the single pair
(k, a_k): such a constraint blocks exactly the integer root constant / a_k
when the division is exact, and nothing otherwise.  The step scans
candidates 0, 1, -1, 2, -2, ... and takes the first unblocked one, so
|y_k| is the smallest possible given the already-fixed prefix and ties
break toward the nonnegative value.

After y_k is chosen it is substituted into every constraint whose support
starts at index k; a constraint whose support empties is retired, and its
residual constant is nonzero by the choice of y_k (asserted, since a zero
residual would mean the maintained product polynomial vanished).

For an instance with m constraints the result satisfies
2 * norm1(y) <= m + n, the blocked-set scan performs at most m + 2n
candidate probes, and the total work is O(n * m).
"""

from __future__ import annotations

from typing import Iterator

from .core import AvoidanceInstance, SolutionVector
from .errors import InternalInvariantViolation

__all__ = [
    "ActiveConstraint",
    "SolverState",
    "init_state",
    "blocked_values",
    "eliminate_step",
    "solve",
    "solve_with_state",
]


class ActiveConstraint:
    """One live constraint: remaining support entries plus the running constant."""

    __slots__ = ("entries", "pos", "constant")

    def __init__(self, entries: list[tuple[int, int]], constant: int):
        self.entries = entries
        self.pos = 0
        self.constant = constant

    @property
    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.entries[self.pos :])

    def __repr__(self) -> str:
        return f"ActiveConstraint(support={list(self.support)}, constant={self.constant})"


class SolverState:
    """Mutable elimination state; step counts 1..n, prefix holds y_1..y_{step-1}."""

    __slots__ = ("n", "m", "step", "buckets", "prefix", "candidate_checks", "active_count")

    def __init__(self, n: int, m: int, buckets: list[list[ActiveConstraint]]):
        self.n = n
        self.m = m
        self.step = 1
        self.buckets = buckets
        self.prefix: list[int] = []
        self.candidate_checks = 0
        self.active_count = m

    @property
    def done(self) -> bool:
        return self.step > self.n


def init_state(inst: AvoidanceInstance) -> SolverState:
    """Build support lists and bucket each constraint under its first index."""
    buckets: list[list[ActiveConstraint]] = [[] for _ in range(inst.n)]
    for c in inst.constraints:
        entries = [(i, coeff) for i, coeff in enumerate(c.a) if coeff]
        active = ActiveConstraint(entries, c.a0)
        buckets[entries[0][0]].append(active)
    return SolverState(inst.n, inst.m, buckets)


def blocked_values(state: SolverState) -> set[int]:
    """Values of x_k excluded at the current step.

    Only a constraint whose support is exactly {(k, a_k)} can exclude a
    value, and then only its exact integer root; a non-integral root
    blocks nothing.
    """
    idx = state.step - 1
    blocked: set[int] = set()
    for c in state.buckets[idx]:
        if c.pos == len(c.entries) - 1:
            coeff = c.entries[c.pos][1]
            if c.constant % coeff == 0:
                blocked.add(c.constant // coeff)
    return blocked


def _candidates() -> Iterator[int]:
    yield 0
    v = 1
    while True:
        yield v
        yield -v
        v += 1


def eliminate_step(state: SolverState) -> SolverState:
    """Fix y_k, substitute it, and advance to step k+1 (mutates state)."""
    idx = state.step - 1
    blocked = blocked_values(state)

    y = 0
    for cand in _candidates():
        state.candidate_checks += 1
        if cand not in blocked:
            y = cand
            break

    bucket = state.buckets[idx]
    state.buckets[idx] = []
    for c in bucket:
        i, coeff = c.entries[c.pos]
        # Every constraint in this bucket has first support index k.
        c.constant -= coeff * y
        c.pos += 1
        if c.pos == len(c.entries):
            if c.constant == 0:
                raise InternalInvariantViolation(
                    f"retired constraint at step {state.step} has zero residual"
                )
            state.active_count -= 1
        else:
            state.buckets[c.entries[c.pos][0]].append(c)

    state.prefix.append(y)
    state.step += 1
    return state


def solve_with_state(inst: AvoidanceInstance) -> tuple[SolutionVector, SolverState]:
    """Run the full elimination and return the solution plus final state."""
    state = init_state(inst)
    while not state.done:
        eliminate_step(state)
    return SolutionVector.from_vector(state.prefix), state


def solve(inst: AvoidanceInstance) -> SolutionVector:
    """Feasible vector with 2 * norm1 <= m + n, minimal |y_k| greedily in k."""
    solution, _ = solve_with_state(inst)
    return solution
