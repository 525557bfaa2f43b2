"""Short rational generating functions and their exact evaluation at z = 1.

A generating function here is a sum of terms eps * z^v / prod_j (1 - z^(u_j)).
Substituting z_i -> e^(tau * c_i) with a direction c that avoids every
denominator vector (c . u_j != 0) turns each term into
e^(p*tau) * prod_j 1/(1 - e^(q_j*tau)) with p = <c, v> and q_j = <c, u_j>.
The identity 1/(1 - e^s) = -(1/s) * sum_k B_k s^k / k! (Bernoulli numbers,
B_1 = -1/2) converts the d-fold pole at tau = 0 into polynomial series
arithmetic: the constant term of the whole Laurent expansion is
((-1)^d / prod_j q_j) * [tau^d](E * T_1 * ... * T_d), with every series
truncated at degree d.  Summing over terms gives the number of lattice
points of the encoded polytope, a value independent of the chosen c.

Fixture builders supply hand-checkable generating functions (interval,
cube, simplex) whose vertex cones are unimodular, so each vertex
contributes exactly one term.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import IO, Optional, Sequence, Union

from .core import AvoidanceInstance, Constraint, dot
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InvalidAvoidanceVector,
    NonIntegerTotal,
    ParseError,
    ZeroDenominatorVector,
)
from .solver import solve

Source = Union[bytes, str, IO[bytes], IO[str]]


@dataclass(frozen=True)
class GenFunTerm:
    """One summand eps * z^v / prod_j (1 - z^(u_j))."""

    epsilon: int
    v: tuple[int, ...]
    us: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for u in self.us:
            if not any(u):
                raise ValueError("denominator exponent vectors must be nonzero")


@dataclass(frozen=True)
class GenFun:
    """A dimension plus terms; all terms share the denominator count."""

    n: int
    terms: tuple[GenFunTerm, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be positive")
        counts = set()
        for t in self.terms:
            if len(t.v) != self.n or any(len(u) != self.n for u in t.us):
                raise DimensionMismatch("term vectors must have the shared dimension")
            counts.add(len(t.us))
        if len(counts) > 1:
            raise ValueError("terms must share one denominator count")


@dataclass(frozen=True)
class TruncatedSeries:
    """Polynomial in tau modulo tau^(order+1), with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def exp_linear(cls, c: int, order: int) -> "TruncatedSeries":
        """e^(c*tau) truncated: coefficients c^k / k!."""
        return cls(tuple(Fraction(c**k, factorial(k)) for k in range(order + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("series orders differ")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return TruncatedSeries(tuple(out))


# ---------------------------------------------------------------------------
# Bernoulli numbers, memoized
# ---------------------------------------------------------------------------

_bernoulli_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli_numbers(N: int) -> tuple[Fraction, ...]:
    """B_0..B_N with B_1 = -1/2, from sum_{j<=k} C(k+1,j) B_j = 0."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if len(_bernoulli) <= N:
        with _bernoulli_lock:
            while len(_bernoulli) <= N:
                k = len(_bernoulli)
                acc = sum(comb(k + 1, j) * _bernoulli[j] for j in range(k))
                _bernoulli.append(Fraction(-acc, k + 1))
    return tuple(_bernoulli[: N + 1])


def _pole_factor(q: int, order: int) -> TruncatedSeries:
    """T(tau) = sum_k B_k (q*tau)^k / k!, so 1/(1 - e^(q*tau)) = -T/(q*tau)."""
    bern = bernoulli_numbers(order)
    return TruncatedSeries(
        tuple(bern[k] * Fraction(q**k, factorial(k)) for k in range(order + 1))
    )


def evaluate_term(p: int, qs: Sequence[int]) -> Fraction:
    """Constant Laurent coefficient of e^(p*tau) * prod_j 1/(1 - e^(q_j*tau))."""
    d = len(qs)
    for q in qs:
        if q == 0:
            raise ZeroDenominatorVector("denominator exponent evaluated to zero")
    series = TruncatedSeries.exp_linear(p, d)
    for q in qs:
        series = series * _pole_factor(q, d)
    sign = -1 if d % 2 else 1
    return Fraction(sign, prod(qs, start=1)) * series.coeffs[d]


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def avoidance_set(f: GenFun) -> AvoidanceInstance:
    """Homogeneous instance whose hyperplanes are the denominator vectors.

    Duplicates are kept as given; a repeated vector only loosens the norm
    bound of the solver, never the correctness of the count.
    """
    constraints = tuple(
        Constraint(u, 0) for term in f.terms for u in term.us
    )
    return AvoidanceInstance(f.n, constraints)


def count_via_genfun(f: GenFun, c: Optional[Sequence[int]] = None) -> int:
    """Number of lattice points encoded by f, via substitution along c.

    When c is omitted the solver picks a small valid direction from the
    avoidance instance of the denominator vectors.
    """
    if c is None:
        direction = solve(avoidance_set(f)).y
    else:
        direction = tuple(c)
        if len(direction) != f.n:
            raise DimensionMismatch(
                f"direction has length {len(direction)}, expected {f.n}"
            )
        for term in f.terms:
            for u in term.us:
                if dot(direction, u) == 0:
                    raise InvalidAvoidanceVector(
                        f"direction {list(direction)} hits denominator vector {list(u)}"
                    )
    total = Fraction(0)
    for term in f.terms:
        p = dot(direction, term.v)
        qs = [dot(direction, u) for u in term.us]
        total += term.epsilon * evaluate_term(p, qs)
    if total.denominator != 1 or total < 0:
        raise NonIntegerTotal(
            f"term sum {total} is not a nonnegative integer; "
            "the input is not a generating function of a finite set"
        )
    return int(total)


# ---------------------------------------------------------------------------
# fixtures with unimodular vertex cones
# ---------------------------------------------------------------------------


def _unit(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    a = [0] * n
    a[i] = sign
    return tuple(a)


def fixture_interval(N: int) -> GenFun:
    """The segment [0, N] on the line: 1/(1-z) + z^N/(1-z^{-1})."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    terms = (
        GenFunTerm(1, (0,), ((1,),)),
        GenFunTerm(1, (N,), ((-1,),)),
    )
    return GenFun(1, terms)


def fixture_cube(n: int) -> GenFun:
    """The unit cube [0,1]^n: one term per vertex, rays point inward."""
    if not 1 <= n <= 20:
        raise ValueError("cube fixture supports 1 <= n <= 20")
    terms = []
    for bits in range(2**n):
        w = tuple((bits >> i) & 1 for i in range(n))
        us = tuple(_unit(n, i, -1 if w[i] else 1) for i in range(n))
        terms.append(GenFunTerm(1, w, us))
    return GenFun(n, tuple(terms))


def fixture_simplex(n: int, N: int) -> GenFun:
    """The simplex {x >= 0, sum x <= N}: vertex cones at 0 and at N*e_i."""
    if n < 1 or N < 0:
        raise ValueError("need n >= 1 and N >= 0")
    terms = [GenFunTerm(1, (0,) * n, tuple(_unit(n, i) for i in range(n)))]
    for i in range(n):
        us = [_unit(n, i, -1)]
        for j in range(n):
            if j != i:
                a = [0] * n
                a[j] = 1
                a[i] = -1
                us.append(tuple(a))
        terms.append(GenFunTerm(1, _scale_unit(n, i, N), tuple(us)))
    return GenFun(n, tuple(terms))


def _scale_unit(n: int, i: int, value: int) -> tuple[int, ...]:
    a = [0] * n
    a[i] = value
    return tuple(a)


# ---------------------------------------------------------------------------
# independent enumeration oracle
# ---------------------------------------------------------------------------


def brute_count(
    inequalities: Sequence[tuple[Sequence[int], int]],
    box: Sequence[tuple[int, int]],
    budget: int = 10**8,
) -> int:
    """Count integer points of {x : a . x <= b for all (a, b)} inside the box.

    The box (inclusive per-coordinate bounds) must contain the polytope;
    enumeration visits every box point and is budget-capped.
    """
    import itertools

    ranges = [range(lo, hi + 1) for lo, hi in box]
    total = 0
    visited = 0
    for x in itertools.product(*ranges):
        visited += 1
        if visited > budget:
            raise BudgetExceeded("enumeration budget exhausted")
        if all(dot(a, x) <= b for a, b in inequalities):
            total += 1
    return total


# ---------------------------------------------------------------------------
# generating-function file format (JSON)
# ---------------------------------------------------------------------------


def load_genfun(source: Source) -> GenFun:
    """Parse {"n": ..., "terms": [{"eps": ..., "v": [...], "us": [[...], ...]}]}."""
    from .core import _as_int, _read_text

    try:
        doc = json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "terms" not in doc:
        raise ParseError('expected an object with "n" and "terms"')
    n = _as_int(doc["n"], '"n"')
    if not isinstance(doc["terms"], list):
        raise ParseError('"terms" must be an array')
    terms = []
    for pos, entry in enumerate(doc["terms"]):
        where = f"term #{pos}"
        if not isinstance(entry, dict) or not {"eps", "v", "us"} <= set(entry):
            raise ParseError(f'{where}: expected an object with "eps", "v", "us"')
        eps = _as_int(entry["eps"], f"{where} eps")
        if not isinstance(entry["v"], list) or not isinstance(entry["us"], list):
            raise ParseError(f'{where}: "v" and "us" must be arrays')
        v = tuple(_as_int(x, f"{where} v") for x in entry["v"])
        us = []
        for u in entry["us"]:
            if not isinstance(u, list):
                raise ParseError(f'{where}: "us" entries must be arrays')
            us.append(tuple(_as_int(x, f"{where} us") for x in u))
        try:
            terms.append(GenFunTerm(eps, v, tuple(us)))
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
    try:
        return GenFun(n, tuple(terms))
    except (ValueError, DimensionMismatch) as exc:
        if isinstance(exc, DimensionMismatch):
            raise
        raise ParseError(str(exc)) from None


def dumps_genfun(f: GenFun) -> str:
    doc = {
        "n": f.n,
        "terms": [
            {"eps": t.epsilon, "v": list(t.v), "us": [list(u) for u in t.us]}
            for t in f.terms
        ],
    }
    return json.dumps(doc)
