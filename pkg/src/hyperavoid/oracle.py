"""Exponential-time exact solvers used as ground truth in tests.

These enumerate integer points in shells of growing norm, so they are
only meant for tiny instances; a work budget (counted in feasibility
evaluations) guards against runaway searches.

Norm comparisons are exact for every supported norm.  For l1 and linf the
values are integers.  For lp with rational p = num/den the value
sum_i |x_i|^(num/den) is a sum of den-th roots of integers; it is kept in
the normalized radical form sum_v c_v * v^(1/den) with den-th-power-free
radicands v, which are linearly independent over Q, so equality is a
structural check and strict comparisons resolve by interval refinement
with exact integer roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .core import AvoidanceInstance, SolutionVector, check_feasible
from .errors import BudgetExceeded, InternalInvariantViolation

DEFAULT_BUDGET = 10**8


# ---------------------------------------------------------------------------
# norm kinds and exact norm values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormKind:
    """Which norm the exact solver minimizes: l1, linf, or lp with rational p >= 1."""

    tag: str
    p: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.tag not in ("l1", "linf", "lp"):
            raise ValueError(f"unknown norm tag {self.tag!r}")
        if self.tag == "lp":
            if self.p is None or self.p < 1:
                raise ValueError("lp norm needs a rational p >= 1")
        elif self.p is not None:
            raise ValueError(f"{self.tag} takes no parameter")

    @classmethod
    def l1(cls) -> "NormKind":
        return cls("l1")

    @classmethod
    def linf(cls) -> "NormKind":
        return cls("linf")

    @classmethod
    def lp(cls, p: Fraction | int) -> "NormKind":
        return cls("lp", Fraction(p))

    def __str__(self) -> str:
        if self.tag == "lp":
            return f"lp:{self.p.numerator}/{self.p.denominator}"
        return self.tag


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0 via integer Newton iteration."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return 0
    if k == 1:
        return x
    r = 1 << ((x.bit_length() - 1) // k + 1)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > x:
        r -= 1
    return r


@lru_cache(maxsize=None)
def _factor(v: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of a small positive integer by trial division."""
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            e = 0
            while v % d == 0:
                v //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if v > 1:
        out.append((v, 1))
    return tuple(out)


class RadicalSum:
    """Exact nonnegative value sum_v c_v * v^(1/den) in normalized form.

    Radicands v are den-th-power-free positive integers and coefficients
    c_v are positive rationals.  Two sums are equal iff their normalized
    parts coincide; otherwise their difference is nonzero and interval
    refinement with exact integer den-th roots decides the order.
    """

    __slots__ = ("den", "parts")

    def __init__(self, den: int, parts: dict[int, Fraction]):
        self.den = den
        self.parts = {v: c for v, c in sorted(parts.items()) if c}

    @classmethod
    def zero(cls, den: int) -> "RadicalSum":
        return cls(den, {})

    @classmethod
    def of_power(cls, base: int, p: Fraction) -> "RadicalSum":
        """The value base^p for an integer base >= 0."""
        if base < 0:
            raise ValueError("base must be nonnegative")
        den = p.denominator
        if base == 0:
            return cls.zero(den)
        outside = 1
        inside = 1
        for prime, exp in _factor(base):
            total = exp * p.numerator
            outside *= prime ** (total // den)
            inside *= prime ** (total % den)
        return cls(den, {inside: Fraction(outside)})

    @classmethod
    def of_vector(cls, x: Sequence[int], p: Fraction) -> "RadicalSum":
        """The value sum_i |x_i|^p."""
        total = cls.zero(p.denominator)
        for v in x:
            if v:
                total = total + cls.of_power(abs(v), p)
        return total

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        if self.den != other.den:
            raise ValueError("mixed root orders")
        parts = dict(self.parts)
        for v, c in other.parts.items():
            parts[v] = parts.get(v, Fraction(0)) + c
        return RadicalSum(self.den, parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self.den == other.den and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.den, tuple(self.parts.items())))

    def as_rational(self) -> Optional[Fraction]:
        """The exact rational value, or None when a true radical remains."""
        if not self.parts:
            return Fraction(0)
        if set(self.parts) == {1}:
            return self.parts[1]
        return None

    def _bounds(self, bits: int) -> tuple[Fraction, Fraction]:
        lo = Fraction(0)
        hi = Fraction(0)
        scale = 1 << bits
        for v, c in self.parts.items():
            root = _iroot(v << (bits * self.den), self.den)
            lo += c * Fraction(root, scale)
            hi += c * Fraction(root + 1, scale)
        return lo, hi

    def __lt__(self, other: "RadicalSum") -> bool:
        if self.den != other.den:
            raise ValueError("mixed root orders")
        if self.parts == other.parts:
            return False
        a, b = self.as_rational(), other.as_rational()
        if a is not None and b is not None:
            return a < b
        bits = 16
        while True:
            slo, shi = self._bounds(bits)
            olo, ohi = other._bounds(bits)
            if shi < olo:
                return True
            if ohi < slo:
                return False
            # Values differ, so the intervals must separate eventually.
            bits *= 2

    def __le__(self, other: "RadicalSum") -> bool:
        return self == other or self < other

    def __float__(self) -> float:
        lo, hi = self._bounds(64)
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{v}^(1/{self.den})" for v, c in self.parts.items())
        return f"RadicalSum({terms or '0'})"


def norm_value(x: Sequence[int], norm: NormKind) -> int | RadicalSum:
    """Exact, totally ordered norm value of x under the given norm kind."""
    if norm.tag == "l1":
        return sum(abs(v) for v in x)
    if norm.tag == "linf":
        return max((abs(v) for v in x), default=0)
    return RadicalSum.of_vector(x, norm.p)


# ---------------------------------------------------------------------------
# l1 ball counting
# ---------------------------------------------------------------------------

_COUNT_CACHE: dict[tuple[int, int], int] = {}


def count_l1_ball(n: int, r: int) -> int:
    """|{x in Z^n : norm1(x) <= r}| = sum_k 2^k C(n,k) C(r,k), exactly.

    Cached; when the three Delannoy-recurrence neighbours are already
    cached the value is a single addition, otherwise the closed form is
    evaluated with an incrementally updated term.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    key = (n, r)
    cached = _COUNT_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 0 or r == 0:
        value = 1
    else:
        a = _COUNT_CACHE.get((n - 1, r))
        b = _COUNT_CACHE.get((n, r - 1))
        c = _COUNT_CACHE.get((n - 1, r - 1))
        if a is not None and b is not None and c is not None:
            value = a + b + c
        else:
            value = 1
            term = 1
            for k in range(1, min(n, r) + 1):
                # term_k = 2^k C(n,k) C(r,k); the ratio keeps it integral.
                term = term * 2 * (n - k + 1) * (r - k + 1) // (k * k)
                value += term
    _COUNT_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# shell enumeration
# ---------------------------------------------------------------------------


def _l1_sphere(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All x in Z^n with norm1(x) == r, in lexicographic order."""
    if n == 1:
        if r == 0:
            yield (0,)
        else:
            yield (-r,)
            yield (r,)
        return
    for v in range(-r, r + 1):
        for rest in _l1_sphere(n - 1, r - abs(v)):
            yield (v,) + rest


def _linf_shell(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All x in Z^n with max|x_i| == r, in lexicographic order."""
    if r == 0:
        yield (0,) * n
        return
    for x in itertools.product(range(-r, r + 1), repeat=n):
        if max(abs(v) for v in x) == r:
            yield x


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self) -> None:
        if self.left <= 0:
            raise BudgetExceeded("feasibility-evaluation budget exhausted")
        self.left -= 1


# ---------------------------------------------------------------------------
# exact solvers
# ---------------------------------------------------------------------------


def exact_solve(
    inst: AvoidanceInstance, norm: NormKind, budget: int = DEFAULT_BUDGET
) -> SolutionVector:
    """Globally optimal feasible vector under the chosen norm, by shell search.

    For l1 and linf the first feasible point of the first nonempty shell is
    optimal.  For lp the search walks linf shells, keeps the best value
    seen, and stops once the shell radius alone already outweighs it.
    A feasible point with norm1 <= (m+n)/2 always exists, which bounds the
    search; only the work budget can interrupt it.
    """
    meter = _Budget(budget)
    cap = (inst.m + inst.n) // 2

    if norm.tag in ("l1", "linf"):
        shells = _l1_sphere if norm.tag == "l1" else _linf_shell
        for r in range(cap + 1):
            for x in shells(inst.n, r):
                meter.spend()
                if check_feasible(inst, x):
                    return SolutionVector.from_vector(x)
        raise InternalInvariantViolation("no feasible point within the norm cap")

    best: Optional[tuple[RadicalSum, tuple[int, ...]]] = None
    r = 0
    while True:
        if best is not None and not (RadicalSum.of_power(r, norm.p) < best[0]):
            return SolutionVector.from_vector(best[1])
        for x in _linf_shell(inst.n, r):
            meter.spend()
            if check_feasible(inst, x):
                value = RadicalSum.of_vector(x, norm.p)
                if best is None or value < best[0]:
                    best = (value, x)
        r += 1
        if best is None and r > cap:
            raise InternalInvariantViolation("no feasible point within the norm cap")


def _extension_exists(
    inst: AvoidanceInstance, prefix: Sequence[int], span: int, meter: _Budget
) -> bool:
    """Exhaustively test whether the prefix extends to a feasible point.

    Remaining coordinates range over [-span..span]; any extendable prefix
    has an extension in that box, so the search is conclusive.
    """
    rest = inst.n - len(prefix)
    if rest == 0:
        meter.spend()
        return check_feasible(inst, prefix)
    base = list(prefix)
    for ext in itertools.product(range(-span, span + 1), repeat=rest):
        meter.spend()
        if check_feasible(inst, base + list(ext)):
            return True
    return False


def exact_lex_solve(inst: AvoidanceInstance, budget: int = DEFAULT_BUDGET) -> SolutionVector:
    """Greedy per-coordinate optimum, certified by exhaustive extension search.

    Minimizes |y_1|, then |y_2| given the fixed prefix, and so on, with the
    same 0, 1, -1, ... tie-break as the solver; each prefix is accepted
    only if brute-force enumeration finds a feasible completion.  This is
    an independent check of the solver's greedy minimality, deliberately
    not sharing its constraint bookkeeping.
    """
    meter = _Budget(budget)
    span = (inst.m + 1) // 2
    prefix: list[int] = []
    for _ in range(inst.n):
        found = False
        for cand in itertools.chain(
            (0,), (s * v for v in range(1, span + 1) for s in (1, -1))
        ):
            if _extension_exists(inst, prefix + [cand], span, meter):
                prefix.append(cand)
                found = True
                break
        if not found:
            raise InternalInvariantViolation("no extendable candidate within the scan range")
    return SolutionVector.from_vector(prefix)
