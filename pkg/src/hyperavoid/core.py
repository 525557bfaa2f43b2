"""Domain types and serialization for hyperplane-avoidance instances.

An instance over Z^n is a finite list of constraints (a, a0), each one
excluding the hyperplane a . x = a0.  A vector x is feasible when every
exact dot product a . x differs from a0.  All coefficients, constants and
solution entries are Python integers, so no arithmetic here can overflow.

Every type in this module is immutable after construction and safe to
share read-only across concurrent workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence, Union

from .errors import DimensionMismatch, InfeasibleConstant, ParseError

# JSON encodes integers beyond the signed 64-bit range as decimal strings.
_I64_MIN = -(2**63)
_I64_MAX = 2**63 - 1

Source = Union[bytes, str, IO[bytes], IO[str]]


def dot(a: Sequence[int], x: Sequence[int]) -> int:
    """Exact dot product of two equal-length integer vectors."""
    return sum(ai * xi for ai, xi in zip(a, x))


@dataclass(frozen=True)
class Constraint:
    """One excluded hyperplane a . x = a0."""

    a: tuple[int, ...]
    a0: int

    def __post_init__(self) -> None:
        if not any(self.a):
            raise ValueError("constraint coefficient vector must be nonzero")


@dataclass(frozen=True)
class AvoidanceInstance:
    """A dimension n plus an ordered list of hyperplanes to avoid.

    ``dropped`` counts tautological constraints (a = 0, a0 != 0) that were
    discarded while loading; it is bookkeeping only and does not take part
    in equality or serialization.
    """

    n: int
    constraints: tuple[Constraint, ...]
    dropped: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        for c in self.constraints:
            if len(c.a) != self.n:
                raise DimensionMismatch(
                    f"constraint has {len(c.a)} coefficients, expected {self.n}"
                )

    @property
    def m(self) -> int:
        return len(self.constraints)

    @property
    def homogeneous(self) -> bool:
        return all(c.a0 == 0 for c in self.constraints)


@dataclass(frozen=True)
class SolutionVector:
    """An integer vector with its cached l1 norm."""

    y: tuple[int, ...]
    norm1: int

    def __post_init__(self) -> None:
        if self.norm1 != sum(abs(v) for v in self.y):
            raise ValueError("norm1 does not match the vector")

    @classmethod
    def from_vector(cls, y: Iterable[int]) -> "SolutionVector":
        yt = tuple(y)
        return cls(yt, sum(abs(v) for v in yt))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with 0-based vertices and a deduplicated edge set."""

    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range or not normalized")

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(num_vertices, norm)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges in sorted order, for deterministic iteration."""
        return sorted(self.edges)


def check_feasible(inst: AvoidanceInstance, x: Sequence[int]) -> bool:
    """True iff every exact dot product a . x differs from its a0."""
    if len(x) != inst.n:
        raise DimensionMismatch(f"vector has length {len(x)}, expected {inst.n}")
    return all(dot(c.a, x) != c.a0 for c in inst.constraints)


def tight_family(n: int, k: int) -> AvoidanceInstance:
    """The instance {x_i != j : i in [1..n], j in [-k..k]} with m = (2k+1)n.

    Every feasible vector needs |x_i| >= k+1 in each coordinate, so its l1
    norm is at least (k+1)*n = (m+n)/2, which makes the general norm
    guarantee tight.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    constraints = []
    for i in range(n):
        a = [0] * n
        a[i] = 1
        unit = tuple(a)
        for j in range(-k, k + 1):
            constraints.append(Constraint(unit, j))
    return AvoidanceInstance(n, tuple(constraints))


# ---------------------------------------------------------------------------
# instance file format (JSON)
# ---------------------------------------------------------------------------


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _as_int(value: object, where: str) -> int:
    # JSON true/false would pass an isinstance(int) check; reject explicitly.
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ParseError(f"{where}: {value!r} is not a decimal integer") from None
    raise ParseError(f"{where}: expected an integer or decimal string, got {type(value).__name__}")


def _encode_int(value: int) -> int | str:
    if _I64_MIN <= value <= _I64_MAX:
        return value
    return str(value)


def load_instance(source: Source) -> AvoidanceInstance:
    """Parse an instance from JSON bytes, text, or a readable stream.

    Constraints with a = 0 and a0 != 0 are tautologies and get dropped
    (counted in ``dropped``); a = 0 with a0 = 0 is unsatisfiable and raises
    InfeasibleConstant.  Integers may appear either as JSON numbers or as
    decimal strings.
    """
    text = _read_text(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if "n" not in doc or "constraints" not in doc:
        raise ParseError('missing "n" or "constraints"')
    n = _as_int(doc["n"], '"n"')
    if n < 1:
        raise ParseError(f'"n" must be positive, got {n}')
    raw = doc["constraints"]
    if not isinstance(raw, list):
        raise ParseError('"constraints" must be an array')

    constraints: list[Constraint] = []
    dropped = 0
    for pos, entry in enumerate(raw):
        where = f"constraint #{pos}"
        if not isinstance(entry, dict) or "a" not in entry or "a0" not in entry:
            raise ParseError(f'{where}: expected an object with "a" and "a0"')
        if not isinstance(entry["a"], list):
            raise ParseError(f'{where}: "a" must be an array')
        a = tuple(_as_int(v, f'{where} "a"') for v in entry["a"])
        a0 = _as_int(entry["a0"], f'{where} "a0"')
        if len(a) != n:
            raise DimensionMismatch(f"{where}: vector has length {len(a)}, expected {n}")
        if not any(a):
            if a0 == 0:
                raise InfeasibleConstant(f"{where}: 0 != 0 has no solutions")
            dropped += 1
            continue
        constraints.append(Constraint(a, a0))
    return AvoidanceInstance(n, tuple(constraints), dropped=dropped)


def dumps_instance(inst: AvoidanceInstance) -> str:
    """Serialize an instance to the JSON instance format."""
    doc = {
        "n": inst.n,
        "constraints": [
            {"a": [_encode_int(v) for v in c.a], "a0": _encode_int(c.a0)}
            for c in inst.constraints
        ],
    }
    return json.dumps(doc)


def dump_instance(inst: AvoidanceInstance, fp: IO[str]) -> None:
    fp.write(dumps_instance(inst))


# ---------------------------------------------------------------------------
# graph file format: "p <num_vertices> <num_edges>", then "e <u> <v>" lines
# ---------------------------------------------------------------------------


def load_graph(source: Source) -> Graph:
    """Parse a graph file; 'c'-prefixed and blank lines are ignored."""
    text = _read_text(source)
    num_vertices = -1
    declared_edges = -1
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        parts = stripped.split()
        if parts[0] == "p":
            if num_vertices != -1:
                raise ParseError(f"line {lineno}: duplicate 'p' line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'p <vertices> <edges>'")
            num_vertices = _as_int(parts[1], f"line {lineno}")
            declared_edges = _as_int(parts[2], f"line {lineno}")
            if num_vertices < 1 or declared_edges < 0:
                raise ParseError(f"line {lineno}: bad graph size")
        elif parts[0] == "e":
            if num_vertices == -1:
                raise ParseError(f"line {lineno}: 'e' before 'p'")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            u = _as_int(parts[1], f"line {lineno}")
            v = _as_int(parts[2], f"line {lineno}")
            if u == v:
                raise ParseError(f"line {lineno}: loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ParseError(f"line {lineno}: vertex out of range")
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if num_vertices == -1:
        raise ParseError("missing 'p' line")
    if len(edges) != declared_edges:
        raise ParseError(f"declared {declared_edges} edges, found {len(edges)}")
    return Graph.from_edges(num_vertices, edges)
