"""Graph encodings of the avoidance problem and their decoders.

Coloring: feasibility of {x_u - x_v != 0, x_u + x_v != 0 per edge} says
|x_u| != |x_v| across every edge, so |x| is a proper coloring and the
minimal achievable linf norm is the chromatic number minus one.

Vertex cover: feasibility of {x_u + x_v != 0 per edge} forces at least one
nonzero endpoint per edge, so the support of any feasible vector covers
the graph, and rounding entries to 0/1 never increases sum |x_i|^p.
"""

from __future__ import annotations

from typing import Sequence

from .core import AvoidanceInstance, Constraint, Graph, check_feasible
from .errors import NotFeasible


def _unit_combo(n: int, u: int, v: int, sign: int) -> tuple[int, ...]:
    a = [0] * n
    a[u] = 1
    a[v] = sign
    return tuple(a)


def encode_coloring(g: Graph) -> AvoidanceInstance:
    """Homogeneous instance with x_u - x_v != 0 and x_u + x_v != 0 per edge."""
    n = g.num_vertices
    constraints = []
    for u, v in g.edge_list():
        constraints.append(Constraint(_unit_combo(n, u, v, -1), 0))
        constraints.append(Constraint(_unit_combo(n, u, v, +1), 0))
    return AvoidanceInstance(n, tuple(constraints))


def decode_coloring(g: Graph, x: Sequence[int]) -> tuple[int, list[int]]:
    """Proper coloring |x| and its color count max|x_i| + 1."""
    if not check_feasible(encode_coloring(g), x):
        raise NotFeasible("vector does not satisfy the coloring encoding")
    coloring = [abs(v) for v in x]
    return max(coloring) + 1, coloring


def encode_vertex_cover(g: Graph) -> AvoidanceInstance:
    """Homogeneous instance with x_u + x_v != 0 per edge."""
    n = g.num_vertices
    constraints = [Constraint(_unit_combo(n, u, v, +1), 0) for u, v in g.edge_list()]
    return AvoidanceInstance(n, tuple(constraints))


def decode_vertex_cover(g: Graph, x: Sequence[int]) -> frozenset[int]:
    """Support of a feasible vector; always a vertex cover of g."""
    if not check_feasible(encode_vertex_cover(g), x):
        raise NotFeasible("vector does not satisfy the vertex-cover encoding")
    return frozenset(v for v, value in enumerate(x) if value != 0)
