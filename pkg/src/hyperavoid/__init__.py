"""hyperavoid: small-norm integer vectors avoiding finite hyperplane sets.

The solver constructs, in O(n*m) time, an integer vector y that misses
every given hyperplane a . x = a0 and satisfies norm1(y) <= (m+n)/2, with
each |y_k| greedily minimal.  On top of that sit exact brute-force
oracles, a uniform cross-polytope sampling baseline, graph-problem
encoders, and an exact lattice-point counter for short rational
generating functions evaluated along such avoiding directions.
"""

from .bench import BenchConfig, CellReport, random_instance, run_bench
from .core import (
    AvoidanceInstance,
    Constraint,
    Graph,
    SolutionVector,
    check_feasible,
    dump_instance,
    dumps_instance,
    load_graph,
    load_instance,
    tight_family,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    HyperavoidError,
    InfeasibleConstant,
    InternalInvariantViolation,
    InvalidAvoidanceVector,
    NonIntegerTotal,
    NotFeasible,
    ParseError,
    ZeroDenominatorVector,
)
from .genfun import (
    GenFun,
    GenFunTerm,
    TruncatedSeries,
    avoidance_set,
    bernoulli_numbers,
    brute_count,
    count_via_genfun,
    dumps_genfun,
    evaluate_term,
    fixture_cube,
    fixture_interval,
    fixture_simplex,
    load_genfun,
)
from .oracle import NormKind, count_l1_ball, exact_lex_solve, exact_solve, norm_value
from .reductions import (
    decode_coloring,
    decode_vertex_cover,
    encode_coloring,
    encode_vertex_cover,
)
from .sampler import SamplerConfig, sample_baseline, sample_l1_ball
from .solver import solve, solve_with_state

__version__ = "0.1.0"

__all__ = [
    "AvoidanceInstance",
    "BenchConfig",
    "BudgetExceeded",
    "CellReport",
    "Constraint",
    "DimensionMismatch",
    "GenFun",
    "GenFunTerm",
    "Graph",
    "HyperavoidError",
    "InfeasibleConstant",
    "InternalInvariantViolation",
    "InvalidAvoidanceVector",
    "NonIntegerTotal",
    "NormKind",
    "NotFeasible",
    "ParseError",
    "SamplerConfig",
    "SolutionVector",
    "TruncatedSeries",
    "ZeroDenominatorVector",
    "avoidance_set",
    "bernoulli_numbers",
    "brute_count",
    "check_feasible",
    "count_l1_ball",
    "count_via_genfun",
    "decode_coloring",
    "decode_vertex_cover",
    "dump_instance",
    "dumps_genfun",
    "dumps_instance",
    "encode_coloring",
    "encode_vertex_cover",
    "evaluate_term",
    "exact_lex_solve",
    "exact_solve",
    "fixture_cube",
    "fixture_interval",
    "fixture_simplex",
    "load_genfun",
    "load_graph",
    "load_instance",
    "norm_value",
    "random_instance",
    "run_bench",
    "sample_baseline",
    "sample_l1_ball",
    "solve",
    "solve_with_state",
    "tight_family",
]
