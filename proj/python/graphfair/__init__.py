"""Connected fair division of items on a graph."""

from graphfair._core import (
    GraphFairError,
    Instance,
    InvalidInput,
    PreconditionViolated,
    SizeGuardExceeded,
    algorithms,
    brute_mnw,
    check,
    check_fixture,
    fixture,
    fixture_names,
    generate,
    mu,
    pick_algorithm,
    pmms_ratio,
    solve,
    tree_mms_value,
)

__all__ = [
    "GraphFairError",
    "Instance",
    "InvalidInput",
    "PreconditionViolated",
    "SizeGuardExceeded",
    "algorithms",
    "brute_mnw",
    "check",
    "check_fixture",
    "fixture",
    "fixture_names",
    "generate",
    "mu",
    "pick_algorithm",
    "pmms_ratio",
    "solve",
    "tree_mms_value",
]
