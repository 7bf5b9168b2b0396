"""All-pairs shortest paths through a black-box single-source engine.

Vertex ids are 0-based here (the graph file format and CLI are 1-based).
Distances are floats; unreachable pairs are ``float("inf")``.
"""

from ._bbapsp import (
    ApspResult,
    CycleError,
    Graph,
    InputError,
    InternalFault,
    bench,
    essential_edges,
    floyd_warshall,
    gen_complete_digraph,
    gen_random_dag,
    gen_random_digraph,
    parse_graph,
    solve_apsp,
    solve_dag_apsp,
    sssp,
    verify,
    write_graph,
)

__all__ = [
    "ApspResult",
    "CycleError",
    "Graph",
    "InputError",
    "InternalFault",
    "bench",
    "essential_edges",
    "floyd_warshall",
    "gen_complete_digraph",
    "gen_random_dag",
    "gen_random_digraph",
    "parse_graph",
    "solve_apsp",
    "solve_dag_apsp",
    "sssp",
    "verify",
    "write_graph",
]
