"""Discrete homotopy invariants of graphs."""

from ._atheory import (
    AtheoryError,
    Graph,
    a1_presentation,
    a1_simplified,
    abelianization,
    cartesian_product,
    complete_graph,
    cycle_graph,
    f_vector,
    gamma_q,
    homotopy_search,
    loop_graph,
    loops_equivalent,
    path_graph,
    pointed_components,
    run_cli,
)

__all__ = [
    "AtheoryError",
    "Graph",
    "a1_presentation",
    "a1_simplified",
    "abelianization",
    "cartesian_product",
    "complete_graph",
    "cycle_graph",
    "f_vector",
    "gamma_q",
    "homotopy_search",
    "loop_graph",
    "loops_equivalent",
    "path_graph",
    "pointed_components",
    "run_cli",
]
