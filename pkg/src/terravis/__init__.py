"""Terrain visibility graphs: construction, ordered-graph properties,
output-sensitive shortest paths and funnel dominating sets."""

from .errors import (
    DuplicateAbscissa,
    IntervalViolation,
    NotAFunnel,
    NotInducedCycle,
    ParseError,
    TerravisError,
    TooLarge,
    TooSmall,
    XViolation,
)
from .funnel import (
    Funnel,
    brute_force_dominating_set,
    funnel_from_chains,
    funnel_from_terrain,
    min_dominating_set,
    neighbor_intervals,
)
from .graph import (
    OrderedGraph,
    Witness,
    WitnessKind,
    bfs_distance,
    check_bar_property,
    check_cycle_order,
    check_x_property,
    find_antihole,
    induced_cycles,
    is_persistent,
    is_persistent_any_order,
)
from .sp import closest_query, lhorizon, precompute_closest, rhorizon, shortest_distance, shortest_path
from .terrain import Point, Terrain, build_visibility_graph, classify_vertices, parse_terrain, sees

__version__ = "0.1.0"

__all__ = [
    "DuplicateAbscissa", "IntervalViolation", "NotAFunnel", "NotInducedCycle", "ParseError",
    "TerravisError", "TooLarge", "TooSmall", "XViolation",
    "Funnel", "brute_force_dominating_set", "funnel_from_chains", "funnel_from_terrain",
    "min_dominating_set", "neighbor_intervals",
    "OrderedGraph", "Witness", "WitnessKind", "bfs_distance", "check_bar_property",
    "check_cycle_order", "check_x_property", "find_antihole", "induced_cycles",
    "is_persistent", "is_persistent_any_order",
    "closest_query", "lhorizon", "precompute_closest", "rhorizon", "shortest_distance",
    "shortest_path",
    "Point", "Terrain", "build_visibility_graph", "classify_vertices", "parse_terrain", "sees",
]
