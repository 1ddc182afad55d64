"""Named example instances.

Terrain fixtures carry hand-transcribed coordinates; pure graph
fixtures carry an edge list. Every fixture exposes its graph in vertex
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import OrderedGraph
from .terrain import Terrain, build_visibility_graph


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    terrain: Terrain | None = None
    edges: tuple[tuple[int, int], ...] | None = None
    n: int | None = None

    @property
    def graph(self) -> OrderedGraph:
        if self.terrain is not None:
            return build_visibility_graph(self.terrain)
        return OrderedGraph.from_edges(self.n, self.edges)


F = Fraction

FIG1 = Terrain(((0, 2), (1, 0), (2, 1), (F("2.5"), -1), (F("3.5"), 4), (5, 3)))

G1 = Terrain.from_heights((30, 18, 15, 19, 21, 20, 2, 0, 4, 15, 18))

G2 = Terrain.from_heights((140, 74, 0, 16, 70, 66, 38, 32, 24, 42, 45))

# Left to right: cycle vertex 2, hub, cycle vertices 6, 5, 4, 3, hub, cycle vertex 1.
# The cycle 1-2-3-4-5-6 is induced; in vertex indices it reads 7, 0, 5, 4, 3, 2.
C6_TERRAIN = Terrain(
    ((0, 37), (5, 32), (6, 12), (16, 14), (20, 14), (30, 12), (31, 32), (36, 37))
)
C6_CYCLE = (7, 0, 5, 4, 3, 2)

# Chains of the funnel-fig fixture: lambda_0..lambda_3 and rho_1..rho_3.
FUNNEL_LEFT = ((0, 0), (-1, 2), (-2, 3), (-3, F("3.5")))
FUNNEL_RIGHT = ((F("0.5"), F("1.7")), (1, F("2.5")), (2, F("2.8")))
FUNNEL_FIG = Terrain(tuple(reversed(FUNNEL_LEFT)) + FUNNEL_RIGHT)

ANTIHOLE6_EDGES = ((0, 5), (0, 3), (0, 4), (1, 5), (2, 5), (1, 2), (3, 4), (2, 3), (1, 4))

UNIT_INTERVAL_EDGES = ((0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5))

FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in (
        Fixture("fig1", "6-vertex terrain with 9 visibility edges", terrain=FIG1),
        Fixture("g1", "11-vertex terrain, degree sequence (7,4,3,4,5,7,4,4,4,6,4)", terrain=G1),
        Fixture("g2", "11-vertex terrain with the same degree sequence as g1", terrain=G2),
        Fixture("antihole6", "size-6 antihole ordered to satisfy the X-property",
                edges=ANTIHOLE6_EDGES, n=6),
        Fixture("unit-interval", "unit interval graph that is not persistent",
                edges=UNIT_INTERVAL_EDGES, n=6),
        Fixture("c6-terrain", "terrain whose visibility graph has an induced C6",
                terrain=C6_TERRAIN),
        Fixture("funnel-fig", "funnel with three vertices on each chain", terrain=FUNNEL_FIG),
    )
}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
