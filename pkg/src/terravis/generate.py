"""Seeded random instances: terrains, funnels and terrain-like subgraphs."""

from __future__ import annotations

import random

from .errors import NotAFunnel, TerravisError
from .funnel import Funnel, funnel_from_terrain
from .graph import OrderedGraph, induced_subgraph
from .terrain import Terrain

DEFAULT_COORD_RANGE = 1000
FUNNEL_RETRIES = 2000


class GenerationError(TerravisError):
    pass


def random_terrain(n: int, rng: random.Random, coord_range: int = DEFAULT_COORD_RANGE) -> Terrain:
    """x = 0..n-1, y uniform over the integers in [-C, C]."""
    if n < 2:
        raise GenerationError("a terrain needs n >= 2")
    return Terrain.from_heights(rng.randint(-coord_range, coord_range) for _ in range(n))


def random_walk_terrain(n: int, rng: random.Random, step: int = 10) -> Terrain:
    """Heights follow a random walk; gives longer shortest paths than uniform noise."""
    if n < 2:
        raise GenerationError("a terrain needs n >= 2")
    y, ys = 0, []
    for _ in range(n):
        y += rng.randint(-step, step)
        ys.append(y)
    return Terrain.from_heights(ys)


def noisy_bowl_terrain(n: int, rng: random.Random, noise: int = 15) -> Terrain:
    """Parabolic valley with integer noise. Rich in induced 4- and 5-cycles."""
    if n < 2:
        raise GenerationError("a terrain needs n >= 2")
    return Terrain.from_heights((2 * i - n) ** 2 + rng.randint(-noise, noise) for i in range(n))


def _concave_side(length: int, rng: random.Random, budget: int) -> list[int]:
    """Heights rising away from the bottom with non-increasing steps."""
    cap = max(1, budget // max(length, 1))
    steps = sorted((rng.randint(1, cap) for _ in range(length)), reverse=True)
    out, y = [], 0
    for s in steps:
        y += s
        out.append(y)
    return out


def random_funnel_terrain(
    n: int, rng: random.Random, coord_range: int = 100, retries: int = FUNNEL_RETRIES
) -> Terrain:
    """A funnel terrain with n vertices and integer coordinates within +-C.

    Heights strictly decrease to a single bottom and then strictly
    increase; step sizes shrink away from the bottom so that only the
    bottom is convex. Draws are retried until the endpoints see each
    other.
    """
    if n < 3:
        raise GenerationError("a funnel needs n >= 3")
    if 2 * coord_range < n:
        raise GenerationError(f"coord range {coord_range} too small for {n} vertices")
    for _ in range(retries):
        n_left = rng.randint(1, n - 2)
        n_right = n - 1 - n_left
        budget = 2 * coord_range
        left = _concave_side(n_left, rng, budget)
        right = _concave_side(n_right, rng, budget)
        bottom = -coord_range
        ys = [bottom + h for h in reversed(left)] + [bottom] + [bottom + h for h in right]
        x0 = -(n // 2)
        t = Terrain.from_xy(range(x0, x0 + n), ys)
        try:
            funnel_from_terrain(t)
        except NotAFunnel:
            continue
        return t
    raise GenerationError(f"no funnel with n={n} found after {retries} draws")


def random_funnel(n: int, rng: random.Random, coord_range: int = 100) -> Funnel:
    return funnel_from_terrain(random_funnel_terrain(n, rng, coord_range))


def random_induced_subgraph(g: OrderedGraph, rng: random.Random, keep: float = 0.7) -> OrderedGraph:
    """Induced subgraph on a random vertex subset (at least one vertex)."""
    chosen = [v for v in range(g.n) if rng.random() < keep]
    return induced_subgraph(g, chosen or [rng.randrange(g.n)])


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent, reproducible stream for one trial of a campaign."""
    return random.Random(f"{seed}:{trial}")
