"""1.5D terrains and their visibility graphs.

All predicates are evaluated exactly. Coordinates are stored as
:class:`fractions.Fraction`; for the geometric tests the terrain is
rescaled once to integer coordinates (a positive scaling, which leaves
visibility unchanged) so that the hot loops only multiply Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DuplicateAbscissa, ParseError, TooSmall
from .graph import OrderedGraph

CONVEX = "convex"
REFLEX = "reflex"
ENDPOINT = "endpoint"


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def _exact(value) -> Fraction:
    if isinstance(value, float):
        # go through the decimal repr so that 2.5 and "2.5" agree
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class Terrain:
    """An x-monotone polygonal chain, vertices indexed left to right."""

    points: tuple[Point, ...]
    _ix: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _iy: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pts = tuple(Point(_exact(p[0]), _exact(p[1])) for p in self.points)
        if len(pts) < 2:
            raise TooSmall(f"a terrain needs at least 2 vertices, got {len(pts)}")
        for i in range(len(pts) - 1):
            if pts[i].x == pts[i + 1].x:
                raise DuplicateAbscissa(i, i + 1, pts[i].x)
            if pts[i].x > pts[i + 1].x:
                raise ValueError(
                    f"x-coordinates must increase: vertex {i + 1} lies left of vertex {i}"
                )
        scale = 1
        for p in pts:
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_ix", tuple(int(p.x * scale) for p in pts))
        object.__setattr__(self, "_iy", tuple(int(p.y * scale) for p in pts))

    @classmethod
    def from_xy(cls, xs: Iterable, ys: Iterable) -> "Terrain":
        return cls(tuple(zip(xs, ys)))

    @classmethod
    def from_heights(cls, ys: Iterable) -> "Terrain":
        """Terrain with unit-spaced x-coordinates 0, 1, 2, ..."""
        return cls(tuple(enumerate(ys)))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def to_text(self) -> str:
        return "".join(f"{_fmt(p.x)} {_fmt(p.y)}\n" for p in self.points)


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_terrain(text: str) -> Terrain:
    """Parse the line-oriented terrain format.

    Each non-blank line holds ``x y``; numerals may be integers, decimals
    or ``a/b`` rationals. ``#`` starts a comment. Vertices are sorted by
    x; a repeated x-coordinate raises :class:`DuplicateAbscissa` with the
    input positions of the two offending lines' vertices.
    """
    rows: list[tuple[Fraction, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two numerals, got {len(parts)}")
        try:
            rows.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise ParseError(lineno, f"malformed numeral in {line!r}") from None
    if len(rows) < 2:
        raise TooSmall(f"a terrain needs at least 2 vertices, got {len(rows)}")
    order = sorted(range(len(rows)), key=lambda i: rows[i][0])
    for a, b in zip(order, order[1:]):
        if rows[a][0] == rows[b][0]:
            raise DuplicateAbscissa(min(a, b), max(a, b), rows[a][0])
    return Terrain(tuple(rows[i] for i in order))


def _check_index(t: Terrain, i: int) -> None:
    if not 0 <= i < t.n:
        raise IndexError(f"vertex {i} out of range for terrain with {t.n} vertices")


def sees(t: Terrain, i: int, j: int) -> bool:
    """Whether vertices ``i`` and ``j`` see each other.

    Every vertex strictly between them must lie strictly below the
    segment; a collinear vertex blocks.
    """
    _check_index(t, i)
    _check_index(t, j)
    if i == j:
        raise ValueError("a vertex is not compared with itself")
    if i > j:
        i, j = j, i
    xs, ys = t._ix, t._iy
    px, py = xs[i], ys[i]
    dx, dy = xs[j] - px, ys[j] - py
    for r in range(i + 1, j):
        if (ys[r] - py) * dx >= dy * (xs[r] - px):
            return False
    return True


def build_visibility_graph(t: Terrain) -> OrderedGraph:
    """Visibility graph by a rightward slope sweep from every vertex, O(n^2).

    Vertex ``j`` is visible from ``i`` iff slope(i, j) strictly exceeds
    every slope(i, r) with i < r < j.
    """
    xs, ys = t._ix, t._iy
    n = t.n
    right: list[list[int]] = [[] for _ in range(n)]
    left: list[list[int]] = [[] for _ in range(n)]
    for i in range(n - 1):
        px, py = xs[i], ys[i]
        # running maximum slope as a fraction best_dy / best_dx, best_dx > 0
        best_dy, best_dx = ys[i + 1] - py, xs[i + 1] - px
        row = right[i]
        row.append(i + 1)
        left[i + 1].append(i)
        for j in range(i + 2, n):
            dy, dx = ys[j] - py, xs[j] - px
            if dy * best_dx > best_dy * dx:
                row.append(j)
                left[j].append(i)
                best_dy, best_dx = dy, dx
    # outer loop runs i upward, so every left list is already sorted
    return OrderedGraph(n, tuple(tuple(left[v] + right[v]) for v in range(n)))


def naive_visibility_graph(t: Terrain) -> OrderedGraph:
    """All-pairs evaluation of :func:`sees`, O(n^3). Used as an oracle."""
    edges = [(i, j) for i in range(t.n) for j in range(i + 1, t.n) if sees(t, i, j)]
    return OrderedGraph.from_edges(t.n, edges)


def classify_vertices(t: Terrain) -> list[str]:
    labels = [ENDPOINT] * t.n
    for p in range(1, t.n - 1):
        labels[p] = CONVEX if sees(t, p - 1, p + 1) else REFLEX
    return labels


def convex_vertices(t: Terrain) -> list[int]:
    return [i for i, c in enumerate(classify_vertices(t)) if c == CONVEX]


def affine(t: Terrain, *, scale=1, shift_x=0, shift_y=0, shear=0) -> Terrain:
    """Apply (x, y) -> (scale*x + shift_x, scale*y + shear*x + shift_y)."""
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    m, sx, sy = Fraction(shear), Fraction(shift_x), Fraction(shift_y)
    return Terrain(
        tuple((scale * p.x + sx, scale * p.y + m * p.x + sy) for p in t.points)
    )


def shear(t: Terrain, m) -> Terrain:
    """Vertical shear (x, y) -> (x, m*x + y)."""
    return affine(t, shear=m)
