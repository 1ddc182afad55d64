"""Funnel visibility graphs and minimum dominating sets on them.

A funnel is a terrain with a single convex vertex (the bottom) whose two
endpoints see each other. Its vertices split into two chains that share
the bottom: ``L = (lambda_0, ..., lambda_nL)`` running left from the bottom
and ``R = (rho_0, ..., rho_nR)`` running right, with ``lambda_0 = rho_0``.
Vertices are stored in terrain order, so ``lambda_i`` is vertex ``nL - i``
and ``rho_j`` is vertex ``nL + j``.

Every closed neighbourhood meets each chain in a run of consecutive
indices, which is what makes the dynamic program over "bases" (a pair of
bottom-anchored chain prefixes) work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import IntervalViolation, NotAFunnel, TooLarge
from .graph import OrderedGraph
from .terrain import CONVEX, Terrain, build_visibility_graph, classify_vertices, sees

LEFT = "L"
RIGHT = "R"

#: Subset enumeration for the dominating-set oracle stops here.
BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class Funnel:
    nL: int
    nR: int
    graph: OrderedGraph
    terrain: Terrain | None = field(default=None, compare=False)

    @property
    def bottom(self) -> int:
        return self.nL

    def vertex(self, chain: str, i: int) -> int:
        if chain == LEFT and 0 <= i <= self.nL:
            return self.nL - i
        if chain == RIGHT and 0 <= i <= self.nR:
            return self.nL + i
        raise IndexError(f"no vertex {chain}{i} in funnel with nL={self.nL}, nR={self.nR}")

    def label(self, v: int) -> tuple[str, int]:
        """Chain label; the bottom is reported as ``("L", 0)``."""
        return (LEFT, self.nL - v) if v <= self.nL else (RIGHT, v - self.nL)

    def to_json(self) -> dict:
        doc: dict = {
            "nL": self.nL,
            "nR": self.nR,
            "edges": [[*self.label(u), *self.label(v)] for u, v in self.graph.edges()],
        }
        if self.terrain is not None:
            pts = self.terrain.points
            doc["coordinates"] = {
                LEFT: [[str(pts[self.vertex(LEFT, i)].x), str(pts[self.vertex(LEFT, i)].y)]
                       for i in range(self.nL + 1)],
                RIGHT: [[str(pts[self.vertex(RIGHT, j)].x), str(pts[self.vertex(RIGHT, j)].y)]
                        for j in range(1, self.nR + 1)],
            }
        return doc


def funnel_from_terrain(t: Terrain) -> Funnel:
    """Split a funnel terrain at its bottom and validate it.

    Chains are indexed by distance from the bottom along the terrain. For
    funnels whose chains rise monotonically this is the same as sorting
    each chain by increasing y.
    """
    convex = [i for i, c in enumerate(classify_vertices(t)) if c == CONVEX]
    if not convex:
        raise NotAFunnel("no-convex")
    if len(convex) > 1:
        raise NotAFunnel("multiple-convex", f"convex vertices {convex}")
    if not sees(t, 0, t.n - 1):
        raise NotAFunnel("endpoints-not-visible")
    b = convex[0]
    f = Funnel(nL=b, nR=t.n - 1 - b, graph=build_visibility_graph(t), terrain=t)
    neighbor_intervals(f)
    return f


def funnel_from_chains(nL: int, nR: int, edges: Iterable, coordinates: dict | None = None) -> Funnel:
    """Funnel from a chain-labelled edge list such as ``[["L", 1, "R", 2], ...]``.

    Optional ``coordinates`` hold ``{"L": [lambda_0..lambda_nL], "R": [rho_1..rho_nR]}``
    as ``[x, y]`` pairs; when present the geometry must reproduce the edges.
    """
    if nL < 1 or nR < 1:
        raise NotAFunnel("no-convex", "each chain needs at least one vertex besides the bottom")
    shell = Funnel(nL, nR, OrderedGraph(nL + nR + 1, ((),) * (nL + nR + 1)))
    pairs = []
    for e in edges:
        c1, i, c2, j = e
        pairs.append((shell.vertex(c1, int(i)), shell.vertex(c2, int(j))))
    g = OrderedGraph.from_edges(nL + nR + 1, pairs)
    for v in range(g.n - 1):
        if not g.has_edge(v, v + 1):
            raise NotAFunnel("chain-edge-missing", f"{shell.label(v)} - {shell.label(v + 1)}")
    if not g.has_edge(0, g.n - 1):
        raise NotAFunnel("endpoints-not-visible")
    terrain = None
    if coordinates is not None:
        left = coordinates[LEFT]
        right = coordinates[RIGHT]
        if len(left) != nL + 1 or len(right) != nR:
            raise ValueError("coordinates must list lambda_0..lambda_nL and rho_1..rho_nR")
        terrain = Terrain(tuple((p[0], p[1]) for p in [*reversed(left), *right]))
        if build_visibility_graph(terrain) != g:
            raise ValueError("coordinates do not reproduce the given edges")
        return funnel_from_terrain(terrain)
    f = Funnel(nL, nR, g, terrain)
    neighbor_intervals(f)
    return f


@dataclass(frozen=True)
class NeighborIntervals:
    """Per vertex, the chain-index ranges covered by its closed neighbourhood.

    ``left[v]`` / ``right[v]`` are inclusive ``(lo, hi)`` pairs or ``None``
    when the neighbourhood misses that chain.
    """

    funnel: Funnel
    left: tuple[tuple[int, int] | None, ...]
    right: tuple[tuple[int, int] | None, ...]

    def ldown(self, v: int) -> int | None:
        iv = self.left[v]
        return None if iv is None else self.funnel.vertex(LEFT, iv[0])

    def lup(self, v: int) -> int | None:
        iv = self.left[v]
        return None if iv is None else self.funnel.vertex(LEFT, iv[1])

    def rdown(self, v: int) -> int | None:
        iv = self.right[v]
        return None if iv is None else self.funnel.vertex(RIGHT, iv[0])

    def rup(self, v: int) -> int | None:
        iv = self.right[v]
        return None if iv is None else self.funnel.vertex(RIGHT, iv[1])


def _run(indices: list[int], v: int, chain: str, f: Funnel) -> tuple[int, int] | None:
    if not indices:
        return None
    lo, hi = min(indices), max(indices)
    if hi - lo + 1 != len(indices):
        raise IntervalViolation(f.label(v), chain, indices)
    return lo, hi


def neighbor_intervals(f: Funnel) -> NeighborIntervals:
    left, right = [], []
    for v in range(f.graph.n):
        nb = f.graph.closed_neighborhood(v)
        left.append(_run([f.nL - u for u in nb if u <= f.nL], v, LEFT, f))
        right.append(_run([u - f.nL for u in nb if u >= f.nL], v, RIGHT, f))
    return NeighborIntervals(f, tuple(left), tuple(right))


@dataclass
class DPStats:
    pair_evaluations: int = 0
    cells: int = 0


def _dp_solver(f: Funnel, stats: DPStats):
    """Memoized ``D(l, r)``; the solver returns (sorted label keys, member set)."""
    iv = neighbor_intervals(f)
    g, nL, nR = f.graph, f.nL, f.nR
    big = nL + nR + 2
    lL = [big if i is None else i[0] for i in iv.left]
    uL = [-1 if i is None else i[1] for i in iv.left]
    lR = [big if i is None else i[0] for i in iv.right]
    uR = [-1 if i is None else i[1] for i in iv.right]

    def key(v: int) -> tuple[int, int]:
        return (0, nL - v) if v <= nL else (1, v - nL)

    # memo[(l, r)] = (sorted label keys, member set)
    memo: dict[tuple[int, int], tuple[tuple, frozenset]] = {(-1, -1): ((), frozenset())}

    def solve(l: int, r: int) -> tuple[tuple, frozenset]:
        hit = memo.get((l, r))
        if hit is not None:
            return hit
        stats.cells += 1
        xs = g.closed_neighborhood(f.vertex(LEFT, l)) if l >= 0 else (None,)
        ys = g.closed_neighborhood(f.vertex(RIGHT, r)) if r >= 0 else (None,)
        best: tuple[tuple, frozenset] | None = None
        for x in xs:
            for y in ys:
                stats.pair_evaluations += 1
                if x is not None and uR[x] >= r:
                    picked = (x,)
                    child = (lL[x] - 1, min(r, lR[x] - 1))
                elif y is not None and uL[y] >= l:
                    picked = (y,)
                    child = (min(l, lL[y] - 1), lR[y] - 1)
                else:
                    picked = (x, y)
                    child = (min(lL[x], lL[y]) - 1, min(lR[x], lR[y]) - 1)
                keys, members = solve(*child)
                extra = [v for v in set(picked) if v not in members]
                size = len(members) + len(extra)
                if best is not None and size > len(best[0]):
                    continue
                cand = tuple(sorted(keys + tuple(key(v) for v in extra)))
                if best is None or (size, cand) < (len(best[0]), best[0]):
                    best = (cand, members.union(extra))
        memo[(l, r)] = best
        return best

    return solve


def min_dominating_set(f: Funnel, stats: DPStats | None = None) -> list[tuple[str, int]]:
    """Minimum dominating set of a funnel visibility graph, O(n^4).

    ``D(l, r)`` is a smallest vertex set dominating the base
    ``{lambda_0..lambda_l} | {rho_0..rho_r}`` (index -1 means the empty
    prefix). For every x in N[lambda_l] and y in N[rho_r] one of three
    candidates applies: {x} if x covers R up to r, else {y} if y covers L
    up to l, else {x, y}; what stays undominated is again a base.
    Among equally small sets the lexicographically smallest by
    (chain, index) labels wins.

    Returns the chosen vertices as chain labels, sorted.
    """
    solve = _dp_solver(f, stats if stats is not None else DPStats())
    keys, _ = solve(f.nL, f.nR)
    return [(LEFT if c == 0 else RIGHT, i) for c, i in keys]


def dp_table(f: Funnel) -> dict[tuple[int, int], int]:
    """Sizes of ``D(l, r)`` for every cell, -1 <= l <= nL, -1 <= r <= nR."""
    solve = _dp_solver(f, DPStats())
    return {(l, r): len(solve(l, r)[0])
            for l in range(-1, f.nL + 1) for r in range(-1, f.nR + 1)}


def labels_to_vertices(f: Funnel, labels: Iterable[tuple[str, int]]) -> list[int]:
    return sorted(f.vertex(c, i) for c, i in labels)


def dominates(g: OrderedGraph, vertices: Iterable[int]) -> bool:
    covered = set()
    for v in vertices:
        covered.update(g.closed_neighborhood(v))
    return len(covered) == g.n


def brute_force_dominating_set(g: OrderedGraph) -> tuple[int, ...]:
    """Smallest dominating set by enumerating subsets of growing size."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"subset enumeration limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    full = (1 << g.n) - 1
    closed = [sum(1 << u for u in g.closed_neighborhood(v)) for v in range(g.n)]
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            cover = 0
            for v in subset:
                cover |= closed[v]
            if cover == full:
                return subset
    raise AssertionError("unreachable: the full vertex set dominates")


def _is_base(f: Funnel, s: set[int]) -> bool:
    a = max((f.nL - v for v in s if v <= f.nL), default=-1)
    b = max((v - f.nL for v in s if v >= f.nL), default=-1)
    want = {f.vertex(LEFT, i) for i in range(a + 1)} | {f.vertex(RIGHT, j) for j in range(b + 1)}
    return s == want


def base_lemma_violation(f: Funnel) -> tuple[int, int, int, int] | None:
    """Exhaustive check that some residual of every base is again a base.

    For each base W = L_l | R_r and x in N[lambda_l], y in N[rho_r], one of
    W - N[x], W - N[y], W - (N[x] | N[y]) must be a base. Returns the first
    (l, r, x, y) where none is, else ``None``. Works on vertex sets only,
    independent of the interval bookkeeping used by the DP.
    """
    g = f.graph
    nbh = [set(g.closed_neighborhood(v)) for v in range(g.n)]
    for l in range(f.nL + 1):
        for r in range(f.nR + 1):
            w = {f.vertex(LEFT, i) for i in range(l + 1)} | {f.vertex(RIGHT, j) for j in range(r + 1)}
            for x in sorted(nbh[f.vertex(LEFT, l)]):
                for y in sorted(nbh[f.vertex(RIGHT, r)]):
                    if not (_is_base(f, w - nbh[x]) or _is_base(f, w - nbh[y])
                            or _is_base(f, w - nbh[x] - nbh[y])):
                        return (l, r, x, y)
    return None


def dp_pair_bound(f: Funnel) -> int:
    return 4 * (f.nL + f.nR + 1) ** 4

