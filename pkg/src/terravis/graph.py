"""Vertex-ordered graphs, structural checkers and brute-force oracles.

Vertex ``i`` is to the left of vertex ``j`` iff ``i < j``. Checkers
return a :class:`Witness` describing the first violation they find (or
``None``), so failures in randomized tests are easy to replay.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import NotInducedCycle, TooLarge

#: Exhaustive subset searches refuse to run past this many candidate subsets.
SUBSET_GUARD = 10**7


class WitnessKind(str, Enum):
    X_VIOLATION = "XViolation"
    BAR_VIOLATION = "BarViolation"
    NO_HAM_PATH = "NoHamPath"
    ANTIHOLE = "Antihole"
    CYCLE_ORDER_VIOLATION = "CycleOrderViolation"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class OrderedGraph:
    """Undirected graph on ``0..n-1`` with sorted adjacency tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError(f"expected {self.n} adjacency lists, got {len(self.adjacency)}")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            m = 0
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u <= prev:
                    raise ValueError(f"adjacency of {v} is not strictly increasing")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                prev = u
                m |= 1 << u
            masks.append(m)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not masks[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "OrderedGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        a = self.adjacency[v]
        k = bisect_right(a, v)
        return a[:k] + (v,) + a[k:]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if v > u]

    @property
    def m(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json()) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, doc: dict) -> "OrderedGraph":
        return cls.from_edges(int(doc["n"]), [tuple(e) for e in doc["edges"]])


def _range_mask(lo: int, hi: int) -> int:
    """Bits lo..hi-1."""
    return (1 << hi) - (1 << lo) if hi > lo else 0


def check_x_property(g: OrderedGraph) -> Witness | None:
    """Smallest (p, q, r, s) with p<q<r<s, pr and qs edges but no ps edge.

    For fixed (p, q), the smallest neighbour r of p beyond q is the only r
    worth trying: any s that works for a larger r works for it too.
    """
    masks = g._masks
    adj = g.adjacency
    for p in range(g.n):
        ap = adj[p]
        if not ap or ap[-1] <= p + 1:
            continue
        not_p = ~masks[p]
        for q in range(p + 1, g.n):
            k = bisect_right(ap, q)
            if k == len(ap):
                break
            r = ap[k]
            cand = masks[q] & not_p & ~((1 << (r + 1)) - 1)
            if cand:
                s = (cand & -cand).bit_length() - 1
                return Witness(WitnessKind.X_VIOLATION, (p, q, r, s))
    return None


def check_bar_property(g: OrderedGraph) -> Witness | None:
    masks = g._masks
    for p in range(g.n):
        for q in g.adjacency[p]:
            if q > p + 1 and not masks[p] & masks[q] & _range_mask(p + 1, q):
                return Witness(WitnessKind.BAR_VIOLATION, (p, q))
    return None


def check_hamiltonian_order(g: OrderedGraph) -> Witness | None:
    for i in range(g.n - 1):
        if not g.has_edge(i, i + 1):
            return Witness(WitnessKind.NO_HAM_PATH, (i, i + 1))
    return None


def is_persistent(g: OrderedGraph) -> tuple[bool, Witness | None]:
    """Persistence under the given order.

    Checks run X-property, bar-property, then the Hamiltonian path, and
    the first failing witness is returned.
    """
    for check in (check_x_property, check_bar_property, check_hamiltonian_order):
        w = check(g)
        if w is not None:
            return False, w
    return True, None


def relabel(g: OrderedGraph, order: Sequence[int]) -> OrderedGraph:
    """Graph in which old vertex ``order[i]`` becomes vertex ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.n or set(pos) != set(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return OrderedGraph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges()))


def hamiltonian_paths(g: OrderedGraph) -> Iterator[list[int]]:
    """All Hamiltonian paths as vertex sequences (each direction separately)."""
    n = g.n
    if n == 0:
        return
    full = (1 << n) - 1
    path: list[int] = []

    def extend(used: int) -> Iterator[list[int]]:
        if used == full:
            yield list(path)
            return
        for u in g.adjacency[path[-1]]:
            if not used >> u & 1:
                path.append(u)
                yield from extend(used | 1 << u)
                path.pop()

    for v in range(n):
        path.append(v)
        yield from extend(1 << v)
        path.pop()


def is_persistent_any_order(g: OrderedGraph, max_n: int = 10) -> bool:
    """Whether some vertex order makes ``g`` persistent.

    A persistent order is a Hamiltonian path, so only those orders are
    tried instead of all n! permutations.
    """
    if g.n > max_n:
        raise TooLarge(f"order search limited to n <= {max_n}, got {g.n}")
    if g.n <= 1:
        return True
    return any(is_persistent(relabel(g, order))[0] for order in hamiltonian_paths(g))


def find_antihole(g: OrderedGraph, k: int) -> Witness | None:
    """An induced complement of a k-cycle, listed in complement-cycle order.

    Backtracks over sequences p1..pk where consecutive vertices (cyclically)
    are non-adjacent and every other pair is adjacent; p1 is the smallest
    vertex of the set and p2 < pk, so each antihole is met once.
    """
    if k < 5:
        raise ValueError("antiholes are considered from size 5 on")
    if math.comb(g.n, k) > SUBSET_GUARD:
        raise TooLarge(f"C({g.n},{k}) exceeds the exhaustive-search guard {SUBSET_GUARD}")
    if g.n < k:
        return None
    masks = g._masks
    full = (1 << g.n) - 1
    seq: list[int] = []

    def extend(allowed: int) -> bool:
        # allowed: common neighbours of seq[1..j-2]; seq[0] is handled apart
        j = len(seq)
        first, last = seq[0], seq[-1]
        cand = allowed & ~masks[last] & ~((1 << (first + 1)) - 1)
        for v in seq:
            cand &= ~(1 << v)
        if j == k - 1:
            cand &= ~masks[first] & ~((1 << (seq[1] + 1)) - 1)
        elif j >= 2:
            cand &= masks[first]
        nxt = allowed & masks[last] if j >= 2 else allowed
        while cand:
            low = cand & -cand
            cand ^= low
            seq.append(low.bit_length() - 1)
            if j == k - 1 or extend(nxt):
                return True
            seq.pop()
        return False

    for p1 in range(g.n):
        seq.append(p1)
        if extend(full):
            return Witness(WitnessKind.ANTIHOLE, tuple(seq))
        seq.pop()
    return None


def is_antihole(g: OrderedGraph, cyc: Sequence[int]) -> bool:
    """Whether ``cyc`` (in order) induces the complement of a cycle."""
    k = len(cyc)
    if k < 5 or len(set(cyc)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            cyclic_neighbors = b - a == 1 or (a == 0 and b == k - 1)
            if g.has_edge(cyc[a], cyc[b]) == cyclic_neighbors:
                return False
    return True


def is_induced_cycle(g: OrderedGraph, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b - a == 1 or (a == 0 and b == k - 1)
            if g.has_edge(cyc[a], cyc[b]) != consecutive:
                return False
    return True


def induced_cycles(g: OrderedGraph, min_k: int = 4, max_k: int | None = None) -> Iterator[list[int]]:
    """Every chordless cycle with min_k..max_k vertices, each reported once.

    A cycle is reported starting at its smallest vertex, in the direction
    where the second vertex is smaller than the last.
    """
    max_k = g.n if max_k is None else max_k
    masks = g._masks
    path: list[int] = []

    def extend(blocked: int) -> Iterator[list[int]]:
        # blocked: vertices adjacent to some interior path vertex path[1..-2]
        start, last = path[0], path[-1]
        cand = masks[last] & ~blocked & ~((1 << (start + 1)) - 1)
        for v in path:
            cand &= ~(1 << v)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            closes = len(path) >= 2 and g.has_edge(w, start)
            if closes:
                if len(path) + 1 >= min_k and path[1] < w:
                    yield path + [w]
                continue
            if len(path) + 1 < max_k:
                path.append(w)
                yield from extend(blocked | (masks[last] if len(path) > 2 else 0))
                path.pop()

    for v in range(g.n):
        path.append(v)
        yield from extend(0)
        path.pop()


def check_cycle_order(g: OrderedGraph, cycle: Sequence[int]) -> bool:
    """Whether some rotation or reversal of ``cycle`` reads p1 > p3 > p4 > ... > pk > p2."""
    k = len(cycle)
    if k < 4 or not is_induced_cycle(g, cycle):
        raise NotInducedCycle(f"{list(cycle)} is not an induced cycle of length >= 4")
    for seq in (list(cycle), list(reversed(cycle))):
        for shift in range(k):
            p = seq[shift:] + seq[:shift]
            chain = [p[0]] + p[2:] + [p[1]]
            if all(a > b for a, b in zip(chain, chain[1:])):
                return True
    return False


def degree_sequence(g: OrderedGraph) -> list[int]:
    return [len(a) for a in g.adjacency]


def bfs_distances(g: OrderedGraph, s: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for u in g.adjacency[v]:
            if dist[u] == math.inf:
                dist[u] = dv
                queue.append(u)
    return dist


def bfs_distance(g: OrderedGraph, s: int, t: int) -> float:
    """Unweighted s-t distance by plain BFS; ``math.inf`` if disconnected."""
    if s == t:
        return 0
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in dist:
                if u == t:
                    return dist[v] + 1
                dist[u] = dist[v] + 1
                queue.append(u)
    return math.inf


def induced_subgraph(g: OrderedGraph, keep: Iterable[int]) -> OrderedGraph:
    """Subgraph on ``keep`` with inherited order, relabelled to 0..k-1."""
    kept = sorted(set(keep))
    pos = {v: i for i, v in enumerate(kept)}
    adj = tuple(tuple(pos[u] for u in g.adjacency[v] if u in pos) for v in kept)
    return OrderedGraph(len(kept), adj)


def brute_force_antihole(g: OrderedGraph, k: int) -> tuple[int, ...] | None:
    """Antihole search over all k-subsets and their cyclic orders (tiny n only)."""
    for subset in combinations(range(g.n), k):
        first, rest = subset[0], subset[1:]
        # complement must be a single k-cycle: every vertex has k-3 neighbours inside
        if any(sum(g.has_edge(a, b) for b in subset if b != a) != k - 3 for a in subset):
            continue
        for perm in permutations(rest):
            if is_antihole(g, (first, *perm)):
                return (first, *perm)
    return None
