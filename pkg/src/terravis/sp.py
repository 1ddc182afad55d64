"""Output-sensitive unweighted shortest paths on terrain-like graphs.

The search grows four frontier vertices (leftmost/rightmost vertex
reachable from ``s`` without passing ``t``, and the mirror pair from
``t``) one step per round, and after every round tests three local
conditions that certify an s-t path of a given length. The number of
rounds is at most ``dist(s, t) + 1``.

Only the X-property of the vertex order is required; the bar-property is
never used.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .errors import XViolation
from .graph import OrderedGraph, check_x_property

INF = math.inf

BINSEARCH = "binsearch"
PRECOMPUTE = "precompute"
MODES = (BINSEARCH, PRECOMPUTE)


def lhorizon(g: OrderedGraph, v: int) -> int:
    a = g.adjacency[v]
    return a[0] if a and a[0] < v else v


def rhorizon(g: OrderedGraph, v: int) -> int:
    a = g.adjacency[v]
    return a[-1] if a and a[-1] > v else v


def closest_query(g: OrderedGraph, a: int, v: int) -> tuple[float, float]:
    """(lclosest_a(v), rclosest_a(v)) by binary search over N[v].

    lclosest is the largest closed neighbour <= a, rclosest the smallest
    one >= a; missing values are -inf / +inf.
    """
    q = BinarySearchClosest(g)
    return q.lclosest(a, v), q.rclosest(a, v)


class BinarySearchClosest:
    """Closest-neighbour queries answered on demand, O(log deg) each."""

    def __init__(self, g: OrderedGraph) -> None:
        self.g = g

    def lclosest(self, a: int, v: int) -> float:
        adj = self.g.adjacency[v]
        k = bisect_right(adj, a)
        left = adj[k - 1] if k else -INF
        return v if left < v <= a else left

    def rclosest(self, a: int, v: int) -> float:
        adj = self.g.adjacency[v]
        k = bisect_left(adj, a)
        right = adj[k] if k < len(adj) else INF
        return v if a <= v < right else right


class ClosestTable:
    """lclosest/rclosest for every (a, v), built in O(n^2).

    ``left[v][a]`` and ``right[v][a]`` hold the values; one linear merge
    of 0..n-1 against N[v] fills each row.
    """

    def __init__(self, g: OrderedGraph) -> None:
        n = g.n
        self.n = n
        self.left: list[list[float]] = []
        self.right: list[list[float]] = []
        for v in range(n):
            nb = g.closed_neighborhood(v)
            lrow: list[float] = [0] * n
            rrow: list[float] = [0] * n
            k = 0
            cur: float = -INF
            for a in range(n):
                while k < len(nb) and nb[k] <= a:
                    cur = nb[k]
                    k += 1
                lrow[a] = cur
            k = len(nb) - 1
            cur = INF
            for a in range(n - 1, -1, -1):
                while k >= 0 and nb[k] >= a:
                    cur = nb[k]
                    k -= 1
                rrow[a] = cur
            self.left.append(lrow)
            self.right.append(rrow)

    def lclosest(self, a: int, v: int) -> float:
        return self.left[v][a]

    def rclosest(self, a: int, v: int) -> float:
        return self.right[v][a]


def precompute_closest(g: OrderedGraph) -> ClosestTable:
    return ClosestTable(g)


@dataclass
class Counters:
    iterations: int = 0
    queue_pushes: int = 0
    queue_pops: int = 0
    closest_queries: int = 0

    def to_json(self) -> dict:
        return dict(vars(self))


@dataclass
class SearchState:
    """Live state of one query, with ``s < t``."""

    s: int
    t: int
    k: int = 0
    alpha_s: int = 0
    beta_s: int = 0
    alpha_t: int = 0
    beta_t: int = 0
    d_s: dict[int, int] = field(default_factory=dict)
    d_t: dict[int, int] = field(default_factory=dict)
    d: float = INF
    Q_s: deque = field(default_factory=deque)
    Q_t: deque = field(default_factory=deque)
    q_s: float = INF
    q_t: float = INF


class _Tracker:
    """Back-pointers and the certificate behind the current best bound."""

    def __init__(self) -> None:
        self.pred_s: dict[int, int] = {}
        self.pred_t: dict[int, int] = {}
        self.next_pred_s: dict[int, int] = {}
        self.next_pred_t: dict[int, int] = {}
        self.v_s: int | None = None
        self.v_t: int | None = None
        self.junction: tuple | None = None


def _resolve_closest(g: OrderedGraph, mode: str, table: ClosestTable | None):
    if table is not None:
        return table
    if mode == BINSEARCH:
        return BinarySearchClosest(g)
    if mode == PRECOMPUTE:
        return ClosestTable(g)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _search(
    g: OrderedGraph,
    s: int,
    t: int,
    closest,
    counters: Counters,
    tracker: _Tracker | None,
    on_round: Callable[[SearchState], None] | None,
) -> float:
    adj = g.adjacency

    def lhor(v: int) -> int:
        a = adj[v]
        return a[0] if a and a[0] < v else v

    def rhor(v: int) -> int:
        a = adj[v]
        return a[-1] if a and a[-1] > v else v

    def lcl(a: int, v: int) -> float:
        counters.closest_queries += 1
        return closest.lclosest(a, v)

    def rcl(a: int, v: int) -> float:
        counters.closest_queries += 1
        return closest.rclosest(a, v)

    st = SearchState(s=s, t=t, alpha_s=s, beta_s=s, alpha_t=t, beta_t=t)
    st.Q_s.append(s)
    st.Q_t.append(t)
    # queue keys are cached next to the vertices: rclosest_t for Q_s, lclosest_s for Q_t
    key_s: deque = deque([rcl(t, s)])
    key_t: deque = deque([lcl(s, t)])
    d_s, d_t = st.d_s, st.d_t

    def improve(value: float, junction: tuple) -> None:
        if value < st.d:
            st.d = value
            if tracker is not None:
                tracker.junction = junction

    k = 0
    while k <= st.d:
        st.k = k
        counters.iterations += 1
        a_s, b_s, a_t, b_t = st.alpha_s, st.beta_s, st.alpha_t, st.beta_t
        if on_round is not None:
            on_round(st)

        # UpdateDistances(k)
        for v, dist_map, preds in ((a_s, d_s, "s"), (b_s, d_s, "s"), (a_t, d_t, "t"), (b_t, d_t, "t")):
            if v not in dist_map:
                dist_map[v] = k
                if tracker is not None and k > 0:
                    if preds == "s":
                        tracker.pred_s[v] = tracker.next_pred_s[v]
                    else:
                        tracker.pred_t[v] = tracker.next_pred_t[v]
        if st.q_s == INF:
            if rhor(a_s) >= t:
                st.q_s = k
                if tracker is not None:
                    tracker.v_s = a_s
            elif rhor(b_s) >= t:
                st.q_s = k
                if tracker is not None:
                    tracker.v_s = b_s
        if st.q_t == INF:
            if lhor(a_t) <= s:
                st.q_t = k
                if tracker is not None:
                    tracker.v_t = a_t
            elif lhor(b_t) <= s:
                st.q_t = k
                if tracker is not None:
                    tracker.v_t = b_t
        r = rcl(t, a_s)
        if r < (key_s[0] if key_s else INF):
            st.Q_s.appendleft(a_s)
            key_s.appendleft(r)
            counters.queue_pushes += 1
        left = lcl(s, a_t)
        if left > (key_t[0] if key_t else -INF):
            st.Q_t.appendleft(a_t)
            key_t.appendleft(left)
            counters.queue_pushes += 1

        # test (i): the two rightward/leftward frontiers met
        if b_s >= b_t:
            for v in (b_s, b_t):
                improve(d_s.get(v, INF) + d_t.get(v, INF), ("meet", v))
        # test (ii): an edge between some alpha_s(sigma) and alpha_t(tau)
        while key_s and a_t >= key_s[0]:
            h = st.Q_s.popleft()
            key_s.popleft()
            counters.queue_pops += 1
            improve(d_s[h] + d_t[a_t] + 1, ("edge_s", h, a_t))
        while key_t and a_s <= key_t[0]:
            h = st.Q_t.popleft()
            key_t.popleft()
            counters.queue_pops += 1
            improve(d_t[h] + d_s[a_s] + 1, ("edge_t", h, a_s))
        # test (iii): horizons of both sides reach past the other endpoint
        if st.q_s < INF and st.q_t < INF:
            improve(st.q_s + st.q_t + 3, ("horizons",))

        # ExtendSearchRange
        x_a = min((a_s, b_s), key=lhor)
        new_a_s = lhor(x_a)
        l_a, l_b = lcl(t, a_s), lcl(t, b_s)
        new_b_s, x_b = (l_a, a_s) if l_a >= l_b else (l_b, b_s)
        y_a = max((a_t, b_t), key=rhor)
        new_a_t = rhor(y_a)
        r_a, r_b = rcl(s, a_t), rcl(s, b_t)
        new_b_t, y_b = (r_a, a_t) if r_a <= r_b else (r_b, b_t)
        if tracker is not None:
            tracker.next_pred_s.setdefault(new_a_s, x_a)
            tracker.next_pred_s.setdefault(new_b_s, x_b)
            tracker.next_pred_t.setdefault(new_a_t, y_a)
            tracker.next_pred_t.setdefault(new_b_t, y_b)
        if st.d == INF and (new_a_s, new_b_s, new_a_t, new_b_t) == (a_s, b_s, a_t, b_t):
            # frontier is a fixed point and nothing fired: s and t are disconnected
            return INF
        st.alpha_s, st.beta_s, st.alpha_t, st.beta_t = new_a_s, new_b_s, new_a_t, new_b_t
        k += 1
    return st.d


def _normalize(g: OrderedGraph, s: int, t: int, check: bool) -> None:
    for v in (s, t):
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    if check:
        w = check_x_property(g)
        if w is not None:
            raise XViolation(w)


def shortest_distance(
    g: OrderedGraph,
    s: int,
    t: int,
    mode: str = BINSEARCH,
    *,
    table: ClosestTable | None = None,
    counters: Counters | None = None,
    check: bool = False,
    on_round: Callable[[SearchState], None] | None = None,
) -> float:
    """dist(s, t) in a graph whose vertex order has the X-property.

    Returns an int, or ``math.inf`` when s and t are disconnected. Pass a
    prebuilt :class:`ClosestTable` as ``table`` to reuse the O(n^2)
    preprocessing across queries. ``on_round`` sees the state at the head
    of every round (for instrumentation; do not mutate it).
    """
    _normalize(g, s, t, check)
    if s == t:
        return 0
    if s > t:
        s, t = t, s
    closest = _resolve_closest(g, mode, table)
    return _search(g, s, t, closest, counters or Counters(), None, on_round)


def shortest_path(
    g: OrderedGraph,
    s: int,
    t: int,
    mode: str = BINSEARCH,
    *,
    table: ClosestTable | None = None,
    counters: Counters | None = None,
    check: bool = False,
) -> list[int] | None:
    """A shortest s-t path as a vertex list, or ``None`` if disconnected."""
    _normalize(g, s, t, check)
    if s == t:
        return [s]
    flip = s > t
    if flip:
        s, t = t, s
    closest = _resolve_closest(g, mode, table)
    tracker = _Tracker()
    d = _search(g, s, t, closest, counters or Counters(), tracker, None)
    if d == INF:
        return None
    path = _splice(g, s, t, tracker)
    if len(path) - 1 != d:
        raise RuntimeError(f"reconstructed path has length {len(path) - 1}, expected {d}")
    return path[::-1] if flip else path


def _chain(preds: dict[int, int], root: int, v: int) -> list[int]:
    """Vertices from ``root`` to ``v`` following recorded predecessors."""
    out = [v]
    while v != root:
        v = preds[v]
        out.append(v)
    out.reverse()
    return out


def _join_through(g: OrderedGraph, head: list[int], hub: int, tail: list[int]) -> list[int]:
    """head ends at ``hub``; tail runs from the far endpoint outward.

    Uses the vertex of ``tail`` nearest its start that equals or neighbours
    ``hub``.
    """
    for i, y in enumerate(tail):
        if y == hub:
            return head + tail[:i][::-1]
        if g.has_edge(hub, y):
            return head + tail[: i + 1][::-1]
    raise RuntimeError("no junction vertex on the opposite chain")


def _splice(g: OrderedGraph, s: int, t: int, tr: _Tracker) -> list[int]:
    kind = tr.junction[0]
    if kind == "meet":
        v = tr.junction[1]
        return _chain(tr.pred_s, s, v) + _chain(tr.pred_t, t, v)[::-1][1:]
    if kind == "edge_s":
        _, h, a_t = tr.junction
        return _join_through(g, _chain(tr.pred_s, s, h), h, _chain(tr.pred_t, t, a_t))
    if kind == "edge_t":
        _, h, a_s = tr.junction
        rev = _join_through(g, _chain(tr.pred_t, t, h), h, _chain(tr.pred_s, s, a_s))
        return rev[::-1]
    # horizons: v_s sees past t, v_t sees past s, and the two horizon edges cross
    v_s, v_t = tr.v_s, tr.v_t
    h_s, h_t = rhorizon(g, v_s), lhorizon(g, v_t)
    head = _chain(tr.pred_s, s, v_s)
    tail = _chain(tr.pred_t, t, v_t)[::-1]
    for mid in ([], [h_s, h_t]):
        seq = [v_s, *mid, v_t]
        if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            return head + mid + tail
    raise RuntimeError("horizon edges do not cross")
