"""``terravis`` command line: build, check, sp, domset, gen, oracle.

Exit codes: 0 success, 1 a property or oracle check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import generate
from .errors import NotAFunnel, TerravisError, XViolation
from .fixtures import FIXTURES, get_fixture
from .funnel import (
    BRUTE_FORCE_MAX_N,
    DPStats,
    Funnel,
    base_lemma_violation,
    brute_force_dominating_set,
    dominates,
    dp_pair_bound,
    funnel_from_chains,
    funnel_from_terrain,
    labels_to_vertices,
    min_dominating_set,
)
from .graph import (
    OrderedGraph,
    bfs_distance,
    check_bar_property,
    check_x_property,
    find_antihole,
    is_persistent,
)
from .sp import INF, MODES, BINSEARCH, Counters, precompute_closest, shortest_distance, shortest_path
from .terrain import Terrain, build_visibility_graph, naive_visibility_graph, parse_terrain

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Instance:
    source: str
    terrain: Terrain | None = None
    graph: OrderedGraph | None = None
    funnel: Funnel | None = None

    def get_graph(self) -> OrderedGraph:
        if self.graph is None:
            if self.funnel is not None:
                self.graph = self.funnel.graph
            else:
                self.graph = build_visibility_graph(self.terrain)
        return self.graph

    def get_funnel(self) -> Funnel:
        if self.funnel is not None:
            return self.funnel
        if self.terrain is not None:
            return funnel_from_terrain(self.terrain)
        raise NotAFunnel("no-convex", "plain graph input carries no funnel structure")


def load_text(text: str, source: str) -> Instance:
    """Detect the format: terrain text, graph JSON or funnel JSON."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if "nL" in doc:
            f = funnel_from_chains(doc["nL"], doc["nR"], doc["edges"], doc.get("coordinates"))
            return Instance(source, terrain=f.terrain, funnel=f)
        return Instance(source, graph=OrderedGraph.from_json(doc))
    return Instance(source, terrain=parse_terrain(text))


def load_instance(path: str | None, fixture: str | None) -> Instance:
    if (path is None) == (fixture is None):
        raise UsageError("give exactly one of an input file or --fixture")
    if fixture is not None:
        fx = get_fixture(fixture)
        if fx.terrain is not None:
            return Instance(fixture, terrain=fx.terrain)
        return Instance(fixture, graph=fx.graph)
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return load_text(text, path)


def default_seed() -> int:
    raw = os.environ.get("TERRAVIS_SEED")
    return int(raw) if raw else 0


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def report(command: str, inputs: list[str], result, counters: dict, t0: float) -> str:
    doc = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "counters": counters,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    return json.dumps(doc) + "\n"


def _fmt_dist(d) -> str:
    return "inf" if d == INF else str(d)


# -- build -------------------------------------------------------------------


def cmd_build(args) -> int:
    inst = load_instance(args.input, args.fixture)
    g = inst.get_graph()
    if args.format == "dot":
        emit(g.to_dot(), args.out)
    else:
        emit(g.dumps(), args.out)
    return EXIT_OK


# -- check -------------------------------------------------------------------


def _parse_properties(text: str) -> list[tuple[str, int | None]]:
    props = []
    for item in filter(None, (p.strip() for p in text.split(","))):
        if item.startswith("antihole="):
            k = int(item.split("=", 1)[1])
            if k < 5:
                raise UsageError("antihole size must be at least 5")
            props.append(("antihole", k))
        elif item in ("x", "bar", "persistent"):
            props.append((item, None))
        else:
            raise UsageError(f"unknown property {item!r}")
    if not props:
        raise UsageError("no properties requested")
    return props


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    props = _parse_properties(args.properties)
    inst = load_instance(args.input, args.fixture)
    g = inst.get_graph()
    results = []
    for name, k in props:
        if name == "x":
            w = check_x_property(g)
        elif name == "bar":
            w = check_bar_property(g)
        elif name == "persistent":
            w = is_persistent(g)[1]
        else:
            # an antihole is a failure of the "no antihole" property
            w = find_antihole(g, k)
        label = name if k is None else f"{name}={k}"
        results.append({"property": label, "pass": w is None,
                        "witness": None if w is None else w.to_json()})
    if args.format == "json":
        sys.stdout.write(report("check", [inst.source], results, {}, t0))
    else:
        for r in results:
            line = f"{r['property']}: {'pass' if r['pass'] else 'fail'}"
            if r["witness"] is not None:
                line += f" {r['witness']['kind']} {r['witness']['vertices']}"
            print(line)
    return EXIT_OK if all(r["pass"] for r in results) else EXIT_FAIL


# -- sp ----------------------------------------------------------------------


def cmd_sp(args) -> int:
    t0 = time.perf_counter()
    pos = list(args.args)
    want = 2 if args.fixture else 3
    if len(pos) != want:
        raise UsageError("usage: sp [FILE | --fixture NAME] s t")
    path_arg = None if args.fixture else pos.pop(0)
    try:
        s, t = int(pos[0]), int(pos[1])
    except ValueError:
        raise UsageError("s and t must be integers") from None
    inst = load_instance(path_arg, args.fixture)
    g = inst.get_graph()
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise UsageError(f"vertices must lie in 0..{g.n - 1}")
    if not args.no_verify:
        w = check_x_property(g)
        if w is not None:
            if args.format == "json":
                doc = {"error": "XViolation", "witness": w.to_json()}
                sys.stdout.write(report("sp", [inst.source], doc, {}, t0))
            else:
                print(f"XViolation {w.vertices}", file=sys.stderr)
            return EXIT_FAIL
    counters = Counters()
    if args.path:
        path = shortest_path(g, s, t, args.mode, counters=counters)
        d = INF if path is None else len(path) - 1
    else:
        path = None
        d = shortest_distance(g, s, t, args.mode, counters=counters)
    if args.format == "json":
        result = {"s": s, "t": t, "distance": _fmt_dist(d) if d == INF else d, "mode": args.mode}
        if args.path:
            result["path"] = path
        sys.stdout.write(report("sp", [inst.source], result, counters.to_json(), t0))
        return EXIT_OK
    print(_fmt_dist(d))
    if args.path:
        print("path: " + ("none" if path is None else " ".join(map(str, path))))
    if args.counters:
        print(json.dumps(counters.to_json()))
    return EXIT_OK


# -- domset ------------------------------------------------------------------


def cmd_domset(args) -> int:
    t0 = time.perf_counter()
    inst = load_instance(args.input, args.fixture)
    f = inst.get_funnel()
    stats = DPStats()
    labels = min_dominating_set(f, stats)
    pairs = [[c, i] for c, i in labels]
    if args.format == "json":
        result = {"size": len(labels), "set": pairs}
        counters = {"pair_evaluations": stats.pair_evaluations, "cells": stats.cells}
        sys.stdout.write(report("domset", [inst.source], result, counters, t0))
    else:
        print(f"size {len(labels)}")
        print(json.dumps(pairs))
    return EXIT_OK


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    t0 = time.perf_counter()
    seed = default_seed() if args.seed is None else args.seed
    rng = generate.trial_rng(seed, 0)
    if args.kind == "terrain":
        t = generate.random_terrain(args.n, rng, args.coord_range)
    else:
        t = generate.random_funnel_terrain(args.n, rng, args.coord_range)
    if args.format == "json":
        result = {"kind": args.kind, "seed": seed, "points": [[str(p.x), str(p.y)] for p in t.points]}
        emit(report("gen", [], result, {}, t0), args.out)
    else:
        emit(t.to_text(), args.out)
    return EXIT_OK


# -- oracle ------------------------------------------------------------------

SUITES = ("sp", "domset", "properties")
SP_PAIRS_PER_TRIAL = 30
ANTIHOLE_SIZES = (6, 7)


def _sp_trial(seed: int, i: int, max_n: int) -> dict | None:
    rng = generate.trial_rng(seed, i)
    n = rng.randint(2, max(2, max_n))
    if rng.random() < 0.5:
        t = generate.random_terrain(n, rng)
    else:
        t = generate.random_walk_terrain(n, rng)
    g = build_visibility_graph(t)
    if rng.random() < 0.3:
        g = generate.random_induced_subgraph(g, rng)
    if n * n <= SP_PAIRS_PER_TRIAL:
        pairs = [(s, u) for s in range(g.n) for u in range(g.n)]
    else:
        pairs = [(rng.randrange(g.n), rng.randrange(g.n)) for _ in range(SP_PAIRS_PER_TRIAL)]
    table = precompute_closest(g)
    for s, u in pairs:
        want = bfs_distance(g, s, u)
        for mode in MODES:
            c = Counters()
            got = shortest_distance(g, s, u, mode, table=table if mode != BINSEARCH else None, counters=c)
            if got != want:
                return {"graph": g.to_json(), "s": s, "t": u, "mode": mode,
                        "expected": _fmt_dist(want), "got": _fmt_dist(got)}
            if want != INF and s != u and (c.iterations > want + 1 or c.queue_pushes > 2 * (want + 1)):
                return {"graph": g.to_json(), "s": s, "t": u, "mode": mode,
                        "counter_bound": c.to_json(), "distance": want}
        path = shortest_path(g, s, u)
        if (path is None) != (want == INF) or (path is not None and not _valid_path(g, path, s, u, want)):
            return {"graph": g.to_json(), "s": s, "t": u, "path": path, "distance": _fmt_dist(want)}
    return None


def _valid_path(g: OrderedGraph, path: list[int], s: int, t: int, d) -> bool:
    return (path[0] == s and path[-1] == t and len(path) - 1 == d
            and all(g.has_edge(a, b) for a, b in zip(path, path[1:])))


def _domset_trial(seed: int, i: int, max_n: int) -> dict | None:
    rng = generate.trial_rng(seed, i)
    n = rng.randint(3, max(3, min(max_n, BRUTE_FORCE_MAX_N)))
    f = generate.random_funnel(n, rng)
    stats = DPStats()
    labels = min_dominating_set(f, stats)
    chosen = labels_to_vertices(f, labels)
    best = brute_force_dominating_set(f.graph)
    if len(chosen) != len(best) or not dominates(f.graph, chosen):
        return {"funnel": f.to_json(), "dp": [list(x) for x in labels], "brute_force": list(best)}
    if stats.pair_evaluations > dp_pair_bound(f):
        return {"funnel": f.to_json(), "pair_evaluations": stats.pair_evaluations,
                "bound": dp_pair_bound(f)}
    bad = base_lemma_violation(f)
    if bad is not None:
        return {"funnel": f.to_json(), "base_lemma": list(bad)}
    return None


def _properties_trial(seed: int, i: int, max_n: int) -> dict | None:
    rng = generate.trial_rng(seed, i)
    n = rng.randint(2, max(2, max_n))
    t = generate.random_terrain(n, rng)
    g = build_visibility_graph(t)
    doc = {"terrain": t.to_text()}
    if g != naive_visibility_graph(t):
        return {**doc, "failure": "sweep and naive constructions differ"}
    ok, w = is_persistent(g)
    if not ok:
        return {**doc, "failure": "not persistent", "witness": w.to_json()}
    for k in ANTIHOLE_SIZES:
        if k <= g.n:
            w = find_antihole(g, k)
            if w is not None:
                return {**doc, "failure": f"antihole of size {k}", "witness": w.to_json()}
    return None


_TRIALS = {"sp": _sp_trial, "domset": _domset_trial, "properties": _properties_trial}


def _run_trial(job: tuple[str, int, int, int]) -> tuple[int, dict | None]:
    suite, seed, i, max_n = job
    return i, _TRIALS[suite](seed, i, max_n)


def run_oracle(suite: str, trials: int, max_n: int, seed: int, jobs: int = 1) -> dict:
    """Run a randomized campaign; the reported failure is the lowest trial index."""
    work = [(suite, seed, i, max_n) for i in range(trials)]
    failures: list[tuple[int, dict]] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, bad in pool.map(_run_trial, work, chunksize=max(1, trials // (4 * jobs))):
                if bad is not None:
                    failures.append((i, bad))
    else:
        for job in work:
            i, bad = _run_trial(job)
            if bad is not None:
                failures.append((i, bad))
                break
    summary = {"suite": suite, "trials": trials, "max_n": max_n, "seed": seed, "pass": not failures}
    if failures:
        i, bad = min(failures, key=lambda p: p[0])
        summary["counterexample"] = {"trial": i, "replay": f"--seed {seed} trial {i}", **bad}
    return summary


def cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    seed = default_seed() if args.seed is None else args.seed
    if args.trials < 0 or args.max_n < 2:
        raise UsageError("need --trials >= 0 and --max-n >= 2")
    summary = run_oracle(args.suite, args.trials, args.max_n, seed, args.jobs)
    if args.format == "json":
        sys.stdout.write(report("oracle", [], summary, {"trials": args.trials}, t0))
    elif summary["pass"]:
        print(f"oracle {args.suite}: pass ({args.trials} trials, seed {seed})")
    else:
        print(f"oracle {args.suite}: FAIL")
        print(json.dumps(summary["counterexample"]))
    return EXIT_OK if summary["pass"] else EXIT_FAIL


# -- wiring ------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("input", nargs="?", help="terrain text, graph JSON or funnel JSON ('-' for stdin)")
    p.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in example instance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="terravis", description="Terrain visibility graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="visibility graph of a terrain")
    _add_input(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="X, bar, persistence and antihole checks")
    _add_input(p)
    p.add_argument("--properties", default="x,bar,persistent")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sp", help="shortest path distance in a terrain-like graph")
    p.add_argument("args", nargs="+", metavar="[FILE] s t")
    _add_input(p, positional=False)
    p.add_argument("--mode", choices=MODES, default=BINSEARCH)
    p.add_argument("--path", action="store_true")
    p.add_argument("--counters", action="store_true")
    p.add_argument("--no-verify", action="store_true", help="skip the X-property check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sp)

    p = sub.add_parser("domset", help="minimum dominating set of a funnel")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_domset)

    p = sub.add_parser("gen", help="seeded random terrain or funnel")
    p.add_argument("--kind", choices=("terrain", "funnel"), default="terrain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--coord-range", type=int, default=generate.DEFAULT_COORD_RANGE)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="randomized cross-checks against brute force")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAFunnel as e:
        print(f"error: NotAFunnel({e.reason}) {e}", file=sys.stderr)
    except XViolation as e:
        print(f"XViolation {e.witness.vertices}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, TerravisError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
