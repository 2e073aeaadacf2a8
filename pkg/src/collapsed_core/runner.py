"""Algorithm dispatch and the JSON-lines benchmark runner."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterator

from .edgelist import read_graph, read_sidecar
from .errors import CollapseError, IncompatibleAlgorithmError
from .generators import Instance, boosted_or_gadget, or_gadget, random_instance
from .graph import Graph
from .k1 import solve_k1
from .k2 import solve_k2
from .oracle import solve_brute
from .outcome import Decision, Outcome, SolverOptions
from .report import RunReport

log = logging.getLogger(__name__)

ALGORITHMS = ("auto", "branch-k1", "branch-k2", "brute")


def resolve_algorithm(algorithm: str, k: int) -> str:
    if algorithm not in ALGORITHMS:
        raise IncompatibleAlgorithmError(f"unknown algorithm {algorithm!r}")
    if algorithm == "auto":
        return {1: "branch-k1", 2: "branch-k2"}.get(k, "brute")
    if algorithm == "branch-k1" and k != 1:
        raise IncompatibleAlgorithmError(f"branch-k1 needs k=1, got k={k}")
    if algorithm == "branch-k2" and k != 2:
        raise IncompatibleAlgorithmError(f"branch-k2 needs k=2, got k={k}")
    return algorithm


def run_algorithm(
    G: Graph, b: int, x: int, k: int, algorithm: str, options: SolverOptions | None = None
) -> tuple[str, Outcome]:
    name = resolve_algorithm(algorithm, k)
    log.info("solving n=%d m=%d b=%d x=%d k=%d with %s", G.n, G.m, b, x, k, name)
    if name == "branch-k1":
        outcome = solve_k1(G, b, x, options)
    elif name == "branch-k2":
        outcome = solve_k2(G, b, x, options)
    else:
        outcome = solve_brute(G, b, x, k)
    log.debug("stats %s", outcome.stats)
    return name, outcome


def solve_report(
    G: Graph, b: int, x: int, k: int, algorithm: str, label: str, options: SolverOptions | None = None
) -> RunReport:
    name, outcome = run_algorithm(G, b, x, k, algorithm, options)
    return RunReport.from_outcome(G, b, x, k, label, name, outcome)


def load_suite_instances(entry: dict, base: Path) -> list[Instance]:
    """Expand one suite entry into instances.

    ``{"path": ...}`` reads an edge list (b/x/k from the entry, else the
    sidecar); ``{"generator": "random", ...}`` takes ``seed`` or an inclusive
    ``seeds: [lo, hi]`` range; ``{"generator": "or_gadget" | "boosted_or_gadget"}``
    needs b, x and k.
    """
    if "path" in entry:
        path = base / entry["path"]
        G = read_graph(path)
        meta = {**(read_sidecar(path) or {}), **entry}
        return [Instance(G, meta["b"], meta["x"], meta["k"], meta.get("label") or path.name)]
    kind = entry.get("generator")
    if kind == "random":
        if "seeds" in entry:
            lo, hi = entry["seeds"]
            seeds = range(lo, hi + 1)
        else:
            seeds = [entry["seed"]]
        return [
            random_instance(
                s,
                entry["n_max"],
                entry["density"],
                entry["b_max"],
                entry["x_max"],
                entry["k"],
                entry.get("m_max"),
            )
            for s in seeds
        ]
    if kind in ("or_gadget", "boosted_or_gadget"):
        G = or_gadget() if kind == "or_gadget" else boosted_or_gadget()
        return [Instance(G, entry["b"], entry["x"], entry["k"], entry.get("label", kind))]
    raise CollapseError(f"unknown suite entry {entry!r}")


def run_bench(suite: dict, base: Path = Path(".")) -> Iterator[dict | RunReport]:
    """Yield one RunReport (or error dict) per (instance, algorithm), then a summary dict."""
    algorithms = suite.get("algorithms", ["auto"])
    options = SolverOptions(
        disable_q_bound=suite.get("disable_q_bound", False),
        node_budget=suite.get("node_budget", 0),
    )
    totals = {"instances": 0, "runs": 0, "yes": 0, "no": 0, "aborted": 0,
              "errors": 0, "disagreements": 0, "unverified_yes": 0}
    for entry in suite.get("instances", []):
        try:
            instances = load_suite_instances(entry, base)
        except (CollapseError, OSError, KeyError, ValueError) as exc:
            totals["errors"] += 1
            yield {"entry": entry, "error": f"{type(exc).__name__}: {exc}"}
            continue
        for inst in instances:
            totals["instances"] += 1
            decisions = set()
            for algorithm in algorithms:
                totals["runs"] += 1
                try:
                    report = solve_report(inst.graph, inst.b, inst.x, inst.k, algorithm, inst.label, options)
                except CollapseError as exc:
                    totals["errors"] += 1
                    yield {"label": inst.label, "algorithm": algorithm,
                           "error": f"{type(exc).__name__}: {exc}"}
                    continue
                totals[report.decision] += 1
                if report.decision == Decision.YES.value and not report.verified:
                    totals["unverified_yes"] += 1
                if report.decision != Decision.ABORTED.value:
                    decisions.add(report.decision)
                yield report
            if len(decisions) > 1:
                totals["disagreements"] += 1
    yield {"summary": totals}


def load_suite(path: str | Path) -> tuple[dict, Path]:
    path = Path(path)
    return json.loads(path.read_text()), path.parent
