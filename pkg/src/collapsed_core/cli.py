"""Command-line front end.

Exit codes: 0 yes/ok, 1 no/verification failed, 2 error, 3 aborted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .edgelist import parse_witness, read_graph, read_sidecar, write_instance
from .errors import CollapseError
from .generators import (
    Instance,
    add_universal,
    boosted_or_gadget,
    clique_to_collapse,
    or_gadget,
    pad_core_target,
    random_instance,
)
from .graph import degeneracy, k_core
from .outcome import SolverOptions, check_witness
from .runner import ALGORITHMS, load_suite, run_bench, solve_report

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_ABORTED = 0, 1, 2, 3
_EXIT_BY_DECISION = {"yes": EXIT_YES, "no": EXIT_NO, "aborted": EXIT_ABORTED}

log = logging.getLogger("collapsed_core")


def _setup_logging() -> None:
    level = os.environ.get("COLLAPSE_LOG", "off").lower()
    if level == "off":
        logging.getLogger("collapsed_core").addHandler(logging.NullHandler())
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("collapsed_core")
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if level == "trace" else logging.INFO)


def _emit(obj) -> None:
    if hasattr(obj, "to_json"):
        print(obj.to_json())
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _params(args, *names):
    """Fill b/x/k from the input's sidecar when not given on the command line."""
    sidecar = read_sidecar(args.input) or {}
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            value = sidecar.get(name)
        if value is None:
            raise CollapseError(f"--{name} is required (no sidecar value)")
        values.append(value)
    return values


def cmd_core(args) -> int:
    G = read_graph(args.input)
    peel = k_core(G, args.k)
    result = {
        "k": args.k,
        "core_size": len(peel.core),
        "core": sorted(peel.core),
        "degeneracy": degeneracy(G),
        "elimination_order": [list(e) for e in peel.eliminated],
    }
    if args.json:
        _emit(result)
    else:
        print(f"core size: {result['core_size']}")
        print("core: " + " ".join(map(str, result["core"])))
        print(f"degeneracy: {result['degeneracy']}")
        print("elimination order: " + " ".join(f"{v}:{d}" for v, d in peel.eliminated))
    return 0


def cmd_solve(args) -> int:
    G = read_graph(args.input)
    b, x, k = _params(args, "b", "x", "k")
    label = args.label or (read_sidecar(args.input) or {}).get("label") or Path(args.input).name
    options = SolverOptions(disable_q_bound=args.disable_q_bound, node_budget=args.node_budget)
    report = solve_report(G, b, x, k, args.algorithm, label, options)
    _emit(report)
    return _EXIT_BY_DECISION[report.decision]


def cmd_verify(args) -> int:
    G = read_graph(args.input)
    b, x, k = _params(args, "b", "x", "k")
    witness = parse_witness(Path(args.witness).read_text(), G.n)
    ok, residual, collapsed = check_witness(G, k, b, x, witness)
    result = {"valid": ok, "witness_size": len(witness), "residual_core_size": residual,
              "collapsed_count": collapsed}
    if args.json:
        _emit(result)
    else:
        print(f"{'valid' if ok else 'invalid'}: |S|={len(witness)} (b={b}), "
              f"residual core {residual} (x={x}), collapsed {collapsed}")
    return EXIT_YES if ok else EXIT_NO


def _input_instance(args) -> Instance:
    G = read_graph(args.input)
    meta = read_sidecar(args.input) or {}
    b = args.b if args.b is not None else meta.get("b", 0)
    x = args.x if args.x is not None else meta.get("x", 0)
    k = args.k if args.k is not None else meta.get("k", 2)
    return Instance(G, b, x, k, meta.get("label") or Path(args.input).name)


def cmd_gen(args) -> int:
    if args.kind == "random":
        inst = random_instance(args.seed, args.n_max, args.density, args.b_max, args.x_max,
                               args.k, args.m_max)
    elif args.kind == "pad":
        inst = pad_core_target(_input_instance(args), args.x_new)
    elif args.kind == "universal":
        inst = add_universal(_input_instance(args))
    elif args.kind == "clique":
        inst = clique_to_collapse(read_graph(args.input), args.p, args.k)
    else:
        G = boosted_or_gadget() if args.boosted else or_gadget()
        inst = Instance(G, args.b, args.x, args.k, "or-gadget" + ("-boosted" if args.boosted else ""))
    sidecar = write_instance(args.output, inst)
    if args.json:
        _emit({"output": str(args.output), "sidecar": str(sidecar), **inst.sidecar(),
               "n": inst.graph.n, "m": inst.graph.m})
    return 0


def cmd_bench(args) -> int:
    suite, base = load_suite(args.suite)
    errors = 0
    for line in run_bench(suite, base):
        _emit(line)
        if isinstance(line, dict) and "summary" in line:
            errors = line["summary"]["errors"]
    return EXIT_ERROR if errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="collapse-core", description="Collapsed k-Core solver")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, graph=True):
        if graph:
            p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("core", help="k-core, degeneracy and elimination order")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("solve", help="decide an instance and print a JSON run report")
    common(p)
    p.add_argument("--b", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--node-budget", type=int, default=0)
    p.add_argument("--disable-q-bound", action="store_true")
    p.add_argument("--label")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a witness deletion set")
    common(p)
    p.add_argument("--b", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--witness", required=True, help="file with one vertex id per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance plus JSON sidecar")
    p.add_argument("kind", choices=["random", "pad", "universal", "clique", "or-gadget"])
    p.add_argument("--output", required=True)
    p.add_argument("--input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--b-max", type=int, default=3)
    p.add_argument("--x-max", type=int, default=3)
    p.add_argument("--b", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x-new", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--boosted", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a JSON suite, print JSON lines")
    p.add_argument("--suite", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def _check_gen_args(args, parser) -> None:
    if args.command != "gen":
        return
    need = {
        "random": ["k"],
        "pad": ["input", "x_new"],
        "universal": ["input"],
        "clique": ["input", "p", "k"],
        "or-gadget": ["b", "x", "k"],
    }[args.kind]
    missing = [n for n in need if getattr(args, n) is None]
    if missing:
        parser.error(f"gen {args.kind} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_gen_args(args, parser)
    try:
        return args.func(args)
    except (CollapseError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
