"""Command-line interface: solve, oracle, classify, crosscheck, gen, serve.

Exit codes: 0 ok, 1 crosscheck disagreement, 2 input error, 3 resource
guard.  ``--json`` switches reports to line-delimited JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .closed_form import cycle_outcome, path_outcome
from .crosscheck import run_crosscheck
from .engine import Engine, EngineCapacityError, EngineError
from .forest import explain
from .graph import GraphClass, classify_graph
from .instances import (
    InstanceFile,
    InstanceParseError,
    generate_random_forest,
    generate_random_tree,
    parse_instance,
    serialize_instance,
)
from .position import IllegalStateError, Player

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

DEFAULT_GUARD = 14


def _read_instance(path: str) -> InstanceFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _guard_unclaimed(inst: InstanceFile, limit: int) -> Optional[int]:
    unclaimed = len(inst.position().unclaimed())
    return unclaimed if unclaimed > limit else None


def cmd_solve(args) -> int:
    inst = _read_instance(args.file)
    cls = classify_graph(inst.graph)
    fresh = not inst.has_claims and inst.turn is Player.A
    n = inst.graph.vertex_count
    if fresh and cls is GraphClass.SINGLE_PATH:
        ans = path_outcome(n)
        _emit(args, {"command": "solve", "n": n, "class": cls.value, "outcome": ans.outcome.value, "rule": ans.rule},
              [f"{cls.value} on {n} vertices", f"outcome {ans.outcome.value} (rule: {ans.rule})"])
        return EXIT_OK
    if fresh and cls is GraphClass.SINGLE_CYCLE:
        ans = cycle_outcome(n)
        _emit(args, {"command": "solve", "n": n, "class": cls.value, "outcome": ans.outcome.value, "rule": ans.rule},
              [f"{cls.value} on {n} vertices", f"outcome {ans.outcome.value} (rule: {ans.rule})"])
        return EXIT_OK
    if fresh and cls is GraphClass.FOREST:
        trace = explain(inst.graph)
        _emit(args, {"command": "solve", "n": n, "class": cls.value, "outcome": trace.outcome.value,
                     "rule": trace.rule, "trace": trace.lines},
              [f"{cls.value} on {n} vertices"] + trace.lines)
        return EXIT_OK
    over = _guard_unclaimed(inst, args.max_unclaimed)
    if over is not None:
        print(f"refused: {over} unclaimed vertices exceed the oracle guard of {args.max_unclaimed} "
              f"(raise with --max-unclaimed)", file=sys.stderr)
        return EXIT_GUARD
    engine = Engine(inst.graph)
    value = engine.solve(inst.pointed())
    _emit(args, {"command": "solve", "n": n, "class": cls.value, "outcome": value.outcome.value,
                 "value": value.name, "rule": "oracle"},
          [f"{cls.value} on {n} vertices",
           f"oracle value {value.name}", f"outcome {value.outcome.value} (rule: oracle)"])
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .position import PointedPosition

    inst = _read_instance(args.file)
    turn = Player(args.turn) if args.turn else inst.turn
    pp = PointedPosition(inst.position(), turn)
    over = _guard_unclaimed(inst, args.max_unclaimed)
    if over is not None:
        print(f"refused: {over} unclaimed vertices exceed the oracle guard of {args.max_unclaimed}",
              file=sys.stderr)
        return EXIT_GUARD
    engine = Engine(inst.graph)
    value = engine.solve(pp)
    stats = engine.stats
    _emit(args, {"command": "oracle", "turn": turn.value, "value": value.name,
                 "outcome": value.outcome.value, "nodes": stats.nodes_expanded,
                 "memo_entries": stats.memo_entries},
          [f"turn {turn.value}", f"value {value.name}", f"outcome {value.outcome.value}",
           f"nodes expanded {stats.nodes_expanded}, memo entries {stats.memo_entries}"])
    return EXIT_OK


def cmd_classify(args) -> int:
    inst = _read_instance(args.file)
    if not inst.graph.is_forest():
        print("classify requires a forest", file=sys.stderr)
        return EXIT_INPUT
    trace = explain(inst.graph, exhaustive_candidates=args.exhaustive)
    payload = {"command": "classify", "outcome": trace.outcome.value, "rule": trace.rule,
               "trace": trace.lines}
    if trace.decomposition is not None:
        payload["skeleton_components"] = [list(c) for c in trace.decomposition.skeleton_components]
    _emit(args, payload, trace.lines)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    report = run_crosscheck(args.max_n, args.samples, args.seed, jobs=args.jobs)
    if args.json:
        for row in report.rows:
            print(json.dumps(row._asdict()))
        print(json.dumps({"instances": report.instance_count, "agreements": report.agreements,
                          "disagreements": report.disagreements, "seed": report.seed}))
    else:
        for row in report.rows:
            if not row.agree:
                print(f"DISAGREE n={row.n} digest={row.digest} solver={row.solver} oracle={row.oracle}")
        print(f"{report.instance_count} instances, {report.agreements} agree, "
              f"{report.disagreements} disagree (seed={report.seed})")
    return EXIT_OK if report.all_agree else EXIT_DISAGREEMENT


def cmd_gen(args) -> int:
    if args.forest:
        g = generate_random_forest(args.n, args.forest, args.seed)
    else:
        g = generate_random_tree(args.n, args.seed)
    sys.stdout.write(serialize_instance(InstanceFile(graph=g)))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(max_unclaimed=args.max_unclaimed), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domgame", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="dispatch to closed form / forest pipeline / oracle")
    p.add_argument("file")
    p.add_argument("--max-unclaimed", type=int, default=DEFAULT_GUARD)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exact engine value of the instance position")
    p.add_argument("file")
    p.add_argument("--turn", choices=["A", "B"])
    p.add_argument("--max-unclaimed", type=int, default=DEFAULT_GUARD)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("classify", help="skeleton decomposition and favorability trace")
    p.add_argument("file")
    p.add_argument("--exhaustive", action="store_true",
                   help="classify every support adjacent to a skeleton leaf")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("crosscheck", help="forest solver vs oracle over a corpus")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("gen", help="generate a random tree or forest instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--forest", type=int, default=0, metavar="C",
                   help="number of components (default: single tree)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("serve", help="run the interactive play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--max-unclaimed", type=int, default=DEFAULT_GUARD)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceParseError, FileNotFoundError, IllegalStateError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineCapacityError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
