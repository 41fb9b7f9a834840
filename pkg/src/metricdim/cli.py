"""Command-line driver.

Subcommands: classify, construct, verify, detect, search, export-dot.  Exit
codes: 0 success (resolving / conclusive), 1 honest negative (not resolving,
search inconclusive), 2 bad input or parameters, 3 internal inconsistency
(verifier disagreement or a tripped invariant).

Parameters are taken exactly as given; (3,4,6) and (4,3,6) are different
inputs even though they describe isomorphic graphs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Any

from . import __version__
from .core import DomainError, InputError, InternalError, Params, classify_cone
from .construction import construct_middle, trace_to_obj
from .domination import domination_report, domination_report_to_obj
from .dot import landmark_graph_to_dot
from .forbidden import (
    KINDS,
    RAINBOW_22_TRIANGLE,
    TRIPLE_LOOP,
    find_all_forbidden,
    predict_resolving_basic,
    predict_resolving_triple_looped,
    witness_is_valid,
    witness_to_obj,
)
from .landmarks import (
    LandmarkSet,
    build_landmark_graph,
    check_basic,
    extend_triple_loop,
    is_resolving_distances,
    is_resolving_footprints,
    landmark_set_from_obj,
    landmark_set_to_obj,
)
from .search import (
    DEFAULT_BUDGET,
    SearchResult,
    exhaustive_min_resolving,
    greedy_resolving,
    search_result_to_obj,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _parse_triple(text: str) -> Params:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"expected three comma-separated integers, got {text!r}")
    try:
        values = [int(part) for part in parts]
    except ValueError as exc:
        raise InputError(f"expected integers in {text!r}") from exc
    return Params(*values)


def _load_landmarks(path: str) -> LandmarkSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return landmark_set_from_obj(obj)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _render_json(obj: Any, indent: int = 0) -> str:
    """json.dumps with flat lists kept on one line; deterministic output."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [
            f'{pad}  {json.dumps(str(key))}: {_render_json(value, indent + 1)}'
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(item, (dict, list)) for item in obj):
            return json.dumps(obj)
        rows = [f"{pad}  {_render_json(item, indent + 1)}" for item in obj]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    return json.dumps(obj)


def _emit_json(obj: Any, out: str | None) -> None:
    _emit(_render_json(obj) + "\n", out)


def _write_manifest(
    args: argparse.Namespace,
    inputs: list[str],
    outputs: list[str],
    seed: int | None,
    started: float,
) -> None:
    if not getattr(args, "manifest", False):
        return
    parameters = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in {"func", "manifest"} and value is not None
    }
    manifest = {
        "command": args.command,
        "version": __version__,
        "parameters": parameters,
        "inputs": inputs,
        "outputs": outputs,
        "seed": seed,
        "duration_seconds": round(time.monotonic() - started, 6),
    }
    path = args.out + ".manifest.json"
    Path(path).write_text(_render_json(manifest) + "\n", encoding="utf-8")


def cmd_classify(args: argparse.Namespace) -> int:
    p = _parse_triple(args.n)
    print(classify_cone(p).value)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    started = time.monotonic()
    if args.trace and not args.out:
        raise InputError("--trace needs --out to name the trace file")
    p = _parse_triple(args.n)
    lset, trace = construct_middle(p)
    if args.plus_one:
        lset = extend_triple_loop(lset)
    outputs = []
    _emit_json(landmark_set_to_obj(lset), args.out)
    if args.out:
        outputs.append(args.out)
    if args.trace:
        trace_path = args.out + ".trace.json"
        _emit_json(trace_to_obj(trace), trace_path)
        outputs.append(trace_path)
    _write_manifest(args, [], outputs, None, started)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    lset = _load_landmarks(args.landmarks)
    results = {}
    if args.method in ("footprint", "both"):
        results["footprint"] = is_resolving_footprints(lset)
    if args.method in ("distance", "both"):
        results["distance"] = is_resolving_distances(lset)
    if len(results) == 2:
        left, right = results["footprint"], results["distance"]
        if left.resolving != right.resolving or left.witness != right.witness:
            raise InternalError(
                "footprint and distance verifiers disagree: "
                f"{left} vs {right}"
            )
    primary = next(iter(results.values()))
    report = domination_report(lset)
    obj = {
        "n": list(lset.params.as_tuple()),
        "method": args.method,
        "resolving": primary.resolving,
        "witness": None
        if primary.witness is None
        else [list(v) for v in primary.witness],
        "results": {
            name: {
                "resolving": res.resolving,
                "witness": None
                if res.witness is None
                else [list(v) for v in res.witness],
            }
            for name, res in results.items()
        },
        "domination": domination_report_to_obj(report),
    }
    _emit_json(obj, args.out)
    if not primary.resolving:
        pair = primary.witness
        print(
            f"not resolving: {pair[0]} and {pair[1]} share all landmark distances",
            file=sys.stderr,
        )
    _write_manifest(
        args, [args.landmarks], [args.out] if args.out else [], None, started
    )
    return EXIT_OK if primary.resolving else EXIT_NEGATIVE


def cmd_detect(args: argparse.Namespace) -> int:
    started = time.monotonic()
    lset = _load_landmarks(args.landmarks)
    graph = build_landmark_graph(lset)
    witnesses = find_all_forbidden(graph)
    for kind in KINDS:
        for witness in witnesses[kind]:
            if not witness_is_valid(graph, witness):
                raise InternalError(f"emitted witness failed revalidation: {witness}")
    basic = check_basic(lset).verdict
    predictions = {"basic_resolving": None, "triple_looped_resolving": None}
    if basic:
        predictions["basic_resolving"] = predict_resolving_basic(lset)
        predictions["triple_looped_resolving"] = predict_resolving_triple_looped(lset)
    notes = []
    if witnesses[TRIPLE_LOOP] and witnesses[RAINBOW_22_TRIANGLE]:
        notes.append(
            "a triple loop together with a rainbow 2-2-triangle forces an "
            "unresolved pair, so this set cannot resolve"
        )
    obj = {
        "n": list(lset.params.as_tuple()),
        "basic": basic,
        "witnesses": {
            kind: [witness_to_obj(graph, w) for w in witnesses[kind]]
            for kind in KINDS
        },
        "counts": {kind: len(witnesses[kind]) for kind in KINDS},
        "predictions": predictions,
        "notes": notes,
    }
    _emit_json(obj, args.out)
    _write_manifest(
        args, [args.landmarks], [args.out] if args.out else [], None, started
    )
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    started = time.monotonic()
    p = _parse_triple(args.n)
    budget = args.budget
    if budget is None:
        env = os.environ.get("METRIC_DIM_BUDGET")
        if env is not None:
            try:
                budget = int(env)
            except ValueError as exc:
                raise InputError(
                    f"METRIC_DIM_BUDGET must be an integer, got {env!r}"
                ) from exc
        else:
            budget = DEFAULT_BUDGET
    if args.mode == "exhaustive":
        result = exhaustive_min_resolving(
            p,
            max_size=args.max_size,
            budget=budget,
            threads=args.threads,
            allow_pruning=args.allow_pruning,
        )
    else:
        best = greedy_resolving(p, seed=args.seed)
        result = SearchResult(
            params=p,
            mode="greedy",
            best=best,
            size=len(best),
            proved_minimum=False,
            refuted_sizes=(),
            subsets_checked=0,
            budget=None,
            seed=args.seed,
        )
    _emit_json(search_result_to_obj(result), args.out)
    _write_manifest(
        args,
        [],
        [args.out] if args.out else [],
        args.seed if args.mode == "greedy" else None,
        started,
    )
    conclusive = result.best is not None
    return EXIT_OK if conclusive else EXIT_NEGATIVE


def cmd_export_dot(args: argparse.Namespace) -> int:
    started = time.monotonic()
    lset = _load_landmarks(args.landmarks)
    graph = build_landmark_graph(lset)
    _emit(landmark_graph_to_dot(graph), args.out)
    _write_manifest(
        args, [args.landmarks], [args.out] if args.out else [], None, started
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metricdim",
        description=(
            "Resolving sets and metric dimension for direct products of "
            "three complete graphs"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument("--out", help="write the primary output to this path")
        cmd.add_argument(
            "--manifest",
            action="store_true",
            help="also write <out>.manifest.json describing the run",
        )

    classify = sub.add_parser("classify", help="name the parameter cone")
    classify.add_argument("--n", required=True, help="n1,n2,n3")
    classify.set_defaults(func=cmd_classify)

    construct = sub.add_parser(
        "construct", help="build the two-block middle-cone landmark set"
    )
    construct.add_argument("--n", required=True, help="n1,n2,n3 (middle cone)")
    construct.add_argument(
        "--plus-one",
        action="store_true",
        help="extend by the triple-loop vertex over bumped parameters",
    )
    construct.add_argument(
        "--trace",
        action="store_true",
        help="also write <out>.trace.json with the construction steps",
    )
    add_common(construct)
    construct.set_defaults(func=cmd_construct)

    verify = sub.add_parser("verify", help="check whether a landmark set resolves")
    verify.add_argument("landmarks", help="landmark-set JSON file")
    verify.add_argument(
        "--method",
        choices=("footprint", "distance", "both"),
        default="both",
    )
    add_common(verify)
    verify.set_defaults(func=cmd_verify)

    detect = sub.add_parser("detect", help="report forbidden shapes in the graph")
    detect.add_argument("landmarks", help="landmark-set JSON file")
    add_common(detect)
    detect.set_defaults(func=cmd_detect)

    search = sub.add_parser("search", help="look for small resolving sets")
    search.add_argument("--n", required=True, help="n1,n2,n3")
    search.add_argument(
        "--mode", choices=("exhaustive", "greedy"), default="exhaustive"
    )
    search.add_argument("--max-size", type=int, default=8)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"subset-step budget (default METRIC_DIM_BUDGET or {DEFAULT_BUDGET})",
    )
    search.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the exhaustive scan; 1 = fully sequential",
    )
    search.add_argument(
        "--allow-pruning",
        action="store_true",
        help="restrict the scan to subsets containing the first vertex",
    )
    add_common(search)
    search.set_defaults(func=cmd_search)

    export = sub.add_parser("export-dot", help="render the landmark graph as DOT")
    export.add_argument("landmarks", help="landmark-set JSON file")
    add_common(export)
    export.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "manifest", False) and not getattr(args, "out", None):
        print("--manifest needs --out", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
