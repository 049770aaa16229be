"""Command-line interface.

Subcommands::

    degseq check        decide instances read from files or stdin
    degseq realize      build an explicit graph for a degree sequence
    degseq cross-check  compare the fast deciders against the brute-force oracle
    degseq bench        time the forcible scan and fit a growth exponent

Instances are JSON objects ``{"a": [...], "b": [...], "name": "..."}``
(``b`` omitted means ``b = a``), a JSON array of such objects, one JSON
object per line, or — with ``--format lines`` — plain text lines of the
form ``a1,a2,... / b1,b2,...``.  All forms parse to the same instances.

Exit codes: 0 all decisions yes (or all cross-checks agree), 1 some
decision no, 2 some decision not-applicable, 64 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import _backend
from .bench import run_bench
from .egcore import NotGraphicError, eg_slacks, is_graphic, realize
from .intervals import (
    IntervalInstance,
    Verdict,
    check_forcible,
    check_forcible_orderB,
    check_gy_necessary,
    check_gy_sufficient,
    check_potential,
)
from .oracle import (
    InstanceGenConfig,
    brute_force_forcible,
    brute_force_potential,
    gen_instances,
    resolve_volume_cap,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_NOT_APPLICABLE = 2
EXIT_INPUT_ERROR = 64

CHECK_MODES = (
    "forcible",
    "potential",
    "orderB",
    "gy-necessary",
    "gy-sufficient",
    "graphic",
)


class InputError(ValueError):
    pass


def _parse_int_list(text: str) -> list[int]:
    items = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not items:
        raise InputError("empty integer list")
    try:
        return [int(tok) for tok in items]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def _instance_from_obj(obj, default_name: str) -> tuple[str, IntervalInstance]:
    if not isinstance(obj, dict):
        raise InputError("instance document must be a JSON object")
    if "a" not in obj:
        raise InputError("instance document lacks the 'a' field")
    a = obj["a"]
    b = obj.get("b", a)
    if not isinstance(a, list) or not isinstance(b, list):
        raise InputError("'a' and 'b' must be arrays of integers")
    name = obj.get("name") or default_name
    try:
        return str(name), IntervalInstance(tuple(a), tuple(b))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _parse_line(line: str, default_name: str) -> tuple[str, IntervalInstance]:
    parts = line.split("/")
    if len(parts) > 2:
        raise InputError("line format takes at most one '/' separator")
    a = _parse_int_list(parts[0])
    b = _parse_int_list(parts[1]) if len(parts) == 2 else list(a)
    try:
        return default_name, IntervalInstance(tuple(a), tuple(b))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_documents(text: str, fmt: str) -> tuple[list[tuple[str, IntervalInstance]], list[str]]:
    """Parse instance documents; returns (instances, record errors)."""
    instances: list[tuple[str, IntervalInstance]] = []
    errors: list[str] = []
    if fmt == "lines":
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                instances.append(_parse_line(line, f"instance-{len(instances)}"))
            except InputError as exc:
                errors.append(f"line {lineno}: {exc}")
        return instances, errors
    # obj format: one JSON value (object or array), else one object per line
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict):
        data = [data]
    if isinstance(data, list):
        for k, obj in enumerate(data):
            try:
                instances.append(_instance_from_obj(obj, f"instance-{k}"))
            except InputError as exc:
                errors.append(f"document {k}: {exc}")
        return instances, errors
    if data is not None:
        return [], ["top-level JSON must be an object or an array of objects"]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        try:
            instances.append(_instance_from_obj(obj, f"instance-{len(instances)}"))
        except InputError as exc:
            errors.append(f"line {lineno}: {exc}")
    return instances, errors


def _read_inputs(paths: list[str]) -> str:
    if not paths or paths == ["-"]:
        return sys.stdin.read()
    chunks = []
    for path in paths:
        if path == "-":
            chunks.append(sys.stdin.read())
        else:
            with open(path, "r", encoding="utf-8") as fh:
                chunks.append(fh.read())
    return "\n".join(chunks)


def _decision_str(verdict: Verdict) -> str:
    if verdict.decision == "yes" and verdict.vacuous:
        return "vacuous-yes"
    return verdict.decision


def _slack_pairs(slacks, t_start: int):
    if slacks is None:
        return None
    return [[t_start + i, s] for i, s in enumerate(slacks)]


def _check_graphic(inst: IntervalInstance, name: str, explain: bool) -> dict:
    if not inst.is_point:
        raise InputError(f"{name}: mode graphic needs a single sequence (a == b)")
    seq = list(inst.a)
    doc: dict = {"name": name, "mode": "graphic"}
    if sum(seq) % 2:
        doc["decision"] = "no"
        doc["failing_t"] = None
        doc["reason"] = "odd sum"
    else:
        slacks = eg_slacks(seq)
        bad = [t for t, s in enumerate(slacks, start=1) if s < 0]
        doc["decision"] = "no" if bad else "yes"
        doc["failing_t"] = bad[0] if bad else None
        if explain:
            doc["slacks"] = _slack_pairs(slacks, 1)
    return doc


def cmd_check(args: argparse.Namespace) -> int:
    text = _read_inputs(args.inputs)
    instances, errors = parse_documents(text, args.format)
    for err in errors:
        print(f"degseq: input error: {err}", file=sys.stderr)
    worst = EXIT_INPUT_ERROR if errors else EXIT_YES
    for name, inst in instances:
        start = time.perf_counter()
        try:
            if args.mode == "graphic":
                doc = _check_graphic(inst, name, args.explain)
            else:
                doc = _check_instance(inst, name, args)
        except InputError as exc:
            print(f"degseq: input error: {exc}", file=sys.stderr)
            worst = EXIT_INPUT_ERROR
            continue
        doc["timing_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
        print(json.dumps(doc))
        if worst != EXIT_INPUT_ERROR:
            if doc["decision"] == "no":
                worst = EXIT_NO
            elif doc["decision"] == "not-applicable" and worst == EXIT_YES:
                worst = EXIT_NOT_APPLICABLE
    return worst


def _check_instance(inst: IntervalInstance, name: str, args: argparse.Namespace) -> dict:
    mode = args.mode
    explain = args.explain
    if mode == "forcible":
        verdict = check_forcible(
            inst,
            backend=args.backend,
            explain=explain,
            witness=args.witness,
            volume_cap=args.volume_cap,
        )
        t_start = 1
    elif mode == "potential":
        verdict = check_potential(inst, backend=args.backend, explain=explain)
        t_start = 0
    elif mode == "orderB":
        verdict = check_forcible_orderB(inst, explain=explain)
        t_start = 1
    elif mode == "gy-necessary":
        verdict = check_gy_necessary(inst, explain=explain)
        t_start = 0
    elif mode == "gy-sufficient":
        verdict = check_gy_sufficient(inst, explain=explain)
        t_start = 0
    else:  # pragma: no cover
        raise AssertionError(mode)
    doc: dict = {
        "name": name,
        "mode": mode,
        "decision": _decision_str(verdict),
        "failing_t": verdict.failing_t,
    }
    if args.witness and mode == "forcible":
        doc["witness"] = list(verdict.witness) if verdict.witness else None
        doc["witness_method"] = verdict.witness_method
    if explain and verdict.slacks is not None:
        doc["slacks"] = _slack_pairs(verdict.slacks, t_start)
    return doc


def cmd_realize(args: argparse.Namespace) -> int:
    text = _read_inputs(args.inputs)
    instances, errors = parse_documents(text, args.format)
    for err in errors:
        print(f"degseq: input error: {err}", file=sys.stderr)
    worst = EXIT_INPUT_ERROR if errors else EXIT_YES
    for name, inst in instances:
        if not inst.is_point:
            print(f"degseq: input error: {name}: realize needs a == b", file=sys.stderr)
            worst = EXIT_INPUT_ERROR
            continue
        seq = list(inst.a)
        try:
            graph = realize(seq)
        except NotGraphicError as exc:
            doc = {"name": name, "error": exc.reason, "failing_t": exc.failing_t}
            print(json.dumps(doc))
            if worst != EXIT_INPUT_ERROR:
                worst = EXIT_NO
            continue
        doc = {
            "name": name,
            "n": graph.n,
            "edges": sorted(list(e) for e in graph.edges),
            "degrees": list(graph.degree_sequence()),
        }
        print(json.dumps(doc))
    return worst


def _parse_n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise InputError(f"bad n-range {text!r}; expected LO:HI") from exc


def cmd_crosscheck(args: argparse.Namespace) -> int:
    try:
        n_range = _parse_n_range(args.n_range)
        cfg = InstanceGenConfig(
            n_range=n_range,
            bound_max=args.bound_max,
            gap_profile=args.gap_profile,
            seed=args.seed,
        )
    except (InputError, ValueError) as exc:
        print(f"degseq: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    cap = resolve_volume_cap(args.volume_cap)
    modes = ["forcible", "potential"] if args.mode == "both" else [args.mode]
    checked = 0
    skipped = 0
    disagreements = []
    for inst in gen_instances(cfg, args.count):
        if inst.box_volume() > cap:
            skipped += 1
            continue
        checked += 1
        for mode in modes:
            if mode == "forcible":
                fast = check_forcible(inst, backend=args.backend, witness=False).decision
                slow = "yes" if brute_force_forcible(inst, volume_cap=cap) else "no"
            else:
                fast = check_potential(inst, backend=args.backend).decision
                slow = "yes" if brute_force_potential(inst, volume_cap=cap) else "no"
            if fast != slow:
                disagreements.append(
                    {
                        "mode": mode,
                        "a": list(inst.a),
                        "b": list(inst.b),
                        "checker": fast,
                        "oracle": slow,
                    }
                )
    report = {
        "config": {
            "seed": args.seed,
            "count": args.count,
            "n_range": list(n_range),
            "bound_max": args.bound_max,
            "gap_profile": args.gap_profile,
            "volume_cap": cap,
            "modes": modes,
        },
        "exhaustive": True,
        "checked": checked,
        "skipped_over_cap": skipped,
        "agreements": checked * len(modes) - len(disagreements),
        "disagreements": disagreements,
    }
    print(json.dumps(report))
    return EXIT_YES if not disagreements else EXIT_NO


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.n.split(",") if tok.strip()]
    except ValueError:
        print(f"degseq: input error: bad size list {args.n!r}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if not sizes:
        print("degseq: input error: empty size list", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = run_bench(
        sizes,
        trials=args.trials,
        seed=args.seed,
        backend=args.backend,
        bound_max=args.bound_max,
    )
    print(json.dumps(report))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Deciders for interval-constrained degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide instances")
    p_check.add_argument("inputs", nargs="*", help="input files ('-' or none: stdin)")
    p_check.add_argument("--mode", choices=CHECK_MODES, default="forcible")
    p_check.add_argument("--witness", action="store_true", help="emit a counterexample on no")
    p_check.add_argument("--explain", action="store_true", help="emit the per-t slack table")
    p_check.add_argument("--format", choices=("obj", "lines"), default="obj")
    p_check.add_argument("--volume-cap", type=int, default=None)
    p_check.add_argument("--backend", choices=_backend.BACKEND_NAMES, default="auto")
    p_check.set_defaults(func=cmd_check)

    p_real = sub.add_parser("realize", help="build a graph for a degree sequence")
    p_real.add_argument("inputs", nargs="*")
    p_real.add_argument("--format", choices=("obj", "lines"), default="obj")
    p_real.set_defaults(func=cmd_realize)

    p_cross = sub.add_parser("cross-check", help="compare deciders against the oracle")
    p_cross.add_argument("--mode", choices=("forcible", "potential", "both"), default="forcible")
    p_cross.add_argument("--seed", type=int, default=0)
    p_cross.add_argument("--count", type=int, default=1000)
    p_cross.add_argument("--n-range", default="1:5")
    p_cross.add_argument("--bound-max", type=int, default=4)
    p_cross.add_argument("--gap-profile", choices=("zero", "tight", "wide", "mixed"), default="mixed")
    p_cross.add_argument("--volume-cap", type=int, default=None)
    p_cross.add_argument("--backend", choices=_backend.BACKEND_NAMES, default="auto")
    p_cross.set_defaults(func=cmd_crosscheck)

    p_bench = sub.add_parser("bench", help="time the forcible scan")
    p_bench.add_argument("--n", default="2000,4000,8000,16000", help="comma-separated sizes")
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--bound-max", type=int, default=None)
    p_bench.add_argument(
        "--backend", choices=_backend.BACKEND_NAMES + ("both",), default="auto"
    )
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
