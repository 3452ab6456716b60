"""Command-line front end.

Four workflows: ``verify`` (exhaustive property suite), ``bound``
(witness derivation with the re-checked inequality chain), ``bench``
(adversarial step counts plus growth classification) and ``trace``
(per-iteration view of a single search).

Exit codes: 0 success, 1 a checked property/bound failed, 2 bad
configuration or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from olog import checker, complexity, costmodel, estimator
from olog.algorithms import MODE_FULL_TRACE, SortedSeq, binary_search
from olog.errors import CalcChainError, PreconditionError
from olog.intmath import ilog2

DEFAULT_GRID = 2**20
DEFAULT_SIZES = {"binary_search": "16:1048576:x4", "linear_oracle": "16:16384:x4"}
_ALGO_FLAG = {"binary": "binary_search", "linear": "linear_oracle"}


def _write(output: str, text: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail_config(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def parse_sizes(text: str) -> list[int]:
    """Size lists: ``start:stop:xFACTOR`` for geometric grids, or a
    comma-separated list."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3 or not parts[2].lower().startswith("x"):
            raise PreconditionError(f"size list must look like start:stop:xFACTOR, got {text!r}")
        start, stop = int(parts[0]), int(parts[1])
        factor = int(parts[2][1:])
        if start < 1 or stop < start or factor < 2:
            raise PreconditionError(f"bad geometric size list {text!r}")
        sizes = []
        n = start
        while n <= stop:
            sizes.append(n)
            n *= factor
        return sizes
    sizes = [int(p) for p in text.split(",") if p.strip()]
    if not sizes:
        raise PreconditionError("empty size list")
    return sizes


def _cmd_verify(args) -> int:
    space = checker.InstanceSpace(max_len=args.max_len, alphabet=args.alphabet)
    report = checker.verify_all(space, grid=args.grid)

    if args.format == "json":
        _write(args.output, json.dumps(report.to_dict(), indent=2) + "\n")
    elif args.format == "csv":
        lines = ["id,name,passed,violations"]
        lines += [f"{p.id},{p.name},{p.passed},{p.violations}" for p in report.properties]
        _write(args.output, "\n".join(lines) + "\n")
    else:
        lines = [
            f"backend: {report.backend}",
            f"instances checked: {report.instances_checked}",
        ]
        for p in report.properties:
            if p.passed:
                lines.append(f"{p.id} {p.name:<28} pass")
            else:
                lines.append(
                    f"{p.id} {p.name:<28} FAIL ({p.violations} violations; "
                    f"first: {p.counterexample})"
                )
        verdict = "all passed" if report.all_passed else "FAILED"
        lines.append(
            f"result: {len(report.properties)} properties, {verdict} "
            f"in {report.wall_time_ms} ms"
        )
        _write(args.output, "\n".join(lines) + "\n")
    return 0 if report.all_passed else 1


def _cmd_bound(args) -> int:
    try:
        witness, trace = complexity.derive_log_witness(args.grid)
    except CalcChainError as err:
        trace = err.trace
        if args.format == "json" and trace is not None:
            _write(args.output, json.dumps(trace.to_dict(), indent=2) + "\n")
        print(f"error: {err}", file=sys.stderr)
        return 1

    if args.format == "json":
        _write(args.output, json.dumps(trace.to_dict(), indent=2) + "\n")
    elif args.format == "csv":
        lines = ["step,from,rel,to,checked_to,ok"]
        for i, s in enumerate(trace.steps, start=1):
            d = s.to_dict()
            lines.append(f"{i},{d['from']},{d['rel']},{d['to']},{d['checked_to']},{d['ok']}")
        _write(args.output, "\n".join(lines) + "\n")
    else:
        lines = [
            f"witness: c={witness.c}, n0={witness.n0} "
            f"(each step checked pointwise to n={trace.grid})"
        ]
        for s in trace.steps:
            mark = "ok  " if s.ok else "FAIL"
            rel = "<=" if s.step.rel == "<=" else "= "
            lines.append(
                f"  {mark} {s.step.lhs_label} {rel} {s.step.rhs_label}   [{s.step.why}]"
            )
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def _cmd_bench(args) -> int:
    algorithm = _ALGO_FLAG[args.algo]
    sizes = parse_sizes(args.sizes if args.sizes else DEFAULT_SIZES[algorithm])
    samples = estimator.bench_steps(algorithm, sizes)
    report = estimator.fit_class(samples)

    failed = False
    if algorithm == "binary_search":
        over_budget = [s for s in samples if s.t_max > 2 * ilog2(s.n + 1) + 1]
        failed = bool(over_budget) or report.verdict != "Logarithmic"

    if args.format == "json":
        payload = {
            "algorithm": algorithm,
            "samples": [{"n": s.n, "t_max": s.t_max} for s in samples],
            "classification": report.to_dict(),
        }
        _write(args.output, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        _write(args.output, estimator.samples_to_csv(samples))
        print(
            f"classification: {report.verdict} (margin="
            f"{'inf' if report.margin is None else f'{report.margin:.2f}'})",
            file=sys.stderr,
        )
    else:
        lines = [f"algorithm: {algorithm}", f"{'n':>9} {'t_max':>7}"]
        lines += [f"{s.n:>9} {s.t_max:>7}" for s in samples]
        margin = "inf" if report.margin is None else f"{report.margin:.2f}"
        lines.append(f"classification: {report.verdict} (margin={margin})")
        _write(args.output, "\n".join(lines) + "\n")
    return 1 if failed else 0


def _cmd_trace(args) -> int:
    text = args.q.strip()
    items = [int(p) for p in text.split(",") if p.strip() != ""] if text else []
    seq = SortedSeq(items)  # raises PreconditionError when unsorted
    outcome = binary_search(seq, args.key, MODE_FULL_TRACE)
    budget = costmodel.step_budget(seq)
    tbs_total = costmodel.tbs(seq, 0, len(seq), args.key)

    if args.format == "json":
        lines = [json.dumps(rec.to_dict()) for rec in outcome.trace]
        lines.append(json.dumps({"r": outcome.r, "t": outcome.t, "budget": budget}))
        _write(args.output, "\n".join(lines) + "\n")
    else:
        lines = [f"{'lo':>4} {'hi':>4} {'mid':>4} {'t':>4} {'tbs_remaining':>14} {'margin':>7}"]
        for rec in outcome.trace:
            margin = (tbs_total - rec.tbs_remaining) - rec.t_after
            lines.append(
                f"{rec.lo:>4} {rec.hi:>4} {rec.mid:>4} {rec.t_after:>4} "
                f"{rec.tbs_remaining:>14} {margin:>7}"
            )
        lines.append(f"r={outcome.r} t={outcome.t} budget={budget}")
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="olog",
        description="Step-count contracts for binary search: verify, bound, bench, trace.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", default="-", help="output path, or - for stdout")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_verify = sub.add_parser("verify", help="run the exhaustive property suite")
    p_verify.add_argument("--max-len", type=int, default=8, dest="max_len")
    p_verify.add_argument("--alphabet", type=int, default=6)
    p_verify.add_argument("--grid", type=int, default=DEFAULT_GRID)
    add_common(p_verify)
    p_verify.set_defaults(fn=_cmd_verify)

    p_bound = sub.add_parser("bound", help="derive and re-check the log2 witness")
    p_bound.add_argument("--grid", type=int, default=DEFAULT_GRID)
    add_common(p_bound)
    p_bound.set_defaults(fn=_cmd_bound)

    p_bench = sub.add_parser("bench", help="adversarial step counts + classification")
    p_bench.add_argument("--algo", choices=tuple(_ALGO_FLAG), default="binary")
    p_bench.add_argument(
        "--sizes",
        default=None,
        help="start:stop:xFACTOR or comma list (default depends on --algo)",
    )
    add_common(p_bench)
    p_bench.set_defaults(fn=_cmd_bench)

    p_trace = sub.add_parser("trace", help="per-iteration trace of one search")
    p_trace.add_argument("--q", required=True, help="comma-separated sorted ints ('' for empty)")
    p_trace.add_argument("--key", type=int, required=True)
    add_common(p_trace)
    p_trace.set_defaults(fn=_cmd_trace)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.fn(args)
    except PreconditionError as err:
        return _fail_config(str(err))
    except ValueError as err:
        return _fail_config(str(err))


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
