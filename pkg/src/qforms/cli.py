"""Command line interface.

Subcommands: reduce, diff, grade, closed, check. Exit codes: 0 success,
1 property failure, 2 parse error, 3 mode or configuration error. The
QFORMS_OUTPUT environment variable overrides --output when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .calculus import CalculusConfig
from .checks import SUITE_NAMES, run_suites
from .cyclotomic import Q
from .differential import differential_power, is_closed
from .parser import ParseError, parse, parse_scalar, render
from .polynomial import ModeMismatchError

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_MODE_ERROR = 3


class _ConfigError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alpha",
        default="q",
        metavar="SCALAR",
        help="twist scalar, any constant expression such as 'q', '2' or '1+q' (default: q)",
    )
    common.add_argument(
        "--anyonic",
        action="store_true",
        help="work in the x^3 = 0 quotient; forces alpha = q",
    )
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--samples", type=int, default=200, help="samples per randomized suite")
    common.add_argument(
        "--max-degree",
        type=int,
        default=6,
        dest="max_degree",
        help="coefficient degree bound for random samples and homogeneity checks",
    )

    parser = argparse.ArgumentParser(
        prog="qforms",
        description="Reduce, differentiate and test differential forms on the line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="reduce an expression to normal form")
    p.add_argument("expr")
    p = sub.add_parser("diff", parents=[common], help="apply the exterior differential")
    p.add_argument("-n", "--times", type=int, default=1, dest="times", help="how often to apply d")
    p.add_argument("expr")
    p = sub.add_parser("grade", parents=[common], help="print the grade decomposition")
    p.add_argument("expr")
    p = sub.add_parser("closed", parents=[common], help="test whether d of the expression vanishes")
    p.add_argument("expr")
    p = sub.add_parser("check", parents=[common], help="run a randomized verification suite")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    return parser


def _configure(args: argparse.Namespace) -> tuple[CalculusConfig, str]:
    output = args.output
    env = os.environ.get("QFORMS_OUTPUT")
    if env:
        if env not in ("text", "json"):
            raise _ConfigError(f"QFORMS_OUTPUT must be 'text' or 'json', not {env!r}")
        output = env  # the environment wins over the flag
    try:
        alpha = parse_scalar(args.alpha)
    except (ParseError, ValueError) as exc:
        raise _ConfigError(f"bad --alpha value: {exc}") from exc
    if args.anyonic and alpha != Q:
        raise _ConfigError("--anyonic requires alpha = q")
    if args.seed < 0:
        raise _ConfigError("--seed must be nonnegative")
    if args.samples < 1:
        raise _ConfigError("--samples must be positive")
    if args.max_degree < 1:
        raise _ConfigError("--max-degree must be positive")
    if getattr(args, "times", 1) < 1:
        raise _ConfigError("-n must be positive")
    return CalculusConfig(alpha, anyonic=args.anyonic), output


def _emit_form(form, output: str) -> None:
    if output == "json":
        print(json.dumps(form.to_dict()))
    else:
        print(render(form))


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg, output = _configure(args)
    except _ConfigError as exc:
        print(f"qforms: {exc}", file=sys.stderr)
        return EXIT_MODE_ERROR

    try:
        if args.command == "reduce":
            _emit_form(parse(args.expr, cfg), output)
            return EXIT_OK
        if args.command == "diff":
            form = differential_power(parse(args.expr, cfg), args.times, cfg)
            _emit_form(form, output)
            return EXIT_OK
        if args.command == "grade":
            components = parse(args.expr, cfg).decompose()
            if output == "json":
                print(json.dumps({str(g): c.to_dict() for g, c in components.items()}))
            else:
                for g, component in components.items():
                    print(f"{g}: {render(component)}")
            return EXIT_OK
        if args.command == "closed":
            closed = is_closed(parse(args.expr, cfg), cfg)
            if output == "json":
                print(json.dumps({"closed": closed}))
            else:
                print("true" if closed else "false")
            return EXIT_OK
        return _run_check(args, cfg, output)
    except ParseError as exc:
        print(f"qforms: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except ModeMismatchError as exc:
        print(f"qforms: {exc}", file=sys.stderr)
        return EXIT_MODE_ERROR


def _run_check(args: argparse.Namespace, cfg: CalculusConfig, output: str) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    results = run_suites(names, cfg, args.seed, args.samples, args.max_degree)
    passed = all(r.passed for r in results)
    if output == "json":
        report = {
            "alpha": str(cfg.alpha),
            "anyonic": cfg.anyonic,
            "seed": args.seed,
            "samples": args.samples,
            "max_degree": args.max_degree,
            "suites": [
                {"name": r.name, "passed": r.passed, "detail": r.lines} for r in results
            ],
            "passed": passed,
        }
        print(json.dumps(report))
    else:
        for result in results:
            print(f"{result.name}: {'PASS' if result.passed else 'FAIL'}")
            for line in result.lines:
                print(f"  {line}")
        print(f"summary: {sum(r.passed for r in results)}/{len(results)} suites passed")
    return EXIT_OK if passed else EXIT_PROPERTY_FAILURE
