"""
ktotal Command Line
===================

``ktotal eval|solve|split|check|decompose``. Reports go to stdout as
text or, with ``--json``, as JSON; logs go to stderr.

Exit codes: 0 success, 1 input error, 2 saddle violation.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .config import Settings
from .errors import KTotalError
from .gamefile import load_game, parse_rational_list, parse_strategy
from .reports import Report
from .solver import Method
from .tools import run_check, run_decompose, run_eval, run_solve, run_split

logger = logging.getLogger(__name__)
settings = Settings()

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_SADDLE_VIOLATION = 2

# Options whose values may start with a minus sign
LIST_OPTIONS = ("--prefix", "--cycle")


class _Parser(argparse.ArgumentParser):
    """Reports bad arguments as input errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _attach_list_values(argv: List[str]) -> List[str]:
    """Rewrite ``--cycle -1,1`` as ``--cycle=-1,1`` so argparse keeps the value."""
    result: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in LIST_OPTIONS and i + 1 < len(argv) and not argv[i + 1].startswith("--"):
            result.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            result.append(token)
            i += 1
    return result


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ktotal",
        description="Exact k-total rewards of lassos and k-total BW-games.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument("--k", type=int, default=settings.default_k, help="level of the hierarchy")
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    eval_parser = commands.add_parser("eval", parents=[common], help="value of the lasso x(y)")
    eval_parser.add_argument("--prefix", default="", help="comma-separated rationals of x")
    eval_parser.add_argument("--cycle", default="", help="comma-separated rationals of y")

    solve_parser = commands.add_parser("solve", parents=[common], help="solve a game file")
    solve_parser.add_argument("game", metavar="GAME", help="game file path")
    solve_parser.add_argument(
        "--method", choices=[m.value for m in Method], default=Method.REDUCTION.value
    )
    solve_parser.add_argument("--check", action="store_true", help="verify the saddle point")
    solve_parser.add_argument("--scale", action="store_true", help="scale rational rewards to integers")
    solve_parser.add_argument("--budget", type=int, default=settings.enumeration_budget)

    split_parser = commands.add_parser("split", parents=[common], help="print the split game")
    split_parser.add_argument("game", metavar="GAME", help="game file path")

    check_parser = commands.add_parser("check", parents=[common], help="check a strategy pair")
    check_parser.add_argument("game", metavar="GAME", help="game file path")
    check_parser.add_argument("strategy", metavar="STRATEGY", help="strategy file path")
    check_parser.add_argument("--budget", type=int, default=settings.enumeration_budget)

    decompose_parser = commands.add_parser("decompose", parents=[common], help="decompose a walk")
    decompose_parser.add_argument("game", metavar="GAME", help="game file path")
    decompose_parser.add_argument("--walk", required=True, help="comma-separated vertex ids")
    return parser


def _configure_logging(verbose: int) -> None:
    level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    if verbose == 1:
        level = min(level, logging.INFO)
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Report:
    if args.command == "eval":
        cycle = parse_rational_list(args.cycle)
        if not cycle:
            raise KTotalError(f"--cycle must list at least one value\n{parser.format_usage().strip()}")
        return run_eval(parse_rational_list(args.prefix), cycle, args.k)
    game = load_game(args.game)
    if args.command == "solve":
        return run_solve(
            game, args.k, Method(args.method), check=args.check, scale=args.scale, budget=args.budget
        )
    if args.command == "split":
        return run_split(game)
    if args.command == "check":
        with open(args.strategy, "r", encoding="utf-8") as f:
            pair = parse_strategy(f.read(), game)
        return run_check(game, args.k, pair, args.budget)
    vertices = [v.strip() for v in args.walk.split(",") if v.strip()]
    return run_decompose(game, vertices, args.k)


def _exit_code(report: Report) -> int:
    saddle = getattr(report, "saddle", None)
    if saddle is not None and not saddle.ok:
        return EXIT_SADDLE_VIOLATION
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_attach_list_values(sys.argv[1:] if argv is None else list(argv)))
    _configure_logging(args.verbose)
    try:
        report = _run(args, parser)
    except (KTotalError, ValueError, OSError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(report.render(), end="")
    return _exit_code(report)


if __name__ == "__main__":
    raise SystemExit(main())
