#!/usr/bin/env python3
"""Command-line workbench: complexes, homology, partition search and campaigns.

Exit codes: 0 success, 1 usage/parse/parameter error, 2 a verification or
invariant check failed, 3 the enumeration bound was exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from pydantic import ValidationError

from shared.constants import LIMITS, PRESET_IDS
from shared.formats import parse_instance, parse_int_list, parse_partition, render_partition
from shared.presets import preset_params
from shared.settings import LOG_LEVEL, TVB_ENUM_BOUND, TVB_HEURISTIC_RESTARTS, TVB_PRIMES
from shared.types import CampaignParams
from worker.campaign import hunt_counterexample, run_campaign
from worker.homology import betti_numbers, certify_configuration, connectivity_from_profile
from worker.search import (
    EnumerationBoundExceeded,
    ExhaustiveStrategy,
    HeuristicStrategy,
    count_partitions,
    find_partition,
    verify_partition,
)
from worker.simplicial import chessboard, connectivity_formula, read_cx1, skeleton, write_cx1
from worker.svg import emit_svg

logger = logging.getLogger("tverlab")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_BOUND = 3


class CliParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means a failed check here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _primes(args: argparse.Namespace) -> list[int]:
    return parse_int_list(args.primes) if args.primes else list(TVB_PRIMES)


def cmd_chessboard(args: argparse.Namespace) -> int:
    side_max = LIMITS["chessboard_side_max"]
    if not (1 <= args.m <= side_max and 1 <= args.n <= side_max):
        raise ValueError(f"chessboard sides must lie in [1, {side_max}]")
    board = chessboard(args.m, args.n)
    if args.skeleton is not None:
        board = skeleton(board, args.skeleton)
    _emit(write_cx1(board), args.out)
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    complex_ = read_cx1(_read(args.complex))
    primes = [args.prime] if args.prime is not None else _primes(args)
    lines = [betti_numbers(complex_, p).render() for p in primes]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_conn_check(args: argparse.Namespace) -> int:
    primes = _primes(args)
    lines: list[str] = []
    failed = False
    side_max = LIMITS["chessboard_side_max"]
    if not (1 <= args.max_rows <= side_max and 1 <= args.max_cols <= side_max):
        raise ValueError(f"chessboard sides must lie in [1, {side_max}]")
    for m in range(1, args.max_rows + 1):
        for n in range(1, args.max_cols + 1):
            if (m, n) == (1, 1):
                continue
            expected = connectivity_formula(m, n)
            board = chessboard(m, n)
            observed = {p: connectivity_from_profile(betti_numbers(board, p)) for p in primes}
            vanishing_ok = all(h >= expected for h in observed.values())
            if not any(h == expected for h in observed.values()):
                logger.warning(
                    "chessboard_nonvanishing_missing",
                    extra={"m": m, "n": n, "expected": expected, "observed": observed},
                )
            failed = failed or not vanishing_ok
            shown = " ".join(f"{p}:{h}" for p, h in observed.items())
            lines.append(f"chessboard {m} {n} formula {expected} hconn {shown} {'PASS' if vanishing_ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    certificate = certify_configuration(
        parse_int_list(args.sizes),
        parse_int_list(args.caps),
        r=args.r,
        d=args.d,
        primes=_primes(args),
    )
    _emit("\n".join(certificate.render()) + "\n", args.out)
    return EXIT_OK if certificate.meets_bound else EXIT_CHECK_FAILED


def cmd_find(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    if args.strategy == "heuristic":
        strategy = HeuristicStrategy(restarts=args.restarts, seed=args.seed)
    else:
        strategy = ExhaustiveStrategy()
    partition = find_partition(instance, strategy, enum_bound=args.enum_bound)
    _emit(render_partition(partition) if partition is not None else "none\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    partition = parse_partition(_read(args.partition))
    check_geometry = not args.no_geometry and not instance.is_combinatorial
    report = verify_partition(instance, partition, check_geometry=check_geometry)
    _emit("\n".join(report.render(tuple(instance.caps))) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_count(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    _emit(f"{count_partitions(instance, enum_bound=args.enum_bound)}\n", args.out)
    return EXIT_OK


def _campaign_params(args: argparse.Namespace, default_target: str) -> CampaignParams:
    target = args.preset or default_target
    sizes = parse_int_list(args.sizes) if args.sizes else None
    caps = parse_int_list(args.caps) if args.caps else None
    if sizes is None or caps is None:
        if target == "custom":
            raise ValueError("--sizes and --caps are required without a preset")
        filled = preset_params(target, args.d, args.r)
        sizes = sizes or filled["color_sizes"]
        caps = caps or filled["caps"]
    return CampaignParams(
        target=target,
        d=args.d,
        r=args.r,
        color_sizes=sizes,
        caps=caps,
        trials=args.trials,
        seed=args.seed,
        distribution=args.distribution,
        strategy="exhaustive" if default_target == "prob56" else args.strategy,
        restarts=args.restarts,
        enum_bound=args.enum_bound,
        override=args.override,
    )


def cmd_campaign(args: argparse.Namespace) -> int:
    report = run_campaign(_campaign_params(args, "thm51"))
    _emit(report.canonical_json(), args.out)
    return EXIT_CHECK_FAILED if report.contradictions else EXIT_OK


def cmd_hunt(args: argparse.Namespace) -> int:
    report = hunt_counterexample(_campaign_params(args, "prob56"))
    _emit(report.canonical_json(), args.out)
    if any(not candidate.reverified for candidate in report.candidates):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    partition = parse_partition(_read(args.partition)) if args.partition else None
    _emit(emit_svg(instance, partition), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="Master seed (u64, default: 0)")
    common.add_argument("--primes", help="Comma separated primes (default: TVB_PRIMES)")
    common.add_argument("--enum-bound", type=int, default=TVB_ENUM_BOUND, help="Exhaustive candidate bound")
    common.add_argument("--out", help="Write output here instead of stdout")

    parser = CliParser(prog="tverlab", description="Constrained colored Tverberg workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chessboard", parents=[common], help="Write the chessboard complex as cx1")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--skeleton", type=int, help="Keep faces of dimension <= k only")
    p.set_defaults(handler=cmd_chessboard)

    p = sub.add_parser("homology", parents=[common], help="Reduced Betti numbers of a cx1 complex")
    p.add_argument("--complex", required=True, help="Path to a cx1 file")
    p.add_argument("--prime", type=int, help="Single prime (default: every prime in --primes)")
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser("conn-check", parents=[common], help="Chessboard connectivity grid check")
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-cols", type=int, default=5)
    p.set_defaults(handler=cmd_conn_check)

    p = sub.add_parser("certify", parents=[common], help="Connectivity of a configuration complex")
    p.add_argument("--sizes", required=True)
    p.add_argument("--caps", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("find", parents=[common], help="Find one admissible partition")
    p.add_argument("instance")
    p.add_argument("--strategy", choices=["exhaustive", "heuristic"], default="exhaustive")
    p.add_argument("--restarts", type=int, default=TVB_HEURISTIC_RESTARTS)
    p.set_defaults(handler=cmd_find)

    p = sub.add_parser("verify", parents=[common], help="Check a part1 partition against an instance")
    p.add_argument("instance")
    p.add_argument("partition")
    p.add_argument("--no-geometry", action="store_true", help="Skip the hull intersection check")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="Count admissible partitions exhaustively")
    p.add_argument("instance")
    p.set_defaults(handler=cmd_count)

    for name, handler, help_text in (
        ("campaign", cmd_campaign, "Randomized validation campaign"),
        ("hunt", cmd_hunt, "Exhaustive counterexample hunt"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--preset", choices=[*PRESET_IDS, "custom"])
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--sizes")
        p.add_argument("--caps")
        p.add_argument("--trials", type=int, default=1)
        p.add_argument("--distribution", choices=["cube", "moment"], default="cube")
        p.add_argument("--strategy", choices=["auto", "heuristic", "exhaustive"], default="auto")
        p.add_argument("--restarts", type=int, default=TVB_HEURISTIC_RESTARTS)
        p.add_argument("--override", action="store_true", help="Run even if the hypotheses fail")
        p.set_defaults(handler=handler)

    p = sub.add_parser("plot", parents=[common], help="SVG figure of a planar instance")
    p.add_argument("instance")
    p.add_argument("--partition")
    p.set_defaults(handler=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except EnumerationBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValidationError as exc:
        print(f"error: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
