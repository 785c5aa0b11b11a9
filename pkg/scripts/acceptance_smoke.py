#!/usr/bin/env python3
"""Long-running acceptance gate: the full-size campaigns the unit suite only samples."""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from shared.formats import parse_instance, parse_partition
from shared.types import CampaignParams, CampaignReport
from worker.campaign import hunt_counterexample, random_instance, run_campaign
from worker.homology import betti_numbers, connectivity_from_profile
from worker.search import count_partitions
from worker.simplicial import chessboard, connectivity_formula
from worker.svg import emit_svg

CHECK_IDS = ["chessboard", "betti", "campaign_r2", "campaign_r3", "hunt", "determinism"]


def _fail(msg: str) -> None:
    raise ValueError(msg)


def _campaign_r2() -> list[CampaignReport]:
    line = CampaignParams(d=1, r=2, color_sizes=[3, 3], caps=[2, 1], trials=200, seed=51, distribution="cube")
    plane = CampaignParams(d=2, r=2, color_sizes=[3, 3, 3], caps=[2, 1, 1], trials=50, seed=52)
    return [run_campaign(line), run_campaign(plane)]


def _campaign_r3() -> CampaignReport:
    params = CampaignParams(
        d=2, r=3, color_sizes=[5, 5, 5], caps=[2, 2, 3], trials=20, seed=53, distribution="moment"
    )
    return run_campaign(params)


def _hunt() -> CampaignReport:
    params = CampaignParams(
        target="prob56", d=1, r=2, color_sizes=[3, 3], caps=[1, 1], trials=50, seed=56, strategy="exhaustive"
    )
    return hunt_counterexample(params)


def check_chessboard() -> str:
    for m in range(1, 6):
        for n in range(1, 6):
            if (m, n) == (1, 1):
                continue
            expected = connectivity_formula(m, n)
            observed = [connectivity_from_profile(betti_numbers(chessboard(m, n), p)) for p in (2, 3, 5)]
            if any(h < expected for h in observed):
                _fail(f"chessboard {m}x{n}: connectivity {observed} below formula {expected}")
            if expected not in observed:
                _fail(f"chessboard {m}x{n}: no prime sees nonvanishing homology at degree {expected + 1}")
    return "24 boards"


def check_betti() -> str:
    cases = {(2, 2): (1,), (3, 2): (0, 1), (5, 3): (0, 0, 14)}
    for (m, n), expected in cases.items():
        for p in (2, 3):
            got = betti_numbers(chessboard(m, n), p).reduced_betti
            if got != expected:
                _fail(f"Betti numbers of chessboard {m}x{n} over F_{p}: {got} != {expected}")
    return "3 profiles"


def _require_all_found(report: CampaignReport) -> None:
    trials = report.params.trials
    if report.success_count != trials or report.contradictions:
        _fail(f"campaign {report.params.color_sizes}: {report.success_count}/{trials} found")


def check_campaign_r2() -> str:
    reports = _campaign_r2()
    for report in reports:
        _require_all_found(report)
    return ", ".join(f"{r.success_count}/{r.params.trials}" for r in reports)


def check_campaign_r3() -> str:
    report = _campaign_r3()
    _require_all_found(report)
    return f"{report.success_count}/{report.params.trials}"


def check_hunt() -> str:
    report = _hunt()
    if report.outcome_counts["bound_exceeded"]:
        _fail("hunt: a trial exceeded the enumeration bound")
    for candidate in report.candidates:
        if count_partitions(parse_instance(candidate.instance)) != 0:
            _fail(f"hunt: candidate of trial {candidate.trial} does not reload to zero")
    return f"{len(report.candidates)} zero-count instances of {report.params.trials}"


def check_determinism() -> str:
    first = [r.canonical_json() for r in (*_campaign_r2(), _campaign_r3(), _hunt())]
    second = [r.canonical_json() for r in (*_campaign_r2(), _campaign_r3(), _hunt())]
    if first != second:
        _fail("reports differ between identical runs")
    r3 = _campaign_r3()
    trial = r3.trials[0]
    instance = random_instance(r3.params, trial.index)
    partition = parse_partition(trial.partition)
    if emit_svg(instance, partition) != emit_svg(instance, partition):
        _fail("SVG output differs between identical calls")
    return f"{len(first)} reports and one figure"


CHECKS = {
    "chessboard": check_chessboard,
    "betti": check_betti,
    "campaign_r2": check_campaign_r2,
    "campaign_r3": check_campaign_r3,
    "hunt": check_hunt,
    "determinism": check_determinism,
}


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the Tverberg Lab acceptance smoke checks.")
    parser.add_argument(
        "--check",
        action="append",
        choices=CHECK_IDS,
        help="Optional check ID to run (can be provided multiple times).",
    )
    args = parser.parse_args()

    for check_id in args.check or CHECK_IDS:
        started = time.perf_counter()
        detail = CHECKS[check_id]()
        print(f"{check_id}: ok ({detail}, {time.perf_counter() - started:.1f}s)")

    print("Acceptance smoke checks passed.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
