"""Randomized validation campaigns and counterexample hunts."""
from __future__ import annotations

import logging
import time
from typing import Callable

from shared.constants import CUBE_COORD_BOUND, MOMENT_PARAM_BOUND
from shared.formats import parse_instance, render_instance, render_partition
from shared.instance import CapVector, Coloring, Instance, PointConfiguration
from shared.presets import hypothesis_violations
from shared.types import CampaignParams, CampaignReport, HuntCandidate, TrialRecord
from worker.prng import SplitMix64, derive_seed
from worker.search import (
    EnumerationBoundExceeded,
    ExhaustiveStrategy,
    HeuristicStrategy,
    count_partitions,
    find_partition,
    tverberg_point_count,
    verify_partition,
)

logger = logging.getLogger(__name__)

TrialCallback = Callable[[TrialRecord], None]
CancelCheck = Callable[[], bool]

OUTCOMES = ("found", "not_found", "bound_exceeded")


def random_instance(params: CampaignParams, trial_index: int) -> Instance:
    """Instance of trial ``trial_index``; a pure function of (seed, index)."""
    rng = SplitMix64.for_stream(params.seed, trial_index)
    coloring = Coloring.from_sizes(params.color_sizes)
    n = coloring.num_vertices
    if params.distribution == "cube":
        points = [
            tuple(rng.randint(-CUBE_COORD_BOUND, CUBE_COORD_BOUND) for _ in range(params.d))
            for _ in range(n)
        ]
    else:
        ts: list[int] = []
        used: set[int] = set()
        while len(ts) < n:
            t = rng.randint(-MOMENT_PARAM_BOUND, MOMENT_PARAM_BOUND)
            if t not in used:
                used.add(t)
                ts.append(t)
        points = [tuple(t**k for k in range(1, params.d + 1)) for t in ts]
    return Instance(
        d=params.d,
        r=params.r,
        coloring=coloring,
        caps=CapVector(tuple(params.caps)),
        config=PointConfiguration(d=params.d, points=tuple(points)),
    )


def _tally(report: CampaignReport) -> CampaignReport:
    counts = {outcome: 0 for outcome in OUTCOMES}
    for trial in report.trials:
        counts[trial.outcome] += 1
    report.outcome_counts = counts
    report.success_count = counts["found"]
    return report


def _search_trial(params: CampaignParams, instance: Instance, index: int, guaranteed: bool) -> TrialRecord:
    seed = derive_seed(params.seed, index)
    partition = None
    decided_by = None
    if params.strategy in ("auto", "heuristic"):
        partition = find_partition(instance, HeuristicStrategy(restarts=params.restarts, seed=seed))
        decided_by = "heuristic"
    if partition is None and params.strategy in ("auto", "exhaustive"):
        decided_by = "exhaustive"
        try:
            partition = find_partition(instance, ExhaustiveStrategy(), enum_bound=params.enum_bound)
        except EnumerationBoundExceeded:
            return TrialRecord(index=index, seed=seed, outcome="bound_exceeded")

    if partition is None:
        contradiction = decided_by == "exhaustive" and guaranteed
        if contradiction:
            logger.error(
                "theorem_contradiction",
                extra={"trial": index, "seed": seed, "target": params.target},
            )
        return TrialRecord(
            index=index,
            seed=seed,
            outcome="not_found",
            decided_by=decided_by,
            contradiction=contradiction,
        )

    if not verify_partition(instance, partition, check_geometry=True).ok:
        raise RuntimeError(f"trial {index}: search returned a partition that fails verification")
    return TrialRecord(
        index=index,
        seed=seed,
        outcome="found",
        decided_by=decided_by,
        partition=render_partition(partition),
    )


def run_campaign(
    params: CampaignParams,
    on_trial: TrialCallback | None = None,
    should_cancel: CancelCheck | None = None,
) -> CampaignReport:
    """Search every trial instance; under the target's hypotheses each must end ``found``."""
    report = CampaignReport(mode="campaign", params=params, hypotheses_hold=params.hypotheses_hold)
    for index in range(params.trials):
        if should_cancel is not None and should_cancel():
            report.canceled = True
            break
        started = time.perf_counter()
        instance = random_instance(params, index)
        record = _search_trial(params, instance, index, params.guaranteed)
        record.wall_time = time.perf_counter() - started
        report.trials.append(record)
        if record.contradiction:
            report.contradictions.append(index)
        if record.outcome != "found" and report.first_failure is None:
            report.first_failure = render_instance(instance)
        if on_trial is not None:
            on_trial(record)
    return _tally(report)


def hunt_counterexample(
    params: CampaignParams,
    on_trial: TrialCallback | None = None,
    should_cancel: CancelCheck | None = None,
) -> CampaignReport:
    """Count partitions exhaustively and keep every instance that has none.

    Candidates are reported, never interpreted; a trial over the enumeration
    bound is inconclusive.
    """
    if not params.override:
        violations = hypothesis_violations("prob56", params.d, params.r, params.color_sizes, params.caps)
        if violations:
            raise ValueError("hunt parameters not met: " + "; ".join(violations))
    report = CampaignReport(
        mode="hunt",
        params=params,
        hypotheses_hold=params.hypotheses_hold,
        capped_vertex_count=sum(params.caps),
        tverberg_point_count=tverberg_point_count(params.d, params.r),
    )
    for index in range(params.trials):
        if should_cancel is not None and should_cancel():
            report.canceled = True
            break
        started = time.perf_counter()
        seed = derive_seed(params.seed, index)
        instance = random_instance(params, index)
        try:
            count = count_partitions(instance, enum_bound=params.enum_bound)
        except EnumerationBoundExceeded:
            record = TrialRecord(index=index, seed=seed, outcome="bound_exceeded")
        else:
            outcome = "found" if count else "not_found"
            record = TrialRecord(index=index, seed=seed, outcome=outcome, decided_by="exhaustive", count=count)
            if count == 0:
                text = render_instance(instance)
                reverified = count_partitions(parse_instance(text), enum_bound=params.enum_bound) == 0
                logger.info(
                    "hunt_candidate_found",
                    extra={"trial": index, "seed": seed, "reverified": reverified},
                )
                report.candidates.append(
                    HuntCandidate(trial=index, seed=seed, instance=text, reverified=reverified)
                )
        record.wall_time = time.perf_counter() - started
        report.trials.append(record)
        if on_trial is not None:
            on_trial(record)
    return _tally(report)
