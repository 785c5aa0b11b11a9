from __future__ import annotations

import logging

import sentry_sdk

from shared.redis_client import get_redis
from shared.store import CampaignStore
from shared.types import TrialRecord
from worker.campaign import hunt_counterexample, run_campaign

logger = logging.getLogger(__name__)


def run_campaign_job(campaign_id: str) -> None:
    execute_campaign(CampaignStore(get_redis()), campaign_id)


def execute_campaign(store: CampaignStore, campaign_id: str) -> None:
    campaign = store.get_campaign(campaign_id)
    if campaign is None:
        logger.error("campaign_not_found", extra={"campaign_id": campaign_id})
        return

    if store.is_cancel_requested(campaign_id):
        store.update_status(campaign_id, "canceled")
        return

    try:
        store.update_status(campaign_id, "running")
        store.append_event(
            campaign_id,
            "campaign.started",
            {"mode": campaign.mode, "trials": campaign.params.trials, "target": campaign.params.target},
        )

        def on_trial(record: TrialRecord) -> None:
            store.record_trial(campaign_id)
            payload = record.model_dump(mode="json", exclude={"partition"})
            payload["wall_time"] = round(record.wall_time, 6)
            store.append_event(campaign_id, "trial.completed", payload)

        runner = hunt_counterexample if campaign.mode == "hunt" else run_campaign
        report = runner(
            campaign.params,
            on_trial=on_trial,
            should_cancel=lambda: store.is_cancel_requested(campaign_id),
        )
        store.save_report(campaign_id, report.canonical_json())

        if report.canceled:
            store.update_status(campaign_id, "canceled")
            return

        store.append_event(
            campaign_id,
            "campaign.completed",
            {
                "success_count": report.success_count,
                "outcome_counts": report.outcome_counts,
                "contradictions": report.contradictions,
                "candidates": len(report.candidates),
            },
        )
        store.update_status(campaign_id, "completed")
    except Exception as exc:
        logger.exception("campaign_failed", extra={"campaign_id": campaign_id})
        sentry_sdk.capture_exception(exc)
        store.append_event(campaign_id, "campaign.failed", {"error": str(exc)})
        store.update_status(campaign_id, "failed", error=str(exc))
