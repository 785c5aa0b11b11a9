from __future__ import annotations

from typing import Protocol

from rq import Queue

from shared.constants import LIMITS
from shared.redis_client import QUEUE_NAME, get_redis_raw

# Exhaustive trials near the enumeration bound run for minutes each.
CAMPAIGN_JOB_TIMEOUT_SECONDS = 60 * 60 * 6


class CampaignQueue(Protocol):
    def enqueue_campaign(self, campaign_id: str) -> str:
        ...


class RedisCampaignQueue:
    def __init__(self):
        self.queue = Queue(QUEUE_NAME, connection=get_redis_raw())

    def enqueue_campaign(self, campaign_id: str) -> str:
        job = self.queue.enqueue(
            "worker.jobs.run_campaign_job",
            campaign_id,
            job_timeout=CAMPAIGN_JOB_TIMEOUT_SECONDS,
            result_ttl=LIMITS["ttl_seconds"],
            failure_ttl=LIMITS["ttl_seconds"],
        )
        return job.id
