from __future__ import annotations

import json
import uuid
from datetime import UTC, datetime
from typing import Any

from redis import Redis

from shared.constants import ACTIVE_STATUSES, LIMITS
from shared.types import CampaignParams, CampaignSummary

INDEX_KEY = "campaigns:index"


class CampaignStore:
    """Redis-backed scratch space for campaigns and uploaded instances; every key expires."""

    def __init__(self, redis: Redis):
        self.redis = redis

    def _meta_key(self, campaign_id: str) -> str:
        return f"campaign:{campaign_id}:meta"

    def _events_key(self, campaign_id: str) -> str:
        return f"campaign:{campaign_id}:events"

    def _seq_key(self, campaign_id: str) -> str:
        return f"campaign:{campaign_id}:seq"

    def _cancel_key(self, campaign_id: str) -> str:
        return f"campaign:{campaign_id}:cancel"

    def _report_key(self, campaign_id: str) -> str:
        return f"campaign:{campaign_id}:report"

    def _instance_key(self, instance_id: str) -> str:
        return f"instance:{instance_id}:text"

    def _set_expiry(self, *keys: str) -> None:
        for key in keys:
            self.redis.expire(key, LIMITS["ttl_seconds"])

    def create_campaign(self, mode: str, params: CampaignParams) -> CampaignSummary:
        campaign_id = uuid.uuid4().hex
        now = datetime.now(UTC)
        meta = {
            "campaign_id": campaign_id,
            "status": "queued",
            "mode": mode,
            "params_json": params.model_dump_json(),
            "created_at": now.isoformat(),
            "updated_at": now.isoformat(),
            "trials_done": "0",
            "error": "",
        }
        self.redis.sadd(INDEX_KEY, campaign_id)
        self.redis.hset(self._meta_key(campaign_id), mapping=meta)
        self.redis.set(self._seq_key(campaign_id), 0)
        self._set_expiry(INDEX_KEY, self._meta_key(campaign_id), self._seq_key(campaign_id))
        return CampaignSummary(
            campaign_id=campaign_id,
            status="queued",
            mode=mode,
            params=params,
            created_at=now,
            updated_at=now,
        )

    def get_campaign(self, campaign_id: str) -> CampaignSummary | None:
        raw = self.redis.hgetall(self._meta_key(campaign_id))
        if not raw:
            return None
        return CampaignSummary(
            campaign_id=raw["campaign_id"],
            status=raw["status"],
            mode=raw["mode"],
            params=CampaignParams.model_validate_json(raw["params_json"]),
            created_at=datetime.fromisoformat(raw["created_at"]),
            updated_at=datetime.fromisoformat(raw["updated_at"]),
            trials_done=int(raw.get("trials_done") or 0),
            error=raw.get("error") or None,
        )

    def update_status(self, campaign_id: str, status: str, error: str | None = None) -> None:
        mapping: dict[str, Any] = {
            "status": status,
            "updated_at": datetime.now(UTC).isoformat(),
            "error": error or "",
        }
        self.redis.hset(self._meta_key(campaign_id), mapping=mapping)
        self._set_expiry(self._meta_key(campaign_id), self._events_key(campaign_id), self._seq_key(campaign_id))

    def record_trial(self, campaign_id: str) -> int:
        return int(self.redis.hincrby(self._meta_key(campaign_id), "trials_done", 1))

    def list_campaigns(self) -> list[CampaignSummary]:
        campaigns: list[CampaignSummary] = []
        for campaign_id in sorted(self.redis.smembers(INDEX_KEY)):
            campaign = self.get_campaign(campaign_id)
            if campaign is not None:
                campaigns.append(campaign)
        return campaigns

    def count_active_campaigns(self) -> int:
        return sum(1 for campaign in self.list_campaigns() if campaign.status in ACTIVE_STATUSES)

    def append_event(self, campaign_id: str, event_type: str, payload: dict[str, Any]) -> dict[str, Any]:
        seq = int(self.redis.incr(self._seq_key(campaign_id)))
        event = {
            "seq": seq,
            "type": event_type,
            "timestamp": datetime.now(UTC).isoformat(),
            "payload": payload,
        }
        self.redis.rpush(self._events_key(campaign_id), json.dumps(event))
        self._set_expiry(self._events_key(campaign_id), self._seq_key(campaign_id))
        return event

    def list_events(self, campaign_id: str, from_seq: int = 1) -> list[dict[str, Any]]:
        raw_events = self.redis.lrange(self._events_key(campaign_id), max(from_seq - 1, 0), -1)
        events = [json.loads(item) for item in raw_events]
        return [event for event in events if event["seq"] >= from_seq]

    def request_cancel(self, campaign_id: str) -> None:
        self.redis.set(self._cancel_key(campaign_id), "1", ex=LIMITS["ttl_seconds"])

    def is_cancel_requested(self, campaign_id: str) -> bool:
        return self.redis.get(self._cancel_key(campaign_id)) == "1"

    def save_report(self, campaign_id: str, report_json: str) -> None:
        self.redis.set(self._report_key(campaign_id), report_json, ex=LIMITS["ttl_seconds"])

    def get_report(self, campaign_id: str) -> str | None:
        return self.redis.get(self._report_key(campaign_id)) or None

    def save_instance(self, text: str) -> tuple[str, datetime]:
        instance_id = uuid.uuid4().hex
        expires_at = datetime.now(UTC).timestamp() + LIMITS["ttl_seconds"]
        self.redis.set(self._instance_key(instance_id), text, ex=LIMITS["ttl_seconds"])
        return instance_id, datetime.fromtimestamp(expires_at, UTC)

    def get_instance_text(self, instance_id: str) -> str | None:
        return self.redis.get(self._instance_key(instance_id)) or None
