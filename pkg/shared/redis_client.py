from __future__ import annotations

from functools import lru_cache

from redis import Redis

from shared.settings import REDIS_URL

QUEUE_NAME = "tverlab"


@lru_cache(maxsize=1)
def get_redis() -> Redis:
    """Text client for campaign metadata, events and stored instances."""
    return Redis.from_url(REDIS_URL, decode_responses=True)


@lru_cache(maxsize=1)
def get_redis_raw() -> Redis:
    # RQ pickles job payloads, so its connection must not decode responses.
    return Redis.from_url(REDIS_URL, decode_responses=False)
