from __future__ import annotations

from redis import Redis


def rate_limit_key(scope: str, client_id: str) -> str:
    return f"ratelimit:{scope}:{client_id}"


def allow_request(redis: Redis, scope: str, client_id: str, limit: int, window_seconds: int = 60) -> bool:
    """Fixed-window counter; the window starts at the client's first request."""
    key = rate_limit_key(scope, client_id)
    count = redis.incr(key)
    if count == 1:
        redis.expire(key, window_seconds)
    return count <= limit
