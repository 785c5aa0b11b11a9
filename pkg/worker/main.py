from __future__ import annotations

import logging

import sentry_sdk
from redis import Redis
from rq import Worker

from shared.redis_client import QUEUE_NAME, get_redis_raw
from shared.settings import LOG_LEVEL, SENTRY_DSN


logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s %(message)s")

if SENTRY_DSN:
    sentry_sdk.init(dsn=SENTRY_DSN, traces_sample_rate=0.0)


def run_worker() -> None:
    redis: Redis = get_redis_raw()
    worker = Worker([QUEUE_NAME], connection=redis)
    worker.work(with_scheduler=False)


if __name__ == "__main__":
    run_worker()
