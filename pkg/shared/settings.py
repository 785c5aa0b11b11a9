from __future__ import annotations

import os

REDIS_URL = os.getenv("REDIS_URL", "redis://localhost:6379/0")
SENTRY_DSN = os.getenv("SENTRY_DSN", "")
API_RATE_LIMIT_PER_MINUTE = int(os.getenv("API_RATE_LIMIT_PER_MINUTE", "30"))
CORS_ALLOW_ORIGINS = os.getenv("CORS_ALLOW_ORIGINS", "http://localhost:5173")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
TVB_ENUM_BOUND = int(os.getenv("TVB_ENUM_BOUND", "10000000"))
TVB_PRIMES = tuple(int(p) for p in os.getenv("TVB_PRIMES", "2,3,5").split(",") if p.strip())
TVB_HEURISTIC_RESTARTS = int(os.getenv("TVB_HEURISTIC_RESTARTS", "10000"))
