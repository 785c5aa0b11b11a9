from __future__ import annotations

from pathlib import Path

LIMITS = {
    "enum_bound_default": 10_000_000,
    "heuristic_restarts_default": 10_000,
    "ambient_dim_max": 6,
    "trials_max": 10_000,
    "instance_points_max": 64,
    "chessboard_side_max": 8,
    "upload_max_bytes": 64 * 1024,
    "concurrent_campaigns_max": 3,
    "ttl_seconds": 24 * 60 * 60,
}

TERMINAL_STATUSES = {"completed", "failed", "canceled"}
ACTIVE_STATUSES = {"queued", "running"}

DEFAULT_PRIMES = (2, 3, 5)

# Largest modulus whose products still fit in int64 during elimination.
PRIME_MAX = 2**31 - 1

INSTANCE_TAG = "tvb1"
PARTITION_TAG = "part1"
COMPLEX_TAG = "cx1"

PRESET_IDS = ["thm51", "cor53", "cor55", "thm57", "thm58", "thm59", "prob56"]

CUBE_COORD_BOUND = 10**6
MOMENT_PARAM_BOUND = 10**3

SVG_PALETTE = [
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
]
SVG_CANVAS_WIDTH = 800

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "fixtures"

UPLOAD_ALLOWED_EXTENSIONS = {".tvb1", ".txt"}
