#!/usr/bin/env python3
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from shared.constants import FIXTURE_DIR
from shared.formats import render_instance, render_partition
from shared.instance import CapVector, Coloring, Instance, PointConfiguration, RainbowPartition

FIXTURE_ORDER = [
    "worked_example",
    "separated_line",
    "interleaved_line",
    "coincident_pair",
    "square_radon",
]

# What validate_fixtures.py expects of each file: an exhaustive count, or a
# partition that must fail a named condition.
EXPECTED = {
    "worked_example": {"violation": "caps", "usage": (2, 3, 3)},
    "separated_line": {"count": 0},
    "interleaved_line": {"count": 5},
    "coincident_pair": {"count": 1},
    "square_radon": {"count": 1},
}


def _instance(d: int, r: int, caps: list[int], colored: list[tuple[int, tuple]]) -> Instance:
    colors = [color - 1 for color, _ in colored]
    m = max(colors) + 1
    return Instance(
        d=d,
        r=r,
        coloring=Coloring(m=m, color_of=tuple(colors)),
        caps=CapVector(tuple(caps)),
        config=PointConfiguration(d=d, points=tuple(point for _, point in colored)),
    )


def generate_instances() -> dict[str, Instance]:
    instances = {
        # coordinate-free: C_1 = {0..4}, C_2 = {5..9}, C_3 = {10..14}
        "worked_example": Instance(
            d=2,
            r=3,
            coloring=Coloring.from_sizes([5, 5, 5]),
            caps=CapVector((2, 2, 3)),
        ),
        "separated_line": _instance(
            1, 2, [1, 1], [(1, (0,)), (1, (1,)), (1, (2,)), (2, (100,)), (2, (101,)), (2, (102,))]
        ),
        "interleaved_line": _instance(
            1, 2, [1, 2], [(1, (0,)), (1, (10,)), (1, (20,)), (2, (1,)), (2, (11,)), (2, (21,))]
        ),
        "coincident_pair": _instance(
            2, 2, [1, 1], [(1, (Fraction(5, 2), -1)), (2, (Fraction(5, 2), -1))]
        ),
        "square_radon": _instance(
            2, 2, [1, 1, 1, 1], [(1, (0, 0)), (2, (2, 0)), (3, (2, 2)), (4, (0, 2))]
        ),
    }
    if list(instances) != FIXTURE_ORDER:
        raise ValueError("Fixture definitions do not match FIXTURE_ORDER")
    return instances


def generate_partitions() -> dict[str, RainbowPartition]:
    # sigma_1 = {1,6,12}, sigma_2 = {5,9,14}, sigma_3 = {10,11} in 1-based ids
    return {"worked_example": RainbowPartition(faces=((0, 5, 11), (4, 8, 13), (9, 10)))}


def generate_all_fixtures() -> dict[str, str]:
    files = {f"{name}.tvb1": render_instance(instance) for name, instance in generate_instances().items()}
    for name, partition in generate_partitions().items():
        files[f"{name}.part1"] = render_partition(partition)
    return files


def write_fixtures() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for filename, text in generate_all_fixtures().items():
        (FIXTURE_DIR / filename).write_text(text, encoding="utf-8")


def check_fixtures() -> int:
    mismatches: list[str] = []
    for filename, expected in generate_all_fixtures().items():
        path = FIXTURE_DIR / filename
        if not path.exists():
            mismatches.append(f"{filename}: missing file {path}")
            continue
        if path.read_text(encoding="utf-8") != expected:
            mismatches.append(f"{filename}: file content differs from generated output")
    if mismatches:
        for mismatch in mismatches:
            print(mismatch)
        return 1
    print("All fixture files match generated output.")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description="Generate deterministic Tverberg Lab fixtures.")
    parser.add_argument("--check", action="store_true", help="Check existing files match generator output.")
    args = parser.parse_args()

    if args.check:
        return check_fixtures()
    write_fixtures()
    print("Generated fixture files in fixtures/.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
