#!/usr/bin/env python3
from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from scripts.generate_fixtures import EXPECTED, FIXTURE_ORDER, generate_all_fixtures
from shared.constants import FIXTURE_DIR
from shared.formats import parse_instance, parse_partition, render_instance
from worker.search import count_partitions, find_partition, verify_partition


def _fail(msg: str) -> None:
    raise ValueError(msg)


def _check_fixture(name: str, text: str) -> str:
    instance = parse_instance(text)
    if render_instance(instance) != text:
        _fail(f"{name}: file is not in canonical form")

    expected = EXPECTED[name]
    if "violation" in expected:
        partition = parse_partition((FIXTURE_DIR / f"{name}.part1").read_text(encoding="utf-8"))
        report = verify_partition(instance, partition, check_geometry=not instance.is_combinatorial)
        if report.first_violation != expected["violation"]:
            _fail(f"{name}: expected violation {expected['violation']}, got {report.first_violation}")
        if report.usage != expected["usage"]:
            _fail(f"{name}: expected usage {expected['usage']}, got {report.usage}")
        return f"violation={report.first_violation}"

    count = count_partitions(instance)
    if count != expected["count"]:
        _fail(f"{name}: expected {expected['count']} partitions, counted {count}")
    found = find_partition(instance)
    if (found is not None) != (count > 0):
        _fail(f"{name}: find and count disagree")
    if found is not None and not verify_partition(instance, found).ok:
        _fail(f"{name}: found partition fails verification")
    return f"count={count}"


def main() -> int:
    generated = generate_all_fixtures()
    for name in FIXTURE_ORDER:
        path = FIXTURE_DIR / f"{name}.tvb1"
        if not path.exists():
            _fail(f"missing fixture file: {path}")
        text = path.read_text(encoding="utf-8")
        if text != generated[f"{name}.tvb1"]:
            _fail(f"{name}: content mismatch with deterministic generator")
        print(f"{name}: ok ({_check_fixture(name, text)})")

    print("All fixtures validated successfully.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
