"""Named campaign presets and the hypotheses each targeted statement needs.

Every guarantee asks r to be a prime power. Caps written ``r-1`` are the
statement's exact values; colour sizes are lower bounds.
"""
from __future__ import annotations

from typing import Sequence

from shared.constants import PRESET_IDS

PRESET_METADATA = {
    "thm51": {
        "title": "Constrained colored Tverberg",
        "description": "Any number of colours of size >= 2r-1 with caps summing past (d+1)(r-1).",
        "mode": "campaign",
        "rule": "sizes >= 2r-1; sum(caps) > (d+1)(r-1)",
    },
    "cor53": {
        "title": "Colored Tverberg with caps, d+1 colours",
        "description": "The constrained theorem restricted to m = d+1 colours.",
        "mode": "campaign",
        "rule": "m = d+1; sizes >= 2r-1; sum(caps) > (d+1)(r-1)",
    },
    "cor55": {
        "title": "Caps r-1 except the last colour",
        "description": "d colours capped at r-1 and one colour capped at r.",
        "mode": "campaign",
        "rule": "m = d+1; sizes >= 2r-1; caps = (r-1, ..., r-1, r)",
    },
    "thm57": {
        "title": "Caps r-1 with an extra single-vertex colour",
        "description": "d+1 colours of size >= 2r-1 plus one colour with a single vertex, all capped at r-1.",
        "mode": "campaign",
        "rule": "m = d+2; sizes[0..d] >= 2r-1; sizes[d+1] = 1; caps = r-1",
    },
    "thm58": {
        "title": "Smaller colour classes",
        "description": "d colours of size >= 2r-4 capped at r-1 and one colour of size >= 2r-1 capped at r.",
        "mode": "campaign",
        "rule": "r >= 3; m = d+1; sizes[0..d-1] >= 2r-4; sizes[d] >= 2r-1; caps = (r-1, ..., r-1, r)",
    },
    "thm59": {
        "title": "Smaller colour classes with a single-vertex colour",
        "description": "d+1 colours of size >= 2r-4 plus one single-vertex colour, all capped at r-1.",
        "mode": "campaign",
        "rule": "r >= 3; m = d+2; sizes[0..d] >= 2r-4; sizes[d+1] = 1; caps = r-1",
    },
    "prob56": {
        "title": "Open problem: caps r-1 on all d+1 colours",
        "description": "Exhaustive hunt for affine configurations with no admissible partition.",
        "mode": "hunt",
        "rule": "m = d+1; sizes >= 2r-1; caps = r-1",
    },
}


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def preset_params(preset_id: str, d: int, r: int) -> dict[str, list[int]]:
    """Smallest colour sizes and the caps the preset's statement names."""
    if preset_id not in PRESET_IDS:
        raise ValueError(f"Unknown preset: {preset_id}")
    if d < 1 or r < 2:
        raise ValueError("presets need d >= 1 and r >= 2")
    full = 2 * r - 1
    if preset_id in ("thm51", "cor53", "cor55"):
        return {"color_sizes": [full] * (d + 1), "caps": [r - 1] * d + [r]}
    if preset_id == "thm57":
        return {"color_sizes": [full] * (d + 1) + [1], "caps": [r - 1] * (d + 2)}
    if preset_id == "thm58":
        return {"color_sizes": [2 * r - 4] * d + [full], "caps": [r - 1] * d + [r]}
    if preset_id == "thm59":
        return {"color_sizes": [2 * r - 4] * (d + 1) + [1], "caps": [r - 1] * (d + 2)}
    return {"color_sizes": [full] * (d + 1), "caps": [r - 1] * (d + 1)}


def _sizes_at_least(sizes: Sequence[int], bound: int, label: str) -> list[str]:
    return [
        f"{label}: |C_{i + 1}| = {size} < {bound}" for i, size in enumerate(sizes) if size < bound
    ]


def _caps_equal(caps: Sequence[int], expected: Sequence[int], label: str) -> list[str]:
    if list(caps) != list(expected):
        return [f"{label}: caps must be ({', '.join(map(str, expected))})"]
    return []


def hypothesis_violations(
    target: str,
    d: int,
    r: int,
    sizes: Sequence[int],
    caps: Sequence[int],
) -> list[str]:
    """Every hypothesis of ``target`` that the parameters miss; empty when all hold."""
    if target == "custom":
        return []
    if target not in PRESET_IDS:
        raise ValueError(f"Unknown preset: {target}")
    m = len(sizes)
    out: list[str] = []
    if target != "prob56" and not is_prime_power(r):
        out.append(f"{target}: r = {r} is not a prime power")
    full = 2 * r - 1

    if target in ("thm51", "cor53"):
        if target == "cor53" and m != d + 1:
            out.append(f"{target}: needs m = d+1 = {d + 1} colours, got {m}")
        out += _sizes_at_least(sizes, full, target)
        if sum(caps) <= (d + 1) * (r - 1):
            out.append(f"{target}: sum of caps {sum(caps)} <= (d+1)(r-1) = {(d + 1) * (r - 1)}")
        return out

    if target in ("cor55", "prob56"):
        if m != d + 1:
            return out + [f"{target}: needs m = d+1 = {d + 1} colours, got {m}"]
        out += _sizes_at_least(sizes, full, target)
        expected = [r - 1] * d + [r] if target == "cor55" else [r - 1] * (d + 1)
        return out + _caps_equal(caps, expected, target)

    if target == "thm58":
        if r < 3:
            out.append(f"{target}: needs r >= 3")
        if m != d + 1:
            return out + [f"{target}: needs m = d+1 = {d + 1} colours, got {m}"]
        out += _sizes_at_least(sizes[:d], 2 * r - 4, target)
        out += _sizes_at_least(sizes[d:], full, target)
        return out + _caps_equal(caps, [r - 1] * d + [r], target)

    # thm57 and thm59: d+1 large colours plus one single-vertex colour
    if target == "thm59" and r < 3:
        out.append(f"{target}: needs r >= 3")
    if m != d + 2:
        return out + [f"{target}: needs m = d+2 = {d + 2} colours, got {m}"]
    out += _sizes_at_least(sizes[: d + 1], full if target == "thm57" else 2 * r - 4, target)
    if sizes[d + 1] != 1:
        out.append(f"{target}: the last colour must have a single vertex, got {sizes[d + 1]}")
    return out + _caps_equal(caps, [r - 1] * (d + 2), target)


def preset_descriptors() -> list[dict[str, str]]:
    return [{"preset_id": preset_id, **PRESET_METADATA[preset_id]} for preset_id in PRESET_IDS]
