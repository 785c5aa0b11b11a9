"""Verify, find and count constrained colored Tverberg partitions.

A partition (sigma_1, ..., sigma_r) of a coloured configuration must satisfy
  (i)   every face is rainbow (at most one vertex per colour),
  (ii)  the convex hulls of the faces' images share a point,
  (iii) at most l_i vertices of colour i are used overall.
Faces are pairwise disjoint and nonempty.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb, factorial, perm
from typing import Iterator, Union

from shared.constants import LIMITS
from shared.instance import Coloring, Face, Instance, Point, RainbowPartition
from worker.geometry import hulls_intersect
from worker.prng import SplitMix64

logger = logging.getLogger(__name__)

CONDITION_LABELS = {
    "structure": "structure",
    "rainbow": "(i) rainbow",
    "intersection": "(ii) intersection",
    "caps": "(iii) caps",
}


class EnumerationBoundExceeded(RuntimeError):
    def __init__(self, estimate: int, bound: int):
        super().__init__(f"estimated {estimate} candidates exceeds the enumeration bound {bound}")
        self.estimate = estimate
        self.bound = bound


def is_rainbow(coloring: Coloring, face: Face) -> bool:
    if not face:
        raise ValueError("is_rainbow needs a nonempty face")
    colors = [coloring.color_of[v] for v in face]
    return len(colors) == len(set(colors))


@dataclass(frozen=True)
class VerificationReport:
    structural_ok: bool
    rainbow_ok: bool
    caps_ok: bool
    usage: tuple[int, ...]
    intersection_ok: bool | None = None
    witness: Point | None = None
    structural_issues: tuple[str, ...] = ()

    @property
    def first_violation(self) -> str | None:
        if not self.structural_ok:
            return "structure"
        if not self.rainbow_ok:
            return "rainbow"
        if self.intersection_ok is False:
            return "intersection"
        if not self.caps_ok:
            return "caps"
        return None

    @property
    def ok(self) -> bool:
        return self.first_violation is None

    def render(self, caps: tuple[int, ...]) -> list[str]:
        def mark(flag: bool | None) -> str:
            if flag is None:
                return "skipped"
            return "ok" if flag else "FAIL"

        lines = [f"structure {mark(self.structural_ok)}"]
        lines.extend(f"  {issue}" for issue in self.structural_issues)
        lines.append(f"rainbow {mark(self.rainbow_ok)}")
        lines.append(f"intersection {mark(self.intersection_ok)}")
        lines.append(
            f"caps {mark(self.caps_ok)} usage {' '.join(map(str, self.usage))} "
            f"caps {' '.join(map(str, caps))}"
        )
        violation = self.first_violation
        lines.append("result ok" if violation is None else f"result FAIL {CONDITION_LABELS[violation]}")
        return lines


def verify_partition(
    instance: Instance,
    partition: RainbowPartition,
    check_geometry: bool = True,
) -> VerificationReport:
    n = instance.num_vertices
    for face in partition.faces:
        for v in face:
            if not 0 <= v < n:
                raise ValueError(f"vertex id {v} out of range [0, {n})")
    if check_geometry and instance.config is None:
        raise ValueError("the geometry check needs a point configuration")

    issues: list[str] = []
    if partition.r != instance.r:
        issues.append(f"expected {instance.r} faces, got {partition.r}")
    seen: set[int] = set()
    for index, face in enumerate(partition.faces):
        if not face:
            issues.append(f"face {index + 1} is empty")
        shared = seen.intersection(face)
        if shared:
            issues.append(f"face {index + 1} overlaps earlier faces at {sorted(shared)}")
        seen.update(face)

    coloring = instance.coloring
    rainbow_ok = all(is_rainbow(coloring, face) for face in partition.faces if face)
    usage = [0] * coloring.m
    for v in seen:
        usage[coloring.color_of[v]] += 1
    caps_ok = all(u <= cap for u, cap in zip(usage, instance.caps))

    intersection_ok: bool | None = None
    witness: Point | None = None
    if check_geometry and not issues:
        result = hulls_intersect(instance.config, partition.faces)
        intersection_ok = result.feasible
        witness = result.witness
    return VerificationReport(
        structural_ok=not issues,
        rainbow_ok=rainbow_ok,
        caps_ok=caps_ok,
        usage=tuple(usage),
        intersection_ok=intersection_ok,
        witness=witness,
        structural_issues=tuple(issues),
    )


@dataclass(frozen=True)
class ExhaustiveStrategy:
    name: str = field(default="exhaustive", init=False)


@dataclass(frozen=True)
class HeuristicStrategy:
    restarts: int = LIMITS["heuristic_restarts_default"]
    seed: int = 0
    name: str = field(default="heuristic", init=False)

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("heuristic restarts must be >= 1")


Strategy = Union[ExhaustiveStrategy, HeuristicStrategy]


def estimate_candidates(instance: Instance) -> int:
    """Capped rainbow assignments of every colour into r labelled faces, over r!."""
    r = instance.r
    total = 1
    for size, cap in zip(instance.coloring.sizes, instance.caps):
        total *= sum(comb(size, k) * perm(r, k) for k in range(min(cap, size, r) + 1))
    return -(-total // factorial(r))


def check_enumeration_bound(instance: Instance, enum_bound: int | None) -> None:
    bound = LIMITS["enum_bound_default"] if enum_bound is None else enum_bound
    estimate = estimate_candidates(instance)
    if estimate > bound:
        logger.warning(
            "enumeration_bound_exceeded",
            extra={"estimate": estimate, "bound": bound, "vertices": instance.num_vertices},
        )
        raise EnumerationBoundExceeded(estimate, bound)


def iter_candidates(instance: Instance) -> Iterator[tuple[Face, ...]]:
    """Canonical capped rainbow face tuples with r nonempty faces.

    Vertices are visited colour by colour and by id; a vertex may join an
    already opened face or open the next one, so each unordered partition is
    produced once.
    """
    coloring = instance.coloring
    order = [v for members in coloring.classes for v in members]
    color_of = coloring.color_of
    caps = instance.caps
    r = instance.r
    faces: list[list[int]] = [[] for _ in range(r)]
    masks = [0] * r
    usage = [0] * coloring.m

    def dfs(pos: int, opened: int) -> Iterator[tuple[Face, ...]]:
        if r - opened > len(order) - pos:
            return
        if pos == len(order):
            yield tuple(tuple(sorted(face)) for face in faces)
            return
        v = order[pos]
        c = color_of[v]
        bit = 1 << c
        if usage[c] < caps[c]:
            for j in range(min(opened + 1, r)):
                if masks[j] & bit:
                    continue
                faces[j].append(v)
                masks[j] |= bit
                usage[c] += 1
                yield from dfs(pos + 1, max(opened, j + 1))
                usage[c] -= 1
                masks[j] &= ~bit
                faces[j].pop()
        yield from dfs(pos + 1, opened)

    yield from dfs(0, 0)


def _require_geometry(instance: Instance) -> None:
    if instance.config is None:
        raise ValueError("searching for partitions needs a point configuration")


def _exhaustive_find(instance: Instance) -> RainbowPartition | None:
    for faces in iter_candidates(instance):
        result = hulls_intersect(instance.config, faces)
        if result.feasible:
            return RainbowPartition(faces=faces, witness=result.witness)
    return None


def _random_assignment(instance: Instance, rng: SplitMix64) -> tuple[Face, ...] | None:
    """A maximal capped rainbow assignment; None when some face stays empty."""
    coloring = instance.coloring
    r = instance.r
    vertices = list(range(instance.num_vertices))
    rng.shuffle(vertices)
    faces: list[list[int]] = [[] for _ in range(r)]
    masks = [0] * r
    usage = [0] * coloring.m
    for v in vertices:
        c = coloring.color_of[v]
        if usage[c] >= instance.caps[c]:
            continue
        open_faces = [j for j in range(r) if not masks[j] >> c & 1]
        if not open_faces:
            continue
        empty = [j for j in open_faces if not faces[j]]
        j = rng.choice(empty or open_faces)
        faces[j].append(v)
        masks[j] |= 1 << c
        usage[c] += 1
    if any(not face for face in faces):
        return None
    return RainbowPartition(faces=tuple(tuple(face) for face in faces)).faces


def _heuristic_find(instance: Instance, strategy: HeuristicStrategy) -> RainbowPartition | None:
    tried: set[tuple[Face, ...]] = set()
    for restart in range(strategy.restarts):
        rng = SplitMix64.for_stream(strategy.seed, restart)
        faces = _random_assignment(instance, rng)
        if faces is None or faces in tried:
            continue
        tried.add(faces)
        result = hulls_intersect(instance.config, faces)
        if result.feasible:
            logger.debug("heuristic_found", extra={"restart": restart, "lp_calls": len(tried)})
            return RainbowPartition(faces=faces, witness=result.witness)
    logger.info(
        "heuristic_exhausted",
        extra={"restarts": strategy.restarts, "seed": strategy.seed, "lp_calls": len(tried)},
    )
    return None


def find_partition(
    instance: Instance,
    strategy: Strategy | None = None,
    enum_bound: int | None = None,
) -> RainbowPartition | None:
    """First partition satisfying (i)-(iii), or None.

    Exhaustive search is complete and raises EnumerationBoundExceeded instead
    of truncating; the heuristic may miss partitions that exist.
    """
    _require_geometry(instance)
    strategy = strategy or ExhaustiveStrategy()
    if isinstance(strategy, HeuristicStrategy):
        return _heuristic_find(instance, strategy)
    check_enumeration_bound(instance, enum_bound)
    return _exhaustive_find(instance)


def count_partitions(instance: Instance, enum_bound: int | None = None) -> int:
    _require_geometry(instance)
    check_enumeration_bound(instance, enum_bound)
    return sum(1 for faces in iter_candidates(instance) if hulls_intersect(instance.config, faces).feasible)


def partition_face(instance: Instance, partition: RainbowPartition) -> tuple[int, ...]:
    """Face of the configuration complex encoding ``partition``.

    Colour i contributes the chessboard cell (position of v in C_i, face
    index) of its block; the result lies in the configuration complex exactly
    when the partition is disjoint, rainbow and within caps.
    """
    coloring = instance.coloring
    r = instance.r
    if partition.r != r:
        raise ValueError(f"expected {r} faces, got {partition.r}")
    offsets: list[int] = []
    total = 0
    for size in coloring.sizes:
        offsets.append(total)
        total += size * r
    cells: list[int] = []
    for j, face in enumerate(partition.faces):
        for v in face:
            if not 0 <= v < instance.num_vertices:
                raise ValueError(f"vertex id {v} out of range [0, {instance.num_vertices})")
            cells.append(offsets[coloring.color_of[v]] + coloring.position[v] * r + j)
    return tuple(sorted(cells))


def tverberg_point_count(d: int, r: int) -> int:
    """(r-1)(d+1)+1: the point count that forces a classical Tverberg partition."""
    if d < 1 or r < 1:
        raise ValueError("d and r must be positive")
    return (r - 1) * (d + 1) + 1
