"""Instance data model: exact point configurations, colorings and partitions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Rational = Fraction
Point = tuple[Fraction, ...]
Face = tuple[int, ...]


def as_point(coords: Iterable[int | Fraction | str]) -> Point:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class PointConfiguration:
    """Point k is the image f(v_k); faces map to convex hulls of their points."""

    d: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("ambient dimension d must be >= 1")
        if not self.points:
            raise ValueError("a point configuration needs at least one point")
        points = tuple(as_point(p) for p in self.points)
        for index, point in enumerate(points):
            if len(point) != self.d:
                raise ValueError(
                    f"point {index} has {len(point)} coordinates, expected {self.d}"
                )
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    def point(self, vertex: int) -> Point:
        return self.points[vertex]


@dataclass(frozen=True)
class Coloring:
    """Colour classes C_1..C_m; colours are stored 0-based, files use 1..m."""

    m: int
    color_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("a coloring needs at least one colour")
        object.__setattr__(self, "color_of", tuple(self.color_of))
        for vertex, color in enumerate(self.color_of):
            if not 0 <= color < self.m:
                raise ValueError(f"vertex {vertex} has colour {color + 1} outside [1, {self.m}]")
        sizes = self.sizes
        for color, size in enumerate(sizes):
            if size == 0:
                raise ValueError(f"colour class C_{color + 1} is empty")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "Coloring":
        color_of: list[int] = []
        for color, size in enumerate(sizes):
            color_of.extend([color] * size)
        return cls(m=len(sizes), color_of=tuple(color_of))

    @property
    def num_vertices(self) -> int:
        return len(self.color_of)

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.m)]
        for vertex, color in enumerate(self.color_of):
            buckets[color].append(vertex)
        return tuple(tuple(bucket) for bucket in buckets)

    @property
    def sizes(self) -> tuple[int, ...]:
        counts = [0] * self.m
        for color in self.color_of:
            counts[color] += 1
        return tuple(counts)

    @cached_property
    def position(self) -> tuple[int, ...]:
        """Index of each vertex inside its own colour class."""
        pos = [0] * self.num_vertices
        for members in self.classes:
            for index, vertex in enumerate(members):
                pos[vertex] = index
        return tuple(pos)


@dataclass(frozen=True)
class CapVector:
    caps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "caps", tuple(int(c) for c in self.caps))

    def __len__(self) -> int:
        return len(self.caps)

    def __getitem__(self, index: int) -> int:
        return self.caps[index]

    def __iter__(self):
        return iter(self.caps)

    def check(self, r: int) -> None:
        for index, cap in enumerate(self.caps):
            if not 1 <= cap <= r:
                raise ValueError(
                    f"cap l_{index + 1} = {cap} violates the bound 1 <= l_i <= r = {r}"
                )

    @property
    def total(self) -> int:
        return sum(self.caps)


@dataclass(frozen=True)
class Instance:
    """A coloured configuration; ``config`` is None for coordinate-free instances."""

    d: int
    r: int
    coloring: Coloring
    caps: CapVector
    config: PointConfiguration | None = None

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.r < 2:
            raise ValueError("r must be >= 2")
        if len(self.caps) != self.coloring.m:
            raise ValueError(
                f"expected {self.coloring.m} caps, got {len(self.caps)}"
            )
        self.caps.check(self.r)
        if self.config is not None:
            if self.config.d != self.d:
                raise ValueError(
                    f"configuration lives in R^{self.config.d}, instance declares d = {self.d}"
                )
            if len(self.config) != self.coloring.num_vertices:
                raise ValueError(
                    f"{len(self.config)} points for {self.coloring.num_vertices} coloured vertices"
                )

    @property
    def num_vertices(self) -> int:
        return self.coloring.num_vertices

    @property
    def is_combinatorial(self) -> bool:
        return self.config is None


def _face_key(face: Face) -> float:
    return face[0] if face else math.inf


@dataclass(frozen=True)
class RainbowPartition:
    """Faces are kept in canonical order: ascending by minimal vertex id."""

    faces: tuple[Face, ...]
    witness: Point | None = field(default=None)

    def __post_init__(self) -> None:
        faces = tuple(tuple(sorted(face)) for face in self.faces)
        object.__setattr__(self, "faces", tuple(sorted(faces, key=_face_key)))
        if self.witness is not None:
            object.__setattr__(self, "witness", as_point(self.witness))

    @property
    def r(self) -> int:
        return len(self.faces)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(v for face in self.faces for v in face))
