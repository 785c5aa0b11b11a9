"""Finite abstract simplicial complexes: chessboards, skeleta, joins.

Faces are stored explicitly per dimension as ascending vertex-id tuples; the
empty simplex is never stored and only enters the join f-vector convolution
as f_{-1} = 1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Sequence

from shared.constants import COMPLEX_TAG
from shared.formats import FormatError

logger = logging.getLogger(__name__)

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    num_vertices: int
    faces_by_dim: tuple[tuple[Simplex, ...], ...]

    @property
    def dimension(self) -> int:
        """-1 for the empty complex."""
        return len(self.faces_by_dim) - 1

    @property
    def is_empty(self) -> bool:
        return not self.faces_by_dim

    def faces(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.faces_by_dim):
            return self.faces_by_dim[k]
        return ()

    def all_faces(self) -> Iterable[Simplex]:
        for level in self.faces_by_dim:
            yield from level

    @cached_property
    def _face_set(self) -> frozenset[Simplex]:
        return frozenset(self.all_faces())

    def __contains__(self, face: object) -> bool:
        return isinstance(face, tuple) and tuple(sorted(face)) in self._face_set

    def index_of(self, k: int) -> dict[Simplex, int]:
        return {face: i for i, face in enumerate(self.faces(k))}

    def facets(self) -> list[Simplex]:
        """Maximal faces in lexicographic order."""
        covered: set[Simplex] = set()
        for level in self.faces_by_dim[1:]:
            for face in level:
                for i in range(len(face)):
                    covered.add(face[:i] + face[i + 1 :])
        return sorted(face for face in self.all_faces() if face not in covered)

    def is_downward_closed(self) -> bool:
        for k in range(1, len(self.faces_by_dim)):
            below = set(self.faces_by_dim[k - 1])
            for face in self.faces_by_dim[k]:
                if any(face[:i] + face[i + 1 :] not in below for i in range(len(face))):
                    return False
        return True


def _from_levels(num_vertices: int, levels: Sequence[Iterable[Simplex]]) -> SimplicialComplex:
    faces_by_dim = [tuple(sorted(set(level))) for level in levels]
    while faces_by_dim and not faces_by_dim[-1]:
        faces_by_dim.pop()
    return SimplicialComplex(num_vertices=num_vertices, faces_by_dim=tuple(faces_by_dim))


def make_complex(num_vertices: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``facets``."""
    if num_vertices < 0:
        raise ValueError("num_vertices must be non-negative")
    levels: list[set[Simplex]] = []
    for facet in facets:
        vertices = tuple(sorted(set(facet)))
        if not vertices:
            raise ValueError("facets must be nonempty")
        for v in vertices:
            if not 0 <= v < num_vertices:
                raise ValueError(f"vertex id {v} out of range [0, {num_vertices})")
        while len(levels) < len(vertices):
            levels.append(set())
        for size in range(1, len(vertices) + 1):
            levels[size - 1].update(combinations(vertices, size))
    return _from_levels(num_vertices, levels)


def cell_id(m: int, n: int, i: int, j: int) -> int:
    """Row-major id of chessboard cell (i, j), both 1-based."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise ValueError(f"cell ({i},{j}) outside the {m}x{n} board")
    return (i - 1) * n + (j - 1)


def cell_of(n: int, vertex: int) -> tuple[int, int]:
    if n < 1 or vertex < 0:
        raise ValueError("invalid chessboard vertex")
    return vertex // n + 1, vertex % n + 1


def chessboard(m: int, n: int) -> SimplicialComplex:
    """Delta_{m,n}: nonempty partial matchings of the m x n board."""
    if m < 1 or n < 1:
        raise ValueError("chessboard sides must be >= 1")
    levels: list[list[Simplex]] = []
    for size in range(1, min(m, n) + 1):
        level: list[Simplex] = []
        for rows in combinations(range(m), size):
            for cols in permutations(range(n), size):
                level.append(tuple(row * n + col for row, col in zip(rows, cols)))
        levels.append(level)
    return _from_levels(m * n, levels)


def chessboard_face_count(m: int, n: int, k: int) -> int:
    return comb(m, k + 1) * comb(n, k + 1) * factorial(k + 1)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be >= 0")
    if k >= K.dimension:
        return K
    return SimplicialComplex(num_vertices=K.num_vertices, faces_by_dim=K.faces_by_dim[: k + 1])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L with the vertices of L shifted by K.num_vertices."""
    offset = K.num_vertices
    left: list[Simplex] = [()] + list(K.all_faces())
    right: list[Simplex] = [()] + [tuple(v + offset for v in face) for face in L.all_faces()]
    levels: list[list[Simplex]] = [[] for _ in range(K.dimension + L.dimension + 2)]
    for sigma in left:
        for tau in right:
            if sigma or tau:
                face = sigma + tau
                levels[len(face) - 1].append(face)
    return _from_levels(K.num_vertices + L.num_vertices, levels)


def configuration_complex(sizes: Sequence[int], caps: Sequence[int], r: int) -> SimplicialComplex:
    """Join over colours of skeleton(Delta_{|C_i|,r}, l_i - 1), colour blocks in order."""
    if len(sizes) != len(caps):
        raise ValueError("sizes and caps must have the same length")
    if not sizes:
        raise ValueError("at least one colour is required")
    blocks: list[SimplicialComplex] = []
    for index, (size, cap) in enumerate(zip(sizes, caps)):
        if size < 1:
            raise ValueError(f"colour {index + 1} has size {size} < 1")
        if not 1 <= cap <= r:
            raise ValueError(f"cap l_{index + 1} = {cap} out of range [1, {r}]")
        blocks.append(skeleton(chessboard(size, r), cap - 1))
    return reduce(join, blocks)


def f_vector(K: SimplicialComplex) -> list[int]:
    return [len(level) for level in K.faces_by_dim]


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * count for k, count in enumerate(f_vector(K)))


def join_f_vector(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """f-vector of a join, by convolution with f_{-1} = g_{-1} = 1."""
    left = [1, *f]
    right = [1, *g]
    out = [0] * (len(left) + len(right) - 1)
    for a, x in enumerate(left):
        for b, y in enumerate(right):
            out[a + b] += x * y
    return out[1:]


def connectivity_formula(m: int, n: int) -> int:
    """min{m, n, floor((m+n+1)/3)} - 2."""
    if m < 1 or n < 1:
        raise ValueError("chessboard sides must be >= 1")
    return min(m, n, (m + n + 1) // 3) - 2


def connectivity_lower_bound(sizes: Sequence[int], caps: Sequence[int], r: int) -> int:
    """Connectivity guaranteed for the configuration complex by the join and skeleton bounds."""
    if len(sizes) != len(caps) or not sizes:
        raise ValueError("sizes and caps must be nonempty and of equal length")
    per_block = [min(connectivity_formula(size, r), cap - 2) for size, cap in zip(sizes, caps)]
    return sum(per_block) + 2 * (len(sizes) - 1)


def write_cx1(K: SimplicialComplex) -> str:
    lines = [f"{COMPLEX_TAG} {K.num_vertices}"]
    lines.extend(" ".join(str(v) for v in facet) for facet in K.facets())
    return "\n".join(lines) + "\n"


def read_cx1(text: str) -> SimplicialComplex:
    header: int | None = None
    facets: list[Simplex] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or tokens[0] != COMPLEX_TAG:
                raise FormatError(f"expected header '{COMPLEX_TAG} <num_vertices>'", lineno)
            try:
                header = int(tokens[1])
            except ValueError as exc:
                raise FormatError(f"invalid vertex count {tokens[1]!r}", lineno) from exc
            if header < 0:
                raise FormatError("vertex count must be non-negative", lineno)
            continue
        try:
            facet = tuple(int(token) for token in tokens)
        except ValueError as exc:
            raise FormatError(f"non-integer vertex id in {line!r}", lineno) from exc
        if any(not 0 <= v < header for v in facet):
            raise FormatError(f"vertex id out of range [0, {header})", lineno)
        if list(facet) != sorted(set(facet)):
            raise FormatError("facet ids must be strictly ascending", lineno)
        facets.append(facet)
    if header is None:
        raise FormatError(f"missing '{COMPLEX_TAG}' header", 1)
    return make_complex(header, facets)
