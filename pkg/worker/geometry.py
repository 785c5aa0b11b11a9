"""Exact rational geometry: a phase-one simplex kernel and hull intersection.

No floating point enters any decision here. Degenerate inputs (repeated or
collinear points) go through the same LP path as everything else.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from shared.instance import Face, Point, PointConfiguration

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: tuple[Fraction, ...] | None = None
    pivots: int = 0


class _PhaseOneTableau:
    """Tableau for min sum(artificials) s.t. Ax + I a = b, x, a >= 0, b >= 0."""

    def __init__(self, a: list[list[Fraction]], b: list[Fraction]):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        width = self.n + self.m
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        for i, (row, value) in enumerate(zip(a, b)):
            if value < 0:
                row = [-x for x in row]
                value = -value
            artificial = [ZERO] * self.m
            artificial[i] = ONE
            self.rows.append(list(row) + artificial)
            self.rhs.append(value)
        self.basis = [self.n + i for i in range(self.m)]
        # reduced costs of the phase-one objective
        self.cost = [-sum((self.rows[i][j] for i in range(self.m)), ZERO) for j in range(self.n)]
        self.cost += [ZERO] * self.m
        self.objective = sum(self.rhs, ZERO)
        self.width = width
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.rows[i]
        piv = pivot_row[j]
        if piv != 1:
            self.rows[i] = pivot_row = [x / piv for x in pivot_row]
            self.rhs[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            factor = self.rows[k][j]
            if factor:
                row = self.rows[k]
                self.rows[k] = [x - factor * y for x, y in zip(row, pivot_row)]
                self.rhs[k] -= factor * self.rhs[i]
        factor = self.cost[j]
        if factor:
            self.cost = [x - factor * y for x, y in zip(self.cost, pivot_row)]
            self.objective += factor * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        entering = next((j for j in range(self.width) if self.cost[j] < 0), None)
        if entering is None:
            return "optimal"
        best: tuple[Fraction, int, int] | None = None
        for i in range(self.m):
            coeff = self.rows[i][entering]
            if coeff > 0:
                candidate = (self.rhs[i] / coeff, self.basis[i], i)
                if best is None or candidate < best:
                    best = candidate
        if best is None:
            # phase one is bounded below by zero
            raise RuntimeError("phase-one objective unbounded")
        self.pivot(best[2], entering)
        return "go_on"

    def solve(self) -> None:
        while self.bland_step() != "optimal":
            pass

    def primal(self) -> tuple[Fraction, ...]:
        values = [ZERO] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                values[var] = self.rhs[i]
        return tuple(values)


def lp_feasible(
    equalities: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
    num_vars: int | None = None,
) -> FeasibilityResult:
    """Decide {x >= 0 : Ax = b} != {} exactly, returning a feasible point when one exists."""
    if len(equalities) != len(rhs):
        raise ValueError(f"{len(equalities)} equality rows but {len(rhs)} right-hand sides")
    n = num_vars if num_vars is not None else (len(equalities[0]) if equalities else 0)
    for index, row in enumerate(equalities):
        if len(row) != n:
            raise ValueError(f"row {index} has {len(row)} coefficients, expected {n}")
    a = [[Fraction(x) for x in row] for row in equalities]
    b = [Fraction(x) for x in rhs]
    if not a:
        return FeasibilityResult(feasible=True, solution=(ZERO,) * n)
    tableau = _PhaseOneTableau(a, b)
    tableau.solve()
    if tableau.objective != 0:
        return FeasibilityResult(feasible=False, pivots=tableau.pivots)
    return FeasibilityResult(feasible=True, solution=tableau.primal(), pivots=tableau.pivots)


@dataclass(frozen=True)
class IntersectionResult:
    feasible: bool
    witness: Point | None = None
    weights: tuple[tuple[Fraction, ...], ...] | None = None


def combine(config: PointConfiguration, face: Face, weights: Sequence[Fraction]) -> Point:
    point = [ZERO] * config.d
    for vertex, weight in zip(face, weights):
        for c, x in enumerate(config.point(vertex)):
            point[c] += weight * x
    return tuple(point)


def check_faces(faces: Sequence[Face], num_vertices: int) -> None:
    seen: set[int] = set()
    for index, face in enumerate(faces):
        if not face:
            raise ValueError(f"face {index} is empty")
        for v in face:
            if not 0 <= v < num_vertices:
                raise ValueError(f"vertex id {v} out of range [0, {num_vertices})")
            if v in seen:
                raise ValueError(f"vertex {v} appears in more than one face")
            seen.add(v)


def hulls_intersect(config: PointConfiguration, faces: Sequence[Face]) -> IntersectionResult:
    """Decide whether conv f(sigma_1), ..., conv f(sigma_r) share a point.

    Variables are barycentric weights, face by face and vertex by vertex; rows
    are one sum-to-one row per face followed by d coordinate rows per face
    j >= 2 equating its combination with face 1's.
    """
    faces = [tuple(face) for face in faces]
    if not faces:
        raise ValueError("at least one face is required")
    check_faces(faces, len(config))
    offsets: list[int] = []
    total = 0
    for face in faces:
        offsets.append(total)
        total += len(face)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for j, face in enumerate(faces):
        row = [ZERO] * total
        for t in range(len(face)):
            row[offsets[j] + t] = ONE
        rows.append(row)
        rhs.append(ONE)
    first = faces[0]
    for j in range(1, len(faces)):
        face = faces[j]
        for c in range(config.d):
            row = [ZERO] * total
            for t, v in enumerate(first):
                row[t] = config.point(v)[c]
            for t, v in enumerate(face):
                row[offsets[j] + t] = -config.point(v)[c]
            rows.append(row)
            rhs.append(ZERO)

    result = lp_feasible(rows, rhs, total)
    if not result.feasible or result.solution is None:
        return IntersectionResult(feasible=False)
    weights = tuple(
        tuple(result.solution[offsets[j] : offsets[j] + len(face)]) for j, face in enumerate(faces)
    )
    witness = combine(config, first, weights[0])
    return IntersectionResult(feasible=True, witness=witness, weights=weights)


def witness_is_exact(config: PointConfiguration, faces: Sequence[Face], result: IntersectionResult) -> bool:
    """Recompute every face's combination and compare it with the witness."""
    if not result.feasible or result.witness is None or result.weights is None:
        return False
    for face, weights in zip(faces, result.weights):
        if len(weights) != len(face) or any(w < 0 for w in weights) or sum(weights) != 1:
            return False
        if combine(config, tuple(face), weights) != result.witness:
            return False
    return True


@dataclass(frozen=True)
class JoinMapImage:
    coordinates: tuple[Fraction, ...]
    on_diagonal: bool


def _check_barycentric(weights: Sequence[Fraction], size: int, what: str) -> None:
    if len(weights) != size:
        raise ValueError(f"{what}: expected {size} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError(f"{what}: weights must be non-negative")
    if sum(weights, ZERO) != 1:
        raise ValueError(f"{what}: weights must sum to 1")


def join_map_eval(
    config: PointConfiguration,
    faces: Sequence[Face],
    weights: Sequence[Sequence[Fraction | int]],
    mix: Sequence[Fraction | int],
) -> JoinMapImage:
    """Image of lambda_1 x_1 + ... + lambda_r x_r under the join map.

    Block j is (lambda_j, lambda_j f(x_j)) with x_j the weighted point of
    face j; the image is on the diagonal when all blocks coincide.
    """
    if len(weights) != len(faces):
        raise ValueError("one weight vector per face is required")
    check_faces([tuple(face) for face in faces], len(config))
    lambdas = [Fraction(x) for x in mix]
    _check_barycentric(lambdas, len(faces), "mix")
    blocks: list[tuple[Fraction, ...]] = []
    for j, (face, face_weights) in enumerate(zip(faces, weights)):
        exact = [Fraction(w) for w in face_weights]
        _check_barycentric(exact, len(face), f"face {j}")
        image = combine(config, tuple(face), exact)
        blocks.append((lambdas[j], *(lambdas[j] * x for x in image)))
    coordinates = tuple(x for block in blocks for x in block)
    return JoinMapImage(coordinates=coordinates, on_diagonal=all(b == blocks[0] for b in blocks))
