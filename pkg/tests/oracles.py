"""Independent reference implementations used to cross-check the engine."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import factorial

Point2 = tuple[Fraction, Fraction]


def orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    return (
        orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_meet(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool:
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        _on_segment(q1, q2, p1)
        or _on_segment(q1, q2, p2)
        or _on_segment(p1, p2, q1)
        or _on_segment(p1, p2, q2)
    )


def in_hull(p: Point2, hull: list[Point2]) -> bool:
    """Point in conv(hull) for at most three points, degenerate triangles included."""
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return _on_segment(hull[0], hull[1], p)
    a, b, c = hull
    if orient(a, b, c) == 0:
        return any(_on_segment(x, y, p) for x, y in combinations(hull, 2))
    signs = [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
    return all(s >= 0 for s in signs) or all(s <= 0 for s in signs)


def planar_hulls_meet(a: list[Point2], b: list[Point2]) -> bool:
    if any(in_hull(p, b) for p in a) or any(in_hull(q, a) for q in b):
        return True
    return any(
        segments_meet(p1, p2, q1, q2)
        for p1, p2 in combinations(a, 2)
        for q1, q2 in combinations(b, 2)
    )


def intervals_meet(groups: list[list[Fraction]]) -> bool:
    return max(min(g) for g in groups) <= min(max(g) for g in groups)


def naive_partition_count(points, color_of, caps, r) -> int:
    """Brute force over all (r+1)^N vertex assignments; d = 1 for any r, d = 2 for r = 2."""
    d = len(points[0])
    total = 0
    for assignment in product(range(r + 1), repeat=len(points)):
        faces = [[v for v, slot in enumerate(assignment) if slot == j] for j in range(r)]
        if any(not face for face in faces):
            continue
        if any(len({color_of[v] for v in face}) != len(face) for face in faces):
            continue
        usage = [0] * len(caps)
        for v, slot in enumerate(assignment):
            if slot < r:
                usage[color_of[v]] += 1
        if any(u > cap for u, cap in zip(usage, caps)):
            continue
        if d == 1:
            hit = intervals_meet([[points[v][0] for v in face] for face in faces])
        elif r == 2:
            hit = planar_hulls_meet([points[v] for v in faces[0]], [points[v] for v in faces[1]])
        else:
            raise ValueError("the naive enumerator handles d = 1, or d = 2 with r = 2")
        total += hit
    # each unordered partition appears once per ordering of its r distinct faces
    assert total % factorial(r) == 0
    return total // factorial(r)
